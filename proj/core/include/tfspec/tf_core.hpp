#pragma once

#include "tfspec/types.hpp"

namespace tfspec {

/// Unitary time-frequency shift: y[n] = x[(n-m) mod L] * exp(+2*pi*i*k*n/L).
Signal tf_shift(const Signal& x, long m, long k);
Eigen::VectorXcd tf_shift(const Eigen::VectorXcd& x, long m, long k);

/// Conjugation by the shift, P^{(m,k)} = S P S^+:
/// p'[n,n'] = p[(n-m) mod L, (n'-m) mod L] * exp(+2*pi*i*k*(n-n')/L).
OperatorKernel operator_tf_shift(const OperatorKernel& p, long m, long k);

/// Hermitian Hilbert-Schmidt pairing, sum a[n,n'] conj(b[n,n']).
cplx hs_inner(const OperatorKernel& a, const OperatorKernel& b);

/// Generalized spreading function at parameter |alpha| <= 1/2.
///
/// The alpha = 1/2 layer is the integer-lag sum
///   S[m,k] = sum_n h[n, (n-m) mod L] exp(-2*pi*i*k*n/L),
/// and other alphas attach the unit-modulus phase
/// exp(-2*pi*i*(alpha-1/2)*Q(m,k)/L) with Q the centered lag-Doppler
/// product of alpha_phase_product(). With these signs the GSF of a TF shift
/// concentrates at its own (m,k) and the Weyl symbol shifts covariantly.
AmbiguityField spreading_function(const OperatorKernel& h, double alpha);

/// Generalized Weyl symbol: inverse symplectic DFT of the spreading
/// function, normalized so weyl_symbol(identity) == 1 everywhere.
TFField weyl_symbol(const OperatorKernel& h, double alpha);

/// Symplectic DFT pair linking the two lattices (direction by type):
///   forward: S[m,k] = (1/L) sum_{n,l} F[n,l] exp(+2*pi*i*(m*l - k*n)/L)
///   inverse: F[n,l] = (1/L) sum_{m,k} S[m,k] exp(+2*pi*i*(k*n - m*l)/L)
AmbiguityField symplectic_dft(const TFField& field);
TFField symplectic_dft(const AmbiguityField& field);

/// Exact inverse of spreading_function at the alpha carried by S.
OperatorKernel kernel_from_spreading(const AmbiguityField& s);

/// (H + H^+) / 2, flagged Hermitian.
OperatorKernel hermitian_part(const OperatorKernel& h);

/// Field of tr{ B A^{(t,f)} } over the (t,f) lattice, computed as the
/// inverse symplectic DFT of S_B . conj(S_A). Requires Hermitian A.
TFField trace_shift_field(const OperatorKernel& a, const OperatorKernel& b);

}  // namespace tfspec
