#include "tfspec/tf_core.hpp"

#include <cmath>
#include <numbers>

#include "tfspec/fft.hpp"

namespace tfspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd alpha_phase(Index L, double alpha) {
  Eigen::MatrixXcd phi(L, L);
  for (long m = 0; m < L; ++m)
    for (long k = 0; k < L; ++k) {
      double q = double(alpha_phase_product(m, k, L));
      phi(m, k) = std::polar(1.0, -kTwoPi * (alpha - 0.5) * q / double(L));
    }
  return phi;
}

void check_alpha(double alpha) {
  require(std::abs(alpha) <= 0.5, "|alpha| must be <= 1/2");
}

}  // namespace

Eigen::VectorXcd tf_shift(const Eigen::VectorXcd& x, long m, long k) {
  const long L = x.size();
  Eigen::VectorXcd y(L);
  for (long n = 0; n < L; ++n) {
    long src = ((n - m) % L + L) % L;
    y(n) = x(src) * std::polar(1.0, kTwoPi * double(k) * double(n) / double(L));
  }
  return y;
}

Signal tf_shift(const Signal& x, long m, long k) {
  return Signal(tf_shift(x.samples(), m, k));
}

OperatorKernel operator_tf_shift(const OperatorKernel& p, long m, long k) {
  const long L = p.size();
  Eigen::MatrixXcd out(L, L);
  for (long n = 0; n < L; ++n) {
    long rn = ((n - m) % L + L) % L;
    for (long np = 0; np < L; ++np) {
      long cn = ((np - m) % L + L) % L;
      out(n, np) = p.matrix()(rn, cn) *
                   std::polar(1.0, kTwoPi * double(k) * double(n - np) / double(L));
    }
  }
  return OperatorKernel(std::move(out), p.is_hermitian(), p.is_psd());
}

cplx hs_inner(const OperatorKernel& a, const OperatorKernel& b) {
  require(a.size() == b.size(), "hs_inner: dimension mismatch");
  return (a.matrix().array() * b.matrix().array().conjugate()).sum();
}

AmbiguityField spreading_function(const OperatorKernel& h, double alpha) {
  check_alpha(alpha);
  const long L = h.size();
  Eigen::MatrixXcd s(L, L);
  Eigen::VectorXcd diag(L);
  for (long m = 0; m < L; ++m) {
    for (long n = 0; n < L; ++n) diag(n) = h.matrix()(n, ((n - m) % L + L) % L);
    fft::forward(diag);  // sum_n d[n] exp(-2 pi i k n / L)
    s.row(m) = diag.transpose();
  }
  if (alpha != 0.5) s.array() *= alpha_phase(L, alpha).array();
  return AmbiguityField{std::move(s), alpha};
}

OperatorKernel kernel_from_spreading(const AmbiguityField& s) {
  const long L = s.size();
  Eigen::MatrixXcd sh = s.values;
  if (s.alpha != 0.5) sh.array() *= alpha_phase(L, s.alpha).array().conjugate();
  Eigen::MatrixXcd h(L, L);
  Eigen::VectorXcd row(L);
  for (long m = 0; m < L; ++m) {
    row = sh.row(m).transpose();
    fft::inverse(row);  // (1/L) sum_k exp(+2 pi i k n / L)
    for (long n = 0; n < L; ++n) h(n, ((n - m) % L + L) % L) = row(n);
  }
  return OperatorKernel(std::move(h));
}

AmbiguityField symplectic_dft(const TFField& field) {
  Eigen::MatrixXcd t = field.values.transpose();  // [l, n]
  fft::inverse_cols(t);                           // over l -> m, (1/L) e^{+}
  Eigen::MatrixXcd u = t.transpose();             // [n, m]
  fft::forward_cols(u);                           // over n -> k, e^{-}
  return AmbiguityField{u.transpose(), field.alpha};  // [m, k]
}

TFField symplectic_dft(const AmbiguityField& field) {
  Eigen::MatrixXcd t = field.values.transpose();  // [k, m]
  fft::inverse_cols(t);                           // over k -> n, (1/L) e^{+}
  Eigen::MatrixXcd u = t.transpose();             // [m, n]
  fft::forward_cols(u);                           // over m -> l, e^{-}
  return TFField{u.transpose(), field.alpha};     // [n, l]
}

TFField weyl_symbol(const OperatorKernel& h, double alpha) {
  return symplectic_dft(spreading_function(h, alpha));
}

OperatorKernel hermitian_part(const OperatorKernel& h) {
  Eigen::MatrixXcd m = 0.5 * (h.matrix() + h.matrix().adjoint());
  return OperatorKernel(std::move(m), true, h.is_psd());
}

TFField trace_shift_field(const OperatorKernel& a, const OperatorKernel& b) {
  require(a.size() == b.size(), "trace_shift_field: dimension mismatch");
  // tr{B A^{(t,f)}} = <B, A^{(t,f)}> for Hermitian A; Parseval plus the
  // modulation law turn the shift family into one inverse symplectic DFT.
  AmbiguityField sa = spreading_function(a, 0.0);
  AmbiguityField sb = spreading_function(b, 0.0);
  AmbiguityField prod{(sb.values.array() * sa.values.array().conjugate()) / double(a.size()),
                      0.0};
  TFField out = symplectic_dft(prod);
  out.values *= double(a.size());  // undo the (1/L) folded into prod
  return out;
}

}  // namespace tfspec
