#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tfspec {

using cplx = std::complex<double>;
using Index = Eigen::Index;

/// Thrown when a serialized file or stream cannot be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps an index on the periodic grid into the centered range [-L/2, L/2).
inline long centered_index(long i, long L) {
  long r = ((i % L) + L + L / 2) % L;
  return r - L / 2;
}

/// The lag-Doppler product entering the alpha phase, evaluated on centered
/// indices. On the Nyquist edge of an even grid the plain product m_c*k_c
/// breaks the conjugation symmetry Q[m,k]+Q[-m,-k] = 2mk (mod 2L) that
/// Hermitian operators need for real Weyl symbols, so those cells carry an
/// extra +L on one parity branch.
inline long alpha_phase_product(long m, long k, long L) {
  long mc = centered_index(m, L);
  long kc = centered_index(k, L);
  bool edge = (mc == -L / 2 && (kc & 1L) && kc > 0) ||
              (kc == -L / 2 && (mc & 1L) && mc > 0);
  return mc * kc + (edge ? L : 0);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Length-L complex sample vector on the periodic unit-spaced grid.
class Signal {
 public:
  explicit Signal(Eigen::VectorXcd samples) : samples_(std::move(samples)) {
    require(samples_.size() >= 4 && samples_.size() % 2 == 0,
            "Signal length must be even and >= 4");
  }
  static Signal zero(Index L) { return Signal(Eigen::VectorXcd::Zero(L)); }

  Index size() const { return samples_.size(); }
  const Eigen::VectorXcd& samples() const { return samples_; }
  Eigen::VectorXcd& samples() { return samples_; }
  double norm() const { return samples_.norm(); }

 private:
  Eigen::VectorXcd samples_;
};

/// L x L complex kernel h[n, n'] of a linear operator (row = output time,
/// column = input time). Hermitian/PSD flags are advisory labels set when
/// the property is known by construction.
class OperatorKernel {
 public:
  explicit OperatorKernel(Eigen::MatrixXcd h, bool hermitian = false,
                          bool psd = false)
      : h_(std::move(h)), is_hermitian_(hermitian), is_psd_(psd) {
    require(h_.rows() == h_.cols(), "OperatorKernel must be square");
    require(h_.rows() >= 4 && h_.rows() % 2 == 0,
            "OperatorKernel size must be even and >= 4");
  }

  static OperatorKernel identity(Index L) {
    return OperatorKernel(Eigen::MatrixXcd::Identity(L, L), true, true);
  }
  static OperatorKernel zero(Index L) {
    return OperatorKernel(Eigen::MatrixXcd::Zero(L, L), true, true);
  }

  Index size() const { return h_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return h_; }
  Eigen::MatrixXcd& matrix() { return h_; }

  bool is_hermitian() const { return is_hermitian_; }
  bool is_psd() const { return is_psd_; }
  void set_hermitian(bool v) { is_hermitian_ = v; }
  void set_psd(bool v) { is_psd_ = v; }

  /// Max-abs deviation from h = h^+; 0 for exactly self-adjoint kernels.
  double hermiticity_defect() const {
    return (h_ - h_.adjoint()).cwiseAbs().maxCoeff();
  }
  double hs_norm() const { return h_.norm(); }
  cplx trace() const { return h_.trace(); }

  OperatorKernel adjoint() const {
    return OperatorKernel(h_.adjoint(), is_hermitian_, is_psd_);
  }

 private:
  Eigen::MatrixXcd h_;
  bool is_hermitian_;
  bool is_psd_;
};

/// L x L values over the (time n, frequency bin l) lattice.
struct TFField {
  Eigen::MatrixXcd values;  // [n, l]
  double alpha = 0.0;

  Index size() const { return values.rows(); }
};

/// L x L values over the (lag m, Doppler bin k) lattice; indices are stored
/// modulo L (cell 0 = zero lag/Doppler) and centered only for display.
struct AmbiguityField {
  Eigen::MatrixXcd values;  // [m, k]
  double alpha = 0.0;

  Index size() const { return values.rows(); }
};

/// Centered rectangle of half-widths (tau_max, nu_max) in the lag-Doppler
/// plane, plus the dimensionless occupied-area fraction s_x.
class SpreadSupport {
 public:
  SpreadSupport(Index L, long tau_max, long nu_max)
      : L_(L), tau_max_(tau_max), nu_max_(nu_max) {
    require(L >= 4 && L % 2 == 0, "grid length must be even and >= 4");
    require(tau_max >= 0 && tau_max <= L / 2, "tau_max outside [0, L/2]");
    require(nu_max >= 0 && nu_max <= L / 2, "nu_max outside [0, L/2]");
  }

  Index grid_length() const { return L_; }
  long tau_max() const { return tau_max_; }
  long nu_max() const { return nu_max_; }

  /// Occupied fraction of the ambiguity plane, (2*tau+1)(2*nu+1)/L.
  double s_x() const {
    return double((2 * tau_max_ + 1) * (2 * nu_max_ + 1)) / double(L_);
  }
  bool is_underspread() const { return s_x() < 1.0; }

  bool contains(long m, long k) const {
    return std::labs(centered_index(m, L_)) <= tau_max_ &&
           std::labs(centered_index(k, L_)) <= nu_max_;
  }

  /// 0/1 indicator over the stored (m, k) lattice.
  Eigen::MatrixXd mask() const {
    Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(L_, L_);
    for (long m = 0; m < L_; ++m)
      for (long k = 0; k < L_; ++k)
        if (contains(m, k)) chi(m, k) = 1.0;
    return chi;
  }

  /// Smallest rectangle after the double convolution bound R = H H^+.
  SpreadSupport doubled() const {
    return SpreadSupport(L_, std::min(2 * tau_max_, (long)L_ / 2),
                         std::min(2 * nu_max_, (long)L_ / 2));
  }

 private:
  Index L_;
  long tau_max_;
  long nu_max_;
};

}  // namespace tfspec
