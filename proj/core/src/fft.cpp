#include "tfspec/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace tfspec::fft {
namespace {

// FFTW's planner is not thread-safe; plans are cached per (size, sign) and
// executed through the new-array interface, which is safe concurrently.
// FFTW_ESTIMATE keeps planning deterministic.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    Eigen::VectorXcd buf(n);
    fftw_plan p = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(Eigen::VectorXcd& x, int sign) {
  fftw_plan p = cache().get(static_cast<int>(x.size()), sign);
  auto* d = reinterpret_cast<fftw_complex*>(x.data());
  fftw_execute_dft(p, d, d);
}

}  // namespace

void forward(Eigen::VectorXcd& x) { execute(x, FFTW_FORWARD); }

void inverse(Eigen::VectorXcd& x) {
  execute(x, FFTW_BACKWARD);
  x /= double(x.size());
}

void forward_cols(Eigen::MatrixXcd& a) {
  Eigen::VectorXcd col(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    col = a.col(j);
    forward(col);
    a.col(j) = col;
  }
}

void inverse_cols(Eigen::MatrixXcd& a) {
  Eigen::VectorXcd col(a.rows());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    col = a.col(j);
    inverse(col);
    a.col(j) = col;
  }
}

}  // namespace tfspec::fft
