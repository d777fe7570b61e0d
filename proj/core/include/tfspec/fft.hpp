#pragma once

#include <Eigen/Dense>

#include "tfspec/types.hpp"

namespace tfspec::fft {

/// In-place unnormalized DFT: x[k] <- sum_n x[n] exp(-2*pi*i*k*n/N).
void forward(Eigen::VectorXcd& x);

/// In-place normalized inverse DFT: x[n] <- (1/N) sum_k x[k] exp(+2*pi*i*k*n/N).
void inverse(Eigen::VectorXcd& x);

/// Column-wise transforms of an L x L matrix.
void forward_cols(Eigen::MatrixXcd& a);
void inverse_cols(Eigen::MatrixXcd& a);

}  // namespace tfspec::fft
