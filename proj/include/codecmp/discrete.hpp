#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <string>

#include "codecmp/codes.hpp"

namespace codecmp {

/// Per-symbol channel: l x w row-stochastic matrix,
/// matrix(a, b) = P(receive b | send a).
struct SymbolChannel {
  Eigen::MatrixXd matrix;
  std::string tag;
};

SymbolChannel bsc(double p);
SymbolChannel channel_from_matrix(Eigen::MatrixXd matrix, std::string tag = "matrix");

/// Received-word distribution of one codeword under the memoryless product
/// channel: entry z = prod_s matrix(codeword[s], digit_s(z)), digits base-w
/// with the first symbol most significant. Probabilities below 1e-300 are
/// flushed to 0.
Eigen::VectorXd likelihood_row(const std::vector<std::uint8_t>& codeword,
                               const SymbolChannel& channel);

/// 2^k x w^n row-stochastic matrix; row theta is the received-word
/// distribution given message theta.
struct TransferMatrix {
  Eigen::MatrixXd rows;
  int k = 0;
  std::string channel_tag;
  std::string code_tag;
};

TransferMatrix transfer_matrix(const StochasticCodeMatrix& code,
                               const SymbolChannel& channel,
                               std::string code_tag = "");

/// Explicit full l^n x w^n channel matrix (bursty channels); guarded to
/// n <= 4. Rows of the result are row-selections of the channel matrix.
TransferMatrix transfer_matrix_explicit(const StochasticCodeMatrix& code,
                                        const Eigen::MatrixXd& full_channel,
                                        std::string channel_tag = "explicit",
                                        std::string code_tag = "");

struct Prior {
  Eigen::VectorXd p;  // length 2^k, nonnegative, sums to 1
};

Prior uniform_prior(int k);
Prior prior_from_vector(Eigen::VectorXd p);

/// Per-bit equivalent experiment: 2 x w^n matrix whose rows are the prior-
/// weighted mixtures of transfer rows over the two halves of the message set.
/// Rows are stored normalized to sum 1; the pre-normalization masses
/// P(b_r = 0), P(b_r = 1) are kept in row_masses.
struct Dichotomy {
  Eigen::Matrix<double, 2, Eigen::Dynamic> rows;
  std::array<double, 2> row_masses{0.0, 0.0};
  int bit_index = 0;  // 1-based
};

/// r is 1-based; bit r of message theta is bit (k-r) of its index
/// (first message bit most significant).
Dichotomy equivalent_bit_dichotomy(const TransferMatrix& t, const Prior& prior,
                                   int r);

}  // namespace codecmp
