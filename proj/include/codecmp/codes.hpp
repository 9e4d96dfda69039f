#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codecmp {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// A block code: the map from 2^k information messages to length-n codewords
/// over the alphabet {0, ..., l-1}. Immutable after construction.
struct BlockCode {
  std::string name;
  int n = 0;
  int k = 0;
  int l = 2;
  /// k x n over GF(2); present for linear codes (implies l = 2).
  std::optional<BitMatrix> generator;
  /// 2^k rows of n symbols, row i is the codeword of message index i.
  std::vector<std::vector<std::uint8_t>> table;
};

struct CodeSpec {
  std::string name;  // optional label; derived from family when empty
  std::string family;  // repetition | single-parity | hamming | bch | explicit
  std::vector<int> params;
  std::optional<BitMatrix> generator;  // required for family == explicit
};

BlockCode build_code(const CodeSpec& spec);

BlockCode make_repetition(int n);
BlockCode make_single_parity(int n);
BlockCode make_hamming(int m);
/// Binary BCH over GF(2^m) with designed distance 2t+1. Generator matrices of
/// all linear families are produced in systematic form [I_k | P].
BlockCode make_bch(int m, int t);
BlockCode make_explicit(std::string name, BitMatrix generator);
/// Table-backed code over an l-ary alphabet (no generator).
BlockCode make_table_code(std::string name, int l,
                          std::vector<std::vector<std::uint8_t>> table);

/// Message bits are indexed with the first bit most significant:
/// index = sum_j bits[j] * 2^(k-1-j).
std::uint32_t message_index(const std::vector<std::uint8_t>& message);
std::vector<std::uint8_t> message_bits(std::uint32_t index, int k);

std::vector<std::uint8_t> encode(const BlockCode& code,
                                 const std::vector<std::uint8_t>& message);

enum class Normalization { none, unit_codeword_energy, unit_symbol_energy };

/// M x n real matrix of modulated codewords; row i is the codeword of message
/// i. Carries the per-dimension noise standard deviation of the channel it is
/// meant for.
struct RealCodeMatrix {
  Eigen::MatrixXd entries;
  Normalization normalization = Normalization::none;
  double sigma = 1.0;
};

/// BPSK: 0 -> +1, 1 -> -1.
std::vector<double> bpsk_map();

RealCodeMatrix real_code_matrix(const BlockCode& code,
                                const std::vector<double>& symbol_map,
                                Normalization normalization,
                                double sigma = 1.0);

/// Tiles the rows `factor` times: the experiment on a message set enlarged by
/// log2(factor) leading bits that the encoder ignores.
RealCodeMatrix repeat_messages(const RealCodeMatrix& a, int factor);

/// Row-stochastic 2^k x l^n code matrix stored sparsely: each row is the unit
/// vector at the row's codeword index (base-l, first symbol most significant).
struct StochasticCodeMatrix {
  int k = 0;
  int n = 0;
  int l = 2;
  std::vector<std::uint64_t> row_index;
};

StochasticCodeMatrix stochastic_code_matrix(const BlockCode& code);

std::uint64_t codeword_index(const std::vector<std::uint8_t>& codeword, int l);

}  // namespace codecmp
