#pragma once

#include <Eigen/Core>

#include <cstdint>

#include "codecmp/codes.hpp"

namespace codecmp {

struct PsdResult {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
};

/// PSD test with a relative tolerance: is_psd iff
/// lambda_min >= -tol * max(1, spectral norm). S must be symmetric within
/// 1e-12 relative asymmetry; it is symmetrized as (S+S')/2 before the test.
PsdResult psd_test(const Eigen::MatrixXd& s, double tol);

enum class SufficiencyRelation {
  first_sufficient,
  second_sufficient,
  equivalent,
  incomparable
};

struct LoewnerVerdict {
  SufficiencyRelation relation = SufficiencyRelation::incomparable;
  double min_eigenvalue_forward = 0.0;   // lambda_min(AA' - BB')
  double min_eigenvalue_backward = 0.0;  // lambda_min(BB' - AA')
  double tolerance_used = 0.0;
};

/// Loewner comparison of two codes as linear normal experiments. Both
/// matrices are rescaled by 1/sigma first, so the unit-covariance premise
/// holds. Requires equal row counts, equal sigma and equal normalization.
LoewnerVerdict loewner_compare(const RealCodeMatrix& a,
                               const RealCodeMatrix& b, double tol = 1e-9);

/// Same contract on raw channel matrices with sigma = 1.
LoewnerVerdict compare_mimo(const Eigen::MatrixXd& h1,
                            const Eigen::MatrixXd& h2, double tol = 1e-9);

/// True iff every column of b lies in the column span of a:
/// rank([a b]) == rank(a) at relative singular-value cutoff tol.
bool range_contains(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    double tol = 1e-9);

/// How (B'(AA')^+ B) is joined with the identity. The paper's notation makes
/// the join element-wise; the spectral variant clamps eigenvalues at 1
/// instead, which is the form that yields exactly zero self-deficiency for
/// rank-deficient codes. Both are exposed; element-wise is the default.
enum class CovarianceJoin { elementwise, spectral };

struct DeficiencyEstimate {
  double value = 0.0;      // in [0, 2]
  double std_error = 0.0;  // 0 for reported (non-estimated) values
  std::uint64_t samples = 0;
  Eigen::MatrixXd sigma_matrix;  // (B'(AA')^+ B) v I
  bool psd_repair_applied = false;
};

/// Monte-Carlo bound on the deficiency of a w.r.t. b: the total variation
/// || N(0, Sigma) - N(0, I) || with Sigma = (B'(AA')^+ B) v I, sampled from
/// N(0, I) in Sigma's eigenbasis. When range(B) is not contained in range(A)
/// the deficiency is reported as 2 without sampling.
DeficiencyEstimate deficiency_bound(
    const RealCodeMatrix& a, const RealCodeMatrix& b, std::uint64_t samples,
    std::uint64_t seed, CovarianceJoin join = CovarianceJoin::elementwise);

}  // namespace codecmp
