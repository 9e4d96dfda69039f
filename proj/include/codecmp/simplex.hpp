#pragma once

#include <Eigen/Core>

namespace codecmp {

struct Phase1Result {
  double artificial_sum = 0.0;  // phase-1 optimum; ~0 iff the system is feasible
  Eigen::VectorXd x;            // basic solution of the structural variables
  int iterations = 0;
};

/// Phase-1 simplex for { x >= 0 : a_eq x = b_eq }: artificial variables are
/// added per constraint and their sum is minimized with Bland's pivoting rule
/// (entering: lowest-index negative reduced cost; leaving: lowest basic index
/// among minimum-ratio rows), which precludes cycling.
Phase1Result phase1_feasible(const Eigen::MatrixXd& a_eq,
                             const Eigen::VectorXd& b_eq);

}  // namespace codecmp
