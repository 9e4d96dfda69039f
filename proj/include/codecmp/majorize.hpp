#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "codecmp/discrete.hpp"

namespace codecmp {

/// Concave upper boundary of a dichotomy zonotope: piecewise-linear
/// breakpoints ascending from (0,0), slopes nonincreasing. For normalized
/// dichotomies the final point is (1,1).
struct Boundary {
  std::vector<std::pair<double, double>> breakpoints;

  double evaluate(double x) const;
  double x_total() const { return breakpoints.back().first; }
  double y_total() const { return breakpoints.back().second; }
};

/// Builds the boundary by the fractional-knapsack sweep: columns with
/// row0 = 0 form the initial vertical segment, the rest are accumulated in
/// nonincreasing slope order (ties kept in column order; collinear
/// breakpoints merged; all-zero columns dropped).
Boundary zonotope_boundary(const Eigen::Matrix<double, 2, Eigen::Dynamic>& rows);
Boundary zonotope_boundary(const Dichotomy& d);

/// True iff a(x) >= b(x) - tol on the merged breakpoint set (piecewise-linear
/// functions compare exactly there). Requires matching totals within tol.
bool boundary_dominates(const Boundary& a, const Boundary& b, double tol);

struct GarblingCertificate {
  Eigen::MatrixXd m;       // w x w' row-stochastic
  double residual = 0.0;   // max-norm of A*M - B
};

enum class MajorizationRelation {
  first_majorizes,
  second_majorizes,
  equivalent,
  incomparable
};

enum class MajorizeMethod { lp, zonotope };

struct MajorizationVerdict {
  MajorizationRelation relation = MajorizationRelation::incomparable;
  std::optional<GarblingCertificate> certificate_forward;
  std::optional<GarblingCertificate> certificate_backward;
  MajorizeMethod method = MajorizeMethod::zonotope;
  double tolerance_used = 0.0;
};

struct LpCheck {
  bool holds = false;
  std::optional<GarblingCertificate> certificate;
};

/// Does a row-stochastic M with A*M = B exist? Phase-1 feasibility solve;
/// holds iff the artificial optimum is <= tol * (rows * cols(B)). The
/// certificate is returned when it holds.
LpCheck majorization_check_lp(const Eigen::MatrixXd& a,
                              const Eigen::MatrixXd& b, double tol = 1e-8);

/// Zonotope-boundary comparison: FirstMajorizes iff Da's boundary dominates
/// Db's (equivalently Z(Db) lies inside Z(Da)).
MajorizationVerdict compare_dichotomies(const Dichotomy& da,
                                        const Dichotomy& db,
                                        double tol = 1e-9);

/// LP comparison of whole transfer matrices, certificates attached.
MajorizationVerdict compare_transfer_matrices(const TransferMatrix& ta,
                                              const TransferMatrix& tb,
                                              double tol = 1e-8);

}  // namespace codecmp
