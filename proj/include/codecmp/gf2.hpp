#pragma once

#include <cstdint>
#include <vector>

namespace codecmp::gf2 {

/// Polynomial over GF(2); coeffs[i] is the coefficient of x^i.
/// Normalized form has no trailing zero coefficients.
using Poly = std::vector<std::uint8_t>;

int degree(const Poly& p);  // -1 for the zero polynomial
Poly trim(Poly p);
Poly mul(const Poly& a, const Poly& b);

/// GF(2^m) in polynomial basis with a fixed primitive polynomial per m.
/// Elements are ints in [0, 2^m); alpha is the class of x.
class Field {
 public:
  explicit Field(int m);

  int m() const { return m_; }
  int group_order() const { return (1 << m_) - 1; }
  int alpha_pow(int e) const;  // alpha^e, exponent taken mod 2^m-1
  int mul(int a, int b) const;

 private:
  int m_;
  std::vector<int> exp_;
  std::vector<int> log_;
};

/// Cyclotomic coset of s modulo n = 2^m - 1, in ascending order.
std::vector<int> cyclotomic_coset(int s, int n);

/// Minimal polynomial of alpha^s over GF(2).
Poly minimal_polynomial(const Field& field, int s);

/// Generator polynomial of the binary BCH code of designed distance 2t+1:
/// the product of the distinct minimal polynomials of alpha, alpha^3, ...,
/// alpha^(2t-1).
Poly bch_generator_polynomial(const Field& field, int t);

}  // namespace codecmp::gf2
