#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagpieri/perm.hpp"

namespace flagpieri {

// Exact integer coefficients. Every arithmetic step is overflow-checked and
// throws std::overflow_error instead of wrapping.
using Coefficient = std::int64_t;

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

// Hard capacity of the exponent-vector representation. Exceeding either
// bound throws std::length_error / std::overflow_error.
inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxExponent = 255;

// Exponent vector over x_1..x_16. Ordered lexicographically with x_1
// compared first, so x_1 > x_2 > ... in the induced monomial order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  // Exponent of x_i, 1-based; zero past kMaxVariables.
  int operator[](int i) const {
    return (i >= 1 && i <= kMaxVariables) ? exps_[static_cast<std::size_t>(i - 1)] : 0;
  }
  void set(int i, int exponent);

  int degree() const;
  // Index of the last variable with a nonzero exponent (0 for 1).
  int num_vars() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

struct Term {
  Monomial monomial;
  Coefficient coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in Z[x_1, x_2, ...]. Terms are stored without zero
// coefficients in strictly decreasing lex order, so the representation is
// canonical and equality is structural. The variable count is implicit:
// a polynomial is identified with its image under adjoining variables.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Coefficient c);  // NOLINT: constants convert implicitly

  static Polynomial variable(int i);
  static Polynomial monomial(const Monomial& m, Coefficient c = 1);
  // Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Largest variable index that occurs.
  int num_vars() const;
  // Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Coefficient constant_term() const;
  Coefficient coefficient(const Monomial& m) const;
  Polynomial homogeneous_component(int d) const;
  // Distinct total degrees that occur, ascending.
  std::vector<int> degrees() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(Coefficient c);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, Coefficient c) { return f *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

// w·f with w·x_i = x_{w(i)}; variables above the degree of w are fixed.
Polynomial act(const Permutation& w, const Polynomial& f);

// Swap x_i and x_{i+1}.
Polynomial swap_variables(int i, const Polynomial& f);

// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
Polynomial divided_difference(int i, const Polynomial& f);

// Composition of divided differences along a reduced word of w.
Polynomial divided_difference_w(const Permutation& w, const Polynomial& f);

// ∂_{a_1}∘···∘∂_{a_p} for an explicit word; the rightmost letter acts first.
Polynomial divided_difference_word(std::span<const int> word, const Polynomial& f);

// Complete homogeneous and elementary symmetric polynomials of degree m in
// x_1..x_k.
Polynomial complete_sym(int m, int k);
Polynomial elementary_sym(int m, int k);

// x_1^{n-1} x_2^{n-2} ··· x_{n-1}.
Polynomial staircase(int n);

// Canonical text form, e.g. "x1^2 + x1*x2 - 3*x2^2", or "0".
std::string to_string(const Polynomial& f);

// Inverse of to_string; also tolerates free spacing, explicit "1*" factors
// and repeated variables. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace flagpieri
