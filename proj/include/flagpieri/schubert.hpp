#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flagpieri/perm.hpp"
#include "flagpieri/polynomial.hpp"

namespace flagpieri {

// A finitely supported integer combination of Schubert classes indexed by
// permutations of one common ambient degree. Zero coefficients are never
// stored.
class SchubertExpansion {
 public:
  explicit SchubertExpansion(int ambient = 0) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Adds c to the coefficient of u; u is embedded into the ambient degree.
  void add(const Permutation& u, Coefficient c);
  Coefficient coefficient(const Permutation& u) const;

  const std::map<Permutation, Coefficient>& terms() const { return coeffs_; }

  // Same classes viewed in S_n, n >= ambient.
  SchubertExpansion embedded(int n) const;
  // Drops classes outside S_n (the quotient map to the cohomology of the
  // n-dimensional flag manifold) and re-bases the keys in S_n.
  SchubertExpansion truncated(int n) const;
  // Smallest ambient (>= floor) holding every key.
  int minimal_ambient(int floor = 0) const;

  // Sum of c_u 𝔖_u.
  Polynomial to_polynomial() const;

  // Equality of the underlying classes, independent of ambient.
  bool same_classes(const SchubertExpansion& other) const;

  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;

 private:
  int ambient_;
  std::map<Permutation, Coefficient> coeffs_;
};

// 𝔖_w, computed by divided differences from the staircase monomial in the
// smallest S_n containing w. Results are memoized process-wide.
Polynomial schubert_poly(const Permutation& w);

// ∂_{w^{-1} w0}(x_1^{n-1}···x_{n-1}) taken literally in S_n, n = degree(w).
// No memoization and no reduction to a smaller ambient.
Polynomial schubert_poly_direct(const Permutation& w);

// Expansion of f in {𝔖_u : u ∈ S_N}: the coefficient of 𝔖_u is the constant
// term of ∂_u f. Throws NotInSpan when f has a monomial x^a with a_j > N - j,
// i.e. when f is not a combination of Schubert polynomials of S_N.
SchubertExpansion expand_in_schubert_basis(const Polynomial& f, int ambient);

// 𝔖_w·𝔖_v expanded in S_N with N = n + min(ℓ(w), ℓ(v)), n the larger degree.
SchubertExpansion product_oracle(const Permutation& w, const Permutation& v);

// Ambient used by product_oracle.
int oracle_ambient(const Permutation& w, const Permutation& v);

// Monk's rule: 𝔖_w·(x_1+···+x_k) = Σ 𝔖_{w t_{ab}} over covers with a <= k < b <= N.
SchubertExpansion monk_expand(const Permutation& w, int k, int ambient);

}  // namespace flagpieri
