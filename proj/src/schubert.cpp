#include "flagpieri/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "flagpieri/error.hpp"

namespace flagpieri {

// ------------------------------------------------------ SchubertExpansion

void SchubertExpansion::add(const Permutation& u, Coefficient c) {
  if (c == 0) return;
  if (u.degree() > ambient_) {
    if (u.support_bound() > ambient_) {
      throw OutOfRange(to_string(u) + " does not lie in S_" + std::to_string(ambient_));
    }
  }
  std::vector<int> images(u.images().begin(), u.images().begin() + std::min(u.degree(), ambient_));
  const auto key = embed(Permutation(std::move(images)), ambient_);
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

Coefficient SchubertExpansion::coefficient(const Permutation& u) const {
  if (u.support_bound() > ambient_) return 0;
  std::vector<int> images(u.images().begin(), u.images().begin() + std::min(u.degree(), ambient_));
  auto it = coeffs_.find(embed(Permutation(std::move(images)), ambient_));
  return it == coeffs_.end() ? 0 : it->second;
}

SchubertExpansion SchubertExpansion::embedded(int n) const {
  if (n < ambient_) throw OutOfRange("embedded() cannot shrink the ambient degree");
  SchubertExpansion out(n);
  for (const auto& [u, c] : coeffs_) out.coeffs_.emplace(embed(u, n), c);
  return out;
}

SchubertExpansion SchubertExpansion::truncated(int n) const {
  SchubertExpansion out(n);
  for (const auto& [u, c] : coeffs_) {
    if (u.support_bound() <= n) out.add(u, c);
  }
  return out;
}

int SchubertExpansion::minimal_ambient(int floor) const {
  int n = floor;
  for (const auto& [u, c] : coeffs_) n = std::max(n, u.support_bound());
  return n;
}

Polynomial SchubertExpansion::to_polynomial() const {
  Polynomial out;
  for (const auto& [u, c] : coeffs_) out += schubert_poly(u) * c;
  return out;
}

bool SchubertExpansion::same_classes(const SchubertExpansion& other) const {
  const int n = std::max(ambient_, other.ambient_);
  return embedded(n).coeffs_ == other.embedded(n).coeffs_;
}

// ----------------------------------------------------- Schubert polynomials

namespace {

Permutation minimal_form(const Permutation& w) {
  const int n = std::max(w.support_bound(), 1);
  return Permutation(std::vector<int>(w.images().begin(), w.images().begin() + n));
}

class SchubertMemo {
 public:
  Polynomial get(const Permutation& w) {
    const auto key = minimal_form(w);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = compute(key);
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  // 𝔖_u = ∂_i 𝔖_{u s_i} for the first ascent i of u; the chain ends at the
  // longest element, whose Schubert polynomial is the staircase monomial.
  Polynomial compute(const Permutation& u) {
    const int n = u.degree();
    if (u == Permutation::longest(n)) return staircase(n);
    for (int i = 1; i < n; ++i) {
      if (u(i) < u(i + 1)) return divided_difference(i, get(apply_adjacent(u, i)));
    }
    return staircase(n);  // unreachable: only w0 has no ascent
  }

  std::mutex mutex_;
  std::unordered_map<Permutation, Polynomial, PermutationHash> table_;
};

SchubertMemo& memo() {
  static SchubertMemo instance;
  return instance;
}

}  // namespace

Polynomial schubert_poly(const Permutation& w) {
  if (w.support_bound() == 0) return Polynomial(1);
  return memo().get(w);
}

Polynomial schubert_poly_direct(const Permutation& w) {
  const int n = w.degree();
  if (n <= 1) return Polynomial(1);
  return divided_difference_w(compose(inverse(w), Permutation::longest(n)), staircase(n));
}

SchubertExpansion expand_in_schubert_basis(const Polynomial& f, int ambient) {
  if (ambient < 1) throw OutOfRange("ambient degree must be >= 1");
  SchubertExpansion out(ambient);
  for (const auto& t : f.terms()) {
    for (int j = 1; j <= kMaxVariables; ++j) {
      if (t.monomial[j] > std::max(ambient - j, 0)) {
        throw NotInSpan("polynomial " + to_string(f) +
                        " is not a combination of Schubert polynomials of S_" +
                        std::to_string(ambient));
      }
    }
  }
  for (int d : f.degrees()) {
    // Level L holds ∂_u f_d for every u of length L with a nonzero value.
    // Left multiplication u -> s_j u raises the length iff j precedes j+1
    // in the one-line notation of u, and then ∂_{s_j u} = ∂_j ∘ ∂_u.
    std::unordered_map<Permutation, Polynomial, PermutationHash> level;
    level.emplace(Permutation::identity(ambient), f.homogeneous_component(d));
    for (int len = 0; len < d; ++len) {
      std::unordered_map<Permutation, Polynomial, PermutationHash> next;
      for (const auto& [u, g] : level) {
        const auto u_inv = inverse(u);
        for (int j = 1; j < ambient; ++j) {
          if (u_inv(j) > u_inv(j + 1)) continue;
          std::vector<int> images(u.images().begin(), u.images().end());
          std::swap(images[static_cast<std::size_t>(u_inv(j) - 1)],
                    images[static_cast<std::size_t>(u_inv(j + 1) - 1)]);
          Permutation up(std::move(images));
          if (next.contains(up)) continue;
          auto h = divided_difference(j, g);
          if (!h.is_zero()) next.emplace(std::move(up), std::move(h));
        }
      }
      level = std::move(next);
    }
    for (const auto& [u, g] : level) out.add(u, g.constant_term());
  }
  return out;
}

int oracle_ambient(const Permutation& w, const Permutation& v) {
  const int n = std::max({w.degree(), v.degree(), 1});
  return n + std::min(length(w), length(v));
}

SchubertExpansion product_oracle(const Permutation& w, const Permutation& v) {
  return expand_in_schubert_basis(schubert_poly(w) * schubert_poly(v), oracle_ambient(w, v));
}

SchubertExpansion monk_expand(const Permutation& w, int k, int ambient) {
  if (k < 1 || k >= ambient) throw OutOfRange("Monk's rule requires 1 <= k < N");
  const auto u = embed(w, ambient);
  SchubertExpansion out(ambient);
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= ambient; ++b) {
      if (is_cover(u, {a, b})) out.add(apply_transposition(u, {a, b}), 1);
    }
  }
  return out;
}

}  // namespace flagpieri
