// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flagpieri/error.hpp"
#include "flagpieri/pieri.hpp"
#include "flagpieri/polynomial.hpp"
#include "flagpieri/schubert.hpp"
#include "flagpieri/schur.hpp"

using namespace flagpieri;

namespace {

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
};

Permutation P(const char* s) { return parse_permutation(s); }

std::string pstr(const Permutation& w) { return to_string(w); }

// Every u reachable from w by m k-Bruhat covers inside S_N.
std::set<Permutation> k_chain_level(const Permutation& w, int k, int m, int ambient) {
  std::set<Permutation> level{embed(w, ambient)};
  for (int step = 0; step < m; ++step) {
    std::set<Permutation> next;
    for (const auto& u : level) {
      for (const auto& t : k_bruhat_covers(u, k, ambient)) next.insert(apply_transposition(u, t));
    }
    level = std::move(next);
  }
  return level;
}

Tally criterion_pieri() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (const auto kind : {StripKind::kRow, StripKind::kColumn}) {
          const int max_m = kind == StripKind::kRow ? n - k : k;
          for (int m = 1; m <= max_m; ++m) {
            const auto v = kind == StripKind::kRow ? r_perm(k, m, n) : c_perm(k, m, n);
            const int ambient = n + m;
            const auto oracle = product_oracle(w, v).embedded(ambient);
            const auto targets = pieri_targets(w, k, m, kind, ambient);
            bool ok = oracle.size() == targets.size();
            for (const auto& [u, c] : oracle.terms()) ok = ok && c == 1 && targets.contains(u);
            t.expect(ok, [&] {
              return pstr(w) + (kind == StripKind::kRow ? " r[" : " c[") + std::to_string(k) +
                     "," + std::to_string(m) + "]";
            });
          }
        }
      }
    }
  }
  return t;
}

Tally criterion_monk() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        const auto rule = monk_expand(w, k, n + 1);
        const auto oracle = product_oracle(w, r_perm(k, 1, n)).embedded(n + 1);
        t.expect(rule == oracle, [&] { return pstr(w) + " k=" + std::to_string(k); });
      }
    }
  }
  return t;
}

Tally criterion_golden() {
  Tally t;
  const auto w = P("5412763");
  const auto w1 = P("6524713");
  const auto w2 = P("7431652");
  t.expect(length(w) == 10, [] { return std::string("length of 5412763"); });
  t.expect(length(w1) == 14, [] { return std::string("length of 6524713"); });
  t.expect(length(w2) == 14, [] { return std::string("length of 7431652"); });
  t.expect(is_k_bruhat_leq(w, w1, 4), [] { return std::string("5412763 <_4 6524713"); });
  t.expect(is_k_bruhat_leq(w, w2, 3), [] { return std::string("5412763 <_3 7431652"); });

  auto saturated = [&](int k, std::vector<Transposition> steps, const Permutation& end) {
    BruhatPath path{w, k, std::move(steps)};
    try {
      path.validate();
    } catch (const Error&) {
      return false;
    }
    return path.end() == end;
  };
  t.expect(saturated(3, {{3, 4}, {1, 6}, {3, 7}, {1, 5}}, w2),
           [] { return std::string("w t34 t16 t37 t15"); });
  t.expect(saturated(4, {{1, 6}, {2, 6}, {4, 6}, {3, 6}}, w1),
           [] { return std::string("w t16 t26 t46 t36"); });
  t.expect(pieri_targets(w, 3, 4, StripKind::kRow, 7).contains(w2),
           [] { return std::string("7431652 in row targets"); });
  t.expect(pieri_targets(w, 4, 4, StripKind::kColumn, 7).contains(w1),
           [] { return std::string("6524713 in column targets"); });
  t.expect(complement(Partition{4, 2, 2}, 3, 7) == Partition{2, 2, 0},
           [] { return std::string("complement of (4,2,2)"); });
  return t;
}

Tally criterion_hook() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int p = 1; k + p <= n; ++p) {
          for (int q = 1; q <= k && p + q - 1 <= 4; ++q) {
            const int m = p + q - 1;
            const auto oracle = product_oracle(w, h_perm(k, p, q, n));
            const int ambient = std::max(oracle.ambient(), n + m);
            const auto want = oracle.embedded(ambient);
            const auto up = hook_expand(w, k, p, q, ambient, HookForm::kUpThenDown);
            const auto down = hook_expand(w, k, p, q, ambient, HookForm::kDownThenUp);
            auto describe = [&] {
              return pstr(w) + " h[" + std::to_string(k) + ";" + std::to_string(p) + "," +
                     std::to_string(q) + "]";
            };
            t.expect(up == want, describe);
            t.expect(down == want, describe);
            for (const auto& u : k_chain_level(w, k, m, ambient)) {
              const auto a = count_hook_paths(embed(w, ambient), u, k, p, q, HookForm::kUpThenDown);
              const auto b =
                  count_hook_paths(embed(w, ambient), u, k, p, q, HookForm::kDownThenUp);
              t.expect(a == b && a == want.coefficient(u),
                       [&] { return describe() + " -> " + pstr(u); });
            }
          }
        }
      }
    }
  }
  return t;
}

Tally criterion_structure_constants() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; m <= 4; ++m) {
          const int ambient = n + m;
          std::set<Permutation> related = pieri_targets(w, k, m, StripKind::kRow, ambient);
          if (m <= k) {
            for (const auto& u : pieri_targets(w, k, m, StripKind::kColumn, ambient)) {
              related.insert(u);
            }
          }
          for (const auto& nu : partitions_in_box(m, k, m)) {
            const auto oracle = product_oracle(w, grassmannian_from_shape(nu, k, k + nu[1]));
            for (const auto& u : related) {
              auto describe = [&] {
                return pstr(w) + " -> " + pstr(u) + " k=" + std::to_string(k) +
                       " nu=" + to_string(nu);
              };
              try {
                t.expect(grassmannian_structure_constant(w, u, k, nu) == oracle.coefficient(u),
                         describe);
              } catch (const Unsupported&) {
                t.expect(false, describe);
              }
            }
          }
        }
      }
    }
  }
  return t;
}

Tally criterion_duality_vanishing() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; k + m <= n; ++m) {
          std::set<Permutation> conjugated;
          for (const auto& u : pieri_targets(w, k, m, StripKind::kRow, n)) {
            conjugated.insert(conjugate_by_w0(u));
          }
          t.expect(conjugated == pieri_targets(conjugate_by_w0(w), n - k, m, StripKind::kColumn, n),
                   [&] { return "duality " + pstr(w) + " k=" + std::to_string(k); });
          t.expect(conjugate_by_w0(r_perm(k, m, n)) == c_perm(n - k, m, n),
                   [&] { return std::string("w0 r w0 = c"); });

          const auto oracle = product_oracle(w, r_perm(k, m, n));
          for (const auto& [u, c] : oracle.terms()) {
            const bool related = is_k_bruhat_leq(w, u, k) && length(u) - length(w) == m;
            t.expect(c == 0 || related, [&] { return "vanishing " + pstr(w) + " -> " + pstr(u); });
          }
        }
      }
    }
  }
  return t;
}

Tally criterion_operators() {
  Tally t;
  std::mt19937_64 rng(20260915);
  std::uniform_int_distribution<int> term_count(1, 8), coeff(-9, 9), var(0, 4), deg(0, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Term> terms;
    for (int i = term_count(rng); i > 0; --i) {
      std::vector<int> exps(5, 0);
      for (int d = deg(rng); d > 0; --d) ++exps[static_cast<std::size_t>(var(rng))];
      terms.push_back({Monomial(exps), coeff(rng)});
    }
    const auto f = Polynomial::from_terms(std::move(terms));
    auto describe = [&] { return to_string(f); };
    for (int i = 1; i <= 5; ++i) {
      t.expect(divided_difference(i, divided_difference(i, f)).is_zero(), describe);
      for (int j = i + 2; j <= 5; ++j) {
        t.expect(divided_difference(i, divided_difference(j, f)) ==
                     divided_difference(j, divided_difference(i, f)),
                 describe);
      }
      if (i <= 4) {
        const auto a = divided_difference(i, divided_difference(i + 1, divided_difference(i, f)));
        const auto b =
            divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f)));
        t.expect(a == b, describe);
      }
    }
  }

  // Reduced-word independence on every monomial of degree <= 6 in x1..x4.
  std::vector<Polynomial> probes;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 6; ++c)
        for (int d = 0; a + b + c + d <= 6; ++d) {
          const std::vector<int> exps{a, b, c, d};
          probes.push_back(Polynomial::monomial(Monomial(exps)));
        }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto words = all_reduced_words(w);
      for (const auto& f : probes) {
        const auto first = divided_difference_word(words.front(), f);
        for (const auto& word : words) {
          t.expect(divided_difference_word(word, f) == first,
                   [&] { return pstr(w) + " on " + to_string(f); });
        }
      }
    }
  }
  return t;
}

Tally criterion_pairing() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    const auto w0 = Permutation::longest(n);
    const int top = length(w0);
    for (const auto& w : all_permutations(n)) {
      for (const auto& v : all_permutations(n)) {
        if (length(w) + length(v) != top) continue;
        const auto c = product_oracle(w, v).truncated(n).coefficient(w0);
        t.expect(c == (v == compose(w0, w) ? 1 : 0), [&] { return pstr(w) + " * " + pstr(v); });
      }
    }
  }
  for (int n = 2; n <= 13; ++n) {
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) > 12) continue;
      const Partition point(std::vector<int>(static_cast<std::size_t>(k), n - k));
      for (int a = 0; a <= k * (n - k); ++a) {
        for (const auto& lambda : partitions_in_box(a, k, n - k)) {
          for (const auto& mu : partitions_in_box(k * (n - k) - a, k, n - k)) {
            const auto c = lr_coefficient(lambda, mu, point, k);
            t.expect(c == (mu == complement(lambda, k, n) ? 1 : 0), [&] {
              return to_string(lambda) + " * " + to_string(mu) + " in Gr(" + std::to_string(k) +
                     "," + std::to_string(n) + ")";
            });
          }
        }
      }
    }
  }
  return t;
}

Tally criterion_classical() {
  Tally t;
  const int k = 3;
  const int n = 6;
  for (int a = 0; a <= 9; ++a) {
    for (const auto& mu : partitions_in_box(a, k, n - k)) {
      const auto w = grassmannian_from_shape(mu, k, n);
      for (const auto kind : {StripKind::kRow, StripKind::kColumn}) {
        for (int m = 1; m <= 3; ++m) {
          std::set<Partition> shapes;
          for (const auto& u : pieri_targets(w, k, m, kind, n)) {
            if (!is_grassmannian(u, k)) {
              t.expect(false, [&] { return pstr(u) + " is not Grassmannian"; });
              continue;
            }
            shapes.insert(shape(u, k));
          }
          t.expect(shapes == classical_pieri(mu, m, k, n, kind), [&] {
            return to_string(mu) + (kind == StripKind::kRow ? " row " : " column ") +
                   std::to_string(m);
          });
        }
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Tally (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "row and column Pieri rules match the oracle for n <= 5", criterion_pieri},
      {2, "Monk's rule matches the oracle for n <= 5", criterion_monk},
      {3, "worked example in S_7", criterion_golden},
      {4, "hook rule, both path forms, matches the oracle", criterion_hook},
      {5, "Grassmannian structure constants match the oracle", criterion_structure_constants},
      {6, "w0 duality and vanishing outside the k-Bruhat order", criterion_duality_vanishing},
      {7, "divided difference relations and reduced-word independence", criterion_operators},
      {8, "pairing diagonalization, flag and Grassmannian", criterion_pairing},
      {9, "agreement with the classical Pieri rule in a 3x3 box", criterion_classical},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.failures = 1;
      t.first = std::string("exception: ") + e.what();
    }
    const bool ok = t.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%ld cases", ok ? "PASS" : "FAIL", c.id, c.title, t.cases);
    if (!ok) std::printf(", %ld failures, first: %s", t.failures, t.first.c_str());
    std::printf(")\n");
  }
  return failed == 0 ? 0 : 1;
}
