#include "flagpieri/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "flagpieri/io.hpp"
#include "flagpieri/pieri.hpp"
#include "flagpieri/schubert.hpp"
#include "flagpieri/schur.hpp"

namespace flagpieri {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string str(const Permutation& w) { return to_string(w); }

Polynomial random_polynomial(std::mt19937_64& rng, int vars, int max_degree) {
  std::uniform_int_distribution<int> term_count(1, 6);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::vector<Term> terms;
  const int count = term_count(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(vars), 0);
    int budget = exponent(rng);
    for (int i = 0; i < vars && budget > 0; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      exps[static_cast<std::size_t>(i)] = take(rng);
      budget -= exps[static_cast<std::size_t>(i)];
    }
    std::shuffle(exps.begin(), exps.end(), rng);
    terms.push_back({Monomial(exps), coeff(rng)});
  }
  return Polynomial::from_terms(std::move(terms));
}

// ------------------------------------------------------------------ perm

CheckResult check_cover_length(const VerifyOptions& o) {
  Recorder r("perm.cover_iff_length_step");
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          const bool cover = is_cover(w, {a, b});
          const bool step = length(apply_transposition(w, {a, b})) == length(w) + 1;
          r.expect(cover == step, [&] { return str(w) + " t" + std::to_string(a) + std::to_string(b); });
        }
      }
    }
  }
  return r.done();
}

CheckResult check_reduced_words(const VerifyOptions& o) {
  Recorder r("perm.reduced_word");
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      r.expect(static_cast<int>(word.size()) == length(w) && from_word(word, n) == w,
               [&] { return str(w); });
    }
  }
  return r.done();
}

CheckResult check_shape_roundtrip(const VerifyOptions& o) {
  Recorder r("perm.shape_roundtrip");
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k <= n; ++k) {
        if (!is_grassmannian(w, k)) continue;
        r.expect(grassmannian_from_shape(shape(w, k), k, n) == w,
                 [&] { return str(w) + " k=" + std::to_string(k); });
      }
    }
    for (int k = 0; k <= n; ++k) {
      for (int size = 0; size <= k * (n - k); ++size) {
        for (const auto& lambda : partitions_in_box(size, k, n - k)) {
          r.expect(shape(grassmannian_from_shape(lambda, k, n), k) == lambda,
                   [&] { return to_string(lambda) + " k=" + std::to_string(k); });
        }
      }
    }
  }
  return r.done();
}

CheckResult check_w0_duality(const VerifyOptions& o) {
  Recorder r("perm.w0_conjugation");
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto c = conjugate_by_w0(w);
      r.expect(length(c) == length(w) && conjugate_by_w0(c) == w, [&] { return str(w); });
    }
  }
  for (int n = 2; n <= std::max(o.max_n, 7); ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 0; k + m <= n; ++m) {
        r.expect(conjugate_by_w0(r_perm(k, m, n)) == c_perm(n - k, m, n), [&] {
          return "r[" + std::to_string(k) + "," + std::to_string(m) + "] n=" + std::to_string(n);
        });
      }
    }
  }
  return r.done();
}

CheckResult check_embed(const VerifyOptions& o) {
  Recorder r("perm.embed");
  for (int n = 1; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto big = embed(w, n + 2);
      r.expect(length(big) == length(w), [&] { return str(w); });
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          r.expect(is_cover(big, {a, b}) == is_cover(w, {a, b}), [&] { return str(w); });
        }
      }
      for (int k = 1; k < n; ++k) {
        if (is_grassmannian(w, k)) {
          r.expect(is_grassmannian(big, k) && shape(big, k) == shape(w, k),
                   [&] { return str(w) + " k=" + std::to_string(k); });
        }
      }
    }
  }
  return r.done();
}

// -------------------------------------------------------------- polyring

CheckResult check_operator_relations(const VerifyOptions& o) {
  Recorder r("poly.divided_difference_relations");
  std::mt19937_64 rng(o.seed);
  for (int trial = 0; trial < o.random_polynomials; ++trial) {
    const auto f = random_polynomial(rng, 5, 6);
    auto describe = [&] { return to_string(f); };
    for (int i = 1; i <= 4; ++i) {
      const auto di = divided_difference(i, f);
      r.expect(divided_difference(i, di).is_zero(), describe);
      r.expect(swap_variables(i, di) == di, describe);
      const auto xi = Polynomial::variable(i) - Polynomial::variable(i + 1);
      r.expect(xi * di == f - swap_variables(i, f), describe);
      for (int j = i + 2; j <= 4; ++j) {
        r.expect(divided_difference(i, divided_difference(j, f)) ==
                     divided_difference(j, divided_difference(i, f)),
                 describe);
      }
      if (i <= 3) {
        const std::vector<int> left{i + 1, i, i + 1};
        const std::vector<int> right{i, i + 1, i};
        r.expect(divided_difference_word(left, f) == divided_difference_word(right, f), describe);
      }
    }
  }
  return r.done();
}

CheckResult check_reduced_word_independence(const VerifyOptions& o) {
  Recorder r("poly.reduced_word_independence");
  std::mt19937_64 rng(o.seed + 1);
  for (int n = 2; n <= std::min(o.max_n, 4); ++n) {
    std::vector<Polynomial> probes{staircase(n), staircase(n) * Polynomial::variable(1)};
    for (int i = 0; i < 3; ++i) probes.push_back(random_polynomial(rng, n, 6));
    for (const auto& w : all_permutations(n)) {
      for (const auto& f : probes) {
        const auto expected = divided_difference_w(w, f);
        for (const auto& word : all_reduced_words(w)) {
          r.expect(divided_difference_word(word, f) == expected,
                   [&] { return str(w) + " on " + to_string(f); });
        }
      }
    }
  }
  return r.done();
}

// -------------------------------------------------------------- schubert

CheckResult check_schubert_degree(const VerifyOptions& o) {
  Recorder r("schubert.degree_and_stability");
  for (int n = 1; n <= std::max(o.max_n, 6); ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto s = schubert_poly(w);
      r.expect(s.is_homogeneous() && s.degree() == length(w), [&] { return str(w); });
    }
  }
  for (int n = 1; n <= std::min(o.max_n, 5); ++n) {
    for (const auto& w : all_permutations(n)) {
      r.expect(schubert_poly_direct(embed(w, n + 1)) == schubert_poly(w), [&] { return str(w); });
    }
  }
  return r.done();
}

CheckResult check_grassmannian_schur(const VerifyOptions& o) {
  Recorder r("schubert.grassmannian_is_schur");
  for (int n = 2; n <= std::max(o.max_n, 6); ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        if (!is_grassmannian(w, k)) continue;
        const auto s = schubert_poly(w);
        bool symmetric = true;
        for (int i = 1; i < k; ++i) symmetric = symmetric && swap_variables(i, s) == s;
        r.expect(symmetric && s == schur_poly(shape(w, k), k),
                 [&] { return str(w) + " k=" + std::to_string(k); });
      }
    }
  }
  for (int n = 2; n <= std::max(o.max_n, 6); ++n) {
    for (int k = 1; k < n; ++k) {
      for (int m = 0; k + m <= n; ++m) {
        r.expect(schubert_poly(r_perm(k, m, n)) == complete_sym(m, k), [&] { return "r"; });
      }
      for (int m = 0; m <= k; ++m) {
        r.expect(schubert_poly(c_perm(k, m, n)) == elementary_sym(m, k), [&] { return "c"; });
      }
    }
  }
  return r.done();
}

CheckResult check_monk(const VerifyOptions& o) {
  Recorder r("schubert.monk_vs_oracle");
  for (int n = 2; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        const auto oracle = product_oracle(w, r_perm(k, 1, n));
        r.expect(monk_expand(w, k, n + 1).same_classes(oracle),
                 [&] { return str(w) + " k=" + std::to_string(k); });
      }
    }
  }
  return r.done();
}

CheckResult check_products(const VerifyOptions& o) {
  Recorder r("schubert.product_positivity_and_pairing");
  for (int n = 1; n <= std::min(o.max_n, 4); ++n) {
    const auto perms = all_permutations(n);
    const auto w0 = Permutation::longest(n);
    const int top = n * (n - 1) / 2;
    for (const auto& w : perms) {
      for (const auto& v : perms) {
        const auto e = product_oracle(w, v);
        bool positive = true;
        for (const auto& [u, c] : e.terms()) positive = positive && c > 0;
        r.expect(positive, [&] { return str(w) + "*" + str(v); });
        r.expect(e.to_polynomial() == schubert_poly(w) * schubert_poly(v),
                 [&] { return "reconstruct " + str(w) + "*" + str(v); });
        if (length(w) + length(v) == top) {
          const Coefficient expected = v == compose(w0, w) ? 1 : 0;
          r.expect(e.truncated(n).coefficient(w0) == expected,
                   [&] { return "pairing " + str(w) + "*" + str(v); });
        }
      }
    }
  }
  return r.done();
}

// ------------------------------------------------------------------ schur

CheckResult check_lr_containment(const VerifyOptions&) {
  Recorder r("schur.lr_containment");
  const int k = 4;
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + b <= 8; ++b) {
      for (const auto& mu : partitions_in_box(a, k, a)) {
        for (const auto& nu : partitions_in_box(b, k, b)) {
          for (const auto& [lambda, c] :
               expand_in_schur_basis(schur_poly(mu, k) * schur_poly(nu, k), k)) {
            r.expect(c > 0 && lambda.contains(mu) && lambda.contains(nu), [&] {
              return to_string(mu) + "*" + to_string(nu) + " -> " + to_string(lambda);
            });
          }
        }
      }
    }
  }
  return r.done();
}

CheckResult check_schur_pairing(const VerifyOptions&) {
  Recorder r("schur.pairing");
  for (int n = 2; n <= 13; ++n) {
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) > 12) continue;
      const Partition point(std::vector<int>(static_cast<std::size_t>(k), n - k));
      for (int a = 0; a <= k * (n - k); ++a) {
        for (const auto& lambda : partitions_in_box(a, k, n - k)) {
          const auto lc = complement(lambda, k, n);
          for (const auto& mu : partitions_in_box(k * (n - k) - a, k, n - k)) {
            const Coefficient expected = lc == mu ? 1 : 0;
            r.expect(lr_coefficient(lambda, mu, point, k) == expected, [&] {
              return to_string(lambda) + "," + to_string(mu) + " k=" + std::to_string(k) +
                     " n=" + std::to_string(n);
            });
          }
        }
      }
    }
  }
  return r.done();
}

CheckResult check_classical_pieri(const VerifyOptions& o) {
  Recorder r("schur.classical_pieri");
  for (int n = 2; n <= std::max(o.max_n, 6); ++n) {
    for (int k = 1; k < n; ++k) {
      for (int a = 0; a <= k * (n - k); ++a) {
        for (const auto& mu : partitions_in_box(a, k, n - k)) {
          for (int m = 0; m <= n; ++m) {
            const auto rows = classical_pieri(mu, m, k, n, StripKind::kRow);
            const auto cols = classical_pieri(mu, m, k, n, StripKind::kColumn);
            // Transposing exchanges rows and columns and k with n-k.
            std::set<Partition> rows_t;
            for (const auto& lambda : rows) rows_t.insert(transpose(lambda));
            r.expect(rows_t == classical_pieri(transpose(mu), m, n - k, n, StripKind::kColumn),
                     [&] { return "transpose " + to_string(mu); });
            // Against brute-force Littlewood-Richardson in the box.
            if (m <= n - k) {
              std::set<Partition> lr_rows;
              for (const auto& lambda : partitions_in_box(a + m, k, n - k)) {
                if (lr_coefficient(mu, Partition{m}, lambda, k) == 1) lr_rows.insert(lambda);
              }
              r.expect(lr_rows == rows, [&] { return "row " + to_string(mu); });
            }
            if (m <= k) {
              std::set<Partition> lr_cols;
              const Partition column(std::vector<int>(static_cast<std::size_t>(m), 1));
              for (const auto& lambda : partitions_in_box(a + m, k, n - k)) {
                if (lr_coefficient(mu, column, lambda, k) == 1) lr_cols.insert(lambda);
              }
              r.expect(lr_cols == cols, [&] { return "column " + to_string(mu); });
            }
          }
        }
      }
    }
  }
  return r.done();
}

// ------------------------------------------------------------------ pieri

template <typename Body>
void for_pieri_cases(int max_n, Body&& body) {
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; k + m <= n; ++m) body(n, w, k, m, StripKind::kRow);
        for (int m = 1; m <= k; ++m) body(n, w, k, m, StripKind::kColumn);
      }
    }
  }
}

Permutation special(StripKind kind, int k, int m, int n) {
  return kind == StripKind::kRow ? r_perm(k, m, n) : c_perm(k, m, n);
}

std::string describe_case(const Permutation& w, int k, int m, StripKind kind) {
  return str(w) + (kind == StripKind::kRow ? " r[" : " c[") + std::to_string(k) + "," +
         std::to_string(m) + "]";
}

CheckResult check_pieri_vs_oracle(const VerifyOptions& o) {
  Recorder r("pieri.rule_vs_oracle");
  for_pieri_cases(o.max_n, [&](int n, const Permutation& w, int k, int m, StripKind kind) {
    const auto oracle = product_oracle(w, special(kind, k, m, n));
    r.expect(pieri_expand(w, k, m, kind, n + m).same_classes(oracle),
             [&] { return describe_case(w, k, m, kind); });
    r.expect(pieri_expand(w, k, m, kind, n) == oracle.truncated(n),
             [&] { return "in S_n: " + describe_case(w, k, m, kind); });
  });
  return r.done();
}

CheckResult check_pieri_duality(const VerifyOptions& o) {
  Recorder r("pieri.w0_duality");
  for (int n = 2; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; k + m <= n; ++m) {
          std::set<Permutation> conj;
          for (const auto& u : pieri_targets(w, k, m, StripKind::kRow, n)) {
            conj.insert(conjugate_by_w0(u));
          }
          r.expect(conj == pieri_targets(conjugate_by_w0(w), n - k, m, StripKind::kColumn, n),
                   [&] { return describe_case(w, k, m, StripKind::kRow); });
        }
      }
    }
  }
  return r.done();
}

CheckResult check_vanishing(const VerifyOptions& o) {
  Recorder r("pieri.vanishing_outside_k_bruhat");
  for_pieri_cases(o.max_n, [&](int n, const Permutation& w, int k, int m, StripKind kind) {
    if (kind != StripKind::kRow) return;
    const auto oracle = product_oracle(w, r_perm(k, m, n));
    for (const auto& [u, c] : oracle.terms()) {
      r.expect(c == 0 || (is_k_bruhat_leq(w, u, k) && length(u) == length(w) + m),
               [&] { return describe_case(w, k, m, kind) + " -> " + str(u); });
    }
  });
  return r.done();
}

CheckResult check_monotone_paths(const VerifyOptions& o) {
  Recorder r("pieri.monotone_path_uniqueness");
  for (int n = 2; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; m <= 4; ++m) {
          const auto rows = k + m <= n ? pieri_targets(w, k, m, StripKind::kRow, n)
                                       : std::set<Permutation>{};
          const auto cols = m <= k ? pieri_targets(w, k, m, StripKind::kColumn, n)
                                   : std::set<Permutation>{};
          // Every k-Bruhat target at distance m.
          std::set<Permutation> level{w};
          for (int step = 0; step < m; ++step) {
            std::set<Permutation> next;
            for (const auto& u : level) {
              for (const auto& t : k_bruhat_covers(u, k, n)) next.insert(apply_transposition(u, t));
            }
            level = std::move(next);
          }
          for (const auto& u : level) {
            const auto inc = enumerate_monotone_paths(w, u, k, Direction::kIncreasing);
            const auto dec = enumerate_monotone_paths(w, u, k, Direction::kDecreasing);
            r.expect(inc.size() <= 1 && dec.size() <= 1, [&] { return str(w) + "->" + str(u); });
            r.expect((inc.size() == 1) == rows.contains(u),
                     [&] { return "row relation " + str(w) + "->" + str(u); });
            r.expect((dec.size() == 1) == cols.contains(u),
                     [&] { return "column relation " + str(w) + "->" + str(u); });
          }
        }
      }
    }
  }
  return r.done();
}

CheckResult check_chain_independence(const VerifyOptions& o) {
  Recorder r("pieri.chain_independence");
  for_pieri_cases(o.max_n, [&](int n, const Permutation& w, int k, int m, StripKind kind) {
    for (const auto& target : pieri_targets(w, k, m, kind, n)) {
      // All saturated k-chains from w to target.
      std::set<std::pair<std::multiset<int>, std::multiset<std::pair<int, int>>>> signatures;
      BruhatPath path{w, k, {}};
      std::function<void(const Permutation&)> visit = [&](const Permutation& cur) {
        if (static_cast<int>(path.steps.size()) == m) {
          if (cur != target) return;
          const auto values = path.step_values();
          std::multiset<std::pair<int, int>> ts;
          for (const auto& t : path.steps) ts.emplace(t.a, t.b);
          signatures.emplace(std::multiset<int>(values.begin(), values.end()), ts);
          return;
        }
        for (const auto& t : k_bruhat_covers(cur, k, n)) {
          path.steps.push_back(t);
          visit(apply_transposition(cur, t));
          path.steps.pop_back();
        }
      };
      visit(w);
      r.expect(signatures.size() == 1,
               [&] { return describe_case(w, k, m, kind) + " -> " + str(target); });
    }
  });
  return r.done();
}

CheckResult check_hook(const VerifyOptions& o) {
  Recorder r("pieri.hook_rule");
  for (int n = 2; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int p = 1; k + p <= n; ++p) {
          for (int q = 1; q <= k && p + q - 1 <= 4; ++q) {
            const int ambient = n + p + q - 1;
            const auto up = hook_expand(w, k, p, q, ambient, HookForm::kUpThenDown);
            const auto down = hook_expand(w, k, p, q, ambient, HookForm::kDownThenUp);
            auto describe = [&] {
              return str(w) + " h[" + std::to_string(k) + ";" + std::to_string(p) + "," +
                     std::to_string(q) + "]";
            };
            r.expect(up == down, describe);
            r.expect(up.same_classes(product_oracle(w, h_perm(k, p, q, n))), describe);
            if (q == 1) r.expect(up == pieri_expand(w, k, p, StripKind::kRow, ambient), describe);
            if (p == 1) r.expect(up == pieri_expand(w, k, q, StripKind::kColumn, ambient), describe);
          }
        }
      }
    }
  }
  return r.done();
}

CheckResult check_classical_consistency(const VerifyOptions& o) {
  Recorder r("pieri.classical_consistency");
  for (int n = 2; n <= std::max(o.max_n, 6); ++n) {
    for (int k = 1; k < n; ++k) {
      for (int a = 0; a <= k * (n - k); ++a) {
        for (const auto& mu : partitions_in_box(a, k, n - k)) {
          const auto w = grassmannian_from_shape(mu, k, n);
          for (int m = 1; m <= n; ++m) {
            for (const auto kind : {StripKind::kRow, StripKind::kColumn}) {
              if (kind == StripKind::kRow ? k + m > n : m > k) continue;
              std::set<Partition> shapes;
              for (const auto& u : pieri_targets(w, k, m, kind, n)) shapes.insert(shape(u, k));
              r.expect(shapes == classical_pieri(mu, m, k, n, kind),
                       [&] { return describe_case(w, k, m, kind); });
            }
          }
        }
      }
    }
  }
  return r.done();
}

CheckResult check_structure_constants(const VerifyOptions& o) {
  Recorder r("pieri.grassmannian_structure_constants");
  for (int n = 2; n <= o.max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (int k = 1; k < n; ++k) {
        for (int m = 1; m <= 4; ++m) {
          std::set<Permutation> related;
          for (const auto& u : pieri_targets(w, k, m, StripKind::kRow, n + m)) related.insert(u);
          if (m <= k) {
            for (const auto& u : pieri_targets(w, k, m, StripKind::kColumn, n + m)) {
              related.insert(u);
            }
          }
          if (related.empty()) continue;
          for (const auto& nu : partitions_in_box(m, k, m)) {
            const auto oracle = product_oracle(w, grassmannian_from_shape(nu, k, k + nu[1]));
            for (const auto& u : related) {
              r.expect(grassmannian_structure_constant(w, u, k, nu) == oracle.coefficient(u), [&] {
                return str(w) + "->" + str(u) + " k=" + std::to_string(k) + " nu=" + to_string(nu);
              });
            }
          }
        }
      }
    }
  }
  return r.done();
}

}  // namespace

const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks{
      {"perm.cover_iff_length_step", check_cover_length},
      {"perm.reduced_word", check_reduced_words},
      {"perm.shape_roundtrip", check_shape_roundtrip},
      {"perm.w0_conjugation", check_w0_duality},
      {"perm.embed", check_embed},
      {"poly.divided_difference_relations", check_operator_relations},
      {"poly.reduced_word_independence", check_reduced_word_independence},
      {"schubert.degree_and_stability", check_schubert_degree},
      {"schubert.grassmannian_is_schur", check_grassmannian_schur},
      {"schubert.monk_vs_oracle", check_monk},
      {"schubert.product_positivity_and_pairing", check_products},
      {"schur.lr_containment", check_lr_containment},
      {"schur.pairing", check_schur_pairing},
      {"schur.classical_pieri", check_classical_pieri},
      {"pieri.rule_vs_oracle", check_pieri_vs_oracle},
      {"pieri.w0_duality", check_pieri_duality},
      {"pieri.vanishing_outside_k_bruhat", check_vanishing},
      {"pieri.monotone_path_uniqueness", check_monotone_paths},
      {"pieri.chain_independence", check_chain_independence},
      {"pieri.hook_rule", check_hook},
      {"pieri.classical_consistency", check_classical_consistency},
      {"pieri.grassmannian_structure_constants", check_structure_constants},
  };
  return checks;
}

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& check : all_checks()) out.push_back(check.run(options));
  return out;
}

}  // namespace flagpieri
