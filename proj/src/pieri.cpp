#include "flagpieri/pieri.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <utility>

#include "flagpieri/error.hpp"

namespace flagpieri {

namespace {

std::pair<Permutation, Permutation> to_common_degree(const Permutation& w, const Permutation& v) {
  const int n = std::max(w.degree(), v.degree());
  return {embed(w, n), embed(v, n)};
}

// Along a k-Bruhat chain, values at positions <= k only grow and values at
// positions > k only shrink. A state violating this against the target can
// never reach it.
bool can_still_reach(const Permutation& cur, const Permutation& target, int k) {
  for (int i = 1; i <= cur.degree(); ++i) {
    if (i <= k ? cur(i) > target(i) : cur(i) < target(i)) return false;
  }
  return true;
}

void require_k(int k, int n) {
  if (k < 1 || k >= n) {
    throw OutOfRange("k-Bruhat order requires 1 <= k < N (k=" + std::to_string(k) +
                     ", N=" + std::to_string(n) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- BruhatPath

Permutation BruhatPath::end() const {
  auto w = start;
  for (const auto& t : steps) w = apply_transposition(w, t);
  return w;
}

std::vector<Permutation> BruhatPath::chain() const {
  std::vector<Permutation> out{start};
  for (const auto& t : steps) out.push_back(apply_transposition(out.back(), t));
  return out;
}

std::vector<int> BruhatPath::step_values() const {
  std::vector<int> out;
  auto w = start;
  for (const auto& t : steps) {
    w = apply_transposition(w, t);
    out.push_back(w(t.a));
  }
  return out;
}

void BruhatPath::validate() const {
  auto w = start;
  for (const auto& t : steps) {
    if (t.a > k || t.b <= k) {
      throw OutOfRange("step t_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                       "} does not straddle k=" + std::to_string(k));
    }
    if (!is_cover(w, t)) {
      throw OutOfRange("step t_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                       "} is not a cover of " + to_string(w));
    }
    w = apply_transposition(w, t);
  }
}

// ------------------------------------------------------------ k-Bruhat order

std::vector<Transposition> k_bruhat_covers(const Permutation& w, int k, int ambient) {
  require_k(k, ambient);
  const auto u = embed(w, ambient);
  std::vector<Transposition> out;
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= ambient; ++b) {
      if (is_cover(u, {a, b})) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_k_bruhat_leq(const Permutation& w, const Permutation& w2, int k) {
  const auto [u, v] = to_common_degree(w, w2);
  const int gap = length(v) - length(u);
  if (gap < 0) return false;
  if (gap == 0) return u == v;
  if (k < 1 || k >= u.degree()) return false;
  if (!can_still_reach(u, v, k)) return false;
  std::unordered_set<Permutation, PermutationHash> level{u};
  for (int step = 0; step < gap; ++step) {
    std::unordered_set<Permutation, PermutationHash> next;
    for (const auto& cur : level) {
      for (const auto& t : k_bruhat_covers(cur, k, cur.degree())) {
        auto up = apply_transposition(cur, t);
        if (can_still_reach(up, v, k)) next.insert(std::move(up));
      }
    }
    if (next.empty()) return false;
    level = std::move(next);
  }
  return level.contains(v);
}

// ------------------------------------------------------------- Pieri rules

std::set<Permutation> pieri_targets(const Permutation& w, int k, int m, StripKind kind,
                                    int ambient) {
  if (m < 0) throw OutOfRange("m must be nonnegative");
  if (kind == StripKind::kRow && (k < 1 || k + m > ambient)) {
    throw OutOfRange("row Pieri rule requires 1 <= k and k+m <= N (k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", N=" + std::to_string(ambient) + ")");
  }
  if (kind == StripKind::kColumn && (k < 1 || m > k || k >= ambient)) {
    throw OutOfRange("column Pieri rule requires m <= k < N (k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", N=" + std::to_string(ambient) + ")");
  }
  if (w.degree() > ambient) {
    throw OutOfRange(to_string(w) + " does not lie in S_" + std::to_string(ambient));
  }
  if (ambient > 32) throw OutOfRange("ambient degree above 32 is not supported");

  // DFS over (permutation, used positions) with the distinctness constraint
  // on b (row) or a (column) carried in the bitmask.
  std::set<Permutation> out;
  std::set<std::pair<Permutation, std::uint32_t>> seen;
  std::function<void(const Permutation&, std::uint32_t, int)> visit =
      [&](const Permutation& cur, std::uint32_t used, int depth) {
        if (depth == m) {
          out.insert(cur);
          return;
        }
        if (!seen.emplace(cur, used).second) return;
        for (const auto& t : k_bruhat_covers(cur, k, ambient)) {
          const int pos = kind == StripKind::kRow ? t.b : t.a;
          const std::uint32_t bit = std::uint32_t{1} << pos;
          if (used & bit) continue;
          visit(apply_transposition(cur, t), used | bit, depth + 1);
        }
      };
  visit(embed(w, ambient), 0, 0);
  return out;
}

SchubertExpansion pieri_expand(const Permutation& w, int k, int m, StripKind kind, int ambient) {
  SchubertExpansion out(ambient);
  for (const auto& u : pieri_targets(w, k, m, kind, ambient)) out.add(u, 1);
  return out;
}

std::vector<BruhatPath> enumerate_monotone_paths(const Permutation& w, const Permutation& w2,
                                                 int k, Direction direction) {
  const auto [u, v] = to_common_degree(w, w2);
  const int gap = length(v) - length(u);
  std::vector<BruhatPath> out;
  if (gap < 0) return out;
  if (gap == 0) {
    if (u == v) out.push_back({u, k, {}});
    return out;
  }
  if (k < 1 || k >= u.degree()) return out;

  BruhatPath path{u, k, {}};
  std::function<void(const Permutation&, int)> visit = [&](const Permutation& cur, int last) {
    if (static_cast<int>(path.steps.size()) == gap) {
      if (cur == v) out.push_back(path);
      return;
    }
    for (const auto& t : k_bruhat_covers(cur, k, cur.degree())) {
      const int value = cur(t.b);  // becomes w^(i)(a_i)
      if (!path.steps.empty()) {
        if (direction == Direction::kIncreasing ? value <= last : value >= last) continue;
      }
      auto up = apply_transposition(cur, t);
      if (!can_still_reach(up, v, k)) continue;
      path.steps.push_back(t);
      visit(up, value);
      path.steps.pop_back();
    }
  };
  visit(u, 0);
  return out;
}

// ------------------------------------------------------------- hook rule

namespace {

void require_hook(int k, int p, int q) {
  if (p < 1 || q < 1 || q > k) {
    throw OutOfRange("hook rule requires p,q >= 1 and q <= k (k=" + std::to_string(k) +
                     ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
}

// Whether value may follow last as the step-th step value (1-based step >= 2).
bool hook_allows(HookForm form, int p, int q, int step, int last, int value) {
  if (form == HookForm::kUpThenDown) return step <= p ? value > last : value < last;
  return step <= q ? value < last : value > last;
}

// Walks every hook-shaped k-Bruhat path of length p+q-1 from w, calling
// on_end for each endpoint. With a target, branches that cannot reach it
// are pruned.
void walk_hook_paths(const Permutation& w, int k, int p, int q, HookForm form,
                     const Permutation* target, const std::function<void(const Permutation&)>& on_end) {
  const int m = p + q - 1;
  std::function<void(const Permutation&, int, int)> visit = [&](const Permutation& cur, int depth,
                                                                int last) {
    if (depth == m) {
      on_end(cur);
      return;
    }
    for (const auto& t : k_bruhat_covers(cur, k, cur.degree())) {
      const int value = cur(t.b);
      if (depth > 0 && !hook_allows(form, p, q, depth + 1, last, value)) continue;
      auto up = apply_transposition(cur, t);
      if (target != nullptr && !can_still_reach(up, *target, k)) continue;
      visit(up, depth + 1, value);
    }
  };
  visit(w, 0, 0);
}

}  // namespace

std::int64_t count_hook_paths(const Permutation& w, const Permutation& w2, int k, int p, int q,
                              HookForm form) {
  require_hook(k, p, q);
  const auto [u, v] = to_common_degree(w, w2);
  if (length(v) - length(u) != p + q - 1 || k >= u.degree()) return 0;
  std::int64_t count = 0;
  walk_hook_paths(u, k, p, q, form, &v, [&](const Permutation& end) {
    if (end == v) ++count;
  });
  return count;
}

SchubertExpansion hook_expand(const Permutation& w, int k, int p, int q, int ambient,
                              HookForm form) {
  require_hook(k, p, q);
  if (k + p > ambient) {
    throw OutOfRange("hook rule requires k+p <= N (k=" + std::to_string(k) +
                     ", p=" + std::to_string(p) + ", N=" + std::to_string(ambient) + ")");
  }
  if (w.degree() > ambient) {
    throw OutOfRange(to_string(w) + " does not lie in S_" + std::to_string(ambient));
  }
  SchubertExpansion out(ambient);
  walk_hook_paths(embed(w, ambient), k, p, q, form, nullptr,
                  [&](const Permutation& end) { out.add(end, 1); });
  return out;
}

// ------------------------------------------ Grassmannian structure constants

std::optional<std::vector<int>> strip_lengths(const Permutation& w, const Permutation& w2, int k,
                                              StripKind kind) {
  const auto [u, v] = to_common_degree(w, w2);
  const auto paths = enumerate_monotone_paths(
      u, v, k, kind == StripKind::kRow ? Direction::kIncreasing : Direction::kDecreasing);
  if (paths.empty()) return std::nullopt;
  const int n = u.degree();
  std::vector<int> lengths(static_cast<std::size_t>(std::max(kind == StripKind::kRow ? k : n - k, 0)), 0);
  for (const auto& t : paths.front().steps) {
    if (kind == StripKind::kRow) {
      ++lengths[static_cast<std::size_t>(t.a - 1)];
    } else {
      ++lengths[static_cast<std::size_t>(t.b - k - 1)];
    }
  }
  return lengths;
}

SkewShape strip_shape(const std::vector<int>& lengths, StripKind kind) {
  // Rows of lengths r_1..r_L stacked so that row j+1 ends where row j
  // begins: lambda_j = r_j + ... + r_L and mu_j = lambda_{j+1}.
  const auto count = lengths.size();
  std::vector<int> outer(count, 0);
  std::vector<int> inner(count, 0);
  int acc = 0;
  for (std::size_t j = count; j-- > 0;) {
    if (lengths[j] < 0) throw OutOfRange("strip lengths must be nonnegative");
    inner[j] = acc;
    acc += lengths[j];
    outer[j] = acc;
  }
  Partition lambda(std::move(outer));
  Partition mu(std::move(inner));
  if (kind == StripKind::kRow) return SkewShape(lambda, mu);
  return SkewShape(transpose(lambda), transpose(mu));
}

Coefficient grassmannian_structure_constant(const Permutation& w, const Permutation& w2, int k,
                                            const Partition& nu) {
  if (nu.length() > k) {
    throw OutOfRange("partition " + to_string(nu) + " has more than k=" + std::to_string(k) +
                     " parts");
  }
  const auto [u, v] = to_common_degree(w, w2);
  if (length(v) - length(u) != nu.size()) return 0;
  if (!is_k_bruhat_leq(u, v, k)) return 0;
  for (const auto kind : {StripKind::kRow, StripKind::kColumn}) {
    const auto lengths = strip_lengths(u, v, k, kind);
    if (!lengths) continue;
    const auto s = strip_shape(*lengths, kind);
    const int vars = std::max({k, s.outer.length(), nu.length()});
    return lr_coefficient(s.inner, nu, s.outer, vars);
  }
  throw Unsupported(to_string(u) + " <=_" + std::to_string(k) + " " + to_string(v) +
                    " but neither the r[k,m] nor the c[k,m] relation holds");
}

}  // namespace flagpieri
