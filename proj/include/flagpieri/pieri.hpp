#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flagpieri/partition.hpp"
#include "flagpieri/perm.hpp"
#include "flagpieri/schubert.hpp"
#include "flagpieri/schur.hpp"

namespace flagpieri {

// A saturated chain start = w^(0) <_k w^(1) <_k ... <_k w^(m) in the
// k-Bruhat order, where w^(i) = w^(i-1)·t_{a_i b_i} and a_i <= k < b_i.
struct BruhatPath {
  Permutation start;
  int k = 0;
  std::vector<Transposition> steps;

  Permutation end() const;
  // w^(0), ..., w^(m).
  std::vector<Permutation> chain() const;
  // w^(i)(a_i) for i = 1..m: the value moved into the left position.
  std::vector<int> step_values() const;
  // Throws OutOfRange unless every step is a k-Bruhat cover.
  void validate() const;

  friend bool operator==(const BruhatPath&, const BruhatPath&) = default;
};

enum class Direction { kIncreasing, kDecreasing };

// Shape of the step-value sequence allowed by the hook rule for s_{(p,1^{q-1})}.
enum class HookForm {
  kUpThenDown,  // v_1 < ... < v_p > v_{p+1} > ... > v_m
  kDownThenUp,  // v_1 > ... > v_q < v_{q+1} < ... < v_m
};

// Every t_{ab} with a <= k < b <= N such that w·t_{ab} covers w; sorted by (a,b).
// w is embedded into S_N.
std::vector<Transposition> k_bruhat_covers(const Permutation& w, int k, int ambient);

// w' is reachable from w by a saturated chain of k-Bruhat covers. Both are
// embedded into their common degree.
bool is_k_bruhat_leq(const Permutation& w, const Permutation& w2, int k);

// All w' with w --r[k,m]--> w' (kRow: the b_i are distinct) or
// w --c[k,m]--> w' (kColumn: the a_i are distinct), in S_N.
std::set<Permutation> pieri_targets(const Permutation& w, int k, int m, StripKind kind,
                                    int ambient);

// Σ 𝔖_{w'} over pieri_targets: 𝔖_w·𝔖_{r[k,m]} (kRow) or 𝔖_w·𝔖_{c[k,m]} (kColumn).
SchubertExpansion pieri_expand(const Permutation& w, int k, int m, StripKind kind, int ambient);

// Saturated k-Bruhat chains from w to w' whose step values are strictly
// increasing (resp. decreasing). At most one such chain exists.
std::vector<BruhatPath> enumerate_monotone_paths(const Permutation& w, const Permutation& w2,
                                                 int k, Direction direction);

// Number of k-Bruhat paths w -> w' of length p+q-1 with the given hook form.
std::int64_t count_hook_paths(const Permutation& w, const Permutation& w2, int k, int p, int q,
                              HookForm form);

// 𝔖_w·𝔖_{h[k;p,q]} as a sum over hook-shaped k-Bruhat paths of length
// p+q-1 starting at w, in S_N. Requires q <= k and k+p <= N.
SchubertExpansion hook_expand(const Permutation& w, int k, int p, int q, int ambient,
                              HookForm form = HookForm::kUpThenDown);

// Row lengths #{i : a_i = j} (j = 1..k) of the skew row attached to
// w --r[k,m]--> w', or column lengths #{i : b_i = j} (j = k+1..N) of the
// skew column attached to w --c[k,m]--> w', read off the canonical monotone
// path. Empty when the relation does not hold.
std::optional<std::vector<int>> strip_lengths(const Permutation& w, const Permutation& w2, int k,
                                              StripKind kind);

// Partitions lambda ⊃ mu with lambda/mu a skew row (kRow) whose j-th row has
// lengths[j-1] boxes, or a skew column (kColumn) whose j-th column has
// lengths[j-1] boxes.
SkewShape strip_shape(const std::vector<int>& lengths, StripKind kind);

// c^{w'}_{w, w(nu)} for w <=_k w' where w(nu) is the Grassmannian permutation
// of descent k and shape nu. Zero unless w <=_k w' and ℓ(w') - ℓ(w) = |nu|.
// Otherwise it is the Littlewood-Richardson coefficient of the skew row (or
// skew column) read off a chain from w to w'. Throws Unsupported when
// neither relation holds.
Coefficient grassmannian_structure_constant(const Permutation& w, const Permutation& w2, int k,
                                            const Partition& nu);

}  // namespace flagpieri
