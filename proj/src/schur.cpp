#include "flagpieri/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "flagpieri/error.hpp"
#include "flagpieri/perm.hpp"

namespace flagpieri {

bool is_skew_row(const SkewShape& s) {
  for (int i = 1; i <= s.outer.length(); ++i) {
    if (s.inner[i] < s.outer[i + 1]) return false;
  }
  return true;
}

bool is_skew_column(const SkewShape& s) {
  return is_skew_row(SkewShape(transpose(s.outer), transpose(s.inner)));
}

int skew_size(const SkewShape& s) { return s.outer.size() - s.inner.size(); }

Partition transpose(const Partition& lambda) {
  std::vector<int> parts(static_cast<std::size_t>(lambda[1]), 0);
  for (int j = 1; j <= lambda[1]; ++j) {
    int count = 0;
    while (count < lambda.length() && lambda[count + 1] >= j) ++count;
    parts[static_cast<std::size_t>(j - 1)] = count;
  }
  return Partition(std::move(parts));
}

Partition complement(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n || lambda.length() > k || lambda[1] > n - k) {
    throw OutOfRange("partition " + to_string(lambda) + " does not fit in the " +
                     std::to_string(k) + "x" + std::to_string(n - k) + " box");
  }
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) parts[static_cast<std::size_t>(i - 1)] = n - k - lambda[k + 1 - i];
  return Partition(std::move(parts));
}

namespace {

Polynomial compute_schur(const Partition& lambda, int k) {
  std::vector<int> exps(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) exps[static_cast<std::size_t>(i - 1)] = lambda[i] + k - i;
  return divided_difference_w(Permutation::longest(k), Polynomial::monomial(Monomial(exps)));
}

}  // namespace

Polynomial schur_poly(const Partition& lambda, int k) {
  if (k < 0) throw OutOfRange("number of variables must be >= 0");
  if (lambda.length() > k) {
    throw TooManyParts("partition " + to_string(lambda) + " has more than " + std::to_string(k) +
                       " parts");
  }
  if (lambda.empty()) return Polynomial(1);
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, Polynomial> table;
  const auto key = std::make_pair(lambda, k);
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  auto value = compute_schur(lambda, k);
  std::lock_guard lock(mutex);
  return table.try_emplace(key, std::move(value)).first->second;
}

std::map<Partition, Coefficient> expand_in_schur_basis(const Polynomial& f, int k) {
  std::map<Partition, Coefficient> out;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& lead = rest.terms().front();
    std::vector<int> exps;
    for (int i = 1; i <= kMaxVariables; ++i) exps.push_back(lead.monomial[i]);
    if (lead.monomial.num_vars() > k || !std::is_sorted(exps.rbegin(), exps.rend())) {
      throw NotInSpan("polynomial is not a combination of Schur polynomials in " +
                      std::to_string(k) + " variables");
    }
    Partition lambda(std::move(exps));
    const auto c = lead.coeff;
    rest -= schur_poly(lambda, k) * c;
    out.emplace(std::move(lambda), c);
  }
  return out;
}

std::vector<Partition> partitions_in_box(int size, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int p = std::min(bound, remaining); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (size >= 0) rec(size, max_part);
  return out;
}

std::set<Partition> classical_pieri(const Partition& mu, int m, int k, int n, StripKind kind) {
  if (k < 0 || k > n || mu.length() > k || mu[1] > n - k) {
    throw OutOfRange("partition " + to_string(mu) + " does not fit in the " + std::to_string(k) +
                     "x" + std::to_string(n - k) + " box");
  }
  std::set<Partition> out;
  for (const auto& lambda : partitions_in_box(mu.size() + m, k, n - k)) {
    if (!lambda.contains(mu)) continue;
    const SkewShape s(lambda, mu);
    if (kind == StripKind::kRow ? is_skew_row(s) : is_skew_column(s)) out.insert(lambda);
  }
  return out;
}

Coefficient lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda,
                           int k) {
  for (const auto* p : {&mu, &nu, &lambda}) {
    if (p->length() > k) {
      throw TooManyParts("partition " + to_string(*p) + " has more than " + std::to_string(k) +
                         " parts");
    }
  }
  if (lambda.size() != mu.size() + nu.size()) return 0;
  const auto expansion = expand_in_schur_basis(schur_poly(mu, k) * schur_poly(nu, k), k);
  auto it = expansion.find(lambda);
  return it == expansion.end() ? 0 : it->second;
}

}  // namespace flagpieri
