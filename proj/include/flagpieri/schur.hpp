#pragma once

#include <map>
#include <set>

#include "flagpieri/partition.hpp"
#include "flagpieri/polynomial.hpp"

namespace flagpieri {

enum class StripKind { kRow, kColumn };

// Each column of outer/inner holds at most one box (inner_i >= outer_{i+1}).
bool is_skew_row(const SkewShape& s);
// Each row of outer/inner holds at most one box.
bool is_skew_column(const SkewShape& s);
int skew_size(const SkewShape& s);

Partition transpose(const Partition& lambda);

// (n-k-lambda_k, ..., n-k-lambda_1). Throws OutOfRange unless lambda fits in
// the k x (n-k) box.
Partition complement(const Partition& lambda, int k, int n);

// s_lambda(x_1..x_k) as ∂_{w0}(x^{lambda + delta}) with w0 the longest
// element of S_k and delta = (k-1, ..., 1, 0). Throws TooManyParts.
Polynomial schur_poly(const Partition& lambda, int k);

// Expansion of a symmetric polynomial in x_1..x_k in the Schur basis by
// repeatedly subtracting the lex-leading term. Throws NotInSpan if a leading
// exponent is not a partition with at most k parts.
std::map<Partition, Coefficient> expand_in_schur_basis(const Polynomial& f, int k);

// All lambda ⊃ mu in the k x (n-k) box with lambda/mu a skew row (resp.
// skew column) of size m.
std::set<Partition> classical_pieri(const Partition& mu, int m, int k, int n, StripKind kind);

// Coefficient of s_lambda in s_mu·s_nu over k variables, by brute-force
// multiplication and Schur expansion. Throws TooManyParts if any argument
// has more than k parts.
Coefficient lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda,
                           int k);

// Every partition of `size` with at most `max_parts` parts, none exceeding
// `max_part`.
std::vector<Partition> partitions_in_box(int size, int max_parts, int max_part);

}  // namespace flagpieri
