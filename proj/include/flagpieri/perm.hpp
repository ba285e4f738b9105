#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagpieri/partition.hpp"

namespace flagpieri {

// t_{ab}, 1 <= a < b.
struct Transposition {
  Transposition(int a_pos, int b_pos);

  int a;
  int b;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based. The ambient degree n is part of the value: 132 in S_3 and 1324 in
// S_4 are different objects, related by embed().
class Permutation {
 public:
  Permutation() = default;  // the empty permutation of S_0
  Permutation(std::initializer_list<int> images);
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  // w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> images() const { return images_; }

  // Largest i with w(i) != i, or 0 for the identity.
  int support_bound() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

int length(const Permutation& w);

// w·t_{ab} covers w in Bruhat order.
bool is_cover(const Permutation& w, const Transposition& t);

// Right multiplication w·t_{ab}: swaps the values at positions a and b.
Permutation apply_transposition(const Permutation& w, const Transposition& t);

// Right multiplication by s_i = t_{i,i+1}.
Permutation apply_adjacent(const Permutation& w, int i);

// (w·v)(i) = w(v(i)). Both must have the same degree.
Permutation compose(const Permutation& w, const Permutation& v);
Permutation inverse(const Permutation& w);

// Positions i with w(i) > w(i+1).
std::vector<int> descents(const Permutation& w);

// Reduced word (a_1..a_l) with w = s_{a_1}···s_{a_l}. Deterministic: strips
// the leftmost descent of w repeatedly.
std::vector<int> reduced_word(const Permutation& w);

// All reduced words of w, in lexicographic order. Exponential; intended
// for small n.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// Product s_{a_1}···s_{a_l} in S_n.
Permutation from_word(std::span<const int> word, int n);

// No descent other than k (the identity qualifies for every k).
bool is_grassmannian(const Permutation& w, int k);

// Shape of a Grassmannian permutation of descent k: lambda_{k+1-j} = w(j) - j.
// Throws NotGrassmannian.
Partition shape(const Permutation& w, int k);

// The Grassmannian permutation of descent k and shape lambda in S_n.
// Throws OutOfRange unless lambda has at most k parts and lambda_1 <= n-k.
Permutation grassmannian_from_shape(const Partition& lambda, int k, int n);

// r[k,m], c[k,m] and h[k;p,q]: the Grassmannian permutations of descent k
// with shapes (m), (1^m) and (p,1^{q-1}).
Permutation r_perm(int k, int m, int n);
Permutation c_perm(int k, int m, int n);
Permutation h_perm(int k, int p, int q, int n);

// w|_p in S_{n-1}: delete row p and column w(p) of the permutation matrix.
Permutation restrict(const Permutation& w, int p);

// w0·w·w0.
Permutation conjugate_by_w0(const Permutation& w);

// The image of w in S_N (N >= n), fixing every point above n.
Permutation embed(const Permutation& w, int n);

// Every permutation of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

// Compact digits for n <= 9 ("5412763"), comma-separated otherwise.
std::string to_string(const Permutation& w);
// Always comma-separated ("5,4,1,2,7,6,3").
std::string to_comma_string(const Permutation& w);

// Accepts "5,4,1,2,7,6,3" or, for n <= 9, "5412763". Throws ParseError.
Permutation parse_permutation(std::string_view text);

}  // namespace flagpieri
