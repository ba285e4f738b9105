#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagpieri {

// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
// dropped on construction, so (2,2,0) == (2,2).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  bool empty() const { return parts_.empty(); }

  // i-th part, 1-based; zero past the last nonzero part.
  int operator[](int i) const;

  std::span<const int> parts() const { return parts_; }

  // Parts padded with zeros (or left as is) to exactly k entries.
  std::vector<int> padded(int k) const;

  bool contains(const Partition& other) const;  // this ⊃ other

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// outer / inner with inner ⊂ outer.
struct SkewShape {
  SkewShape(Partition outer_shape, Partition inner_shape);

  Partition outer;
  Partition inner;
};

Partition parse_partition(std::string_view text);

// "4,2,2"; with k > 0 the output is padded to k parts ("2,2,0"). The empty
// partition prints as "0".
std::string to_string(const Partition& p, int k = 0);

}  // namespace flagpieri
