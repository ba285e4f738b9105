#include "flagpieri/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flagpieri/error.hpp"

namespace flagpieri {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw OutOfRange("partition parts must be nonnegative and weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Partition::padded(int k) const {
  std::vector<int> out(parts_);
  if (static_cast<int>(out.size()) < k) out.resize(static_cast<std::size_t>(k), 0);
  return out;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i) {
    if ((*this)[i] < other[i]) return false;
  }
  return true;
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner)) throw OutOfRange("skew shape requires inner ⊂ outer");
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const std::string original(text);
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
      throw ParseError("malformed partition '" + original + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p, int k) {
  auto parts = p.padded(k);
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace flagpieri
