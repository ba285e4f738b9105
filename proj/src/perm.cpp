#include "flagpieri/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flagpieri/error.hpp"

namespace flagpieri {

Transposition::Transposition(int a_pos, int b_pos) : a(a_pos), b(b_pos) {
  if (a_pos < 1 || a_pos >= b_pos) {
    throw OutOfRange("transposition t_{" + std::to_string(a_pos) + "," + std::to_string(b_pos) +
                     "} requires 1 <= a < b");
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::vector<int>(images)) {}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw OutOfRange("one-line notation must be a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(images));
}

int Permutation::support_bound() const {
  for (int i = degree(); i >= 1; --i) {
    if ((*this)(i) != i) return i;
  }
  return 0;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.degree());
  for (int v : w.images()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

int length(const Permutation& w) {
  int inversions = 0;
  const auto img = w.images();
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] > img[j]) ++inversions;
    }
  }
  return inversions;
}

namespace {

void require_positions(const Permutation& w, const Transposition& t) {
  if (t.b > w.degree()) {
    throw OutOfRange("transposition t_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                     "} exceeds degree " + std::to_string(w.degree()));
  }
}

}  // namespace

bool is_cover(const Permutation& w, const Transposition& t) {
  require_positions(w, t);
  const int lo = w(t.a);
  const int hi = w(t.b);
  if (lo > hi) return false;
  for (int c = t.a + 1; c < t.b; ++c) {
    if (lo < w(c) && w(c) < hi) return false;
  }
  return true;
}

Permutation apply_transposition(const Permutation& w, const Transposition& t) {
  require_positions(w, t);
  std::vector<int> images(w.images().begin(), w.images().end());
  std::swap(images[static_cast<std::size_t>(t.a - 1)], images[static_cast<std::size_t>(t.b - 1)]);
  return Permutation(std::move(images));
}

Permutation apply_adjacent(const Permutation& w, int i) { return apply_transposition(w, {i, i + 1}); }

Permutation compose(const Permutation& w, const Permutation& v) {
  if (w.degree() != v.degree()) throw OutOfRange("compose requires permutations of equal degree");
  std::vector<int> images(static_cast<std::size_t>(w.degree()));
  for (int i = 1; i <= w.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = w(v(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> images(static_cast<std::size_t>(w.degree()));
  for (int i = 1; i <= w.degree(); ++i) images[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(images));
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.degree(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  // w = (w s_i) s_i whenever i is a descent, so each stripped descent is the
  // next letter from the right.
  std::vector<int> word;
  std::vector<int> images(w.images().begin(), w.images().end());
  const auto n = static_cast<int>(images.size());
  int i = 0;
  while (i + 1 < n) {
    if (images[static_cast<std::size_t>(i)] > images[static_cast<std::size_t>(i + 1)]) {
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i + 1)]);
      word.push_back(i + 1);
      i = std::max(i - 1, 0);
    } else {
      ++i;
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  const auto ds = descents(w);
  if (ds.empty()) {
    out.emplace_back();
    return out;
  }
  for (int i : ds) {
    for (auto& word : all_reduced_words(apply_adjacent(w, i))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation from_word(std::span<const int> word, int n) {
  auto w = Permutation::identity(n);
  for (int a : word) w = apply_adjacent(w, a);
  return w;
}

bool is_grassmannian(const Permutation& w, int k) {
  for (int d : descents(w)) {
    if (d != k) return false;
  }
  return true;
}

Partition shape(const Permutation& w, int k) {
  if (k < 0 || k > w.degree()) {
    throw OutOfRange("descent position " + std::to_string(k) + " outside 0.." +
                     std::to_string(w.degree()));
  }
  if (!is_grassmannian(w, k)) {
    throw NotGrassmannian(to_string(w) + " has a descent other than " + std::to_string(k));
  }
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) parts[static_cast<std::size_t>(k - j)] = w(j) - j;
  return Partition(std::move(parts));
}

Permutation grassmannian_from_shape(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n) throw OutOfRange("descent k must satisfy 0 <= k <= n");
  if (lambda.length() > k) {
    throw OutOfRange("shape " + to_string(lambda) + " has more than k=" + std::to_string(k) +
                     " parts");
  }
  if (lambda[1] > n - k) {
    throw OutOfRange("shape " + to_string(lambda) + " does not fit in a " + std::to_string(k) +
                     "x" + std::to_string(n - k) + " box");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= k; ++j) {
    const int v = j + lambda[k + 1 - j];
    images[static_cast<std::size_t>(j - 1)] = v;
    used[static_cast<std::size_t>(v)] = true;
  }
  int next = 1;
  for (int j = k + 1; j <= n; ++j) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    images[static_cast<std::size_t>(j - 1)] = next++;
  }
  return Permutation(std::move(images));
}

Permutation r_perm(int k, int m, int n) {
  if (k < 1 || m < 0 || k + m > n) {
    throw OutOfRange("r[k,m] requires k >= 1, m >= 0 and k+m <= n (k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return grassmannian_from_shape(Partition{m}, k, n);
}

Permutation c_perm(int k, int m, int n) {
  if (m < 0 || m > k || k > n || (m > 0 && k == n)) {
    throw OutOfRange("c[k,m] requires m <= k < n (k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return grassmannian_from_shape(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), k, n);
}

Permutation h_perm(int k, int p, int q, int n) {
  if (p < 1 || q < 1 || q > k || k + p > n) {
    throw OutOfRange("h[k;p,q] requires p,q >= 1, q <= k and k+p <= n (k=" + std::to_string(k) +
                     ", p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                     ", n=" + std::to_string(n) + ")");
  }
  std::vector<int> parts(static_cast<std::size_t>(q), 1);
  parts[0] = p;
  return grassmannian_from_shape(Partition(std::move(parts)), k, n);
}

Permutation restrict(const Permutation& w, int p) {
  const int n = w.degree();
  if (p < 1 || p > n) throw OutOfRange("restrict position must lie in 1..n");
  const int pivot = w(p);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n; ++j) {
    if (j == p) continue;
    const int v = w(j);
    images.push_back(v > pivot ? v - 1 : v);
  }
  return Permutation(std::move(images));
}

Permutation conjugate_by_w0(const Permutation& w) {
  const int n = w.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(images));
}

Permutation embed(const Permutation& w, int n) {
  if (n < w.degree()) {
    throw OutOfRange("cannot embed S_" + std::to_string(w.degree()) + " into S_" +
                     std::to_string(n));
  }
  std::vector<int> images(w.images().begin(), w.images().end());
  for (int i = w.degree() + 1; i <= n; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& w) {
  if (w.degree() > 9) return to_comma_string(w);
  std::string out;
  for (int v : w.images()) out += static_cast<char>('0' + v);
  return out;
}

std::string to_comma_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const std::string original(text);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) {
      throw ParseError("compact permutation '" + original +
                       "' is too long; use comma-separated form beyond n = 9");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("malformed permutation '" + original + "'");
      images.push_back(c - '0');
    }
  } else {
    while (true) {
      auto comma = text.find(',');
      auto field = text.substr(0, comma);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("malformed permutation '" + original + "'");
      }
      images.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  try {
    return Permutation(std::move(images));
  } catch (const OutOfRange& e) {
    throw ParseError("'" + original + "' is not a permutation: " + e.what());
  }
}

}  // namespace flagpieri
