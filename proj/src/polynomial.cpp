#include "flagpieri/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "flagpieri/error.hpp"

namespace flagpieri {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in addition");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("coefficient overflow in multiplication");
  }
  return out;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const int> exponents) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i) + 1, exponents[i]);
}

void Monomial::set(int i, int exponent) {
  if (exponent < 0 || exponent > kMaxExponent) {
    throw std::overflow_error("exponent " + std::to_string(exponent) + " outside 0.." +
                              std::to_string(kMaxExponent));
  }
  if (i < 1 || i > kMaxVariables) {
    if (exponent == 0 && i > kMaxVariables) return;
    throw std::length_error("variable x" + std::to_string(i) + " outside x1..x" +
                            std::to_string(kMaxVariables));
  }
  exps_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(exponent);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::num_vars() const {
  for (int i = kMaxVariables; i >= 1; --i) {
    if (exps_[static_cast<std::size_t>(i - 1)] != 0) return i;
  }
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Coefficient c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(int i) {
  Monomial m;
  m.set(i, 1);
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, Coefficient c) {
  Polynomial out;
  if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.monomial > y.monomial; });
  Polynomial out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff = checked_add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

int Polynomial::num_vars() const {
  int n = 0;
  for (const auto& t : terms_) n = std::max(n, t.monomial.num_vars());
  return n;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Coefficient Polynomial::constant_term() const { return coefficient(Monomial{}); }

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  return (it != terms_.end() && it->monomial == m) ? it->coeff : 0;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

std::vector<int> Polynomial::degrees() const {
  std::vector<int> out;
  for (const auto& t : terms_) out.push_back(t.monomial.degree());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  return out *= -1;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  // Merge of two strictly decreasing sequences.
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      const auto c = checked_add(a->coeff, b->coeff);
      if (c != 0) merged.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial& Polynomial::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = checked_mul(t.coeff, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  std::vector<Term> terms;
  terms.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& s : f.terms_) {
    for (const auto& t : g.terms_) {
      Monomial m;
      for (int i = 1; i <= kMaxVariables; ++i) {
        const int e = s.monomial[i] + t.monomial[i];
        if (e) m.set(i, e);
      }
      terms.push_back({m, checked_mul(s.coeff, t.coeff)});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

// -------------------------------------------------------- group actions

Polynomial act(const Permutation& w, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 1; i <= kMaxVariables; ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      m.set(i <= w.degree() ? w(i) : i, e);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial swap_variables(int i, const Polynomial& f) {
  if (i < 1 || i >= kMaxVariables) throw std::length_error("swap index outside x1..x16");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) {
    const int p = t.monomial[i];
    const int q = t.monomial[i + 1];
    t.monomial.set(i, q);
    t.monomial.set(i + 1, p);
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1) throw OutOfRange("divided difference index must be >= 1");
  if (i >= kMaxVariables) {
    if (f.num_vars() < i) return Polynomial{};
    throw std::length_error("divided difference index outside x1..x16");
  }
  // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
  //   = ± sum_{j=0}^{hi-lo-1} x_i^{hi-1-j} x_{i+1}^{lo+j}
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const int p = t.monomial[i];
    const int q = t.monomial[i + 1];
    if (p == q) continue;
    const int hi = std::max(p, q);
    const int lo = std::min(p, q);
    const Coefficient c = p > q ? t.coeff : -t.coeff;
    for (int j = 0; j < hi - lo; ++j) {
      Monomial m = t.monomial;
      m.set(i, hi - 1 - j);
      m.set(i + 1, lo + j);
      terms.push_back({m, c});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial divided_difference_word(std::span<const int> word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) {
    g = divided_difference(*it, g);
  }
  return g;
}

Polynomial divided_difference_w(const Permutation& w, const Polynomial& f) {
  const auto word = reduced_word(w);
  return divided_difference_word(word, f);
}

Polynomial complete_sym(int m, int k) {
  if (m < 0 || k < 0) throw OutOfRange("complete_sym requires m >= 0 and k >= 0");
  if (k > kMaxVariables) throw std::length_error("complete_sym: too many variables");
  if (k == 0) return m == 0 ? Polynomial(1) : Polynomial{};
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == k) {
      exps[static_cast<std::size_t>(k - 1)] = remaining;
      terms.push_back({Monomial(exps), 1});
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var - 1)] = e;
      rec(var + 1, remaining - e);
    }
  };
  rec(1, m);
  return Polynomial::from_terms(std::move(terms));
}

Polynomial elementary_sym(int m, int k) {
  if (m < 0 || k < 0) throw OutOfRange("elementary_sym requires m >= 0 and k >= 0");
  if (m > k) return Polynomial{};
  if (k > kMaxVariables) throw std::length_error("elementary_sym: too many variables");
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(k), 0);
  std::fill(exps.begin(), exps.begin() + m, 1);
  do {
    terms.push_back({Monomial(exps), 1});
  } while (std::prev_permutation(exps.begin(), exps.end()));
  return Polynomial::from_terms(std::move(terms));
}

Polynomial staircase(int n) {
  std::vector<int> exps;
  for (int i = 1; i < n; ++i) exps.push_back(n - i);
  return Polynomial::monomial(Monomial(exps));
}

// -------------------------------------------------------------- text form

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= kMaxVariables; ++i) {
    const int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      Coefficient sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_space();
      auto term = parse_term();
      term.coeff = checked_mul(term.coeff, sign);
      terms.push_back(term);
      first = false;
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Term term{Monomial{}, 1};
    bool have_factor = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff = checked_mul(term.coeff, parse_int());
      } else if (c == 'x') {
        ++pos_;
        const auto index = parse_int();
        if (index < 1) fail("variable index must be >= 1");
        Coefficient exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          exponent = parse_int();
        }
        const auto total = term.monomial[static_cast<int>(index)] + exponent;
        if (index > kMaxVariables || total > kMaxExponent) fail("monomial exceeds capacity");
        term.monomial.set(static_cast<int>(index), static_cast<int>(total));
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("missing term");
    return term;
  }

  Coefficient parse_int() {
    skip_space();
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Coefficient value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc{}) fail("expected an integer");
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    // Magnitude without negating INT64_MIN.
    const auto magnitude = negative ? static_cast<std::uint64_t>(-(t.coeff + 1)) + 1
                                    : static_cast<std::uint64_t>(t.coeff);
    const auto mono = monomial_text(t.monomial);
    if (mono.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + '*';
      out += mono;
    }
    first = false;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace flagpieri
