#include <doctest.h>

#include "flagpieri/error.hpp"
#include "flagpieri/schubert.hpp"

using namespace flagpieri;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }
Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("schubert polynomials of small permutations") {
  CHECK(schubert_poly(P("321")) == x(1) * x(1) * x(2));
  CHECK(schubert_poly(P("132")) == x(1) + x(2));
  CHECK(schubert_poly(P("213")) == x(1));
  CHECK(schubert_poly(P("123")) == Polynomial(1));
  CHECK(schubert_poly(P("231")) == x(1) * x(2));
  CHECK(schubert_poly(P("312")) == x(1) * x(1));
  CHECK(schubert_poly(P("1432")) == x(1) * x(1) * x(2) + x(1) * x(1) * x(3) +
                                        x(1) * x(2) * x(2) + x(1) * x(2) * x(3) +
                                        x(2) * x(2) * x(3));
  CHECK(schubert_poly(Permutation()) == Polynomial(1));
}

TEST_CASE("schubert polynomials are stable and match the direct definition") {
  for (const auto& w : all_permutations(4)) {
    CHECK(schubert_poly(embed(w, 6)) == schubert_poly(w));
    CHECK(schubert_poly_direct(w) == schubert_poly(w));
    CHECK(schubert_poly_direct(embed(w, 5)) == schubert_poly(w));
  }
  // Adjacent transpositions give x_1 + ... + x_k.
  CHECK(schubert_poly(P("12354")) == complete_sym(1, 4));
}

TEST_CASE("expansion in the schubert basis") {
  const auto e = expand_in_schubert_basis(x(1) * x(1) + x(1) * x(2), 3);
  CHECK(e.ambient() == 3);
  CHECK(e.size() == 2);
  CHECK(e.coefficient(P("312")) == 1);
  CHECK(e.coefficient(P("231")) == 1);
  CHECK(e.coefficient(P("321")) == 0);
  CHECK(e.to_polynomial() == x(1) * x(1) + x(1) * x(2));

  const auto mixed = expand_in_schubert_basis(x(1) * 3 - x(2) + 2, 3);
  CHECK(mixed.coefficient(P("123")) == 2);
  CHECK(mixed.coefficient(P("213")) == 4);
  CHECK(mixed.coefficient(P("132")) == -1);

  CHECK(expand_in_schubert_basis(Polynomial(), 3).empty());
  CHECK_THROWS_AS(expand_in_schubert_basis(x(1) * x(1) * x(1), 3), NotInSpan);
  CHECK_THROWS_AS(expand_in_schubert_basis(x(3), 3), NotInSpan);
  CHECK_NOTHROW(expand_in_schubert_basis(x(1) * x(1) * x(1), 4));
}

TEST_CASE("expansions embed, truncate and compare by class") {
  SchubertExpansion e(3);
  e.add(P("231"), 2);
  e.add(P("21"), 1);
  CHECK(e.coefficient(P("213")) == 1);
  e.add(P("213"), -1);
  CHECK(e.size() == 1);
  const auto big = e.embedded(5);
  CHECK(big.ambient() == 5);
  CHECK(big.coefficient(P("23145")) == 2);
  CHECK(big.same_classes(e));
  CHECK_FALSE(big == e);
  CHECK(big.minimal_ambient() == 3);
  CHECK(big.truncated(3) == e);

  SchubertExpansion wide(4);
  wide.add(P("1243"), 1);
  wide.add(P("2134"), 1);
  CHECK(wide.truncated(3).size() == 1);
  CHECK(wide.truncated(3).coefficient(P("213")) == 1);
  CHECK_THROWS_AS(e.embedded(2), OutOfRange);
  CHECK_THROWS_AS(e.add(P("1243"), 1), OutOfRange);
  e.add(P("1234"), 1);
  CHECK(e.coefficient(P("123")) == 1);
}

TEST_CASE("oracle products") {
  const auto e = product_oracle(P("132"), P("213"));
  CHECK(e.size() == 2);
  CHECK(e.coefficient(embed(P("312"), e.ambient())) == 1);
  CHECK(e.coefficient(embed(P("231"), e.ambient())) == 1);
  CHECK(oracle_ambient(P("132"), P("213")) == 4);
  CHECK(oracle_ambient(P("321"), P("12")) == 3);
  // s_1 * s_1 = s_2 + s_{11} in three variables.
  const auto sq = product_oracle(P("132"), P("132"));
  CHECK(sq.to_polynomial() == (x(1) + x(2)) * (x(1) + x(2)));
}

TEST_CASE("pairing in the cohomology of the flag manifold") {
  const int n = 4;
  const auto w0 = Permutation::longest(n);
  for (const auto& w : all_permutations(n)) {
    const auto dual = compose(w0, w);
    CHECK(product_oracle(w, dual).truncated(n).coefficient(w0) == 1);
  }
}

TEST_CASE("monk's rule") {
  const auto a = monk_expand(P("132"), 1, 3);
  CHECK(a.size() == 2);
  CHECK(a.coefficient(P("312")) == 1);
  CHECK(a.coefficient(P("231")) == 1);
  const auto b = monk_expand(P("321"), 1, 4);
  CHECK(b.size() == 1);
  CHECK(b.coefficient(P("4213")) == 1);
  CHECK(monk_expand(P("321"), 1, 3).empty());
  for (const auto& w : all_permutations(4)) {
    for (int k = 1; k < 4; ++k) {
      CHECK(monk_expand(w, k, 5).same_classes(product_oracle(w, r_perm(k, 1, 4))));
    }
  }
  CHECK_THROWS_AS(monk_expand(P("321"), 3, 3), OutOfRange);
  CHECK_THROWS_AS(monk_expand(P("321"), 1, 2), OutOfRange);
}
