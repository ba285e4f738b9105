#include <doctest.h>

#include "flagpieri/error.hpp"
#include "flagpieri/schubert.hpp"
#include "flagpieri/schur.hpp"

using namespace flagpieri;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition{2, 2, 0} == Partition{2, 2});
  CHECK(Partition{4, 2, 2}.size() == 8);
  CHECK(Partition{4, 2, 2}[3] == 2);
  CHECK(Partition{4, 2, 2}[4] == 0);
  CHECK(Partition{2}.padded(3) == std::vector<int>{2, 0, 0});
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK_FALSE(Partition{3}.contains(Partition{1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), OutOfRange);
  CHECK_THROWS_AS(Partition({2, -1}), OutOfRange);
  CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), OutOfRange);
}

TEST_CASE("partition text round trip") {
  CHECK(to_string(Partition{4, 2, 2}) == "4,2,2");
  CHECK(to_string(Partition{2, 2}, 3) == "2,2,0");
  CHECK(to_string(Partition{}) == "0");
  CHECK(parse_partition("2,2,0") == Partition{2, 2});
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("") == Partition{});
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions_in_box(n, n, n)) {
      CHECK(parse_partition(to_string(p)) == p);
      CHECK(parse_partition(to_string(p, 9)) == p);
    }
  }
  for (const char* bad : {"1,2", "a", "2,,1", "-1", "2,1,"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_partition(bad), ParseError);
  }
}

TEST_CASE("skew rows and columns") {
  const SkewShape s(Partition{5, 2, 1}, Partition{3, 1});
  CHECK(is_skew_row(s));
  CHECK(skew_size(s) == 4);
  CHECK_FALSE(is_skew_column(s));
  CHECK(is_skew_column(SkewShape(Partition{2, 2, 1}, Partition{1, 1})));
  CHECK_FALSE(is_skew_row(SkewShape(Partition{2, 2}, Partition{1})));
  CHECK(is_skew_row(SkewShape(Partition{2}, Partition{2})));
}

TEST_CASE("transpose and complement") {
  CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(transpose(transpose(Partition{5, 3, 3, 1})) == Partition{5, 3, 3, 1});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(complement(Partition{4, 2, 2}, 3, 7) == Partition{2, 2, 0});
  CHECK(complement(Partition{}, 2, 4) == Partition{2, 2});
  CHECK_THROWS_AS(complement(Partition{5}, 3, 7), OutOfRange);
  CHECK_THROWS_AS(complement(Partition{1, 1, 1, 1}, 3, 7), OutOfRange);
}

TEST_CASE("schur polynomials") {
  CHECK(schur_poly(Partition{1}, 2) == x(1) + x(2));
  CHECK(schur_poly(Partition{1, 1}, 2) == x(1) * x(2));
  CHECK(schur_poly(Partition{2, 1}, 2) == x(1) * x(1) * x(2) + x(1) * x(2) * x(2));
  CHECK(schur_poly(Partition{}, 3) == Polynomial(1));
  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= 4; ++m) {
      CHECK(schur_poly(Partition{m}, k) == complete_sym(m, k));
    }
    for (int m = 0; m <= k; ++m) {
      CHECK(schur_poly(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), k) ==
            elementary_sym(m, k));
    }
  }
  CHECK_THROWS_AS(schur_poly(Partition{1, 1, 1}, 2), TooManyParts);
  // Grassmannian Schubert polynomials are Schur polynomials.
  CHECK(schubert_poly(parse_permutation("2413")) == schur_poly(Partition{2, 1}, 2));
}

TEST_CASE("schur expansion") {
  const auto e = expand_in_schur_basis(schur_poly(Partition{1}, 3) * schur_poly(Partition{1}, 3), 3);
  CHECK(e.size() == 2);
  CHECK(e.at(Partition{2}) == 1);
  CHECK(e.at(Partition{1, 1}) == 1);
  CHECK(expand_in_schur_basis(Polynomial(), 2).empty());
  CHECK_THROWS_AS(expand_in_schur_basis(x(1), 2), NotInSpan);
}

TEST_CASE("littlewood-richardson coefficients") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}, 2) == 1);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}, 2) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3) == 2);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}, 1) == 1);
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2}, 2) == 0);
  CHECK_THROWS_AS(lr_coefficient(Partition{1, 1, 1}, Partition{1}, Partition{2, 1, 1}, 2),
                  TooManyParts);
}

TEST_CASE("classical pieri rule") {
  const auto rows = classical_pieri(Partition{1}, 1, 2, 4, StripKind::kRow);
  CHECK(rows == std::set<Partition>{Partition{2}, Partition{1, 1}});
  const auto boxed = classical_pieri(Partition{2}, 1, 2, 4, StripKind::kRow);
  CHECK(boxed == std::set<Partition>{Partition{2, 1}});
  const auto cols = classical_pieri(Partition{1}, 2, 3, 6, StripKind::kColumn);
  CHECK(cols == std::set<Partition>{Partition{2, 1}, Partition{1, 1, 1}});
  CHECK(classical_pieri(Partition{}, 3, 2, 4, StripKind::kRow).empty());
}

TEST_CASE("partitions in a box") {
  CHECK(partitions_in_box(4, 4, 4).size() == 5);
  CHECK(partitions_in_box(4, 2, 4).size() == 3);
  CHECK(partitions_in_box(4, 2, 2).size() == 1);
  CHECK(partitions_in_box(0, 0, 0).size() == 1);
  CHECK(partitions_in_box(5, 2, 2).empty());
}
