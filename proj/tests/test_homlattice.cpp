#include <random>

#include "doctest.h"
#include "starsurg/errors.hpp"
#include "starsurg/homlattice.hpp"

using namespace starsurg;

namespace {

LatticeClass cls(const char* text) { return parse_lattice_class(text); }

LatticeClass random_class(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), label(1, 6);
  LatticeClass x(coeff(rng));
  for (int i = 0; i < 4; ++i) x.add_coefficient(ExcLabel(label(rng)), coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("pairing on basis classes") {
  CHECK(pairing(cls("h"), cls("h")) == 1);
  CHECK(pairing(cls("e1"), cls("e1")) == -1);
  CHECK(pairing(cls("e1"), cls("e2")) == 0);
  CHECK(pairing(cls("h - e1 - e2"), cls("h - e1 - e3")) == 0);
  CHECK(pairing(cls("h"), cls("e(2,3)")) == 0);
}

TEST_CASE("self intersections") {
  CHECK(self_intersection(cls("h - e1 - e2")) == -1);
  CHECK(self_intersection(cls("h - e1 - e2 - e3")) == -2);
  CHECK(self_intersection(cls("e1 - e2 - e3")) == -3);
  CHECK(self_intersection(cls("0")) == 0);
}

TEST_CASE("first Chern class pairing") {
  CHECK(c1_pairing(cls("h")) == 3);
  CHECK(c1_pairing(cls("e1")) == 1);
  for (int b = 1; b <= 8; ++b) {
    LatticeClass x(1);
    for (int i = 1; i <= b + 1; ++i) x.add_coefficient(ExcLabel(i), -1);
    CHECK(c1_pairing(x) == 2 - b);
  }
}

TEST_CASE("adjunction defect vanishes on the standard sphere shapes") {
  CHECK(adjunction_defect(cls("h")) == 0);
  for (int k = 0; k <= 20; ++k) {
    LatticeClass line_like(1), fiber_like = LatticeClass::exceptional(0);
    for (int i = 1; i <= k; ++i) {
      line_like.add_coefficient(ExcLabel(i), -1);
      fiber_like.add_coefficient(ExcLabel(i), -1);
    }
    CHECK(adjunction_defect(line_like) == 0);
    CHECK(adjunction_defect(fiber_like) == 0);
  }
  CHECK(adjunction_defect(cls("3h")) != 0);
  CHECK(adjunction_defect(cls("h + e1")) != 0);
}

TEST_CASE("pairing is symmetric and bilinear, c1 is linear") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const LatticeClass x = random_class(rng), y = random_class(rng), z = random_class(rng);
    const Integer s = std::uniform_int_distribution<int>(-4, 4)(rng);
    CHECK(pairing(x, y) == pairing(y, x));
    CHECK(pairing(x + s * y, z) == pairing(x, z) + s * pairing(y, z));
    CHECK(c1_pairing(x + s * y) == c1_pairing(x) + s * c1_pairing(y));
  }
}

TEST_CASE("zero coefficients are never stored") {
  LatticeClass x = cls("h - e1 + e2");
  x.add_coefficient(ExcLabel(1), 1);
  CHECK(x.exceptional_part().size() == 1);
  CHECK(x == cls("h + e2"));
  CHECK((x - x).to_string() == "0");
}

TEST_CASE("text round trip") {
  for (const char* t : {"h", "h - e1 - e(2,3)", "2h + 3e1", "-e4", "0", "e(1,2,3) - e7", "-2h - e1"}) {
    const LatticeClass x = cls(t);
    CHECK(x.to_string() == t);
    CHECK(cls(x.to_string().c_str()) == x);
  }
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const LatticeClass x = random_class(rng);
    CHECK(parse_lattice_class(x.to_string()) == x);
  }
  CHECK(cls("h-e1") == cls("h - e1"));
  CHECK(parse_exc_label("e(2,3)") == ExcLabel(std::vector<int>{2, 3}));
}

TEST_CASE("malformed classes are rejected") {
  CHECK_THROWS_AS(cls("h -"), ParseError);
  CHECK_THROWS_AS(cls("x1"), ParseError);
  CHECK_THROWS_AS(cls("e(2,"), ParseError);
  CHECK_THROWS_AS(cls(""), ParseError);
}

TEST_CASE("labels are totally ordered by value") {
  CHECK(ExcLabel(1) < ExcLabel(2));
  CHECK(ExcLabel(2) < ExcLabel(std::vector<int>{2, 1}));
  CHECK(ExcLabel(std::vector<int>{1, 5}) < ExcLabel(2));
}
