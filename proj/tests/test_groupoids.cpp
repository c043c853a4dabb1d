#include "doctest.h"

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/groupoid.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

std::string kind_of(const RawGroupoid& raw) {
  try {
    validate_groupoid(raw);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  return "";
}

RawGroupoid pair2_raw() {
  RawGroupoid raw;
  raw.objects = {"a", "b"};
  // (i,j) : j -> i at index 2i + j.
  for (Element i = 0; i < 2; ++i)
    for (Element j = 0; j < 2; ++j) raw.morphisms.push_back({j, i, Element(2 * j + i), ""});
  for (Element i = 0; i < 2; ++i)
    for (Element j = 0; j < 2; ++j)
      for (Element k = 0; k < 2; ++k) raw.compose.push_back({Element(2 * i + j), Element(2 * j + k), Element(2 * i + k)});
  return raw;
}

}  // namespace

TEST_SUITE("groupoids") {
  TEST_CASE("a group is a one-object groupoid") {
    const auto g = group_groupoid(cyclic_group(2));
    CHECK(g.num_objects() == 1);
    CHECK(g.num_morphisms() == 2);
    CHECK(g.identity(0) == 0);
    CHECK(g.inverse(1) == 1);
    CHECK(g.compose(1, 1) == Element{0});
    CHECK_THROWS_AS(group_groupoid(left_zero_semigroup(2)), Error);
  }

  TEST_CASE("pair groupoid validates and matches the library builder") {
    const auto g = validate_groupoid(pair2_raw());
    CHECK(g == pair_groupoid(2));
    for (Element x = 0; x < 4; ++x) {
      for (Element y = 0; y < 4; ++y) {
        CHECK(g.compose(x, y).has_value() == (g.dom(x) == g.cod(y)));
        if (auto xy = g.compose(x, y)) {
          CHECK(g.dom(*xy) == g.dom(y));
          CHECK(g.cod(*xy) == g.cod(x));
        }
      }
      CHECK(g.compose(x, g.identity(g.dom(x))) == x);
      CHECK(g.compose(g.identity(g.cod(x)), x) == x);
      CHECK(g.compose(x, g.inverse(x)) == g.identity(g.cod(x)));
      CHECK(g.compose(g.inverse(x), x) == g.identity(g.dom(x)));
    }
  }

  TEST_CASE("validation failures") {
    auto raw = pair2_raw();
    for (Element k = 0; k < 4; ++k) raw.morphisms[k].inv = k;
    CHECK(kind_of(raw) == "InverseViolation");

    raw = pair2_raw();
    raw.compose.push_back({1, 1, 1});  // (0,1)(0,1) is not composable
    CHECK(kind_of(raw) == "NotComposableClosed");

    raw = pair2_raw();
    raw.compose.pop_back();
    CHECK(kind_of(raw) == "NotComposableClosed");

    raw = pair2_raw();
    raw.morphisms[0].dom = 7;
    CHECK(kind_of(raw) == "OutOfRange");

    // Two loops at one object, every product equal to the first: no identity.
    RawGroupoid bad;
    bad.objects = {"x"};
    bad.morphisms = {{0, 0, 0, ""}, {0, 0, 1, ""}};
    bad.compose = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
    CHECK(kind_of(bad) == "IdentityViolation");
  }

  TEST_CASE("S(G) of a group is the group with a zero adjoined") {
    const auto sg = to_inverse_semigroup(group_groupoid(cyclic_group(2)));
    CHECK(sg.semigroup.order() == 3);
    const auto c = classify_semigroup(sg.semigroup);
    CHECK(c.is_inverse);
    CHECK(sg.semigroup.product(2, 2) == 1);
    CHECK(sg.semigroup.product(0, 2) == 0);
  }

  TEST_CASE("S(trivial groupoid) is the two-element semilattice") {
    const auto sg = to_inverse_semigroup(trivial_groupoid());
    CHECK(sg.semigroup == chain_semilattice(2));
  }

  TEST_CASE("S(pair groupoid) is B_n under (i,j) -> e_ij") {
    for (int n = 1; n <= 3; ++n) {
      const auto sg = to_inverse_semigroup(pair_groupoid(n));
      CHECK(sg.semigroup == matrix_units_semigroup(n));
      // Against 0/1 integer matrix multiplication.
      auto unit_of = [n](Element x) {
        if (x == 0) return oracle::Unit{0, 0};
        return oracle::Unit{int((x - 1) / n) + 1, int((x - 1) % n) + 1};
      };
      for (Element a = 0; a < sg.semigroup.order(); ++a)
        for (Element b = 0; b < sg.semigroup.order(); ++b)
          CHECK(unit_of(sg.semigroup.product(a, b)) == oracle::bn_multiply(n, unit_of(a), unit_of(b)));
    }
  }

  TEST_CASE("property: S(G) is inverse with V(g) = {g^-1} and the expected idempotents") {
    const std::vector<FiniteGroupoid> gs = {
        trivial_groupoid(), pair_groupoid(2), pair_groupoid(3), group_groupoid(cyclic_group(3)),
        disjoint_union(pair_groupoid(2), trivial_groupoid()),
        disjoint_union(group_groupoid(cyclic_group(2)), pair_groupoid(2))};
    for (const auto& g : gs) {
      const auto sg = to_inverse_semigroup(g);
      const auto c = classify_semigroup(sg.semigroup);
      CHECK(c.is_inverse);
      CHECK(c.inverse_sets[0] == std::vector<Element>{0});
      std::vector<Element> expected_e{0};
      for (Element o = 0; o < g.num_objects(); ++o) expected_e.push_back(sg.embedding[g.identity(o)]);
      std::sort(expected_e.begin(), expected_e.end());
      CHECK(c.idempotents == expected_e);
      for (Element x = 0; x < g.num_morphisms(); ++x) {
        CHECK(c.inverse_sets[sg.embedding[x]] == std::vector<Element>{sg.embedding[g.inverse(x)]});
      }
    }
  }

  TEST_CASE("disjoint union keeps both parts apart") {
    const auto u = disjoint_union(pair_groupoid(2), trivial_groupoid());
    CHECK(u.num_objects() == 3);
    CHECK(u.num_morphisms() == 5);
    CHECK_FALSE(u.compose(0, 4).has_value());
    CHECK(validate_groupoid(u.raw()) == u);
  }
}
