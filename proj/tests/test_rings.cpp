#include "doctest.h"

#include <random>

#include "grl/error.hpp"
#include "grl/ring.hpp"
#include "grl/theorem_checks.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

std::vector<Element> idx(std::initializer_list<Element> xs) { return xs; }

FiniteRing two_z8() {
  const FiniteRing z8 = integers_mod(8);
  const Element g = 2;
  return generated_subring(z8, std::span<const Element>(&g, 1)).ring;
}

// [[a, b], [0, 0]] inside M_2(Z_2).
FiniteRing row_matrices() {
  const auto m2 = matrix_ring(integers_mod(2), 2);
  const std::vector<Element> gens{8, 4};
  return generated_subring(m2, gens).ring;
}

std::vector<FiniteRing> small_rings() {
  return {integers_mod(2), integers_mod(3), integers_mod(4), integers_mod(6), integers_mod(8),
          integers_mod(9), field_f4(), product_ring(integers_mod(2), integers_mod(2)),
          zero_multiplication_ring(2), two_z8(), row_matrices(), opposite_ring(row_matrices())};
}

}  // namespace

TEST_SUITE("rings") {
  TEST_CASE("validation") {
    CHECK(integers_mod(4).order() == 4);
    CHECK(zero_multiplication_ring(2).mul(1, 1) == 0);
    const FiniteRing z2 = integers_mod(2);
    try {
      validate_ring(z2.additive(), {0, 1, 1, 1});
      FAIL("expected Distributivity");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "Distributivity");
    }
    try {
      validate_ring(z2.additive(), {0, 0, 0, 2});
      FAIL("expected OutOfRange");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == "OutOfRange");
    }
    try {
      validate_additive_group(2, {0, 1, 1, 1}, {0, 1});
      FAIL("expected a group axiom failure");
    } catch (const ValidationError& e) {
      CHECK_FALSE(e.kind().empty());
    }
  }

  TEST_CASE("named rings agree with modular and matrix arithmetic") {
    for (int n : {2, 3, 4, 6, 8, 9}) {
      const auto r = integers_mod(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CHECK(r.add(a, b) == Element((a + b) % n));
          CHECK(r.mul(a, b) == Element(a * b % n));
        }
    }
    const auto m = matrix_ring(integers_mod(3), 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const Element x = rng() % m.order(), y = rng() % m.order();
      const auto dx = decode_matrix(3, 2, x), dy = decode_matrix(3, 2, y);
      const auto expect = oracle::matmul_mod(2, 3, std::vector<int>(dx.begin(), dx.end()),
                                             std::vector<int>(dy.begin(), dy.end()));
      const auto got = decode_matrix(3, 2, m.mul(x, y));
      CHECK(std::vector<int>(got.begin(), got.end()) == expect);
    }
    // F4: x * x = x + 1, i.e. 2 * 2 = 3.
    CHECK(field_f4().mul(2, 2) == 3);
    CHECK(field_f4().mul(2, 3) == 1);
  }

  TEST_CASE("s-unitality") {
    CHECK(is_s_unital(integers_mod(4)));
    CHECK(is_left_s_unital(integers_mod(4)).unit[3] == Element{1});
    const auto z = is_left_s_unital(zero_multiplication_ring(2));
    CHECK_FALSE(z.holds);
    CHECK(z.failing == Element{1});
    const auto t = two_z8();
    CHECK(t.order() == 4);
    CHECK_FALSE(is_s_unital(t));
    const auto row = row_matrices();
    CHECK(row.order() == 4);
    CHECK(is_left_s_unital(row).holds);
    CHECK_FALSE(is_right_s_unital(row).holds);
  }

  TEST_CASE("unities") {
    CHECK(unity(integers_mod(6)) == Element{1});
    CHECK_FALSE(unity(zero_multiplication_ring(2)).has_value());
    // (1,1) has index 1*2 + 1.
    CHECK(unity(product_ring(integers_mod(2), integers_mod(2))) == Element{3});
    CHECK(left_unity(row_matrices()).has_value());
    CHECK_FALSE(right_unity(row_matrices()).has_value());
  }

  TEST_CASE("common units") {
    const auto z6 = integers_mod(6);
    CHECK(common_unit(z6, idx({2, 3}), Side::left) == Element{1});
    const auto z = zero_multiplication_ring(2);
    CHECK_FALSE(common_unit(z, idx({1}), Side::left).has_value());
    CHECK(common_unit(z6, idx({}), Side::right) == Element{0});
  }

  TEST_CASE("additive closure and ideals") {
    CHECK(additive_closure(integers_mod(4).additive(), idx({2})).members() == idx({0, 2}));
    CHECK(additive_closure(integers_mod(6).additive(), idx({4})).members() == idx({0, 2, 4}));
    CHECK(additive_closure(integers_mod(6).additive(), idx({})).members() == idx({0}));
    CHECK(left_ideal(integers_mod(4), idx({2})).members() == idx({0, 2}));
    CHECK(left_ideal(integers_mod(6), idx({2, 3})).is_whole());
    CHECK(left_ideal(integers_mod(5), idx({0})).members() == idx({0}));
    // Without the generator itself, 2Z8 * 2 = {0, 4}.
    const auto t = two_z8();
    CHECK(product_ideal(t, idx({1}), Side::left).size() == 2);
    CHECK(left_ideal(t, idx({1})).size() == 4);
  }

  TEST_CASE("idempotent generators") {
    const auto z6 = integers_mod(6);
    CHECK(idempotent_generator(z6, Subgroup(6, idx({0, 2, 4}))) == Element{4});
    CHECK_FALSE(idempotent_generator(integers_mod(4), Subgroup(4, idx({0, 2}))).has_value());
    CHECK(idempotent_generator(z6, Subgroup(6, idx({0}))) == Element{0});
    CHECK_THROWS_AS(idempotent_generator(z6, Subgroup(6, idx({0, 1}))), ValidationError);
  }

  TEST_CASE("von Neumann regularity on Z_n against number theory") {
    for (int n = 1; n <= 30; ++n) {
      const auto w = is_von_neumann_regular(integers_mod(n));
      CHECK(w.holds == oracle::zn_regular(n));
      const int first = oracle::zn_first_irregular(n);
      if (first >= 0) {
        CHECK(w.failing == Element(first));
      }
      for (auto [r, y] : w.quasi_inverse) {
        CHECK(integers_mod(n).mul(integers_mod(n).mul(r, y), r) == r);
      }
    }
    CHECK(is_von_neumann_regular(integers_mod(4)).failing == Element{2});
    CHECK(is_von_neumann_regular(field_f4()).holds);
  }

  TEST_CASE("characterization by idempotent-generated ideals") {
    const auto z6 = check_vnr_characterization(integers_mod(6));
    CHECK(z6.precondition_met);
    CHECK(z6.von_neumann_regular);
    CHECK(z6.agreement());
    const auto z4 = check_vnr_characterization(integers_mod(4));
    CHECK_FALSE(z4.von_neumann_regular);
    CHECK_FALSE(z4.left_principal);
    CHECK(z4.agreement());
    REQUIRE(z4.left_counterexample.has_value());
    CHECK(left_ideal(integers_mod(4), *z4.left_counterexample).members() == idx({0, 2}));
    const auto f2 = check_vnr_characterization(integers_mod(2));
    CHECK(f2.von_neumann_regular);
    CHECK(f2.agreement());
    CHECK_FALSE(check_vnr_characterization(two_z8()).precondition_met);
  }

  TEST_CASE("opposite ring and subrings") {
    const auto row = row_matrices();
    const auto op = opposite_ring(row);
    for (Element a = 0; a < row.order(); ++a)
      for (Element b = 0; b < row.order(); ++b) CHECK(op.mul(a, b) == row.mul(b, a));
    CHECK(is_right_s_unital(op).holds);
    // e12 + e21 squares to the identity matrix.
    CHECK_THROWS_AS(restrict_to_subring(matrix_ring(integers_mod(2), 2), Subgroup(16, idx({0, 6}))),
                    Error);
    const auto sub = restrict_to_subring(integers_mod(6), Subgroup(6, idx({0, 3})));
    CHECK(sub.ring.order() == 2);
    CHECK(sub.embedding == idx({0, 3}));
  }

  TEST_CASE("property: regular rings are s-unital; principal ideals are T*c on s-unital rings") {
    for (const auto& r : small_rings()) {
      if (is_von_neumann_regular(r).holds) CHECK(is_s_unital(r));
      if (is_left_s_unital(r).holds) {
        for (Element c = 0; c < r.order(); ++c) {
          const Element g[] = {c};
          CHECK(left_ideal(r, g) == product_ideal(r, g, Side::left));
        }
      }
    }
  }

  TEST_CASE("property: common units exist for every subset of size <= 3 on s-unital sides") {
    for (const auto& r : small_rings()) {
      for (Side side : {Side::left, Side::right}) {
        if (!one_sided_s_unital(r, side).holds) continue;
        const std::size_t n = r.order();
        for (Element a = 0; a < n; ++a)
          for (Element b = a; b < n; ++b)
            for (Element c = b; c < n; ++c) {
              const Element v[] = {a, b, c};
              const auto u = common_unit(r, v, side);
              REQUIRE(u.has_value());
              for (Element x : v) CHECK((side == Side::left ? r.mul(*u, x) : r.mul(x, *u)) == x);
            }
      }
    }
  }

  TEST_CASE("property: vnr characterization agrees on every s-unital test ring, k = 1..3") {
    for (const auto& r : small_rings()) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto c = check_vnr_characterization(r, k);
        if (c.precondition_met) CHECK(c.agreement());
      }
    }
  }

  TEST_CASE("express_as_sum finds decompositions") {
    const auto g = integers_mod(6).additive();
    const auto terms = express_as_sum(g, idx({4}), 2);
    REQUIRE(terms.has_value());
    CHECK(terms->size() == 2);
    CHECK_FALSE(express_as_sum(g, idx({2}), 1).has_value());
    CHECK(express_as_sum(g, idx({2}), 0)->empty());
  }
}
