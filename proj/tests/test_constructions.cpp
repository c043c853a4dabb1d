#include "doctest.h"

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/grading_properties.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

std::string degree_error(const FiniteSemigroup& base, const std::vector<std::vector<Element>>& deg,
                         std::vector<std::size_t>* witness = nullptr) {
  try {
    validate_degree_map(base, deg);
  } catch (const ValidationError& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  return "";
}

Element u(std::size_t n, std::size_t i, std::size_t j) { return matrix_unit_index(n, i, j); }

const std::vector<std::vector<Element>> kSwapZ2 = {{0, 1}, {1, 0}};

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("B_n has n^2 + 1 elements and multiplies like matrix units") {
    for (int n = 1; n <= 4; ++n) {
      const auto b = matrix_units_semigroup(n);
      CHECK(b.order() == std::size_t(n * n + 1));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              const auto expect = oracle::bn_multiply(n, {i, j}, {k, l});
              const Element want = expect.i ? u(n, expect.i, expect.j) : 0;
              CHECK(b.product(u(n, i, j), u(n, k, l)) == want);
            }
    }
    CHECK(matrix_units_semigroup(2).label(u(2, 1, 2)) == "e12");
  }

  TEST_CASE("semigroup ring shape") {
    const auto r = semigroup_ring(integers_mod(3), left_zero_semigroup(2));
    CHECK(r.base().size() == 2);
    CHECK(r.component(1).order() == 3);
    // (a delta_0)(b delta_1) = ab delta_0
    CHECK(r.multiply(0, 2, 1, 2) == 1);
    CHECK(r.product_pairs().size() == 4);
  }

  TEST_CASE("matrix grading shape") {
    const auto m = matrix_bn_grading(integers_mod(4), 2);
    CHECK(m.component(0).order() == 1);
    CHECK(m.component(u(2, 1, 2)).order() == 4);
    CHECK(m.multiply(u(2, 1, 2), 3, u(2, 2, 1), 3) == 1);
    CHECK(m.product_table(u(2, 1, 2), u(2, 1, 2)) == nullptr);
    CHECK_THROWS_AS(matrix_bn_grading(integers_mod(2), 0), Error);
  }

  TEST_CASE("degree map validation") {
    CHECK_NOTHROW(validate_degree_map(cyclic_group(2), kSwapZ2));
    std::vector<std::size_t> w;
    CHECK(degree_error(cyclic_group(2), {{0, 2}, {1, 0}}) == "NotGood");
    CHECK(degree_error(cyclic_group(2), {{0, 1}}) == "NotGood");
    CHECK(degree_error(left_zero_semigroup(2), {{0, 0}, {0, 0}}) == "NotInverseBase");
    CHECK(degree_error(cyclic_group(2), {{1, 0}, {0, 0}}, &w) == "DiagonalNotIdempotent");
    CHECK(w == std::vector<std::size_t>{1, 1});
    // In Z3 the opposite of degree 1 has to be 2.
    CHECK(degree_error(cyclic_group(3), {{0, 1}, {1, 0}}, &w) == "OppositeDegreeViolation");
    CHECK(w == std::vector<std::size_t>{1, 2});
    const auto b2 = matrix_units_semigroup(2);
    // e12 e11 = 0 but deg(1,2) = e12.
    CHECK(degree_error(b2, {{u(2, 1, 1), u(2, 1, 2)}, {u(2, 2, 1), u(2, 1, 1)}}, &w) ==
          "IncompatibleDegrees");
    CHECK(w == std::vector<std::size_t>{1, 2, 2});
  }

  TEST_CASE("good grading by B_2 with identity degrees is the matrix-unit grading") {
    const auto b2 = matrix_units_semigroup(2);
    const auto deg = validate_degree_map(b2, {{u(2, 1, 1), u(2, 1, 2)}, {u(2, 2, 1), u(2, 2, 2)}});
    for (std::size_t n : {2, 4}) {
      CHECK(good_grading(integers_mod(n), b2, deg) == matrix_bn_grading(integers_mod(n), 2));
    }
  }

  TEST_CASE("good grading of M_2 by Z_2") {
    const auto deg = validate_degree_map(cyclic_group(2), kSwapZ2);
    CHECK(degree_positions(deg, 0) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
    const auto r = good_grading(integers_mod(2), cyclic_group(2), deg);
    CHECK(r.component(0).order() == 4);
    CHECK(r.component(1).order() == 4);
    // (e12 + e21)^2 = e11 + e22: tuple (1,1) has index 3.
    CHECK(r.multiply(1, 3, 1, 3) == 3);
    CHECK(is_epsilon_strong(r).holds);
  }

  TEST_CASE("good grading check pins") {
    const auto z2 = cyclic_group(2);
    const auto deg = validate_degree_map(z2, kSwapZ2);
    const auto good = check_good_grading_prop(integers_mod(2), z2, deg);
    REQUIRE(good.applicable);
    CHECK(good.agreement);
    CHECK(good.find("graded_vnr")->value);
    CHECK(good.find("epsilon_strong")->value);
    const auto bad = check_good_grading_prop(integers_mod(4), z2, deg);
    REQUIRE(bad.applicable);
    CHECK(bad.agreement);
    CHECK_FALSE(bad.find("graded_vnr")->value);
    CHECK_FALSE(check_good_grading_prop(zero_multiplication_ring(2), z2, deg).applicable);
    // Z_1 over M_2: every matrix unit in one component; R_0 = M_2(Z_2) is
    // not spanned by diagonal units alone.
    const auto trivial = validate_degree_map(cyclic_group(1), {{0, 0}, {0, 0}});
    const auto hyp = check_good_grading_prop(integers_mod(2), cyclic_group(1), trivial);
    CHECK_FALSE(hyp.applicable);
    CHECK(hyp.skipped_reason.rfind("HypothesisFailed", 0) == 0);
  }

  TEST_CASE("semigroup ring check pins") {
    const auto sl2 = chain_semilattice(2);
    const auto z6 = check_semigroup_ring_prop(integers_mod(6), sl2);
    REQUIRE(z6.applicable);
    CHECK(z6.agreement);
    CHECK(z6.find("strong")->value);
    CHECK(z6.find("graded_vnr")->value);
    const auto z4 = check_semigroup_ring_prop(integers_mod(4), sl2);
    REQUIRE(z4.applicable);
    CHECK(z4.agreement);
    CHECK_FALSE(z4.find("graded_vnr")->value);
    CHECK_FALSE(check_semigroup_ring_prop(zero_multiplication_ring(2), sl2).applicable);
    CHECK(check_semigroup_ring_prop(integers_mod(2), cyclic_group(1)).applicable);
  }

  TEST_CASE("groupoid ring") {
    const auto r = groupoid_ring(integers_mod(3), pair_groupoid(2));
    CHECK(r.base().is_groupoid());
    CHECK(r.product_pairs().size() == 8);
    CHECK(r.multiply(1, 2, 2, 2) == 1);  // (0,1)(1,0) = (0,0), 2*2 = 1 in Z_3
  }

  TEST_CASE("zero product grading") {
    const auto r = zero_product_grading(integers_mod(3).additive(), GradingBase(chain_semilattice(2)));
    CHECK(r.product_pairs().empty());
    CHECK(r.component(1).order() == 3);
    CHECK_FALSE(is_graded_vnr(r).holds);
  }
}
