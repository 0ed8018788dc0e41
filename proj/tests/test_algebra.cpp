#include <doctest.h>

#include "nilalg/isomorphism.hpp"
#include "nilalg/orbits.hpp"
#include "support.hpp"

using namespace nilalg;
using namespace testsupport;

namespace {

Algebra named(const std::string& name, const Field& f, CatalogParams params = {}) {
  return catalog(name, params, f);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("multiply") {
    const Field f5 = make_field(5);
    const Algebra a22 = named("A_{2,2}", f5);
    CHECK(a22.multiply({1, 0}, {1, 0}) == Vec{0, 1});
    CHECK(a22.multiply({3, 2}, {0, 0}) == Vec{0, 0});
    const Algebra a35 = named("A_{3,5}", f5);
    CHECK(a35.multiply({0, 1, 0}, {1, 0, 0}) == Vec{0, 0, 4});
    Rng rng(21);
    for (const auto& inst : catalog_sample(f5))
      for (int t = 0; t < 20; ++t) {
        const Vec x = rng.vec(f5, inst.algebra.dim()), y = rng.vec(f5, inst.algebra.dim());
        CHECK(inst.algebra.multiply(x, y) == raw_product(inst.algebra, x, y));
      }
  }

  TEST_CASE("associativity and commutativity") {
    const Field f5 = make_field(5), f2 = make_field(2);
    CHECK(is_associative(named("A_{3,5}", f5)));
    CHECK_FALSE(is_commutative(named("A_{3,5}", f5)));
    CHECK(is_commutative(named("A_{3,5}", f2)));
    CHECK(is_associative(Algebra(f5, 3)));
    CHECK(is_commutative(Algebra(f5, 3)));
    CHECK(is_associative(named("A_{4,8}", f5)));
    CHECK(is_commutative(named("A_{4,8}", f5)));
    // a*a = a is associative but not nilpotent; a*b = a, others 0 is not associative.
    const Algebra idem = Algebra::from_products(f5, 1, {{0, 0, {1}}});
    CHECK(is_associative(idem));
    CHECK_FALSE(is_nilpotent(idem));
    const Algebra bad = Algebra::from_products(f5, 2, {{0, 0, {0, 1}}, {1, 0, {1, 0}}});
    CHECK_FALSE(is_associative(bad));
  }

  TEST_CASE("power chain") {
    const Field f3 = make_field(3);
    const auto c22 = power_subspaces(named("A_{2,2}", f3));
    REQUIRE(c22.size() == 3);
    CHECK(c22[1] == Subspace::span(f3, 2, {{0, 1}}));
    CHECK(c22[2].dim() == 0);
    CHECK(is_nilpotent(named("A_{2,2}", f3)));
    CHECK(product_space(Algebra(f3, 3)).dim() == 0);
    std::vector<int> dims;
    for (const auto& s : power_subspaces(named("A_{4,8}", f3))) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{4, 3, 2, 1, 0});
    const auto c48 = power_subspaces(named("A_{4,8}", f3));
    CHECK(c48[1] == Subspace::span(f3, 4, {unit(4, 1), unit(4, 2), unit(4, 3)}));
    CHECK(c48[2] == Subspace::span(f3, 4, {unit(4, 2), unit(4, 3)}));
    CHECK(c48[3] == Subspace::span(f3, 4, {unit(4, 3)}));
  }

  TEST_CASE("multiplication kernel") {
    const Field f3 = make_field(3);
    CHECK(multiplication_kernel(named("A_{2,2}", f3)) == Subspace::span(f3, 2, {unit(2, 1)}));
    CHECK(multiplication_kernel(Algebra(f3, 3)) == Subspace::full(f3, 3));
    CHECK(multiplication_kernel(named("A_{3,5}", f3)) == Subspace::span(f3, 3, {unit(3, 2)}));
  }

  TEST_CASE("quotient") {
    const Field f3 = make_field(3);
    const Algebra a22 = named("A_{2,2}", f3);
    const Quotient q1 = quotient(a22, Subspace::span(f3, 2, {unit(2, 1)}));
    CHECK(q1.algebra == Algebra(f3, 1));
    CHECK(q1.kept == std::vector<int>{0});
    const Algebra a36 = named("A_{3,6}", f3);
    CHECK(quotient(a36, Subspace::zero(f3, 3)).algebra == a36);
    CHECK(quotient(a36, Subspace::span(f3, 3, {unit(3, 2)})).algebra == a22);
    CHECK_THROWS_AS(quotient(a36, Subspace::span(f3, 3, {unit(3, 0)})), InputError);
  }

  TEST_CASE("direct sums") {
    const Field f3 = make_field(3);
    CHECK(direct_sum(named("A_{3,2}", f3), Algebra(f3, 1)) == named("A_{4,2}", f3));
    CHECK(direct_sum(Algebra(f3, 2), Algebra(f3, 1)) == Algebra(f3, 3));
    CHECK(direct_sum(named("A_{3,6}", f3), Algebra(f3, 1)) == named("A_{4,4}", f3));
    CHECK_THROWS_AS(direct_sum(Algebra(f3, 1), Algebra(make_field(5), 1)), InputError);
  }

  TEST_CASE("central components") {
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      CHECK(has_central_component(named("A_{3,2}", f)));
      CHECK_FALSE(has_central_component(named("A_{2,2}", f)));
      for (int n = 1; n <= 4; ++n) CHECK(has_central_component(Algebra(f, n)));
      for (const auto& inst : all_catalog(f)) {
        CHECK(has_central_component(direct_sum(inst.algebra, Algebra(f, 1))));
        CHECK(multiplication_kernel(inst.algebra).dim() > 0);
      }
    }
  }

  TEST_CASE("change_basis") {
    const Field f2 = make_field(2), f5 = make_field(5);
    const Algebra a45 = named("A_{4,5}", f2, {{"alpha", 0}});
    CHECK(change_basis(a45, Matrix::identity(f2, 4)) == a45);
    // a' = a + b, b' = b, c' = c, d' = d + c as columns.
    const Matrix p = Matrix::from_rows(f2, 4, {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(change_basis(a45, p) == named("A_{4,5}", f2, {{"alpha", 1}}));
    const Matrix s = Matrix::from_rows(f5, 2, {{2, 0}, {0, 4}});
    CHECK(change_basis(named("A_{2,2}", f5), s) == named("A_{2,2}", f5));
    CHECK_THROWS_AS(change_basis(a45, Matrix(f2, 4, 4)), InputError);
    Rng rng(22);
    for (const auto& inst : catalog_sample(make_field(3))) {
      const Matrix r = rng.invertible(inst.algebra.field(), inst.algebra.dim());
      const Algebra b = change_basis(inst.algebra, r);
      CHECK(brute_is_hom(b, inst.algebra, r));
    }
  }

  TEST_CASE("catalog algebras are associative and nilpotent") {
    for (int q : {2, 3, 4, 5}) {
      const Field f = q == 4 ? make_field(2, 2) : make_field(q);
      for (const auto& inst : all_catalog(f)) {
        CAPTURE(inst.label);
        CHECK(is_associative(inst.algebra));
        CHECK(is_nilpotent(inst.algebra));
      }
    }
  }

  TEST_CASE("quotient by the kernel and re-extension round-trips") {
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      for (const auto& inst : all_catalog(f)) {
        CAPTURE(inst.label);
        const KernelSplit split = split_off_kernel(inst.algebra);
        const Algebra back = extend_unchecked(split.quotient.algebra, split.cocycles);
        CHECK(are_isomorphic(back, inst.algebra).has_value());
      }
    }
  }

  TEST_CASE("multiplication table rendering") {
    const Field f5 = make_field(5);
    CHECK(multiplication_table(Algebra(f5, 2)) == "0");
    CHECK(multiplication_table(named("A_{3,5}", f5)) == "a*b = c, b*a = 4c");
    const Algebra x = Algebra::from_products(f5, 4, {{0, 1, {0, 0, 1, 2}}});
    CHECK(multiplication_table(x) == "a*b = c + 2d");
  }
}
