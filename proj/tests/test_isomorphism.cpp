#include <doctest.h>

#include "nilalg/isomorphism.hpp"
#include "support.hpp"

using namespace nilalg;
using namespace testsupport;

namespace {

Algebra named(const std::string& name, const Field& f, CatalogParams params = {}) {
  return catalog(name, params, f);
}

bool iso(const Algebra& a, const Algebra& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("invariant_vector examples") {
    const Field f5 = make_field(5);
    const auto v35 = invariant_vector(named("A_{3,5}", f5));
    const auto v36 = invariant_vector(named("A_{3,6}", f5));
    CHECK(v35 != v36);
    CHECK_FALSE(v35.commutative);
    CHECK(v36.commutative);
    const auto v41 = invariant_vector(Algebra(f5, 4));
    CHECK(v41.power_dims == std::vector<int>{4, 0});
    CHECK(v41.kernel_dim == 4);
    Rng rng(41);
    for (const auto& inst : all_catalog(make_field(3))) {
      const Matrix p = rng.invertible(inst.algebra.field(), inst.algebra.dim());
      CHECK(invariant_vector(inst.algebra) == invariant_vector(change_basis(inst.algebra, p)));
    }
  }

  TEST_CASE("are_isomorphic examples") {
    const Field f5 = make_field(5), f3 = make_field(3), f2 = make_field(2);
    CHECK(iso(named("A_{3,3}", f5, {{"alpha", 1}}), named("A_{3,3}", f5, {{"alpha", 4}})));
    CHECK_FALSE(iso(named("A_{3,3}", f5, {{"alpha", 1}}), named("A_{3,3}", f5, {{"alpha", 2}})));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) CHECK_FALSE(iso(named("A_{3,4}", f3, {{"alpha", a}}), named("A_{3,4}", f3, {{"alpha", b}})));
    CHECK_FALSE(iso(named("B_{4,1}", f2, {{"alpha", 0}}), named("B_{4,1}", f2, {{"alpha", 1}})));
  }

  TEST_CASE("errors and trivial cases") {
    const Field f2 = make_field(2), f3 = make_field(3);
    CHECK_THROWS_AS(are_isomorphic(Algebra(f2, 2), Algebra(f3, 2)), InputError);
    CHECK_FALSE(are_isomorphic(Algebra(f2, 2), Algebra(f2, 3)));
    const Algebra idem = Algebra::from_products(f2, 1, {{0, 0, {1}}});
    CHECK_THROWS_AS(for_each_isomorphism(idem, idem, [](const Matrix&) { return true; }), InputError);
    const auto w = are_isomorphic(Algebra(f2, 0), Algebra(f2, 0));
    CHECK(w.has_value());
    CHECK_THROWS_AS(for_each_isomorphism(Algebra(f3, 3), Algebra(f3, 3), [](const Matrix&) { return true; }, 10),
                    GuardError);
  }

  TEST_CASE("witnesses verify and basis changes are detected") {
    Rng rng(42);
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      for (const auto& inst : all_catalog(f)) {
        CAPTURE(inst.label);
        for (int t = 0; t < 50; ++t) {
          const Matrix p = rng.invertible(f, inst.algebra.dim());
          const Algebra b = change_basis(inst.algebra, p);
          const auto w = are_isomorphic(inst.algebra, b);
          REQUIRE(w.has_value());
          CHECK(rank(*w) == inst.algebra.dim());
          CHECK(brute_is_hom(inst.algebra, b, *w));
        }
      }
    }
  }

  TEST_CASE("reflexive, symmetric and transitive on catalog samples") {
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      const auto insts = catalog_instances(f, 3);
      for (const auto& a : insts) {
        CHECK(iso(a.algebra, a.algebra));
        for (const auto& b : insts) {
          const bool ab = iso(a.algebra, b.algebra);
          CHECK(ab == iso(b.algebra, a.algebra));
          for (const auto& c : insts)
            if (ab && iso(b.algebra, c.algebra)) CHECK(iso(a.algebra, c.algebra));
        }
      }
    }
  }

  TEST_CASE("agrees with a full GL_n scan") {
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      const auto gl = brute_gl(f, 3);
      const auto insts = catalog_instances(f, 3);
      for (size_t i = 0; i < insts.size(); ++i)
        for (size_t j = i; j < insts.size(); ++j) {
          CAPTURE(insts[i].label);
          CAPTURE(insts[j].label);
          CHECK(iso(insts[i].algebra, insts[j].algebra) == brute_isomorphic(insts[i].algebra, insts[j].algebra, gl));
        }
    }
    const Field f2 = make_field(2);
    const auto gl4 = brute_gl(f2, 4);
    const auto insts = catalog_instances(f2, 4);
    for (size_t i = 0; i < insts.size(); ++i)
      for (size_t j = i + 1; j < insts.size(); ++j) {
        CAPTURE(insts[i].label);
        CAPTURE(insts[j].label);
        CHECK(iso(insts[i].algebra, insts[j].algebra) == brute_isomorphic(insts[i].algebra, insts[j].algebra, gl4));
      }
  }

  TEST_CASE("automorphism counts match a full GL_n scan") {
    for (int q : {2, 3}) {
      const Field f = make_field(q);
      const auto gl = brute_gl(f, 3);
      for (const auto& inst : catalog_instances(f, 3)) {
        size_t brute = 0;
        for (const Matrix& p : gl) brute += brute_is_hom(inst.algebra, inst.algebra, p) ? 1 : 0;
        size_t found = 0;
        for_each_isomorphism(inst.algebra, inst.algebra, [&](const Matrix&) {
          ++found;
          return true;
        });
        CAPTURE(inst.label);
        CHECK(found == brute);
      }
    }
  }

  TEST_CASE("prefilter cross-check finds no isomorphism across distinct invariants") {
    IsoOptions opts;
    opts.cross_check_prefilter = true;
    const Field f = make_field(3);
    const auto insts = catalog_instances(f, 3);
    for (const auto& a : insts)
      for (const auto& b : insts) CHECK_NOTHROW((void)are_isomorphic(a.algebra, b.algebra, opts));
  }
}
