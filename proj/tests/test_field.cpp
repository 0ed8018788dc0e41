#include <doctest.h>

#include <set>

#include "nilalg/field.hpp"

using namespace nilalg;

namespace {

// First monic polynomial of degree m (m <= 3) over F_p without roots, by
// coefficient encoding. For these degrees rootless means irreducible.
std::vector<int> first_rootless_monic(int p, int m) {
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    std::vector<int> c(m);
    for (int i = 0, v = code; i < m; ++i, v /= p) c[i] = v % p;
    bool root = false;
    for (int x = 0; x < p && !root; ++x) {
      int val = 1;  // leading coefficient
      for (int i = m - 1; i >= 0; --i) val = (val * x + c[i]) % p;
      root = val == 0;
    }
    if (!root) return c;
  }
  return {};
}

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("make_field picks the minimal irreducible modulus") {
    CHECK(make_field(2, 1).modulus().empty());
    CHECK(make_field(2, 1).q() == 2);
    CHECK(make_field(2, 2).modulus() == std::vector<int>{1, 1});  // x^2 + x + 1
    CHECK(make_field(3, 2).modulus() == std::vector<int>{1, 0});  // x^2 + 1
    for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 3}})
      CHECK(make_field(p, m).modulus() == first_rootless_monic(p, m));
  }

  TEST_CASE("make_field rejects bad input") {
    CHECK_THROWS_AS(make_field(4, 1), InputError);
    CHECK_THROWS_AS(make_field(1, 1), InputError);
    CHECK_THROWS_AS(make_field(2, 0), InputError);
    CHECK_THROWS_AS(make_field(2, 9), InputError);
  }

  TEST_CASE("construction is deterministic") {
    const Field a = make_field(3, 2), b = make_field(3, 2);
    CHECK(a.modulus() == b.modulus());
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) CHECK(a.mul(x, y) == b.mul(x, y));
  }

  TEST_CASE("arithmetic examples") {
    const Field f5 = make_field(5), f4 = make_field(2, 2), f3 = make_field(3);
    CHECK(f5.inv(2) == 3);
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f3.neg(1) == 2);
    CHECK_THROWS_AS(f5.inv(0), InputError);
    CHECK_THROWS_AS(f5.checked(5), InputError);
  }

  TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, m] : kSmallFields) {
      const Field f = make_field(p, m);
      const int q = f.q();
      bool ok = true;
      for (int x = 0; x < q; ++x) {
        ok = ok && f.add(x, 0) == x && f.mul(x, 1) == x && f.add(x, f.neg(x)) == 0;
        if (x != 0) ok = ok && f.mul(x, f.inv(x)) == 1;
        for (int y = 0; y < q; ++y) {
          ok = ok && f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
          for (int z = 0; z < q; ++z) {
            ok = ok && f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
            ok = ok && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
            ok = ok && f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
          }
        }
      }
      CAPTURE(q);
      CHECK(ok);
    }
  }

  TEST_CASE("arithmetic beyond the driver guard") {
    const Field f = make_field(2, 4);
    CHECK(f.q() == 16);
    for (int x = 1; x < 16; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
    const Field g = make_field(2, 8);
    CHECK(g.q() == 256);
    CHECK(g.mul(255, g.inv(255)) == 1);
  }

  TEST_CASE("primitive element generates the multiplicative group") {
    for (auto [p, m] : kSmallFields) {
      const Field f = make_field(p, m);
      std::set<Elem> seen;
      Elem x = 1;
      for (int i = 0; i < f.q() - 1; ++i, x = f.mul(x, f.primitive_element())) seen.insert(x);
      CHECK(static_cast<int>(seen.size()) == f.q() - 1);
    }
  }

  TEST_CASE("enumerate_elements") {
    CHECK(enumerate_elements(make_field(2)) == std::vector<Elem>{0, 1});
    CHECK(enumerate_elements(make_field(2, 2)) == std::vector<Elem>{0, 1, 2, 3});
    CHECK(enumerate_elements(make_field(5)) == std::vector<Elem>{0, 1, 2, 3, 4});
  }

  TEST_CASE("squares") {
    CHECK(squares(make_field(5)) == std::vector<Elem>{0, 1, 4});
    CHECK(squares(make_field(2, 2)) == std::vector<Elem>{0, 1, 2, 3});
    CHECK(squares(make_field(3)) == std::vector<Elem>{0, 1});
    for (auto [p, m] : kSmallFields) {
      const Field f = make_field(p, m);
      const int nonzero = static_cast<int>(squares(f).size()) - 1;
      CHECK(nonzero == (p == 2 ? f.q() - 1 : (f.q() - 1) / 2));
    }
    CHECK(smallest_nonsquare(make_field(5)) == 2);
    CHECK(smallest_nonsquare(make_field(3)) == 2);
  }

  TEST_CASE("artin_schreier_image") {
    auto w2 = artin_schreier_image(make_field(2));
    CHECK(w2.image == std::vector<Elem>{0});
    CHECK(w2.coset_rep == 1);
    auto w4 = artin_schreier_image(make_field(2, 2));
    CHECK(w4.image == std::vector<Elem>{0, 1});
    CHECK(w4.coset_rep == 2);
    CHECK_THROWS_AS(artin_schreier_image(make_field(3)), InputError);
    for (int m = 1; m <= 3; ++m) {
      const Field f = make_field(2, m);
      auto fn = [&](Elem t) { return f.add(f.mul(t, t), t); };
      CHECK(static_cast<int>(artin_schreier_image(f).image.size()) == f.q() / 2);
      for (int x = 0; x < f.q(); ++x)
        for (int y = 0; y < f.q(); ++y) CHECK(fn(f.add(x, y)) == f.add(fn(x), fn(y)));
    }
  }

  TEST_CASE("FieldElement") {
    const Field f5 = make_field(5), f7 = make_field(7);
    FieldElement a(f5, 2), b(f5, 4);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 3);
    CHECK((a - b).value() == 3);
    CHECK((a / b).value() == 3);
    CHECK((-a).value() == 3);
    CHECK(a.inverse().value() == 3);
    CHECK_THROWS_AS(a + FieldElement(f7, 1), InputError);
    CHECK_THROWS_AS(FieldElement(f5, 0).inverse(), InputError);
    CHECK_THROWS_AS(FieldElement(f5, 9), InputError);
  }
}
