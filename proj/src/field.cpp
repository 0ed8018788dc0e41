#include "nilalg/field.hpp"

#include <algorithm>
#include <string>

namespace nilalg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(int value, int p, int len) {
  Poly c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int e = 0; e < count; ++e) {
      Poly g = decode(e, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(int p, int m) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InputError("field exponent must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 256) throw InputError("field order exceeds 256");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<int>(q);

  if (m > 1) {
    bool found = false;
    for (int e = 0; e < q && !found; ++e) {
      Poly f = decode(e, p, m);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        t->modulus.assign(f.begin(), f.end() - 1);
        found = true;
      }
    }
    if (!found) throw InternalError("no irreducible polynomial found");
  }

  const int Q = t->q;
  t->add.resize(Q * Q);
  t->mul.resize(Q * Q);
  t->neg.resize(Q);
  t->inv.assign(Q, 0);
  Poly modulus_poly;
  if (m > 1) {
    modulus_poly = t->modulus;
    modulus_poly.push_back(1);
  }
  for (int a = 0; a < Q; ++a) {
    const Poly pa = decode(a, p, m);
    Poly na(m);
    for (int i = 0; i < m; ++i) na[i] = (p - pa[i]) % p;
    int nv = 0;
    for (int i = m - 1; i >= 0; --i) nv = nv * p + na[i];
    t->neg[a] = static_cast<Elem>(nv);
    for (int b = 0; b < Q; ++b) {
      const Poly pb = decode(b, p, m);
      int sv = 0;
      for (int i = m - 1; i >= 0; --i) sv = sv * p + (pa[i] + pb[i]) % p;
      t->add[a * Q + b] = static_cast<Elem>(sv);

      Poly prod(2 * m - 1, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (m > 1) prod = poly_mod(prod, modulus_poly, p);
      prod.resize(m, 0);
      int mv = 0;
      for (int i = m - 1; i >= 0; --i) mv = mv * p + prod[i];
      t->mul[a * Q + b] = static_cast<Elem>(mv);
    }
  }
  for (int a = 1; a < Q; ++a)
    for (int b = 1; b < Q; ++b)
      if (t->mul[a * Q + b] == 1) t->inv[a] = static_cast<Elem>(b);

  for (int g = 1; g < Q; ++g) {
    int order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = t->mul[x * Q + g];
      ++order;
    }
    if (order == Q - 1) {
      t->primitive = static_cast<Elem>(g);
      break;
    }
  }
  return Field(std::move(t));
}

Field make_field(int p, int m) { return Field::make(p, m); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, unsigned e) const {
  Elem r = 1;
  while (e--) r = mul(r, a);
  return r;
}

Elem Field::from_int(long long k) const {
  long long r = k % t_->p;
  if (r < 0) r += t_->p;
  return static_cast<Elem>(r);
}

Elem Field::checked(long long v) const {
  if (v < 0 || v >= t_->q)
    throw InputError("field element " + std::to_string(v) + " outside [0, " + std::to_string(t_->q) + ")");
  return static_cast<Elem>(v);
}

bool Field::is_square(Elem a) const {
  for (int x = 0; x < q(); ++x)
    if (mul(static_cast<Elem>(x), static_cast<Elem>(x)) == a) return true;
  return false;
}

std::vector<Elem> enumerate_elements(const Field& f) {
  std::vector<Elem> out(f.q());
  for (int i = 0; i < f.q(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::vector<Elem> squares(const Field& f) {
  std::vector<Elem> out;
  for (Elem x : enumerate_elements(f)) out.push_back(f.mul(x, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArtinSchreierImage artin_schreier_image(const Field& f) {
  if (f.p() != 2) throw InputError("Artin-Schreier image requires characteristic 2");
  ArtinSchreierImage r;
  for (Elem x : enumerate_elements(f)) r.image.push_back(f.add(f.mul(x, x), x));
  std::sort(r.image.begin(), r.image.end());
  r.image.erase(std::unique(r.image.begin(), r.image.end()), r.image.end());
  for (Elem x : enumerate_elements(f)) {
    if (!std::binary_search(r.image.begin(), r.image.end(), x)) {
      r.coset_rep = x;
      break;
    }
  }
  return r;
}

Elem smallest_nonsquare(const Field& f) {
  if (f.p() == 2) throw InputError("every element is a square in characteristic 2");
  for (Elem x : enumerate_elements(f))
    if (!f.is_square(x)) return x;
  throw InternalError("odd field without non-squares");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_) throw InputError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_.div(value_, o.value_)};
}

}  // namespace nilalg
