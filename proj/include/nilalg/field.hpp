#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nilalg/errors.hpp"

namespace nilalg {

/// A field element encoded as an integer in [0, q). For q = p^m the value
/// sum c_i p^i stands for the polynomial sum c_i x^i modulo the field modulus.
using Elem = std::uint8_t;

/// The finite field F_{p^m}. Cheap to copy; all copies share one set of
/// precomputed arithmetic tables.
class Field {
 public:
  /// Builds F_{p^m}. The modulus is the monic irreducible of degree m whose
  /// coefficient encoding (constant term least significant, leading 1
  /// dropped) is minimal. Supports q <= 256.
  static Field make(int p, int m = 1);

  int p() const { return t_->p; }
  int m() const { return t_->m; }
  int q() const { return t_->q; }
  int characteristic() const { return t_->p; }

  /// Coefficients c_0..c_{m-1} of the monic modulus; empty for prime fields.
  const std::vector<int>& modulus() const { return t_->modulus; }

  Elem add(Elem a, Elem b) const { return t_->add[a * t_->q + b]; }
  Elem sub(Elem a, Elem b) const { return t_->add[a * t_->q + t_->neg[b]]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[a * t_->q + b]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  /// Multiplicative inverse; throws InputError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long k) const;
  /// Throws InputError unless 0 <= v < q.
  Elem checked(long long v) const;

  bool is_square(Elem a) const;
  /// A generator of the multiplicative group (smallest encoding).
  Elem primitive_element() const { return t_->primitive; }

  bool operator==(const Field& o) const { return p() == o.p() && m() == o.m(); }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Tables {
    int p = 0, m = 0, q = 0;
    std::vector<int> modulus;
    std::vector<Elem> add, mul, neg, inv;
    Elem primitive = 0;
  };
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

Field make_field(int p, int m = 1);

/// All q elements in increasing encoding order.
std::vector<Elem> enumerate_elements(const Field& f);

/// { x^2 : x in F } sorted by encoding; contains 0.
std::vector<Elem> squares(const Field& f);

struct ArtinSchreierImage {
  std::vector<Elem> image;  // { T^2 + T } sorted
  Elem coset_rep = 0;       // smallest element outside the image
};

/// Image of T -> T^2 + T. Characteristic 2 only.
ArtinSchreierImage artin_schreier_image(const Field& f);

/// Smallest non-square of an odd-order field.
Elem smallest_nonsquare(const Field& f);

/// Field element bound to its field, for use outside the hot paths.
/// Mixing elements of different fields throws InputError.
class FieldElement {
 public:
  FieldElement(Field f, long long value) : field_(std::move(f)), value_(field_.checked(value)) {}

  const Field& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  void require_same(const FieldElement& o) const;
  Field field_;
  Elem value_;
};

}  // namespace nilalg
