#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilalg/linalg.hpp"

namespace nilalg {

/// Finite-dimensional algebra given by structure constants c_{ij}^k with
/// e_i e_j = sum_k c_{ij}^k e_k. Immutable once built.
class Algebra {
 public:
  /// Zero algebra of dimension n.
  Algebra(Field f, int n, std::vector<std::string> labels = {});
  /// Takes the dense tensor indexed (i*n + j)*n + k.
  Algebra(Field f, int n, std::vector<Elem> constants, std::vector<std::string> labels = {});

  /// Builds from a product list: (i, j, e_i e_j as a vector).
  struct Product {
    int i, j;
    Vec value;
  };
  static Algebra from_products(const Field& f, int n, const std::vector<Product>& products,
                               std::vector<std::string> labels = {});

  const Field& field() const { return field_; }
  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& constants() const { return sc_; }

  Elem constant(int i, int j, int k) const { return sc_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
  /// e_i e_j as a coordinate vector.
  Vec basis_product(int i, int j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  bool is_zero_algebra() const;

  bool operator==(const Algebra& o) const { return field_ == o.field_ && n_ == o.n_ && sc_ == o.sc_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  Field field_;
  int n_;
  std::vector<Elem> sc_;
  std::vector<std::string> labels_;
};

/// a, b, c, ... for the first n basis vectors.
std::vector<std::string> default_labels(int n);

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
bool is_associative(const Algebra& a);
bool is_commutative(const Algebra& a);

/// A, A^2, A^3, ... until the chain stabilises. Ends with the zero subspace
/// exactly when the algebra is nilpotent.
std::vector<Subspace> power_subspaces(const Algebra& a);
bool is_nilpotent(const Algebra& a);
/// Span of all products, A^2.
Subspace product_space(const Algebra& a);

/// { v : v e_j = e_j v = 0 for all j }.
Subspace multiplication_kernel(const Algebra& a);

struct Quotient {
  Algebra algebra;
  /// (n - dim I) x n; quotient coordinates = projection * x for column x.
  Matrix projection;
  /// Ambient coordinates kept as the quotient basis (non-pivot columns of I).
  std::vector<int> kept;
};
/// Quotient by a two-sided ideal; throws InputError if it is not one.
Quotient quotient(const Algebra& a, const Subspace& ideal);
bool is_ideal(const Algebra& a, const Subspace& s);

Algebra direct_sum(const Algebra& a, const Algebra& b);

/// True iff the algebra splits off a summand inside its multiplication
/// kernel, tested as C(A) not contained in A^2.
bool has_central_component(const Algebra& a);

/// Expresses the multiplication on the basis given by the columns of p.
Algebra change_basis(const Algebra& a, const Matrix& p);

/// Human-readable table such as "a*a = b, a*b = c + 2d"; "0" for the zero algebra.
std::string multiplication_table(const Algebra& a);

}  // namespace nilalg
