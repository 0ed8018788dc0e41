#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

/// Row vector of field elements. Bilinear forms T act as v * T * w^T.
using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix(Field f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);
  /// Row-major n x n matrix from a flat vector of length n*n.
  static Matrix unflatten(const Field& f, int n, std::span<const Elem> flat);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Elem& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::span<const Elem> row(int r) const { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  Vec row_vec(int r) const { auto s = row(r); return {s.begin(), s.end()}; }
  Vec col_vec(int c) const;
  const std::vector<Elem>& data() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Elem s) const;
  Matrix operator+(const Matrix& o) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::vector<std::vector<int>> to_nested() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

// Vector helpers. All assume equal lengths.
bool is_zero(const Vec& v);
Vec add(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, Elem s, const Vec& a);
/// y += s * x
void axpy(const Field& f, Elem s, std::span<const Elem> x, Vec& y);
/// Row vector times matrix.
Vec vec_mat(const Vec& v, const Matrix& m);
/// Matrix times column vector.
Vec mat_vec(const Matrix& m, const Vec& v);

/// Reduced row echelon form. Zero rows are kept at the bottom.
Matrix rref(const Matrix& m);
/// In-place reduction; returns pivot columns in row order.
std::vector<int> rref_in_place(Matrix& m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Coefficients c with sum_t c_t * rows.row(t) = v, if any.
std::optional<Vec> solve_left(const Matrix& rows, const Vec& v);

/// Subspace of F^d held as its canonical RREF basis. Two subspaces are equal
/// exactly when their basis matrices are identical.
class Subspace {
 public:
  static Subspace zero(const Field& f, int ambient);
  static Subspace full(const Field& f, int ambient);
  static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Representative of v + W with zeros in every pivot coordinate.
  Vec reduce(const Vec& v) const;
  /// Coefficients of v in the canonical basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  /// Combination of the canonical basis rows.
  Vec combine(const Vec& coords) const;

  /// Orthogonal complement for the standard dot product.
  Subspace annihilator() const;

  /// Byte encoding of the canonical basis; used for hashing and ordering.
  std::string encoding() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  /// Orders by (ambient, dim, basis entries).
  bool operator<(const Subspace& o) const;

  std::vector<std::vector<int>> to_nested() const { return basis_.to_nested(); }

 private:
  Subspace(Matrix basis, std::vector<int> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<int> pivots_;
};

/// { v : M v^T = 0 }.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);
bool contains(const Subspace& u, const Vec& v);
Vec reduce_mod(const Vec& v, const Subspace& w);

/// Number of s-dimensional subspaces of F_q^d.
unsigned long long gaussian_binomial(int d, int s, int q);

/// Visits every s-dimensional subspace of F^d once, grouped by pivot pattern.
void for_each_subspace(const Field& f, int d, int s, const std::function<void(const Subspace&)>& visit);
/// All s-dimensional subspaces of F^d sorted by canonical encoding.
std::vector<Subspace> enumerate_subspaces(const Field& f, int d, int s);

}  // namespace nilalg
