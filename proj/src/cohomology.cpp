#include "nilalg/cohomology.hpp"

namespace nilalg {

Vec flatten(const Matrix& t) { return t.data(); }

Matrix unflatten_cocycle(const Field& f, int n, const Vec& v) { return Matrix::unflatten(f, n, v); }

Matrix delta(const Field& f, int n, int i, int j) {
  Matrix m(f, n, n);
  m(i, j) = 1;
  return m;
}

Matrix sigma(const Field& f, int n, int i, int j) {
  Matrix m(f, n, n);
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

bool is_cocycle(const Algebra& a, const Matrix& t) {
  const Field& f = a.field();
  const int n = a.dim();
  if (t.rows() != n || t.cols() != n) throw InputError("cocycle matrix has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Elem lhs = 0, rhs = 0;
        for (int k = 0; k < n; ++k) {
          lhs = f.add(lhs, f.mul(a.constant(i, j, k), t(k, l)));
          rhs = f.add(rhs, f.mul(a.constant(j, l, k), t(i, k)));
        }
        if (lhs != rhs) return false;
      }
  return true;
}

Subspace cocycle_space(const Algebra& a) {
  const Field& f = a.field();
  const int n = a.dim();
  // Constraint (i, j, l): sum_k c_{ij}^k T_{kl} - sum_k c_{jl}^k T_{ik} = 0.
  Matrix m(f, n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const int row = (i * n + j) * n + l;
        for (int k = 0; k < n; ++k) {
          m(row, k * n + l) = f.add(m(row, k * n + l), a.constant(i, j, k));
          m(row, i * n + k) = f.sub(m(row, i * n + k), a.constant(j, l, k));
        }
      }
  return kernel(m);
}

Subspace coboundary_space(const Algebra& a) {
  const int n = a.dim();
  std::vector<Vec> rows;
  for (int k = 0; k < n; ++k) {
    Vec v(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = a.constant(i, j, k);
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n * n, rows);
}

Subspace symmetric_subspace(const Subspace& s, int n) {
  const Field& f = s.field();
  if (s.ambient() != n * n) throw InputError("cocycle subspace has wrong ambient dimension");
  std::vector<Vec> sym;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) sym.push_back(flatten(sigma(f, n, i, j)).size() ? flatten(i == j ? delta(f, n, i, i) : sigma(f, n, i, j)) : Vec{});
  return intersect(s, Subspace::span(f, n * n, sym));
}

std::vector<Matrix> H2Space::rep_cocycles(int n) const {
  std::vector<Matrix> out;
  for (const Vec& v : reps.basis_vectors()) out.push_back(Matrix::unflatten(reps.field(), n, v));
  return out;
}

namespace {
H2Space make_h2(const Subspace& z2, const Subspace& b2) {
  std::vector<Vec> reduced;
  for (const Vec& z : z2.basis_vectors()) reduced.push_back(b2.reduce(z));
  Subspace reps = Subspace::span(z2.field(), z2.ambient(), reduced);
  if (reps.dim() != z2.dim() - b2.dim()) throw InternalError("H^2 representative space has wrong dimension");
  return {z2, b2, std::move(reps)};
}
}  // namespace

CohomologySpaces h2(const Algebra& a) {
  const int n = a.dim();
  Subspace z2 = cocycle_space(a);
  Subspace b2 = coboundary_space(a);
  if (!z2.contains(b2)) throw InternalError("coboundaries are not cocycles");
  Subspace zs = symmetric_subspace(z2, n);
  Subspace bs = intersect(b2, zs);
  return {n, make_h2(z2, b2), make_h2(zs, bs)};
}

Subspace radical(const Field& f, int n, std::span<const Matrix> thetas) {
  Matrix stacked(f, static_cast<int>(2 * thetas.size()) * n, n);
  int row = 0;
  for (const Matrix& t : thetas) {
    if (t.rows() != n || t.cols() != n) throw InputError("cocycle matrix has wrong shape");
    for (int i = 0; i < n; ++i, ++row)
      for (int j = 0; j < n; ++j) stacked(row, j) = t(i, j);
    for (int i = 0; i < n; ++i, ++row)
      for (int j = 0; j < n; ++j) stacked(row, j) = t(j, i);
  }
  return kernel(stacked);
}

}  // namespace nilalg
