#pragma once

#include <span>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

// Scalar bilinear maps theta: A x A -> F are n x n matrices with
// theta(e_i, e_j) = T(i, j), flattened row-major when treated as vectors.

Vec flatten(const Matrix& t);
Matrix unflatten_cocycle(const Field& f, int n, const Vec& v);

/// Delta_{i,j}: 1 at (i, j), zero elsewhere.
Matrix delta(const Field& f, int n, int i, int j);
/// Sigma_{i,j}: 1 at (i, j) and (j, i).
Matrix sigma(const Field& f, int n, int i, int j);

/// theta(ab, c) = theta(a, bc) on all basis triples.
bool is_cocycle(const Algebra& a, const Matrix& t);

/// Z^2(A, F) inside F^{n^2}.
Subspace cocycle_space(const Algebra& a);
/// B^2(A, F): span of the matrices (c_{ij}^k)_{ij}, one per k.
Subspace coboundary_space(const Algebra& a);
/// Intersection with the symmetric matrices; s lives in F^{n^2}.
Subspace symmetric_subspace(const Subspace& s, int n);

/// Z^2 / B^2 with concrete coset representatives.
struct H2Space {
  Subspace z2;
  Subspace b2;
  /// Complement of b2 in z2 made of vectors already reduced modulo b2, in
  /// canonical form. Its rows are the H^2 representatives.
  Subspace reps;

  int dim_z2() const { return z2.dim(); }
  int dim_b2() const { return b2.dim(); }
  int dim_h2() const { return reps.dim(); }

  /// Coordinates of the class of a cocycle with respect to the rows of reps.
  Vec class_coordinates(const Vec& cocycle) const { return reps.coordinates(b2.reduce(cocycle)); }
  /// Canonical lift of H^2 coordinates back to a cocycle.
  Vec lift(const Vec& coords) const { return reps.combine(coords); }
  std::vector<Matrix> rep_cocycles(int n) const;
};

struct CohomologySpaces {
  int n = 0;
  H2Space full;
  /// Symmetric cocycles modulo symmetric coboundaries.
  H2Space symmetric;

  const H2Space& variant(bool sym) const { return sym ? symmetric : full; }
};

CohomologySpaces h2(const Algebra& a);

/// { v : theta_i(v, .) = theta_i(., v) = 0 for all i }.
Subspace radical(const Field& f, int n, std::span<const Matrix> thetas);

}  // namespace nilalg
