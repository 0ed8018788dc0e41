#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nilalg/cohomology.hpp"

namespace nilalg {

/// An automorphism is an invertible n x n matrix whose columns are the
/// images of the basis vectors.
bool is_automorphism(const Algebra& a, const Matrix& p);

struct AutGroup {
  Algebra algebra;
  std::vector<Matrix> generators;
  /// Every element, when the group was enumerated.
  std::optional<std::vector<Matrix>> elements;
  unsigned long long order = 0;
};

/// |GL_n(F_q)|.
unsigned long long gl_order(int n, int q);
/// Elementary generators of GL_n(F): transvections I + t E_ij for t running
/// over an F_p-basis of F, plus diag(w, 1, ..., 1) with w primitive.
std::vector<Matrix> gl_generators(const Field& f, int n);
/// All products of the generators, identity included, in BFS order.
std::vector<Matrix> group_closure(const Field& f, int n, const std::vector<Matrix>& generators);

/// Aut(A). The zero algebra gets GL_n generators and its order without an
/// element list; any other algebra is enumerated by backtracking, with
/// GuardError once node_limit search nodes are spent.
AutGroup automorphism_group(const Algebra& a, unsigned long long node_limit = 100'000'000ULL);

/// (phi theta)(x, y) = theta(phi x, phi y), i.e. P^T T P.
Matrix act_on_cocycle(const Matrix& phi, const Matrix& theta);

/// Cocycles for the canonical lifts of the basis rows of omega.
std::vector<Matrix> lift_subspace(const Subspace& omega, const H2Space& h, int n);

/// Image of a subspace of H^2 (in representative coordinates) under phi.
Subspace act_on_h2_subspace(const Matrix& phi, const Subspace& omega, const H2Space& h, int n);

/// radical(thetas) ∩ C(A) = 0.
bool is_useful(const Algebra& a, std::span<const Matrix> cocycles);

/// All s-dimensional useful subspaces of H^2 (or its symmetric part), sorted.
std::vector<Subspace> useful_subspaces(const Algebra& a, const CohomologySpaces& h, int s, bool symmetric);

struct Orbit {
  Subspace representative;  // smallest canonical encoding in the orbit
  std::size_t size = 0;
};

/// Aut(A)-orbits on useful s-dimensional subspaces, found by BFS with the
/// group generators. Sorted by representative.
std::vector<Orbit> orbit_representatives(const Algebra& a, const AutGroup& aut, const CohomologySpaces& h, int s,
                                         bool symmetric);
std::vector<Orbit> orbit_representatives(const Algebra& a, int s, bool symmetric);

/// A ⊕ V with (x+v)(y+w) = xy + sum_t theta_t(x, y) f_t. Requires cocycles
/// that are linearly independent modulo B^2.
Algebra central_extension(const Algebra& a, std::span<const Matrix> cocycles);
/// Same construction without any checks on the bilinear maps.
Algebra extend_unchecked(const Algebra& a, std::span<const Matrix> maps);

struct KernelSplit {
  Quotient quotient;             // B / C(B)
  std::vector<Matrix> cocycles;  // B is isomorphic to the extension of the quotient by these
};
/// Presents B as a central extension of B / C(B).
KernelSplit split_off_kernel(const Algebra& b);

}  // namespace nilalg
