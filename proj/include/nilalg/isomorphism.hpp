#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Basis-independent numbers attached to an algebra. Isomorphic algebras
/// have equal vectors.
struct InvariantVector {
  int dim = 0;
  std::vector<int> power_dims;  // dim A, dim A^2, ...
  int kernel_dim = 0;           // dim C(A)
  int kernel_in_square_dim = 0; // dim C(A) ∩ A^2
  bool commutative = false;
  int z2 = 0, b2 = 0, h2 = 0;
  int z2_sym = 0, b2_sym = 0, h2_sym = 0;

  auto operator<=>(const InvariantVector&) const = default;
};

InvariantVector invariant_vector(const Algebra& a);

struct IsoOptions {
  /// Search nodes allowed before GuardError is thrown.
  unsigned long long node_limit = 1'000'000'000ULL;
  /// Run the search even when invariants differ and treat a hit as an
  /// internal error.
  bool cross_check_prefilter = false;
};

/// P(e_i e_j) = P(e_i) P(e_j) for all basis pairs, P mapping a into b
/// column-wise.
bool is_homomorphism(const Algebra& a, const Algebra& b, const Matrix& p);

/// Visits every isomorphism a -> b as a matrix whose columns are the images
/// of the basis of a. The visitor returns false to stop early. Returns the
/// number of search nodes used.
///
/// The search fixes images of a generating set taken from a complement of
/// A^2, propagates them through products, and prunes with product
/// relations and per-element rank signatures.
unsigned long long for_each_isomorphism(const Algebra& a, const Algebra& b,
                                        const std::function<bool(const Matrix&)>& visit,
                                        unsigned long long node_limit = 1'000'000'000ULL);

/// A verified isomorphism a -> b, or nullopt after an exhausted search.
std::optional<Matrix> are_isomorphic(const Algebra& a, const Algebra& b, const IsoOptions& opts = {});

}  // namespace nilalg
