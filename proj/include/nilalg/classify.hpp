#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilalg/catalog.hpp"
#include "nilalg/linalg.hpp"

namespace nilalg {

struct ExtensionProvenance {
  std::string parent_label;
  int parent_index = 0;  // position of the parent in the previous-dimension list
  int s = 0;
  int orbit_index = 0;
  std::size_t orbit_size = 0;
  Subspace subspace;  // orbit representative in H^2 coordinates
  std::vector<Matrix> cocycles;
};

struct DirectSumProvenance {
  std::vector<std::string> summands;  // empty for the zero algebra
  int zero_dim = 0;                   // dimension of the zero summand
};

struct ClassificationRecord {
  Algebra algebra;
  std::string label;
  std::variant<ExtensionProvenance, DirectSumProvenance> provenance;
  std::optional<std::string> catalog_match;
};

/// Throws GuardError unless n >= 1, q <= 9, and n <= 3 (n <= 4 with q <= 5
/// when commutative).
void check_classify_guard(int n, const Field& f, bool commutative);

/// Pairwise non-isomorphic nilpotent associative algebras of dimension n over
/// f, one per isomorphism class (commutative ones only when flagged). Order:
/// zero algebra, direct sums with zero algebras, then extensions by s,
/// parent and orbit.
std::vector<ClassificationRecord> classify(int n, const Field& f, bool commutative);

/// Lists for every dimension 1..n; element d-1 holds dimension d.
std::vector<std::vector<ClassificationRecord>> classify_levels(int n, const Field& f, bool commutative);

/// Rebuilds a record's algebra from its provenance and the previous levels.
Algebra reconstruct(const ClassificationRecord& r, const std::vector<std::vector<ClassificationRecord>>& levels);

/// The published named presentations for (n, f, commutative) used for labels
/// and verification. Empty when no list applies.
std::vector<CatalogInstance> reference_presentations(int n, const Field& f, bool commutative);

/// Published count for this case, if any.
std::optional<int> stated_count(int n, const Field& f, bool commutative);

struct RecordMatch {
  std::string label;
  std::vector<std::string> matches;  // reference presentations isomorphic to the record
};

struct VerifyReport {
  int n = 0;
  int p = 0, m = 0;
  bool commutative = false;
  std::size_t count = 0;
  std::optional<int> stated;
  std::vector<std::string> reference;   // presentation labels
  std::vector<int> reference_class;     // oracle class per presentation
  int reference_classes = 0;
  std::vector<RecordMatch> records;
  std::vector<std::string> unmatched_reference;  // one label per class no record hits
  bool bijection = false;
  /// Even q, n = 4, commutative: whether A_{4,5}^0 and A_{4,5}^1 are isomorphic.
  std::optional<bool> a45_zero_one_isomorphic;
  std::vector<std::string> findings;
};

VerifyReport verify_against_reference(int n, const Field& f, bool commutative);

}  // namespace nilalg
