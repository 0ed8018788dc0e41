#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Parameter values by slot name ("alpha", "beta"), as field encodings.
using CatalogParams = std::map<std::string, long long>;

struct CatalogEntry {
  std::string name;  // e.g. "A_{3,3}"
  int dim = 0;
  std::vector<std::string> params;
  /// Slots that must be nonzero.
  std::vector<bool> nonzero;
  /// Presentation with parameters as Greek letters, e.g. "a^2 = alpha c, b^2 = c".
  std::string presentation;
};

/// Every named algebra, in dimension order.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Builds the named algebra over f with basis letters a, b, c, d. Throws
/// InputError for an unknown name, a missing or unknown parameter, or a
/// value outside the admissible range.
Algebra catalog(const std::string& name, const CatalogParams& params, const Field& f);

/// "A_{3,3}^{2}", "A_{4,6}^{1,1}", or the bare name when there are no slots.
std::string catalog_label(const std::string& name, const std::vector<Elem>& values);

struct CatalogInstance {
  std::string label;
  std::string name;
  std::vector<Elem> values;
  Algebra algebra;
};

/// Every entry of the given dimension at every admissible parameter value,
/// in catalog order with values in increasing encoding order.
std::vector<CatalogInstance> catalog_instances(const Field& f, int dim);

/// One instance with explicit slot values in slot order.
CatalogInstance catalog_instance(const std::string& name, const std::vector<Elem>& values, const Field& f);

}  // namespace nilalg
