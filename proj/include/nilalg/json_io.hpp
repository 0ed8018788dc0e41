#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilalg/classify.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/orbits.hpp"

namespace nilalg {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);

/// {"field": {"p", "m"}, "dim", "labels", "products": [[i, j, [[k, coeff], ...]], ...]}
/// with zero products omitted.
Json algebra_to_json(const Algebra& a);
/// Parses the format above; throws InputError on anything malformed.
Algebra algebra_from_json(const Json& j);
Algebra algebra_from_json_text(const std::string& text);

/// {"dimZ2", "dimB2", "dimH2", "h2_reps", "symmetric": {...}}; with
/// symmetric_only, just the fields of the symmetric variant.
Json cohomology_to_json(const CohomologySpaces& h, bool symmetric_only);

/// {"order", "generators"} plus "elements" when given.
Json aut_to_json(const AutGroup& g, const std::vector<Matrix>* elements);

Json record_to_json(const ClassificationRecord& r);
Json records_to_json(int n, const Field& f, bool commutative, const std::vector<ClassificationRecord>& records);
/// Table with columns label, multiplication table, parent, orbit size.
std::string records_to_markdown(int n, const Field& f, bool commutative,
                                const std::vector<ClassificationRecord>& records);

Json report_to_json(const VerifyReport& r);
std::string report_to_markdown(const VerifyReport& r);

}  // namespace nilalg
