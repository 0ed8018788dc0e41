#include "nilalg/json_io.hpp"

#include <set>
#include <sstream>

namespace nilalg {

namespace {

Json field_json(const Field& f) { return Json{{"p", f.p()}, {"m", f.m()}}; }

long long get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("expected an integer for ") + what);
  return j.get<long long>();
}

Json subspace_to_json(const Subspace& s) { return s.to_nested(); }

}  // namespace

Json matrix_to_json(const Matrix& m) { return m.to_nested(); }

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = field_json(a.field());
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  Json products = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jdx = 0; jdx < a.dim(); ++jdx) {
      Json terms = Json::array();
      for (int k = 0; k < a.dim(); ++k)
        if (a.constant(i, jdx, k) != 0) terms.push_back(Json::array({k, static_cast<int>(a.constant(i, jdx, k))}));
      if (!terms.empty()) products.push_back(Json::array({i, jdx, terms}));
    }
  j["products"] = products;
  return j;
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("algebra must be a JSON object");
  if (!j.contains("field") || !j["field"].is_object()) throw InputError("missing field object");
  const Json& fj = j["field"];
  if (!fj.contains("p")) throw InputError("missing field.p");
  const long long p = get_int(fj["p"], "field.p");
  const long long m = fj.contains("m") ? get_int(fj["m"], "field.m") : 1;
  if (p < 2 || p > 256 || m < 1 || m > 8) throw InputError("field parameters out of range");
  const Field f = make_field(static_cast<int>(p), static_cast<int>(m));

  if (!j.contains("dim")) throw InputError("missing dim");
  const long long n = get_int(j["dim"], "dim");
  if (n < 0 || n > 16) throw InputError("dim out of range");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != static_cast<size_t>(n))
      throw InputError("labels must be an array of length dim");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  const int dim = static_cast<int>(n);
  std::vector<Elem> sc(static_cast<size_t>(dim) * dim * dim, 0);
  if (j.contains("products")) {
    const Json& ps = j["products"];
    if (!ps.is_array()) throw InputError("products must be an array");
    std::set<std::pair<long long, long long>> seen;
    for (const auto& entry : ps) {
      if (!entry.is_array() || entry.size() != 3) throw InputError("each product must be [i, j, terms]");
      const long long i = get_int(entry[0], "product index");
      const long long jj = get_int(entry[1], "product index");
      if (i < 0 || i >= n || jj < 0 || jj >= n) throw InputError("product index out of range");
      if (!seen.insert({i, jj}).second) throw InputError("duplicate product entry");
      if (!entry[2].is_array()) throw InputError("product terms must be an array");
      std::set<long long> ks;
      for (const auto& term : entry[2]) {
        if (!term.is_array() || term.size() != 2) throw InputError("each term must be [k, coeff]");
        const long long k = get_int(term[0], "term index");
        const long long c = get_int(term[1], "coefficient");
        if (k < 0 || k >= n) throw InputError("term index out of range");
        if (!ks.insert(k).second) throw InputError("duplicate term index");
        sc[(static_cast<size_t>(i) * dim + jj) * dim + k] = f.checked(c);
      }
    }
  }
  return Algebra(f, dim, std::move(sc), std::move(labels));
}

Algebra algebra_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

Json cohomology_to_json(const CohomologySpaces& h, bool symmetric_only) {
  auto part = [&](const H2Space& s) {
    Json j;
    j["dimZ2"] = s.dim_z2();
    j["dimB2"] = s.dim_b2();
    j["dimH2"] = s.dim_h2();
    Json reps = Json::array();
    for (const Matrix& m : s.rep_cocycles(h.n)) reps.push_back(matrix_to_json(m));
    j["h2_reps"] = reps;
    return j;
  };
  if (symmetric_only) return part(h.symmetric);
  Json j = part(h.full);
  j["symmetric"] = part(h.symmetric);
  return j;
}

Json aut_to_json(const AutGroup& g, const std::vector<Matrix>* elements) {
  Json j;
  j["order"] = g.order;
  Json gens = Json::array();
  for (const Matrix& m : g.generators) gens.push_back(matrix_to_json(m));
  j["generators"] = gens;
  if (elements) {
    Json els = Json::array();
    for (const Matrix& m : *elements) els.push_back(matrix_to_json(m));
    j["elements"] = els;
  }
  return j;
}

Json record_to_json(const ClassificationRecord& r) {
  Json j;
  j["label"] = r.label;
  j["algebra"] = algebra_to_json(r.algebra);
  Json prov;
  if (const auto* e = std::get_if<ExtensionProvenance>(&r.provenance)) {
    prov["type"] = "extension";
    prov["parent"] = e->parent_label;
    prov["parent_index"] = e->parent_index;
    prov["s"] = e->s;
    prov["orbit_index"] = e->orbit_index;
    prov["orbit_size"] = e->orbit_size;
    prov["subspace"] = subspace_to_json(e->subspace);
    Json cs = Json::array();
    for (const Matrix& m : e->cocycles) cs.push_back(matrix_to_json(m));
    prov["cocycles"] = cs;
  } else {
    const auto& d = std::get<DirectSumProvenance>(r.provenance);
    prov["type"] = "direct_sum";
    prov["summands"] = d.summands;
    prov["zero_dim"] = d.zero_dim;
  }
  j["provenance"] = prov;
  j["catalog_match"] = r.catalog_match ? Json(*r.catalog_match) : Json(nullptr);
  return j;
}

Json records_to_json(int n, const Field& f, bool commutative, const std::vector<ClassificationRecord>& records) {
  Json j;
  j["dim"] = n;
  j["field"] = field_json(f);
  j["commutative"] = commutative;
  j["count"] = records.size();
  Json rs = Json::array();
  for (const auto& r : records) rs.push_back(record_to_json(r));
  j["records"] = rs;
  return j;
}

std::string records_to_markdown(int n, const Field& f, bool commutative,
                                const std::vector<ClassificationRecord>& records) {
  std::ostringstream os;
  os << "## Dimension " << n << " over F_" << f.q() << (commutative ? " (commutative)" : "") << ": "
     << records.size() << " algebras\n\n";
  os << "| label | table | parent | orbit size |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : records) {
    os << "| " << r.label << " | " << multiplication_table(r.algebra) << " | ";
    if (const auto* e = std::get_if<ExtensionProvenance>(&r.provenance)) {
      os << e->parent_label << " | " << e->orbit_size << " |\n";
    } else {
      const auto& d = std::get<DirectSumProvenance>(r.provenance);
      os << "direct sum";
      for (const auto& s : d.summands) os << " " << s;
      os << " | - |\n";
    }
  }
  return os.str();
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["dim"] = r.n;
  j["field"] = Json{{"p", r.p}, {"m", r.m}};
  j["commutative"] = r.commutative;
  j["count"] = r.count;
  j["stated_count"] = r.stated ? Json(*r.stated) : Json(nullptr);
  Json refs = Json::array();
  for (size_t i = 0; i < r.reference.size(); ++i)
    refs.push_back(Json{{"label", r.reference[i]}, {"class", r.reference_class[i]}});
  j["reference"] = refs;
  j["reference_classes"] = r.reference_classes;
  Json recs = Json::array();
  for (const auto& m : r.records) recs.push_back(Json{{"label", m.label}, {"matches", m.matches}});
  j["records"] = recs;
  j["unmatched_reference"] = r.unmatched_reference;
  j["bijection"] = r.bijection;
  j["a45_zero_one_isomorphic"] = r.a45_zero_one_isomorphic ? Json(*r.a45_zero_one_isomorphic) : Json(nullptr);
  j["findings"] = r.findings;
  return j;
}

std::string report_to_markdown(const VerifyReport& r) {
  std::ostringstream os;
  os << "## Verification: dimension " << r.n << " over F_" << r.p;
  if (r.m > 1) os << "^" << r.m;
  os << (r.commutative ? " (commutative)" : "") << "\n\n";
  os << "| record | matches |\n|---|---|\n";
  for (const auto& m : r.records) {
    os << "| " << m.label << " | ";
    for (size_t i = 0; i < m.matches.size(); ++i) os << (i ? ", " : "") << m.matches[i];
    if (m.matches.empty()) os << "none";
    os << " |\n";
  }
  os << "\nFindings:\n";
  for (const auto& f : r.findings) os << "- " << f << "\n";
  return os.str();
}

}  // namespace nilalg
