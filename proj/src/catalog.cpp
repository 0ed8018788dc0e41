#include "nilalg/catalog.hpp"

#include <functional>
#include <sstream>

namespace nilalg {

namespace {

enum : int { A = 0, B = 1, C = 2, D = 3 };

using Builder = std::function<std::vector<Algebra::Product>(const Field&, const std::vector<Elem>&)>;

struct Definition {
  CatalogEntry entry;
  Builder build;
};

// Product e_i e_j = sum of (coeff, k) terms in an n-dimensional algebra.
Algebra::Product prod(int n, int i, int j, std::initializer_list<std::pair<Elem, int>> terms) {
  Vec v(n, 0);
  for (const auto& [coeff, k] : terms) v[k] = coeff;
  return {i, j, std::move(v)};
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = [] {
    std::vector<Definition> d;
    auto zero = [](int n) {
      return Definition{{"A_{" + std::to_string(n) + ",1}", n, {}, {}, "0"},
                        [](const Field&, const std::vector<Elem>&) { return std::vector<Algebra::Product>{}; }};
    };
    d.push_back(zero(1));
    d.push_back(zero(2));
    d.push_back({{"A_{2,2}", 2, {}, {}, "a^2 = b"},
                 [](const Field&, const std::vector<Elem>&) { return std::vector{prod(2, A, A, {{1, B}})}; }});
    d.push_back(zero(3));
    d.push_back({{"A_{3,2}", 3, {}, {}, "a^2 = b"},
                 [](const Field&, const std::vector<Elem>&) { return std::vector{prod(3, A, A, {{1, B}})}; }});
    d.push_back({{"A_{3,3}", 3, {"alpha"}, {true}, "a^2 = alpha c, b^2 = c"},
                 [](const Field&, const std::vector<Elem>& v) {
                   return std::vector{prod(3, A, A, {{v[0], C}}), prod(3, B, B, {{1, C}})};
                 }});
    d.push_back({{"A_{3,4}", 3, {"alpha"}, {false}, "a^2 = alpha c, b^2 = c, ab = c"},
                 [](const Field&, const std::vector<Elem>& v) {
                   return std::vector{prod(3, A, A, {{v[0], C}}), prod(3, B, B, {{1, C}}), prod(3, A, B, {{1, C}})};
                 }});
    d.push_back({{"A_{3,5}", 3, {}, {}, "ab = c, ba = -c"},
                 [](const Field& f, const std::vector<Elem>&) {
                   return std::vector{prod(3, A, B, {{1, C}}), prod(3, B, A, {{f.neg(1), C}})};
                 }});
    d.push_back({{"A_{3,6}", 3, {}, {}, "a^2 = b, ab = ba = c"},
                 [](const Field&, const std::vector<Elem>&) {
                   return std::vector{prod(3, A, A, {{1, B}}), prod(3, A, B, {{1, C}}), prod(3, B, A, {{1, C}})};
                 }});
    d.push_back(zero(4));
    d.push_back({{"A_{4,2}", 4, {}, {}, "a^2 = b"},
                 [](const Field&, const std::vector<Elem>&) { return std::vector{prod(4, A, A, {{1, B}})}; }});
    d.push_back({{"A_{4,3}", 4, {"alpha"}, {true}, "a^2 = alpha c, b^2 = c"},
                 [](const Field&, const std::vector<Elem>& v) {
                   return std::vector{prod(4, A, A, {{v[0], C}}), prod(4, B, B, {{1, C}})};
                 }});
    d.push_back({{"A_{4,4}", 4, {}, {}, "a^2 = b, ab = ba = c"},
                 [](const Field&, const std::vector<Elem>&) {
                   return std::vector{prod(4, A, A, {{1, B}}), prod(4, A, B, {{1, C}}), prod(4, B, A, {{1, C}})};
                 }});
    d.push_back({{"A_{4,5}", 4, {"alpha"}, {false}, "a^2 = -alpha c, ab = ba = d, b^2 = c"},
                 [](const Field& f, const std::vector<Elem>& v) {
                   return std::vector{prod(4, A, A, {{f.neg(v[0]), C}}), prod(4, A, B, {{1, D}}),
                                      prod(4, B, A, {{1, D}}), prod(4, B, B, {{1, C}})};
                 }});
    d.push_back({{"A_{4,6}", 4, {"alpha", "beta"}, {true, true}, "a^2 = d, b^2 = alpha d, c^2 = beta d"},
                 [](const Field&, const std::vector<Elem>& v) {
                   return std::vector{prod(4, A, A, {{1, D}}), prod(4, B, B, {{v[0], D}}), prod(4, C, C, {{v[1], D}})};
                 }});
    d.push_back({{"A_{4,7}", 4, {}, {}, "a^2 = b, ab = ba = d, c^2 = d"},
                 [](const Field&, const std::vector<Elem>&) {
                   return std::vector{prod(4, A, A, {{1, B}}), prod(4, A, B, {{1, D}}), prod(4, B, A, {{1, D}}),
                                      prod(4, C, C, {{1, D}})};
                 }});
    d.push_back({{"A_{4,8}", 4, {}, {}, "a^2 = b, ab = ba = c, ac = ca = d, b^2 = d"},
                 [](const Field&, const std::vector<Elem>&) {
                   return std::vector{prod(4, A, A, {{1, B}}), prod(4, A, B, {{1, C}}), prod(4, B, A, {{1, C}}),
                                      prod(4, A, C, {{1, D}}), prod(4, C, A, {{1, D}}), prod(4, B, B, {{1, D}})};
                 }});
    d.push_back({{"B_{4,1}", 4, {"alpha"}, {false}, "a^2 = c, ab = ba = c + alpha d, b^2 = d"},
                 [](const Field&, const std::vector<Elem>& v) {
                   return std::vector{prod(4, A, A, {{1, C}}), prod(4, A, B, {{1, C}, {v[0], D}}),
                                      prod(4, B, A, {{1, C}, {v[0], D}}), prod(4, B, B, {{1, D}})};
                 }});
    return d;
  }();
  return defs;
}

const Definition& definition(const std::string& name) {
  for (const auto& d : definitions())
    if (d.entry.name == name) return d;
  throw InputError("unknown catalog algebra: " + name);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& d : definitions()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) { return definition(name).entry; }

std::string catalog_label(const std::string& name, const std::vector<Elem>& values) {
  if (values.empty()) return name;
  std::ostringstream os;
  os << name << "^{";
  for (size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << static_cast<int>(values[i]);
  os << "}";
  return os.str();
}

CatalogInstance catalog_instance(const std::string& name, const std::vector<Elem>& values, const Field& f) {
  const Definition& d = definition(name);
  if (values.size() != d.entry.params.size()) throw InputError("wrong number of parameters for " + name);
  for (size_t i = 0; i < values.size(); ++i) {
    f.checked(values[i]);
    if (d.entry.nonzero[i] && values[i] == 0) throw InputError(name + " requires " + d.entry.params[i] + " != 0");
  }
  Algebra alg = Algebra::from_products(f, d.entry.dim, d.build(f, values));
  return {catalog_label(name, values), name, values, std::move(alg)};
}

Algebra catalog(const std::string& name, const CatalogParams& params, const Field& f) {
  const Definition& d = definition(name);
  for (const auto& [key, value] : params) {
    (void)value;
    bool known = false;
    for (const auto& slot : d.entry.params) known = known || slot == key;
    if (!known) throw InputError("unknown parameter '" + key + "' for " + name);
  }
  std::vector<Elem> values;
  for (const auto& slot : d.entry.params) {
    auto it = params.find(slot);
    if (it == params.end()) throw InputError(name + " requires parameter " + slot);
    values.push_back(f.checked(it->second));
  }
  return catalog_instance(name, values, f).algebra;
}

std::vector<CatalogInstance> catalog_instances(const Field& f, int dim) {
  std::vector<CatalogInstance> out;
  for (const auto& d : definitions()) {
    if (d.entry.dim != dim) continue;
    const size_t slots = d.entry.params.size();
    std::vector<Elem> values(slots, 0);
    while (true) {
      bool admissible = true;
      for (size_t i = 0; i < slots; ++i) admissible = admissible && !(d.entry.nonzero[i] && values[i] == 0);
      if (admissible) out.push_back(catalog_instance(d.entry.name, values, f));
      // Odometer with the last slot fastest.
      int k = static_cast<int>(slots) - 1;
      while (k >= 0 && values[k] + 1 == f.q()) values[k--] = 0;
      if (k < 0) break;
      ++values[k];
    }
  }
  return out;
}

}  // namespace nilalg
