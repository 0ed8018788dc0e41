// Command-line front end: classify, verify, cohomology, aut, iso, catalog.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilalg/classify.hpp"
#include "nilalg/isomorphism.hpp"
#include "nilalg/json_io.hpp"
#include "nilalg/orbits.hpp"

namespace {

using namespace nilalg;

constexpr int kInputErrorExit = 2;
constexpr unsigned long long kMaxListedElements = 1'000'000ULL;

struct FieldArgs {
  int p = 0;
  int m = 1;
};

Algebra read_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json_text(ss.str());
}

void require_nilpotent(const Algebra& a) {
  if (!is_associative(a)) throw InputError("algebra is not associative");
  if (!is_nilpotent(a)) throw InputError("algebra is not nilpotent");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of nilpotent associative algebras over small finite fields"};
  app.require_subcommand(1);

  FieldArgs fa;
  int dim = 0;
  bool commutative = false;
  std::string format = "json";
  std::string out_path;
  std::string algebra_path, a_path, b_path, name;
  bool symmetric = false, full = false;
  std::vector<std::string> params;

  auto* classify_cmd = app.add_subcommand("classify", "List all algebras of a dimension up to isomorphism");
  classify_cmd->add_option("--dim", dim)->required();
  classify_cmd->add_option("--p", fa.p)->required();
  classify_cmd->add_option("--m", fa.m);
  classify_cmd->add_flag("--commutative", commutative);
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
  classify_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "Compare a classification with the published lists");
  verify_cmd->add_option("--dim", dim)->required();
  verify_cmd->add_option("--p", fa.p)->required();
  verify_cmd->add_option("--m", fa.m);
  verify_cmd->add_flag("--commutative", commutative);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

  auto* coh_cmd = app.add_subcommand("cohomology", "Second cohomology of an algebra");
  coh_cmd->add_option("--algebra", algebra_path)->required();
  coh_cmd->add_flag("--symmetric", symmetric);

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of an algebra");
  aut_cmd->add_option("--algebra", algebra_path)->required();
  aut_cmd->add_flag("--full", full);

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two algebras");
  iso_cmd->add_option("--a", a_path)->required();
  iso_cmd->add_option("--b", b_path)->required();

  auto* cat_cmd = app.add_subcommand("catalog", "Build a named algebra");
  cat_cmd->add_option("--name", name)->required();
  cat_cmd->add_option("--param", params);
  cat_cmd->add_option("--p", fa.p)->required();
  cat_cmd->add_option("--m", fa.m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputErrorExit;
  }

  try {
    if (*classify_cmd) {
      const Field f = make_field(fa.p, fa.m);
      const auto records = classify(dim, f, commutative);
      emit(format == "md" ? records_to_markdown(dim, f, commutative, records)
                          : dump(records_to_json(dim, f, commutative, records)),
           out_path);
    } else if (*verify_cmd) {
      const Field f = make_field(fa.p, fa.m);
      const auto report = verify_against_reference(dim, f, commutative);
      std::cout << (format == "md" ? report_to_markdown(report) : dump(report_to_json(report)));
    } else if (*coh_cmd) {
      const Algebra a = read_algebra(algebra_path);
      if (!is_associative(a)) throw InputError("algebra is not associative");
      std::cout << dump(cohomology_to_json(h2(a), symmetric));
    } else if (*aut_cmd) {
      const Algebra a = read_algebra(algebra_path);
      require_nilpotent(a);
      const AutGroup g = automorphism_group(a);
      std::vector<Matrix> listed;
      if (full) {
        if (g.elements) {
          listed = *g.elements;
        } else {
          if (g.order > kMaxListedElements) throw GuardError("group too large to list");
          listed = group_closure(a.field(), a.dim(), g.generators);
        }
      }
      std::cout << dump(aut_to_json(g, full ? &listed : nullptr));
    } else if (*iso_cmd) {
      const Algebra a = read_algebra(a_path);
      const Algebra b = read_algebra(b_path);
      require_nilpotent(a);
      require_nilpotent(b);
      const auto witness = are_isomorphic(a, b);
      Json j;
      j["isomorphic"] = witness.has_value();
      if (witness) j["witness"] = matrix_to_json(*witness);
      std::cout << dump(j);
      return witness ? 0 : 1;
    } else if (*cat_cmd) {
      const Field f = make_field(fa.p, fa.m);
      CatalogParams values;
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("parameter must look like key=value: " + kv);
        long long v = 0;
        try {
          size_t used = 0;
          v = std::stoll(kv.substr(eq + 1), &used);
          if (used != kv.size() - eq - 1) throw InputError("bad parameter value: " + kv);
        } catch (const std::logic_error&) {
          throw InputError("bad parameter value: " + kv);
        }
        values[kv.substr(0, eq)] = v;
      }
      std::cout << dump(algebra_to_json(catalog(name, values, f)));
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputErrorExit;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputErrorExit;
  }
  return 0;
}
