#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hompre/commands.hpp"
#include "hompre/errors.hpp"
#include "hompre/search.hpp"

using namespace hompre;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Document> load(const std::vector<std::string>& paths) {
  std::vector<Document> out;
  for (const auto& p : paths) {
    try {
      for (auto& d : read_documents(slurp(p))) out.push_back(std::move(d));
    } catch (const ParseError& e) {
      throw ParseError(p + ": " + e.what());
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

std::vector<Scalar> parse_coeffs(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

// Human text to stdout; with --out, the machine-readable report goes to the file.
int report(const ValidationReport& r, bool verbose, const std::string& out) {
  std::cout << r.render(verbose);
  if (!out.empty()) emit(serialize_report(r), out);
  return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for Hom-pre-Lie algebras and bialgebras"};
  app.require_subcommand(1);

  std::string out;
  bool verbose = false;
  std::string variant_name = "mu_star";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Write the result document or JSON report to this file");
    sub->add_flag("--verbose", verbose, "List every failing witness");
  };

  std::vector<std::string> files;
  std::string name;

  auto* validate = app.add_subcommand("validate", "Validate one document against the axioms of its kind");
  validate->add_option("file", files, "Document file")->required()->expected(1);
  common(validate);

  auto* derive = app.add_subcommand("derive", "Build a structure from input documents");
  derive->add_option("construction", name, "Construction name")->required();
  derive->add_option("files", files, "Input documents")->required();
  derive->add_option("--variant", variant_name, "Semidirect ambient: mu_star or rho_star");
  common(derive);

  auto* check = app.add_subcommand("check", "Check a theorem's assertion on an instance");
  check->add_option("slug", name, "Check slug (see explain)")->required();
  check->add_option("files", files, "Input documents");
  check->add_option("--variant", variant_name, "Semidirect ambient: mu_star or rho_star");
  common(check);

  SearchSpec spec;
  std::string target = "hom_pre_lie", mode = "exhaustive", coeffs = "-1,0,1", base_file, twist_file;
  std::size_t limit = 0;
  std::optional<std::uint64_t> budget;
  auto* search = app.add_subcommand("search", "Enumerate valid structures over a coefficient set");
  search->add_option("--target", target, "hom_pre_lie, s_matrix, hessian, dendriform or o_operator");
  search->add_option("--base", base_file, "Base algebra (s_matrix, hessian) or representation (o_operator)");
  search->add_option("--twist", twist_file, "linear_map document used as the twist (hom_pre_lie, dendriform)");
  search->add_option("--dim", spec.dim, "Dimension for hom_pre_lie and dendriform")->capture_default_str();
  search->add_option("--coeffs", coeffs, "Comma-separated coefficient set")->capture_default_str();
  search->add_option("--mode", mode, "exhaustive or seeded")->capture_default_str();
  search->add_option("--seed", spec.seed, "Master seed for seeded mode");
  auto* limit_opt = search->add_option("--limit", limit, "Stop after this many results");
  search->add_option("--budget", budget, "Candidate budget (default 1000000 exhaustive, 10000 seeded)");
  search->add_option("--workers", spec.workers, "Worker threads")->capture_default_str();
  common(search);

  std::string slug;
  auto* explain_cmd = app.add_subcommand("explain", "Print the identity a check slug verifies");
  explain_cmd->add_option("slug", slug, "Check slug; omit to list slugs and constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_precondition;
  }

  try {
    SemidirectVariant variant = SemidirectVariant::mu_star;
    if (variant_name == "rho_star")
      variant = SemidirectVariant::rho_star;
    else if (variant_name != "mu_star")
      throw InvalidInput("unknown variant \"" + variant_name + "\"");

    if (validate->parsed()) return report(run_validate(load(files).at(0)), verbose, out);

    if (derive->parsed()) {
      emit(serialize(run_derive(name, load(files), variant)), out);
      return exit_holds;
    }

    if (check->parsed()) return report(run_check(name, load(files), variant), verbose, out);

    if (search->parsed()) {
      spec.target = target_from_name(target);
      if (mode == "seeded")
        spec.mode = SearchMode::seeded;
      else if (mode != "exhaustive")
        throw InvalidInput("unknown mode \"" + mode + "\"");
      spec.coefficients = parse_coeffs(coeffs);
      if (limit_opt->count() > 0) spec.limit = limit;
      spec.budget = budget ? *budget : (spec.mode == SearchMode::seeded ? 10000 : 1000000);
      if (!base_file.empty()) spec.base = load({base_file}).at(0);
      if (!twist_file.empty()) spec.twist = load({twist_file}).at(0).as<LinearMap>("twist");
      const auto docs = run_search(spec);
      if (verbose) std::cerr << docs.size() << " results\n";
      emit(serialize_documents(docs), out);
      return exit_holds;
    }

    if (explain_cmd->parsed()) {
      if (slug.empty()) {
        std::cout << "checks:\n";
        for (auto s : check_slugs()) std::cout << "  " << s << '\n';
        std::cout << "constructions:\n";
        for (auto c : derive_constructions()) std::cout << "  " << c << '\n';
      } else {
        std::cout << explain(slug);
      }
      return exit_holds;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for_current_exception();
  }
  return exit_holds;
}
