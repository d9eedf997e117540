// rees-lab: command-line front end for the verification suites and the
// underlying poset, homology, permutation and symmetric function tools.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rees/catalog.hpp"
#include "rees/homology.hpp"
#include "rees/permstat.hpp"
#include "rees/poset.hpp"
#include "rees/symfunc.hpp"
#include "rees/verify.hpp"

using nlohmann::json;
using namespace rees;

namespace {

struct PosetSpec {
  std::string family;
  std::string file;
  int n = 3;
  int q = 2;
  int t = 2;
  int j = 0;
  int width = 3;
  double density = 0.6;
  std::uint64_t seed = 1;
};

void add_poset_options(CLI::App* cmd, PosetSpec& s, bool positional_family) {
  const std::string families =
      "boolean, chain, tree, subspace, crosspolytope, isotropic, jonsson, ideal, tree-product, random";
  if (positional_family)
    cmd->add_option("family", s.family, "Poset family: " + families)->required();
  else
    cmd->add_option("--family", s.family, "Poset family: " + families);
  cmd->add_option("--file", s.file, "Read the poset from a JSON file instead");
  cmd->add_option("--n", s.n, "Rank or dimension parameter");
  cmd->add_option("--q", s.q, "Field size");
  cmd->add_option("--t", s.t, "Tree branching");
  cmd->add_option("--j", s.j, "Ideal index for I_j(B_n)");
  cmd->add_option("--width", s.width, "Maximum rank size for random posets");
  cmd->add_option("--density", s.density, "Cover density for random posets");
  cmd->add_option("--seed", s.seed, "Seed for random posets");
}

Poset build(const PosetSpec& s) {
  if (!s.file.empty()) {
    std::ifstream in(s.file);
    if (!in) throw std::runtime_error("cannot open " + s.file);
    return poset_from_json(json::parse(in));
  }
  const auto jonsson = [](const Poset& p) { return rees_product(remove_bottom(p).poset, chain(p.length())); };
  if (s.family == "boolean") return boolean_lattice(s.n);
  if (s.family == "chain") return chain(s.n);
  if (s.family == "tree") return tary_tree(s.t, s.n);
  if (s.family == "subspace") return subspace_lattice(s.n, s.q);
  if (s.family == "crosspolytope") return crosspolytope_faces(s.n);
  if (s.family == "isotropic") return isotropic_subspace_poset(s.n, s.q);
  if (s.family == "jonsson") return jonsson(boolean_lattice(s.n));
  if (s.family == "ideal") return ideal_ij(boolean_lattice(s.n), s.j).poset;
  if (s.family == "tree-product") return remove_bottom(rees_product(boolean_lattice(s.n), tary_tree(s.t, s.n))).poset;
  if (s.family == "random") return random_ranked_bounded_poset(s.n, s.width, s.density, s.seed);
  if (s.family.empty()) throw std::invalid_argument("give a family or --file");
  throw std::invalid_argument("unknown family '" + s.family + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string suite_listing(const std::string& format) {
  const auto suites = list_suites();
  if (format == "json") {
    json arr = json::array();
    for (const auto& s : suites)
      arr.push_back({{"id", s.id}, {"statement", s.statement}, {"degree_convention", s.degree_convention}});
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : suites) os << s.id << "\n    " << s.statement << "\n    homology degree: " << s.degree_convention << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees products of posets: homology, permutation statistics and symmetric functions"};
  app.require_subcommand(1);

  // verify
  SuiteConfig cfg;
  std::string config_file;
  std::optional<int> n_max;
  std::vector<int> qs;
  std::vector<int> ts;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> variables;
  std::optional<int> degree_cap;
  std::optional<std::size_t> max_simplices;
  std::optional<std::size_t> max_subspaces;
  std::string out_path;
  std::string format;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite id (see `list`)");
  verify->add_option("--config", config_file, "JSON file with SuiteConfig fields");
  verify->add_option("--n-max,--n", n_max, "Largest n");
  verify->add_option("--q", qs, "Field sizes");
  verify->add_option("--t", ts, "Tree branchings");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Random trials");
  verify->add_option("--variables,-m", variables, "Number of variables for series checks");
  verify->add_option("--degree-cap", degree_cap, "Highest z-degree for series checks");
  verify->add_option("--max-simplices", max_simplices, "Simplex guard per complex");
  verify->add_option("--max-subspaces", max_subspaces, "Subspace guard per lattice");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));

  // list
  std::string list_format = "table";
  auto* list = app.add_subcommand("list", "List the verification suites");
  list->add_option("--format", list_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  // poset build
  PosetSpec build_spec;
  std::string build_format = "json";
  auto* poset = app.add_subcommand("poset", "Poset constructions");
  poset->require_subcommand(1);
  auto* poset_build = poset->add_subcommand("build", "Build a poset and print it");
  add_poset_options(poset_build, build_spec, true);
  poset_build->add_option("--format", build_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  // betti / mobius
  PosetSpec betti_spec;
  auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti numbers of the order complex");
  add_poset_options(betti_cmd, betti_spec, false);
  PosetSpec mobius_spec;
  auto* mobius_cmd = app.add_subcommand("mobius", "Betti numbers, mu(P-hat) and the Euler-Poincare check");
  add_poset_options(mobius_cmd, mobius_spec, false);

  // stats
  std::string perm_text;
  auto* stats_cmd = app.add_subcommand("stats", "Statistics of a permutation");
  stats_cmd->add_option("perm", perm_text, "One-line notation, e.g. 42153")->required();

  // poly
  int poly_n = 3;
  std::string flavor = "maj-exc";
  auto* poly = app.add_subcommand("poly", "Generating polynomials");
  poly->require_subcommand(1);
  auto* poly_eulerian = poly->add_subcommand("eulerian", "q-Eulerian polynomial of S_n");
  poly_eulerian->add_option("--n", poly_n, "n")->required();
  poly_eulerian->add_option("--flavor", flavor, "maj-exc, comaj-exc, comaj-exc-fix or maj-exc-fix");
  auto* poly_derangement = poly->add_subcommand("derangement", "sum over derangements of q^comaj t^exc");
  poly_derangement->add_option("--n", poly_n, "n")->required();
  auto* poly_bc = poly->add_subcommand("bc", "sum over type BC derangements of q^(comaj+exc+bnd)");
  poly_bc->add_option("--n", poly_n, "n")->required();

  // symfunc
  int sf_n = 3;
  int sf_j = 0;
  std::optional<int> sf_k;
  std::string sf_basis = "m";
  auto* symfunc = app.add_subcommand("symfunc", "Symmetric functions");
  symfunc->require_subcommand(1);
  auto* sf_q = symfunc->add_subcommand("q-eulerian", "Q_{n,j} or Q_{n,j,k}");
  sf_q->add_option("--n", sf_n, "n")->required();
  sf_q->add_option("--j", sf_j, "Excedances")->required();
  sf_q->add_option("--k", sf_k, "Fixed points");
  sf_q->add_option("--basis", sf_basis, "m, h, e, p or s");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw std::runtime_error("cannot open " + config_file);
        const std::string suite = cfg.suite;
        cfg = SuiteConfig::from_json(json::parse(in));
        if (!suite.empty()) cfg.suite = suite;
      }
      if (cfg.suite.empty()) throw std::invalid_argument("no suite given");
      if (!is_suite(cfg.suite)) {
        std::cerr << "unknown suite '" << cfg.suite << "'; run `rees-lab list`\n";
        return 2;
      }
      if (n_max) cfg.n_max = n_max;
      if (!qs.empty()) cfg.q_values = qs;
      if (!ts.empty()) cfg.t_values = ts;
      if (seed) cfg.seed = *seed;
      if (trials) cfg.trials = *trials;
      if (variables) cfg.variables = variables;
      if (degree_cap) cfg.degree_cap = degree_cap;
      if (max_simplices) cfg.max_simplices = max_simplices;
      if (max_subspaces) cfg.max_subspaces = *max_subspaces;
      if (!out_path.empty()) cfg.output = out_path;
      if (!format.empty()) cfg.format = format;
      const Report report = run_suite(cfg);
      emit(report.render(cfg.format), cfg.output);
      if (!cfg.output.empty())
        std::cout << report.suite << ": " << report.count(CaseStatus::pass) << " passed, "
                  << report.count(CaseStatus::fail) << " failed, " << report.count(CaseStatus::skipped)
                  << " skipped\n";
      return report.passed() ? 0 : 1;
    }
    if (*list) {
      std::cout << suite_listing(list_format);
      return 0;
    }
    if (*poset_build) {
      const Poset p = build(build_spec);
      std::cout << (build_format == "dot" ? to_dot(p, build_spec.family) : to_json(p).dump(2) + "\n");
      return 0;
    }
    if (*betti_cmd) {
      std::cout << json(betti(build(betti_spec)).values).dump() << "\n";
      return 0;
    }
    if (*mobius_cmd) {
      const Poset p = build(mobius_spec);
      const Betti b = betti(p);
      const Integer mu = mobius_of_hat(p);
      std::cout << json{{"betti", b.values}, {"mu", to_string(mu)}, {"euler_ok", mu == b.euler_characteristic()}}
                       .dump()
                << "\n";
      return 0;
    }
    if (*stats_cmd) {
      const Permutation s = Permutation::parse(perm_text);
      const PermStats st = stats(s);
      std::cout << json{{"perm", s.to_string()}, {"exc", st.exc},     {"maj", st.maj},
                        {"comaj", st.comaj},     {"des", st.des},     {"fix", st.fix},
                        {"exd", exd_set(s)},     {"cycle_type", s.cycle_type()}}
                       .dump()
                << "\n";
      return 0;
    }
    if (*poly_eulerian) {
      std::cout << q_eulerian(poly_n, parse_flavor(flavor)).to_string() << "\n";
      return 0;
    }
    if (*poly_derangement) {
      std::cout << derangement_poly(poly_n).to_string() << "\n";
      return 0;
    }
    if (*poly_bc) {
      std::cout << bc_poly(poly_n).to_string() << "\n";
      return 0;
    }
    if (*sf_q) {
      const SymFunc f = sf_k ? q_eulerian_sym(sf_n, sf_j, *sf_k) : q_eulerian_sym(sf_n, sf_j);
      std::cout << f.to_string(parse_basis(sf_basis)) << "\n";
      return 0;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
