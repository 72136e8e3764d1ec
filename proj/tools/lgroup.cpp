// lgroup: classify, verify and enumerate L-subgroups from the command line.
//
// Exit status: 0 success, 1 validation error or failing suite, 2 parse or
// usage error.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>

#include "lgroup/lgroup.hpp"

#ifndef LGROUP_ASSET_DIR
#define LGROUP_ASSET_DIR "assets"
#endif

namespace {

using namespace lgroup;

struct Carriers {
  GroupPtr group;
  LatticePtr lattice;
};

Carriers load_carriers(const std::string& group, const std::string& lattice, const std::string& product_with) {
  Carriers c;
  c.group = std::make_shared<const FiniteGroup>(io::load_group(group));
  auto L = io::load_lattice(lattice);
  if (!product_with.empty()) L = product(L, io::load_lattice(product_with));
  if (!is_distributive(L)) {
    const auto w = *distributivity_witness(L);
    std::cerr << "warning: lattice " << L.name() << " is not distributive (a=" << L.name_of(w.a)
              << ", b=" << L.name_of(w.b) << ", c=" << L.name_of(w.c) << ")\n";
  }
  c.lattice = std::make_shared<const FiniteLattice>(std::move(L));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-valued subgroups of finite permutation groups"};
  app.require_subcommand(1);

  std::string group, lattice, product_with, mu_path, eta_path, suite, format = "text";
  std::string assets = LGROUP_ASSET_DIR;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify eta as an L-subgroup of mu");
  classify_cmd->add_option("--group", group, "group file")->required();
  classify_cmd->add_option("--lattice", lattice, "lattice file")->required();
  classify_cmd->add_option("--product", product_with, "second lattice; the product lattice is used");
  classify_cmd->add_option("--mu", mu_path, "parent L-subset file")->required();
  classify_cmd->add_option("--eta", eta_path, "subject L-subset file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"paper-examples", "theorems", "crisp-bridge"}));
  verify_cmd->add_option("--assets", assets, "directory with the bundled assets");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List and classify every L-subgroup of mu");
  enumerate_cmd->add_option("--group", group, "group file")->required();
  enumerate_cmd->add_option("--lattice", lattice, "lattice file")->required();
  enumerate_cmd->add_option("--product", product_with, "second lattice; the product lattice is used");
  enumerate_cmd->add_option("--mu", mu_path, "parent L-subset file")->required();

  for (auto* cmd : {classify_cmd, verify_cmd, enumerate_cmd}) {
    cmd->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", seed, "accepted for compatibility; unused");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool structured = format == "structured";
  try {
    if (*classify_cmd) {
      const auto c = load_carriers(group, lattice, product_with);
      const auto mu = io::load_lsubset(mu_path, c.group, c.lattice);
      const auto eta = io::load_lsubset(eta_path, c.group, c.lattice);
      const auto r = classify(eta.value, mu.value, budget, eta.name, mu.name);
      std::cout << (structured ? report::classification_structured(r, *c.group, *c.lattice)
                               : report::classification_text(r, *c.group, *c.lattice));
      return 0;
    }
    if (*verify_cmd) {
      SuiteOptions opt;
      opt.assets = assets;
      opt.budget = budget;
      const auto r = run_suite(suite, opt);
      std::cout << (structured ? report::suite_structured(r) : report::suite_text(r));
      return r.ok() ? 0 : 1;
    }
    if (*enumerate_cmd) {
      const auto c = load_carriers(group, lattice, product_with);
      const auto mu = io::load_lsubset(mu_path, c.group, c.lattice);
      const auto thetas = enumerate_lsubgroups(mu.value, budget);
      std::vector<ClassificationReport> reports;
      reports.reserve(thetas.size());
      for (std::size_t i = 0; i < thetas.size(); ++i)
        reports.push_back(classify(thetas[i], mu.value, budget, "theta" + std::to_string(i + 1), mu.name));
      std::cout << (structured ? report::enumeration_structured(thetas, reports)
                               : report::enumeration_text(thetas, reports));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
