#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lk/catalog.hpp"
#include "lk/suites.hpp"

using nlohmann::json;

namespace {

int cmd_build(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  }
  try {
    auto I = lk::build(spec);
    json out = {{"instance", I->name}, {"hash", I->hash}};
    if (I->cert_failure) {
      out["certified"] = false;
      out["failure"] = *I->cert_failure;
      std::cout << out.dump(2) << "\n";
      return 2;
    }
    out["certified"] = true;
    if (I->L) {
      out["size"] = I->L->size();
      out["prime"] = I->L->prime();
      out["objects"] = I->L->delta().size();
      out["sylow_order"] = std::popcount(I->L->sylow());
    } else if (I->pg) {
      out["size"] = I->pg->size();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const lk::CertificationError &e) {
    std::cout << json{{"certified", false}, {"failure", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const lk::SpecError &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_run(const std::string &name, const std::vector<std::string> &suites, std::optional<int> bound,
            const std::string &format, bool timing) {
  lk::InstancePtr I;
  try {
    I = lk::build_named(name);
  } catch (const lk::CertificationError &e) {
    std::cerr << "certification error: " << e.what() << "\n";
    return 2;
  } catch (const lk::SpecError &e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  }
  lk::RunOptions opt{bound, timing};
  bool failed = false;
  json reports = json::array();
  for (auto &s : suites) {
    auto r = lk::run_suite(I, s, opt);
    failed |= r.failed();
    if (format == "json") reports.push_back(lk::to_json(r));
    else std::cout << lk::to_text(r);
  }
  if (format == "json") std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  if (I->cert_failure) return 2;
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"locality-kit: finite localities and their normal structure"};
  app.require_subcommand(1);

  std::string spec_path;
  auto *build = app.add_subcommand("build", "resolve and certify an instance spec");
  build->add_option("spec", spec_path, "instance spec (JSON)")->required();

  std::string instance, suite, format = "text";
  std::optional<int> bound;
  bool timing = false;
  auto *run = app.add_subcommand("run", "run a property suite on a catalog instance");
  run->add_option("--instance", instance)->required();
  run->add_option("--suite", suite, "suite id, or 'all'")->required();
  run->add_option("--bound", bound, "word length for axioms, width for central products");
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--timing", timing, "record wall times (reports are then not reproducible)");

  auto *cat = app.add_subcommand("catalog", "list catalog instances");

  CLI11_PARSE(app, argc, argv);

  if (*build) return cmd_build(spec_path);
  if (*run) {
    std::vector<std::string> suites;
    if (suite == "all") suites = lk::suite_ids();
    else {
      const auto &ids = lk::suite_ids();
      if (std::find(ids.begin(), ids.end(), suite) == ids.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      suites = {suite};
    }
    return cmd_run(instance, suites, bound, format, timing);
  }
  if (*cat) {
    for (auto &e : lk::catalog()) std::cout << e.name << "\t" << e.note << "\n";
    return 0;
  }
  return 0;
}
