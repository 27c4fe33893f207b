#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lk/catalog.hpp"
#include "lk/normal_structure.hpp"

namespace lk {

struct CheckResult {
  std::string id;
  std::string verdict; // "pass", "fail", "skip"
  std::optional<std::string> witness;
  double millis = 0;
};

struct SuiteResult {
  std::string instance;
  std::string suite;
  std::vector<CheckResult> checks;

  bool failed() const;
  std::size_t count(const std::string &verdict) const;
};

struct RunOptions {
  std::optional<int> bound; // word length for axioms, matrix width for central products
  bool timing = false;      // keep wall times; off keeps reports byte-identical across runs
};

const std::vector<std::string> &suite_ids();
SuiteResult run_suite(const InstancePtr &I, const std::string &suite, const RunOptions &opt = {});

// one Structure per instance and process
std::shared_ptr<const Structure> structure_of(const InstancePtr &I);

nlohmann::json to_json(const SuiteResult &r);
SuiteResult suite_from_json(const nlohmann::json &j);
std::string to_text(const SuiteResult &r);

} // namespace lk
