#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lk/locality.hpp"
#include "lk/partial_group.hpp"

namespace lk {

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resolved instance. Fixtures (spec field "fixture": true) may carry a
// certification failure instead of a locality.
struct Instance {
  std::string name;
  nlohmann::json spec;
  std::string hash;
  std::shared_ptr<const FiniteGroup> G;
  PContextPtr ctx;
  LocalityPtr L;  // null for corrupted tables, quotients and rejected fixtures
  PGPtr pg;       // object under test for the axioms suite
  bool group_backed = false; // Δ = all subgroups of S, so L = G
  std::shared_ptr<const TablePG> table; // Cayley table of G for group-backed instances
  std::vector<std::shared_ptr<const Instance>> factors;
  std::vector<Bits> factor_elems; // copies of the factors inside L
  std::optional<std::string> cert_failure;
  bool fixture = false;
};
using InstancePtr = std::shared_ptr<const Instance>;

struct CatalogEntry {
  std::string name;
  std::string note;
  nlohmann::json spec;
};
const std::vector<CatalogEntry> &catalog();
std::optional<nlohmann::json> catalog_spec(const std::string &name);

// Resolve a spec (object, or a catalog name as a JSON string). Results are cached by
// the hash of the canonical dump. Throws SpecError for malformed specs and
// CertificationError when a non-fixture fails certification.
InstancePtr build(const nlohmann::json &spec);
InstancePtr build_named(const std::string &name);

std::string spec_hash(const nlohmann::json &spec);

// Δ keywords for an existing locality: "all", "fcr", "fs", "deltaF", or a list of generator lists
ObjectSet resolve_delta(const LocalityPtr &Lp, const nlohmann::json &kw);

} // namespace lk
