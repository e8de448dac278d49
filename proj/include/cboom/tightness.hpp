#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cboom/boomerang.hpp"
#include "cboom/groebner.hpp"

namespace cboom {

struct SearchConfig {
  UniPoly f;
  Elt c;
  // Empty: every (a, b) with a, b nonzero, row-major in canonical order.
  std::vector<std::pair<Elt, Elt>> candidates;
  // Defaults to applicable_bound(deg f, c).
  std::optional<std::uint64_t> target;
  std::uint64_t max_candidates = 0;  // 0: no limit
  unsigned threads = 1;
  std::uint64_t seed = 0;  // factorisation randomness
};

struct TightnessWitness {
  Elt a, b;
  GroebnerBasis drl;
  std::uint64_t dimension;
  LexShape shape;
  FactorList factors;
  std::uint64_t splitting_degree;
  std::uint64_t roots;  // distinct roots of g2 over F_{q^splitting_degree}
  bool certified;
};

// Runs the four acceptance steps on one (a, b). Returns nullopt and fills
// `reason` when a step rejects the pair.
std::optional<TightnessWitness> evaluate_candidate(const UniPoly& f, const Elt& c, const Elt& a, const Elt& b,
                                                   std::uint64_t target, std::uint64_t seed = 0,
                                                   std::string* reason = nullptr);

struct SearchOutcome {
  std::optional<TightnessWitness> witness;  // nullopt: exhausted
  std::uint64_t tried = 0;
  // Pairs whose quotient dimension exceeded the target.
  std::vector<std::string> anomalies;
};

// First passing pair in scan order. Candidates are evaluated in blocks of
// `threads`; the earliest success within a block wins.
SearchOutcome search(const SearchConfig& config);

struct FixtureCheck {
  std::string field;
  std::string expected;
  std::string actual;
  bool ok;
};

struct FixtureReport {
  std::string name;
  std::vector<FixtureCheck> checks;
  double seconds = 0;

  bool ok() const;
  std::string diff() const;  // failing checks only
  nlohmann::json to_json() const;
};

std::vector<std::string> fixture_names();
nlohmann::json fixture_data(const std::string& name);

// Recomputes a fixture and compares it field by field.
FixtureReport run_fixture(const std::string& name, std::uint64_t seed = 0);
// run_fixture, throwing FixtureMismatch with the diff when any check fails.
FixtureReport verify_fixture(const std::string& name, std::uint64_t seed = 0);

}  // namespace cboom
