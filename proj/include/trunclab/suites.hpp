#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trunclab/represent.hpp"

namespace trunclab {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string witness;  // counterexample description when failing
  int instances = 0;    // how many cases were exercised
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> results;
  bool passed() const;
};

struct RunConfig {
  std::uint64_t seed = 20260823;
  int samples = 200;
  int max_dim = 4;   // largest FinVec index set
  int window = 4;    // EvSeq window width
  std::string format = "json";
};

// Each suite is deterministic for a fixed config.
SuiteReport lattice_suite(const RunConfig& cfg);        // Heyting laws, points
SuiteReport pointed_suite(const RunConfig& cfg);        // 2_F L, D/E round trip
SuiteReport axiom_suite(const RunConfig& cfg);          // truncation laws
SuiteReport mutation_suite(const RunConfig& cfg);       // fixtures must fail
SuiteReport kernel_ladder_suite(const RunConfig& cfg);  // closure vs oracle
SuiteReport kernel_calculus_suite(const RunConfig& cfg);  // bright/dark laws
SuiteReport kappa_suite(const RunConfig& cfg);          // representation iso
SuiteReport spectrum_suite(const RunConfig& cfg);       // frames + unitality
SuiteReport coz_con_suite(const RunConfig& cfg);        // cozero calculus
SuiteReport universal_suite(const RunConfig& cfg);      // induced map, demo
SuiteReport reflection_suite(const RunConfig& cfg);     // unit reflection

std::vector<SuiteReport> run_all(const RunConfig& cfg);

/// Deterministic rendering: no timestamps, stable key order.
std::string render_json(const std::vector<SuiteReport>& reports,
                        const RunConfig& cfg);
std::string render_text(const std::vector<SuiteReport>& reports);

}  // namespace trunclab
