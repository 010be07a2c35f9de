// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion runs the relevant verification suite at the demanded
// sample volume and enforces its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>

#include "trunclab/suites.hpp"

using namespace trunclab;

namespace {

int failures = 0;

void criterion(int n, long long budget_ms, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (budget_ms > 0 && ms > budget_ms) {
    ok = false;
    note += " (over budget " + std::to_string(budget_ms) + " ms)";
  }
  std::printf("criterion %d: %s (%lld ms)%s\n", n, ok ? "pass" : "FAIL", ms,
              note.c_str());
  if (!ok) ++failures;
}

bool suite_ok(const SuiteReport& r) { return r.passed(); }

}  // namespace

int main() {
  RunConfig cfg;  // fixed seed, deterministic throughout

  // 1. the truncation laws hold on large random batches of both carriers,
  //    and the broken fixtures are caught with witnesses
  criterion(1, 5000, [&] {
    std::mt19937_64 rng(cfg.seed);
    std::vector<CarrierPtr> tuples = {
        TruncCarrier::fin_vec({Rat(1)}),
        TruncCarrier::fin_vec({Rat(1), Rat(3, 2)}),
        TruncCarrier::fin_vec({Rat(2), Rat(1, 3), Rat(5)}),
        TruncCarrier::fin_vec({Rat(1), Rat(1), Rat(1), Rat(4)}),
    };
    for (const auto& c : tuples)
      if (!check_axioms(c, rng, 250).passed()) return false;
    if (!check_axioms(TruncCarrier::ev_seq(cfg.window), rng, 500).passed())
      return false;
    AxiomReport z = check_axioms(
        TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Zero), rng, 100);
    AxiomReport id = check_axioms(
        TruncCarrier::fin_vec({Rat(1)}, TruncMutation::Identity), rng, 100);
    return !z.zero_reflecting && !z.violations.empty() &&
           !id.escapes_unit && !id.violations.empty();
  });

  // 2. the closure ladder reproduces the brute-force grid oracle
  criterion(2, 1000, [&] { return suite_ok(kernel_ladder_suite(cfg)); });

  // 3. the bright/dark calculus identities, each on at least 200 instances
  criterion(3, 30000, [&] {
    RunConfig c = cfg;
    c.samples = 200;
    SuiteReport r = kernel_calculus_suite(c);
    if (!r.passed()) return false;
    for (const auto& p : r.results)
      if (p.instances < 200) return false;
    return true;
  });

  // 4. the representation is an injective truncation-preserving
  //    homomorphism on a thousand random pairs
  criterion(4, 10000, [&] {
    RunConfig c = cfg;
    c.samples = 1000;
    return suite_ok(kappa_suite(c));
  });

  // 5. spectrum shapes: tuple carriers give the isolated unital profile,
  //    sequence carriers the proper non-unital one
  criterion(5, 0, [&] { return suite_ok(spectrum_suite(cfg)); });

  // 6. the unpointed square fails on a unique base map and the pointed
  //    repair commutes uniquely
  criterion(6, 5000, [&] { return suite_ok(universal_suite(cfg)); });

  // 7. the pointed/filtered equivalence and the co-free property
  criterion(7, 10000, [&] {
    return suite_ok(pointed_suite(cfg)) && suite_ok(lattice_suite(cfg));
  });

  // 8. cozero and unit-contour identities over represented elements
  criterion(8, 0, [&] { return suite_ok(coz_con_suite(cfg)); });

  // 9. the unit reflection factors every sampled morphism exactly once
  criterion(9, 0, [&] { return suite_ok(reflection_suite(cfg)); });

  // 10. the whole run is deterministic: byte-identical reports
  criterion(10, 60000, [&] {
    std::string a = render_json(run_all(cfg), cfg);
    std::string b = render_json(run_all(cfg), cfg);
    return !a.empty() && a == b;
  });

  return failures == 0 ? 0 : 1;
}
