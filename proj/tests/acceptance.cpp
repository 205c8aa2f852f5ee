// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "osc/verify.hpp"

using namespace osc;

namespace {

struct Timed {
  std::vector<SuiteResult> suites;
  double seconds = 0;
};

Timed timed(const std::function<std::vector<SuiteResult>()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.suites = f();
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

int failures = 0;

// every suite ok, plus the criterion-specific extra condition
void report(int id, const char* what, const Timed& t, bool extra, const std::string& extra_note) {
  bool ok = extra;
  std::string detail;
  for (const auto& s : t.suites) {
    ok = ok && s.ok();
    detail += (detail.empty() ? "" : "; ") + s.name + ": " + s.line();
  }
  char head[160];
  std::snprintf(head, sizeof head, "criterion %2d %s %s (%.2f s)", id, ok ? "PASS" : "FAIL", what, t.seconds);
  std::printf("%s :: %s%s%s\n", head, detail.c_str(), extra_note.empty() ? "" : "; ", extra_note.c_str());
  for (const auto& s : t.suites)
    for (const auto& m : s.failure_messages) std::printf("    %s\n", m.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  {
    Timed t = timed([] { return std::vector{verify_multiplicity(4, 4)}; });
    long n = t.suites[0].identities;
    report(1, "multiplicity closed form equals gamma_4 fixed dimension", t, n >= 800 && t.seconds < 30,
           std::to_string(n) + " cases, need >= 800 in < 30 s");
  }
  {
    Timed t = timed([] { return std::vector{verify_dimension(4, 4)}; });
    report(2, "dimension conservation over one period of n", t, true, "");
  }
  {
    Timed t = timed([] { return std::vector{verify_traces(6, 6)}; });
    report(3, "printed trace tables", t, t.suites[0].max_residual <= 1e-9, "residual bound 1e-9");
  }
  {
    Timed t = timed([] { return std::vector{verify_gauss(40, 3)}; });
    const auto& s = t.suites[0];
    report(4, "Gauss reciprocity", t, s.identities >= 10000 && s.max_residual <= 1e-9 && t.seconds < 20,
           "need >= 10000 identities within 1e-9 in < 20 s");
  }
  {
    Timed t = timed([] { return std::vector{verify_straight_spectrum()}; });
    report(5, "straight-lattice H0/H1 windows", t, true, "");
  }
  {
    Timed t = timed([] { return std::vector{verify_classification(20240601, 20, 100)}; });
    report(6, "classification round trip after 100 random moves", t, true, "");
  }
  {
    Timed t = timed([] { return std::vector{verify_shift_invariance(7, 500)}; });
    report(7, "shift invariant under generator rewrites and conjugations", t, t.suites[0].identities >= 500 * 8,
           "500 cases for each of 8 types");
  }
  {
    Timed t = timed([] { return std::vector{verify_casimir(32), verify_straight_wave()}; });
    report(8, "ladder Casimir and straight wave spectra", t, true, "");
  }
  {
    Timed t = timed([] { return std::vector{verify_ideal_counts(200, 10000)}; });
    report(9, "order-4 S multiplicities equal Gaussian ideal counts", t, true, "");
  }
  {
    Timed t = timed([] { return std::vector{verify_accumulation(20)}; });
    report(10, "eigenvalue accumulation for the golden ratio", t, t.seconds < 1, "need < 1 s");
  }
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
