#pragma once

#include <cstdint>
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace osc {

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  long identities = 0;
  double max_residual = 0;
  long failures = 0;
  std::vector<std::string> failure_messages;  // first few only
  bool ok() const { return failures == 0 && identities > 0; }
  std::string line() const;  // "PASS 1520 identities, max residual 3e-12"
  void fail(const std::string& msg);
  void residual(double r) { max_residual = std::max(max_residual, r); }
};

// Gauss reciprocity for |a|, |c| <= amax with sampled b
SuiteResult verify_gauss(long amax = 40, int b_samples = 3);
// closed-form H1 multiplicities against gamma_4 fixed dimensions
SuiteResult verify_multiplicity(long rmax = 4, long mmax = 4);
// dimension conservation over one period of n
SuiteResult verify_dimension(long rmax = 4, long mmax = 4);
// printed trace tables of the gamma_4 operators
SuiteResult verify_traces(long rmax = 6, long mmax = 6);
// ladder Casimir against the closed forms
SuiteResult verify_casimir(long truncation = 32);
// printed-formula wave spectrum of straight lattices against the closed-form sets
SuiteResult verify_straight_wave();
// straight-lattice H0/H1 windows against direct enumeration
SuiteResult verify_straight_spectrum();
// standard descriptors recovered after random perturbation; type by abelianization
SuiteResult verify_classification(std::uint64_t seed = 20240601, int trials = 20, int moves = 5);
// s_L unchanged under generator rewrites and inner conjugations
SuiteResult verify_shift_invariance(std::uint64_t seed = 7, int cases_per_type = 500);
// q = 4 S-multiplicities against ideal counts in Z[i]; density band
SuiteResult verify_ideal_counts(long amax = 200, long density_bound = 10000);
// golden-ratio accumulation demo
SuiteResult verify_accumulation(long count = 20);

// suite selector: gauss | multiplicity | casimir | classification | all
std::vector<SuiteResult> run_suite(const std::string& name);

}  // namespace osc
