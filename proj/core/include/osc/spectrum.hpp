#pragma once

#include <string>
#include <variant>
#include <vector>

#include "osc/group.hpp"
#include "osc/lattice.hpp"
#include "osc/numeric.hpp"

namespace osc {

// d = t / lambda for the window's lambda
struct RepC {
  QuadRat t;
};
// a^2 > 0, tau in [0, 1)
struct RepS {
  Real a2;
  Rat tau;
};
// c != 0, d = t / lambda
struct RepF {
  QuadRat c;
  QuadRat t;
};
using IrrRep = std::variant<RepC, RepS, RepF>;

bool rep_equal(const IrrRep& x, const IrrRep& y);
bool rep_less(const IrrRep& x, const IrrRep& y);  // C < S < F, then by parameters

struct SpectrumEntry {
  IrrRep rep;
  long mult = 0;
};

struct WindowBounds {
  long nmax = 4;
  long mmax = 2;
  Rat amax{10};
};

struct SpectrumWindow {
  PiRat lambda;
  WindowBounds bounds;
  StandardDescriptor standard;
  std::vector<std::string> chain;  // pullbacks applied, in order
  std::vector<std::string> notes;
  std::vector<SpectrumEntry> entries;  // sorted, one per rep
};

// merges equal reps, drops zero multiplicities, sorts
void aggregate(std::vector<SpectrumEntry>& e);

// nu k^2 + (l - mu k)^2 / nu
Real a_squared(long l, long k, const ModulusPoint& m);

// lexicographically smallest member of the S_q-orbit of (l, k)
std::pair<long, long> orbit_representative(int q, long l, long k);

SpectrumWindow h0_decomposition(const StandardDescriptor& d, const WindowBounds& b);
long h1_multiplicity(const StandardDescriptor& d, long m, long n);
// the F-label t of the ground states (m, n): d = t / lambda
Rat h1_label(const StandardDescriptor& d, long m, long n);
SpectrumWindow h1_decomposition(const StandardDescriptor& d, const WindowBounds& b);
SpectrumWindow decomposition(const StandardDescriptor& d, const WindowBounds& b);  // H0 + H1

enum class CasimirConvention { OracleDerived, PrintedFormula };
std::string str(CasimirConvention c);

// pi1 * pi + pi2 * pi^2
struct PiPoly {
  Real pi1{QuadRat(0)}, pi2{QuadRat(0)};
  double value() const;
};
std::string str(const PiPoly& p);
PiPoly casimir_value(const IrrRep& rep, const PiRat& lambda, CasimirConvention conv);

struct WaveEigenvalue {
  PiPoly value;  // minus the Casimir value
  long mult = 0;
};
std::vector<WaveEigenvalue> wave_spectrum(const SpectrumWindow& w, CasimirConvention conv);

SpectrumWindow pullback_spectrum(const SpectrumWindow& w, const Automorphism& f);
Automorphism inverse(const Automorphism& f);

// full pipeline for an arbitrary admissible lattice
SpectrumWindow lattice_spectrum(const LatticeSpec& s, const WindowBounds& b);

struct AccumulationResult {
  std::vector<double> values;  // 4 pi (r/kappa) (n' - u m) m for convergents n'/m
  std::vector<std::pair<long, long>> convergents;
  bool degenerate = false;  // u rational: finitely many values
};
AccumulationResult accumulation_demo(double u, long count, long r = 1, long kappa = 2);

// reports
std::string format_rep(const IrrRep& r);
std::string format_entry(const SpectrumEntry& e);
std::string render_text(const SpectrumWindow& w, CasimirConvention conv);
std::string render_records(const SpectrumWindow& w, CasimirConvention conv);
// wave-operator eigenvalues of the window, ascending
std::string render_wave_text(const SpectrumWindow& w, CasimirConvention conv);
std::string render_wave_records(const SpectrumWindow& w, CasimirConvention conv);

}  // namespace osc
