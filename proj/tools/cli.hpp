#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "osc/spectrum.hpp"

namespace osc::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kInadmissible = 3,
  kVerifyFailed = 4,
  kConstraint = 5,
};

// exactly one of path ("-" for stdin) or inline text is set
struct Input {
  std::string path;
  std::string text;
};

enum class Part { H0, H1, All };
enum class Format { Text, Records };

struct ReportOptions {
  WindowBounds window;
  CasimirConvention convention = CasimirConvention::OracleDerived;
  Format format = Format::Text;
};

struct Classify {
  Input input;
  Format format = Format::Text;
};
struct Standardize {
  Input input;
  Format format = Format::Text;
};
struct Spectrum {
  Input input;
  ReportOptions options;
  Part part = Part::All;
};
struct Wave {
  Input input;
  ReportOptions options;
};
struct Verify {
  std::string suite = "all";
};
struct DemoAccumulation {
  double u = 0;
  long count = 20;
  long r = 1;
  long kappa = 2;
  Format format = Format::Text;
};

using Command = std::variant<Classify, Standardize, Spectrum, Wave, Verify, DemoAccumulation>;

// executes one command; the report goes to out, diagnostics to err
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// argv-style entry point: parses flags, dispatches to run, maps errors to exit codes
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osc::cli
