#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"
#include "osc/verify.hpp"

namespace osc::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_input(const Input& in) {
  if (!in.text.empty()) {
    std::string t = in.text;
    std::replace(t.begin(), t.end(), ';', '\n');
    return t;
  }
  if (in.path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(in.path);
  if (!f) throw ParseError("cannot open '" + in.path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

LatticeSpec load(const Input& in) {
  LatticeSpec s = parse_lattice(read_input(in));
  validate(s);
  return s;
}

void check_window(const WindowBounds& b) {
  if (b.nmax < 1 || b.mmax < 1 || b.amax <= 0) throw UsageError("window bounds must be positive");
}

std::string mat_str(const Mat2i& m) {
  return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" + std::to_string(m[1][0]) + "," +
         std::to_string(m[1][1]) + "]]";
}

int do_classify(const Classify& c, std::ostream& out) {
  LatticeSpec s = load(c.input);
  InvariantBundle inv = invariants(normalise(s));
  if (c.format == Format::Records) {
    nlohmann::json j{{"record", "classification"},
                     {"type", str(inv.type)},
                     {"q", inv.q},
                     {"q0", inv.q0},
                     {"rt", inv.rt},
                     {"v", str(inv.v)},
                     {"w", str(inv.w)},
                     {"a", str(inv.a)},
                     {"b", str(inv.b)},
                     {"k", inv.k},
                     {"l", inv.l},
                     {"z0", str(inv.z0)},
                     {"s0", inv.s0},
                     {"s_L", str(inv.s_L)}};
    out << j.dump() << "\n";
    return kOk;
  }
  out << str(inv.type) << "\n"
      << "q = " << inv.q << "\n"
      << "q0 = " << inv.q0 << "\n"
      << "rt = " << inv.rt << "\n"
      << "v = " << str(inv.v) << "\n"
      << "w = " << str(inv.w) << "\n"
      << "a = " << str(inv.a) << "\n"
      << "b = " << str(inv.b) << "\n"
      << "k = " << inv.k << "\n"
      << "l = " << inv.l << "\n"
      << "z0 = " << str(inv.z0) << "\n"
      << "s0 = " << inv.s0 << "\n"
      << "s_L = " << str(inv.s_L) << "\n";
  return kOk;
}

int do_standardize(const Standardize& c, std::ostream& out) {
  ReductionChain ch = reduce(load(c.input));
  if (c.format == Format::Records) {
    nlohmann::json j{{"record", "standardization"},
                     {"standard", str(ch.standard)},
                     {"scale", str(ch.scale)},
                     {"shift_u", "(" + str(ch.shift_c) + ")/pi"},
                     {"basis", mat_str(ch.basis)},
                     {"s_L_before", str(ch.s_L_before)}};
    out << j.dump() << "\n";
    return kOk;
  }
  out << str(ch.standard) << "\n"
      << "scale a = " << str(ch.scale) << "\n"
      << "shift u = (" << str(ch.shift_c) << ")/pi\n"
      << "basis = " << mat_str(ch.basis) << "\n"
      << "s_L before unshift = " << str(ch.s_L_before) << "\n"
      << "# normalised unshifted lattice\n"
      << render_spec(ch.normalised_unshifted);
  return kOk;
}

// the full pipeline restricted to one part
SpectrumWindow window_for(const LatticeSpec& s, const WindowBounds& b, Part part) {
  if (part == Part::All) return lattice_spectrum(s, b);
  ReductionChain ch = reduce(s);
  SpectrumWindow w = part == Part::H0 ? h0_decomposition(ch.standard, b) : h1_decomposition(ch.standard, b);
  if (ch.shift_c != 0) w = pullback_spectrum(w, Shift{ch.shift_c});
  if (ch.scale != 1) w = pullback_spectrum(w, Linear{Mat2Q::scalar(QuadRat(Rat(1) / ch.scale))});
  return w;
}

int do_spectrum(const Spectrum& c, std::ostream& out) {
  check_window(c.options.window);
  SpectrumWindow w = window_for(load(c.input), c.options.window, c.part);
  out << (c.options.format == Format::Records ? render_records(w, c.options.convention)
                                              : render_text(w, c.options.convention));
  return kOk;
}

int do_wave(const Wave& c, std::ostream& out) {
  check_window(c.options.window);
  SpectrumWindow w = lattice_spectrum(load(c.input), c.options.window);
  out << (c.options.format == Format::Records ? render_wave_records(w, c.options.convention)
                                              : render_wave_text(w, c.options.convention));
  return kOk;
}

int do_verify(const Verify& c, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_suite(c.suite)) {
    char name[32];
    std::snprintf(name, sizeof name, "%-18s", r.name.c_str());
    out << name << " " << r.line() << "\n";
    for (const auto& m : r.failure_messages) out << "  " << m << "\n";
    ok = ok && r.ok();
  }
  return ok ? kOk : kVerifyFailed;
}

int do_demo(const DemoAccumulation& c, std::ostream& out) {
  AccumulationResult res = accumulation_demo(c.u, c.count, c.r, c.kappa);
  const double half = 4 * std::numbers::pi * double(c.r) / double(c.kappa);
  std::vector<double> sorted = res.values;
  std::sort(sorted.begin(), sorted.end());
  double min_gap = 2 * half;
  for (size_t i = 1; i < sorted.size(); ++i) min_gap = std::min(min_gap, sorted[i] - sorted[i - 1]);
  char buf[96];
  if (c.format == Format::Records) {
    for (size_t i = 0; i < res.values.size(); ++i)
      out << nlohmann::json{{"record", "point"},
                            {"n", res.convergents[i].first},
                            {"m", res.convergents[i].second},
                            {"value", res.values[i]}}
                 .dump()
          << "\n";
    out << nlohmann::json{{"record", "summary"},
                          {"distinct", res.values.size()},
                          {"interval_half_width", half},
                          {"min_gap", min_gap},
                          {"degenerate", res.degenerate}}
               .dump()
        << "\n";
    return kOk;
  }
  std::snprintf(buf, sizeof buf, "# u=%.15g r=%ld kappa=%ld interval=[-%.12g, %.12g]\n", c.u, c.r, c.kappa, half, half);
  out << buf;
  for (size_t i = 0; i < res.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%ld/%ld %.12g\n", res.convergents[i].first, res.convergents[i].second,
                  res.values[i]);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "# distinct=%zu min_gap=%.6g degenerate=%s\n", res.values.size(), min_gap,
                res.degenerate ? "yes" : "no");
  out << buf;
  return kOk;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Classify>) return do_classify(c, out);
          else if constexpr (std::is_same_v<T, Standardize>) return do_standardize(c, out);
          else if constexpr (std::is_same_v<T, Spectrum>) return do_spectrum(c, out);
          else if constexpr (std::is_same_v<T, Wave>) return do_wave(c, out);
          else if constexpr (std::is_same_v<T, Verify>) return do_verify(c, out);
          else return do_demo(c, out);
        },
        cmd);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InadmissibleLattice& e) {
    err << "inadmissible lattice: " << e.what() << "\n";
    return kInadmissible;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "constraint violation: " << e.what() << "\n";
    return kConstraint;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lattices in the oscillator group: classification and spectra", "osc"};
  app.require_subcommand(1);
  app.fallthrough();

  Input input;
  WindowBounds window;
  std::string amax = "10", convention = "oracle", format = "text", part = "all", suite = "all";
  bool timing = false;
  DemoAccumulation demo;
  demo.u = (1 + std::sqrt(5.0)) / 2;

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"records", Format::Records}};
  auto add_input = [&](CLI::App* sub) {
    auto* file = sub->add_option("input", input.path, "lattice file, '-' for stdin");
    auto* text = sub->add_option("--spec", input.text, "inline lattice, key=value pairs separated by ';'");
    file->excludes(text);
    text->excludes(file);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--nmax", window.nmax, "|n| bound for C reps and ground states");
    sub->add_option("--mmax", window.mmax, "|m| bound for F reps");
    sub->add_option("--amax", amax, "a^2 bound for S reps (rational)");
    sub->add_option("--convention", convention, "Casimir convention")->check(CLI::IsMember({"oracle", "paper"}));
  };

  auto* classify = app.add_subcommand("classify", "type tag and invariants");
  add_input(classify);
  auto* standardize = app.add_subcommand("standardize", "standard descriptor and reduction chain");
  add_input(standardize);
  auto* spectrum = app.add_subcommand("spectrum", "irreducible decomposition window");
  add_input(spectrum);
  add_window(spectrum);
  spectrum->add_option("--part", part, "which summand")->check(CLI::IsMember({"h0", "h1", "all"}));
  auto* wave = app.add_subcommand("wave", "wave operator eigenvalues in the window");
  add_input(wave);
  add_window(wave);
  auto* verify = app.add_subcommand("verify", "run oracle suites");
  verify->add_option("suite", suite, "suite selector")
      ->check(CLI::IsMember({"gauss", "multiplicity", "casimir", "classification", "all"}));
  auto* accum = app.add_subcommand("demo-accumulation", "eigenvalue accumulation for irrational shifts");
  accum->add_option("--u", demo.u, "shift parameter (default golden ratio)");
  accum->add_option("--count", demo.count, "number of window points");
  accum->add_option("--r", demo.r, "lattice r");
  accum->add_option("--kappa", demo.kappa, "lambda winding kappa");
  accum->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));
  app.add_flag("--timing", timing, "report elapsed time on stderr");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  ReportOptions opts;
  opts.window = window;
  opts.format = formats.at(format);
  opts.convention = convention == "paper" ? CasimirConvention::PrintedFormula : CasimirConvention::OracleDerived;
  Command cmd;
  try {
    opts.window.amax = parse_rat(amax);
    auto need_input = [&] {
      if (input.path.empty() && input.text.empty()) throw UsageError("an input file or --spec is required");
      return input;
    };
    if (*classify) cmd = Classify{need_input(), opts.format};
    else if (*standardize) cmd = Standardize{need_input(), opts.format};
    else if (*spectrum)
      cmd = Spectrum{need_input(), opts, part == "h0" ? Part::H0 : part == "h1" ? Part::H1 : Part::All};
    else if (*wave) cmd = Wave{need_input(), opts};
    else if (*verify) cmd = Verify{suite};
    else {
      demo.format = opts.format;
      cmd = demo;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  auto t0 = std::chrono::steady_clock::now();
  int code = run(cmd, out, err);
  if (timing) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "# elapsed %.1f ms\n", ms);
    err << buf;
  }
  return code;
}

}  // namespace osc::cli
