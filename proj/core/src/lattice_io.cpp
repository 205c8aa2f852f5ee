#include <map>
#include <set>
#include <sstream>

#include "osc/lattice.hpp"

namespace osc {

LatticeSpec parse_lattice(std::string_view text) {
  LatticeSpec s;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t\r") + 1);
    if (!seen.insert(key).second) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    try {
      if (key == "r") {
        Rat r = parse_rat(value);
        if (!is_int(r)) throw ParseError("r must be an integer");
        s.r = to_long(r);
      } else if (key == "lambda") {
        s.lambda = parse_pirat(value);
      } else if (key == "modulus") {
        s.modulus = parse_modulus(value);
      } else if (key == "z_alpha") {
        s.z_alpha = parse_rat(value);
      } else if (key == "z_beta") {
        s.z_beta = parse_rat(value);
      } else if (key == "x_delta") {
        s.x_delta = parse_rat(value);
      } else if (key == "y_delta") {
        s.y_delta = parse_rat(value);
      } else if (key == "z_delta") {
        s.z_delta = parse_rat(value);
      } else if (key == "scale") {
        s.scale = parse_rat(value);
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::domain_error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  for (const char* req : {"r", "lambda"})
    if (!seen.count(req)) throw ParseError(std::string("missing required key '") + req + "'");
  return s;
}

std::string render_spec(const LatticeSpec& s) {
  std::ostringstream os;
  os << "r = " << s.r << "\n"
     << "lambda = " << str(s.lambda.rho) << " pi\n"
     << "modulus = " << str(s.modulus) << "\n"
     << "z_alpha = " << str(s.z_alpha) << "\n"
     << "z_beta = " << str(s.z_beta) << "\n"
     << "x_delta = " << str(s.x_delta) << "\n"
     << "y_delta = " << str(s.y_delta) << "\n"
     << "z_delta = " << str(s.z_delta) << "\n"
     << "scale = " << str(s.scale) << "\n";
  return os.str();
}

}  // namespace osc
