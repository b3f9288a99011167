#include "aisw/well.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aisw/io.hpp"

namespace aisw {

WellConfig::WellConfig(double a_, double b_, double v0_, Constants c)
    : a(a_), b(b_), v0(v0_), constants(c) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("WellConfig: region widths must be positive");
  if (!(v0 >= 0.0))
    throw std::invalid_argument("WellConfig: step height must be non-negative");
  if (!(constants.hbar > 0.0) || !(constants.mass > 0.0))
    throw std::invalid_argument("WellConfig: hbar and mass must be positive");
}

double WellConfig::chi() const {
  return std::sqrt(2.0 * constants.mass * std::fabs(v0)) / constants.hbar;
}

std::string WellConfig::to_kv() const {
  std::ostringstream out;
  out << "a = " << format_shortest(a) << '\n'
      << "b = " << format_shortest(b) << '\n'
      << "v0 = " << format_shortest(v0) << '\n'
      << "hbar = " << format_shortest(constants.hbar) << '\n'
      << "mass = " << format_shortest(constants.mass) << '\n';
  return out.str();
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("WellConfig: bad numeric value for key '" +
                                key + "': " + text);
  return value;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

WellConfig WellConfig::from_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("WellConfig: malformed record line: " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  if (!kv.count("a") || !kv.count("b"))
    throw std::invalid_argument("WellConfig: record must define keys a and b");
  Constants c;
  if (kv.count("hbar")) c.hbar = parse_double("hbar", kv["hbar"]);
  if (kv.count("mass")) c.mass = parse_double("mass", kv["mass"]);
  const double v0 = kv.count("v0") ? parse_double("v0", kv["v0"]) : 0.0;
  return WellConfig(parse_double("a", kv["a"]), parse_double("b", kv["b"]), v0,
                    c);
}

double wavenumber_k(double energy, const Constants& c) {
  if (energy < 0.0)
    throw std::domain_error("wavenumber_k: energy must be non-negative");
  return std::sqrt(2.0 * c.mass * energy) / c.hbar;
}

double wavenumber_kappa(double energy, const WellConfig& well) {
  if (energy > well.v0)
    throw std::domain_error("wavenumber_kappa: requires E <= v0");
  return std::sqrt(2.0 * well.constants.mass * (well.v0 - energy)) /
         well.constants.hbar;
}

double wavenumber_q(double energy, const WellConfig& well) {
  if (energy < well.v0)
    throw std::domain_error("wavenumber_q: requires E >= v0");
  return std::sqrt(2.0 * well.constants.mass * (energy - well.v0)) /
         well.constants.hbar;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::Below: return "Below";
    case Regime::Above: return "Above";
    case Regime::ZeroCurvature: return "ZeroCurvature";
  }
  return "?";
}

}  // namespace aisw
