#pragma once

// Verification reports: one record per checked identity, serialized as
// JSON, CSV or plain text with a stable field order.

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsm/clifford.hpp"

namespace gsm {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  int p = 0;
  int q = 1;
  int x_order = 32;
  int xi_order = 60;
  int radial_order = 16;
  int sphere_order = 8;
  double tol = 1e-15;  ///< delta-series stopping tolerance
  std::uint64_t seed = 20240611;
  int max_degree = 3;

  Signature sig() const { return {p, q}; }

  ordered_json to_json() const {
    ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["x_order"] = x_order;
    j["xi_order"] = xi_order;
    j["radial_order"] = radial_order;
    j["sphere_order"] = sphere_order;
    j["tol"] = tol;
    j["seed"] = seed;
    j["max_degree"] = max_degree;
    return j;
  }
};

struct CheckRecord {
  std::string name;
  std::string anchor;  ///< the identity being checked, as a formula
  double deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline CheckRecord make_check(std::string name, std::string anchor, double deviation, double tol) {
  const bool ok = std::isfinite(deviation) && deviation <= tol;
  return {std::move(name), std::move(anchor), deviation, tol, ok};
}

struct SuiteReport {
  std::string suite;
  ordered_json config;
  std::vector<CheckRecord> checks;
  std::optional<double> elapsed_ms;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }

  void add(CheckRecord c) { checks.push_back(std::move(c)); }
  void append(const SuiteReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

  ordered_json to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["config"] = config;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json r;
      r["name"] = c.name;
      r["anchor"] = c.anchor;
      r["deviation"] = c.deviation;
      r["tol"] = c.tol;
      r["pass"] = c.pass;
      arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    j["pass"] = pass();
    if (elapsed_ms)
      j["elapsed_ms"] = *elapsed_ms;
    else
      j["elapsed_ms"] = nullptr;
    return j;
  }
};

/// Shortest round-trip representation of a double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  std::ostringstream os;
  os.precision(17);
  os << v;
  std::string s17 = os.str();
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream t;
    t.precision(prec);
    t << v;
    if (std::stod(t.str()) == v) return t.str();
  }
  return s17;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string report_to_csv(const SuiteReport& rep) {
  std::string out = "suite,name,anchor,deviation,tol,pass\n";
  for (const auto& c : rep.checks)
    out += csv_escape(rep.suite) + "," + csv_escape(c.name) + "," + csv_escape(c.anchor) + "," + format_double(c.deviation) +
           "," + format_double(c.tol) + "," + (c.pass ? "true" : "false") + "\n";
  return out;
}

inline std::string report_to_text(const SuiteReport& rep) {
  std::string out = "suite " + rep.suite + "\n";
  for (const auto& c : rep.checks)
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + "  deviation " + format_double(c.deviation) + "  tol " +
           format_double(c.tol) + "  [" + c.anchor + "]\n";
  out += rep.pass() ? "overall PASS\n" : "overall FAIL\n";
  if (rep.elapsed_ms) out += "elapsed_ms " + format_double(*rep.elapsed_ms) + "\n";
  return out;
}

/// "re+im i" with round-trip doubles.
inline std::string format_complex(cplx c) {
  const std::string im = format_double(c.imag());
  return format_double(c.real()) + (im.front() == '-' ? im : "+" + im) + " i";
}

/// One line "e{...}: re+im i" per blade, ascending mask order; zero blades
/// are skipped unless show_all is set.
inline std::string format_multivector(const Multivector& m, bool show_all = false) {
  std::string out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    const cplx c = m[static_cast<BladeMask>(a)];
    if (!show_all && c == cplx{}) continue;
    out += blade_label(static_cast<BladeMask>(a)) + ": " + format_complex(c) + "\n";
  }
  if (out.empty()) out = "e{}: 0+0 i\n";
  return out;
}

}  // namespace gsm
