#pragma once

// Command-line front end. run_cli() takes the argument list without the
// program name and returns the process exit code:
//   0 pass, 1 check failure, 2 usage, 3 region, 4 capability, 5 resource.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsm/bargmann.hpp"
#include "gsm/ck_extension.hpp"
#include "gsm/report.hpp"
#include "gsm/suites.hpp"

namespace gsm {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitRegion = 3,
  kExitCapability = 4,
  kExitResource = 5,
};

inline constexpr long long kMaxPlotPoints = 1'000'000;

namespace cli_detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

/// A decimal number, or pi / π with an optional sign.
inline double parse_number(const std::string& raw) {
  std::string s = trim(raw);
  double sign = 1.0;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = -1.0;
    body = body.substr(1);
  }
  if (body == "pi" || body == "π") return sign * std::numbers::pi;
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ContractViolation("not a number: '" + raw + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  if (trim(s).empty()) return v;
  for (const auto& item : split(s, ',')) v.push_back(parse_number(item));
  return v;
}

/// Missing lists become zeros; otherwise the length must match.
inline std::vector<double> coordinates(const std::string& flag, const std::string& raw, int expected) {
  std::vector<double> v = parse_list(raw);
  if (v.empty()) return std::vector<double>(static_cast<std::size_t>(expected), 0.0);
  if (static_cast<int>(v.size()) != expected)
    throw ContractViolation(flag + " expects " + std::to_string(expected) + " comma-separated values, got " +
                            std::to_string(v.size()));
  return v;
}

inline MultiIndex parse_multi_index(const std::string& s, int dim) {
  std::vector<int> k;
  for (const auto& item : split(s, ',')) {
    const std::string t = trim(item);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || v < 0)
      throw ContractViolation("bad multi-index entry '" + item + "'");
    k.push_back(v);
  }
  if (static_cast<int>(k.size()) != dim)
    throw ContractViolation("multi-index needs " + std::to_string(dim) + " entries for p = " + std::to_string(dim - 1));
  return MultiIndex(std::move(k));
}

struct InputSpec {
  std::string kind;  ///< hermite | monomial-gaussian | psi | monomial
  MultiIndex k;
  double rate = 0.25;
};

/// "kind:k0,k1,..." with an optional "@rate" suffix for monomial-gaussian.
inline InputSpec parse_input(const std::string& s, Signature sig) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ContractViolation("input spec must look like kind:k0,...,kp");
  InputSpec in;
  in.kind = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  const auto at = rest.find('@');
  if (at != std::string::npos) {
    if (in.kind != "monomial-gaussian") throw ContractViolation("only monomial-gaussian takes an @rate suffix");
    in.rate = parse_number(rest.substr(at + 1));
    if (!(in.rate > 0.0)) throw ContractViolation("rate must be > 0");
    rest = rest.substr(0, at);
  }
  if (in.kind != "hermite" && in.kind != "monomial-gaussian" && in.kind != "psi" && in.kind != "monomial")
    throw ContractViolation("unknown input kind '" + in.kind + "'");
  in.k = parse_multi_index(rest, sig.x_dim());
  return in;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  long long n = 0;

  double at(long long i) const { return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1); }
};

inline Range parse_range(const std::string& flag, const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ContractViolation(flag + " expects lo:hi:count");
  Range r{parse_number(parts[0]), parse_number(parts[1]), 0};
  const std::string t = trim(parts[2]);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), r.n);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || r.n < 0)
    throw ContractViolation(flag + ": bad count '" + parts[2] + "'");
  return r;
}

struct Options {
  RunConfig cfg;
  std::string x, y, xi;
  std::string format = "text";
  std::string out;
  std::string route;
  std::string input;
  std::string suite;
  std::string field = "kernel";
  std::string x0_range = "-2:2:41";
  std::string r_range = "0:2:21";
  bool all = false;
  bool timing = false;
};

inline void add_common(CLI::App* app, Options& o) {
  app->add_option("--p", o.cfg.p, "number of x-directions minus one")->capture_default_str();
  app->add_option("--q", o.cfg.q, "number of y-directions")->capture_default_str();
  app->add_option("--x", o.x, "x_0,...,x_p (default zeros)");
  app->add_option("--y", o.y, "y_1,...,y_q (default zeros)");
  app->add_option("--xi", o.xi, "xi_0,...,xi_p (default zeros)");
  app->add_option("--tol", o.cfg.tol, "delta-series stopping tolerance")->capture_default_str();
  app->add_option("--x-order", o.cfg.x_order, "Gauss-Hermite nodes per x axis")->capture_default_str();
  app->add_option("--xi-order", o.cfg.xi_order, "Gauss-Hermite nodes per xi axis")->capture_default_str();
  app->add_option("--radial-order", o.cfg.radial_order, "half-line nodes for |y|")->capture_default_str();
  app->add_option("--sphere-order", o.cfg.sphere_order, "sphere rule order")->capture_default_str();
  app->add_option("--seed", o.cfg.seed, "sampling seed")->capture_default_str();
  app->add_option("--max-degree", o.cfg.max_degree, "largest |k| in Gram checks")->capture_default_str();
  app->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app->add_option("--out", o.out, "write output to PATH instead of stdout");
  app->add_flag("--all", o.all, "print zero blades too (text format)");
}

inline SplitPoint point(const Options& o) {
  const Signature sig = o.cfg.sig();
  return {coordinates("--x", o.x, sig.x_dim()), coordinates("--y", o.y, sig.q)};
}

inline ordered_json point_json(const SplitPoint& bx) {
  ordered_json j;
  j["x"] = bx.x;
  j["y"] = bx.y;
  return j;
}

inline ordered_json multivector_json(const Multivector& m) {
  ordered_json arr = ordered_json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    const cplx c = m[static_cast<BladeMask>(a)];
    ordered_json b;
    b["blade"] = blade_label(static_cast<BladeMask>(a));
    b["re"] = c.real();
    b["im"] = c.imag();
    arr.push_back(std::move(b));
  }
  return arr;
}

inline std::string multivector_csv(const Multivector& m) {
  std::string s = "blade,re,im\n";
  for (std::size_t a = 0; a < m.size(); ++a) {
    const cplx c = m[static_cast<BladeMask>(a)];
    s += blade_label(static_cast<BladeMask>(a)) + "," + format_double(c.real()) + "," + format_double(c.imag()) + "\n";
  }
  return s;
}

/// Renders a point evaluation; `extra` carries command-specific fields.
inline std::string render_value(const Options& o, const std::string& command, const SplitPoint& bx, const ordered_json& extra,
                                const Multivector& m) {
  if (o.format == "json") {
    ordered_json j;
    j["command"] = command;
    j["p"] = o.cfg.p;
    j["q"] = o.cfg.q;
    j["point"] = point_json(bx);
    for (const auto& [key, val] : extra.items()) j[key] = val;
    j["value"] = multivector_json(m);
    return j.dump(2) + "\n";
  }
  if (o.format == "csv") return multivector_csv(m);
  std::string s;
  for (const auto& [key, val] : extra.items()) s += key + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
  return s + format_multivector(m, o.all);
}

inline CkControl control(const RunConfig& cfg) { return suite_detail::ck_control(cfg); }

inline int cmd_eval_kernel(const Options& o, std::string& text) {
  const Signature sig = o.cfg.sig();
  sig.validate();
  const SplitPoint bx = point(o);
  const auto xi = coordinates("--xi", o.xi, sig.x_dim());
  ordered_json extra;
  extra["xi"] = xi;
  text = render_value(o, "eval-kernel", bx, extra, kernel_e(sig, bx, xi));
  return kExitPass;
}

inline int cmd_ck_eval(const Options& o, std::string& text) {
  const Signature sig = o.cfg.sig();
  sig.validate();
  const SplitPoint bx = point(o);
  const InputSpec in = parse_input(o.input, sig);
  const CkControl ctrl = control(o.cfg);
  Multivector m(sig);
  std::string route;
  if (in.kind == "monomial") {
    if (!o.route.empty() && o.route != "polynomial") throw ContractViolation("monomial inputs use the polynomial route");
    route = "polynomial";
    m = ck_polynomial(CliffordPolynomial::monomial(sig, in.k), bx);
  } else {
    const CkRoute r = o.route.empty() || o.route == "delta_series" ? CkRoute::delta_series
                      : o.route == "fourier"                       ? CkRoute::fourier
                                                                   : throw ContractViolation("unknown CK route '" + o.route + "'");
    route = to_string(r);
    const HermiteGaussian f0 = in.kind == "hermite"             ? phi_k(sig, in.k)
                               : in.kind == "monomial-gaussian" ? monomial_gaussian(sig, in.k, in.rate)
                                                                : psi_seed(sig, in.k);
    m = ck_hermite_gaussian(f0, bx, r, ctrl);
  }
  ordered_json extra;
  extra["input"] = o.input;
  extra["route"] = route;
  text = render_value(o, "ck-eval", bx, extra, m);
  return kExitPass;
}

inline int cmd_transform_eval(const Options& o, std::string& text) {
  const Signature sig = o.cfg.sig();
  sig.validate();
  const SplitPoint bx = point(o);
  const InputSpec in = parse_input(o.input, sig);
  const CkControl ctrl = control(o.cfg);
  Multivector m(sig);
  std::string route;
  if (in.kind == "psi") {
    if (!o.route.empty() && o.route != "delta_series") throw ContractViolation("psi inputs are evaluated by the delta_series CK");
    route = "delta_series";
    m = psi_k(sig, in.k, ctrl)(bx);
  } else if (in.kind == "monomial") {
    throw NotInFamily("the transform needs a Gaussian-weighted input; use hermite:k or monomial-gaussian:k");
  } else {
    const TransformRoute r = o.route.empty() || o.route == "fck" ? TransformRoute::fck
                             : o.route == "heat_ck"              ? TransformRoute::heat_ck
                                                                 : throw ContractViolation("unknown transform route '" + o.route + "'");
    route = to_string(r);
    const HermiteGaussian f = in.kind == "hermite" ? phi_k(sig, in.k) : monomial_gaussian(sig, in.k, in.rate);
    m = segal_bargmann(f, bx, r, ctrl);
  }
  ordered_json extra;
  extra["input"] = o.input;
  extra["route"] = route;
  text = render_value(o, "transform-eval", bx, extra, m);
  return kExitPass;
}

inline int cmd_verify(const Options& o, std::string& text) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite(o.suite, o.cfg);
  if (o.timing)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.format == "json")
    text = rep.to_json().dump(2) + "\n";
  else if (o.format == "csv")
    text = report_to_csv(rep);
  else
    text = report_to_text(rep);
  return rep.pass() ? kExitPass : kExitFail;
}

/// Field on the (x_0, r) plane: kernel, psi:k, hermite:k (the transform),
/// or ck:kind:k for the CK of any input spec.
inline PointFunction plot_field(const Options& o) {
  const Signature sig = o.cfg.sig();
  const CkControl ctrl = control(o.cfg);
  if (o.field == "kernel") {
    const auto xi = coordinates("--xi", o.xi, sig.x_dim());
    return [sig, xi](const SplitPoint& bx) { return kernel_e(sig, bx, xi); };
  }
  const InputSpec in = parse_input(o.field, sig);
  if (in.kind == "psi") return psi_k(sig, in.k, ctrl).eval;
  if (in.kind == "hermite") return transform_function(phi_k(sig, in.k), TransformRoute::fck, ctrl).eval;
  if (in.kind == "monomial-gaussian") return ck_function(monomial_gaussian(sig, in.k, in.rate), CkRoute::delta_series, ctrl).eval;
  const CliffordPolynomial poly = CliffordPolynomial::monomial(sig, in.k);
  return [poly](const SplitPoint& bx) { return ck_polynomial(poly, bx); };
}

inline int cmd_plot_data(const Options& o, std::string& text) {
  const Signature sig = o.cfg.sig();
  sig.validate();
  const Range xr = parse_range("--x0-range", o.x0_range);
  const Range rr = parse_range("--r-range", o.r_range);
  if (xr.n > 0 && rr.n > kMaxPlotPoints / xr.n)
    throw ResourceError("grid of " + std::to_string(xr.n) + " x " + std::to_string(rr.n) + " points exceeds the limit of " +
                        std::to_string(kMaxPlotPoints));
  if (rr.n > 0 && std::min(rr.lo, rr.hi) < 0.0) throw ContractViolation("--r-range must be non-negative");
  SplitPoint base = point(o);
  std::vector<double> omega = base.omega();

  std::string s;
  for (int i = 0; i < sig.x_dim(); ++i) s += "x" + std::to_string(i) + ",";
  for (int j = 1; j <= sig.q; ++j) s += "y" + std::to_string(j) + ",";
  for (std::size_t a = 0; a < sig.blade_count(); ++a) {
    const std::string b = blade_label(static_cast<BladeMask>(a));
    s += b + " re," + b + " im,";
  }
  s += "abs\n";
  if (xr.n == 0 || rr.n == 0) {
    text = s;
    return kExitPass;
  }

  const PointFunction f = plot_field(o);
  std::vector<SplitPoint> pts;
  pts.reserve(static_cast<std::size_t>(xr.n * rr.n));
  for (long long i = 0; i < xr.n; ++i)
    for (long long j = 0; j < rr.n; ++j) {
      SplitPoint bx = base;
      bx.x[0] = xr.at(i);
      const double r = rr.at(j);
      for (std::size_t c = 0; c < omega.size(); ++c) bx.y[c] = r * omega[c];
      pts.push_back(std::move(bx));
    }
  const auto vals = parallel_map<Multivector>(pts.size(), [&](std::size_t i) { return f(pts[i]); });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (double v : pts[i].x) s += format_double(v) + ",";
    for (double v : pts[i].y) s += format_double(v) + ",";
    for (const cplx c : vals[i].coeffs()) s += format_double(c.real()) + "," + format_double(c.imag()) + ",";
    s += format_double(vals[i].norm()) + "\n";
  }
  text = s;
  return kExitPass;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Segal-Bargmann transform for generalized partial-slice monogenic functions", "gsm"};
  app.require_subcommand(1);
  Options o;

  auto* k = app.add_subcommand("eval-kernel", "evaluate the kernel e(x + y, xi)");
  auto* c = app.add_subcommand("ck-eval", "evaluate the CK extension of an input at a point");
  auto* t = app.add_subcommand("transform-eval", "evaluate U[f] or psi_k at a point");
  auto* v = app.add_subcommand("verify", "run a verification suite");
  auto* d = app.add_subcommand("plot-data", "write a CSV grid over (x_0, |y|)");
  for (auto* sub : {k, c, t, v, d}) add_common(sub, o);
  for (auto* sub : {c, t}) {
    sub->add_option("--input", o.input, "hermite:k | monomial-gaussian:k[@rate] | psi:k | monomial:k")->required();
    sub->add_option("--route", o.route, "ck-eval: delta_series | fourier; transform-eval: fck | heat_ck");
  }
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  v->add_option("suite", o.suite, "suite name or 'all'")->required()->check(CLI::IsMember(suites));
  v->add_flag("--timing", o.timing, "record elapsed_ms in the report");
  d->add_option("--field", o.field, "kernel | psi:k | hermite:k | monomial-gaussian:k | monomial:k")->capture_default_str();
  d->add_option("--x0-range", o.x0_range, "lo:hi:count")->capture_default_str();
  d->add_option("--r-range", o.r_range, "lo:hi:count over |y|, direction from --y")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_os, e_os;
    const int code = app.exit(e, o_os, e_os);
    out << o_os.str();
    err << e_os.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    std::string text;
    int code = kExitPass;
    if (k->parsed())
      code = cmd_eval_kernel(o, text);
    else if (c->parsed())
      code = cmd_ck_eval(o, text);
    else if (t->parsed())
      code = cmd_transform_eval(o, text);
    else if (v->parsed())
      code = cmd_verify(o, text);
    else
      code = cmd_plot_data(o, text);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << o.out << " for writing\n";
        return kExitUsage;
      }
      f << text;
    }
    return code;
  } catch (const RegionError& e) {
    err << "region error: " << e.what() << "\n";
    return kExitRegion;
  } catch (const GeometryError& e) {
    err << "region error: " << e.what() << "\n";
    return kExitRegion;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInFamily& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace gsm
