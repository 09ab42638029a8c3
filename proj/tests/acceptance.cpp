// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its runtime limit.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gsm/gsm.hpp"

using namespace gsm;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sig_name(Signature s) { return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")"; }

// Runs a suite on each signature; fails on the first failing record.
Outcome suites(const std::string& suite, const std::vector<Signature>& sigs, const std::function<void(RunConfig&)>& tweak = {}) {
  double worst_ratio = 0.0;
  std::string worst;
  for (const Signature s : sigs) {
    RunConfig cfg;
    cfg.p = s.p;
    cfg.q = s.q;
    if (tweak) tweak(cfg);
    const SuiteReport rep = run_suite(suite, cfg);
    for (const auto& c : rep.checks) {
      if (!c.pass) return {false, sig_name(s) + " " + c.name + " deviation " + format_double(c.deviation) + " > tol " + format_double(c.tol)};
      const double ratio = c.tol > 0 ? c.deviation / c.tol : 0.0;
      if (ratio >= worst_ratio) {
        worst_ratio = ratio;
        worst = sig_name(s) + " " + c.name + " " + format_double(c.deviation) + " (tol " + format_double(c.tol) + ")";
      }
    }
  }
  return {true, "tightest: " + worst};
}

Outcome classical_reduction() {
  const Signature sig{0, 1};
  Sampler rng(20240611);
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> z = std::polar(2.0 * std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * std::numbers::pi));
    const SplitPoint bx{{z.real()}, {z.imag()}};
    for (int k = 0; k <= 5; ++k) {
      const std::complex<double> w = std::pow(z, k) * std::exp(-z * z / 4.0);
      Multivector expect(sig);
      expect[0] = w.real();
      expect[1] = w.imag();
      dev = std::max(dev, relative_deviation(psi_k(sig, MultiIndex({k}))(bx), expect));
    }
  }
  return {dev <= 1e-8, "max relative deviation " + format_double(dev) + " over 50 points, k <= 5 (tol 1e-8)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("gsm_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* workers : {"1", "4", "1"}) {
    const auto out = dir / ("report_" + std::to_string(outputs.size()) + ".json");
    const std::string cmd = std::string("GSM_NUM_WORKERS=") + workers + " " + GSM_CLI_PATH +
                            " verify all --p 0 --q 1 --format json --out " + out.string();
    const int status = std::system(cmd.c_str());
    if (status == -1 || WEXITSTATUS(status) != 0) {
      std::filesystem::remove_all(dir);
      return {false, "verify all exited with status " + std::to_string(WEXITSTATUS(status)) + " (workers " + workers + ")"};
    }
    outputs.push_back(slurp(out));
  }
  std::filesystem::remove_all(dir);
  const bool same = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[1] == outputs[2];
  return {same, same ? "three runs (workers 1, 4, 1) byte-identical, " + std::to_string(outputs[0].size()) + " bytes"
                     : "reports differ between runs"};
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Signature> clifford_sigs;
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= n; ++q) clifford_sigs.push_back({n - q, q});
  const std::vector<Signature> kernel_sigs{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}};
  const std::vector<Signature> gram_sigs{{0, 1}, {0, 2}, {1, 1}};

  // Criteria 5 and 6 share one runtime budget.
  const std::vector<Criterion> criteria{
      {1, "Clifford laws, all (p,q) with p+q <= 6", 5, [&] { return suites("clifford", clifford_sigs); }},
      {2, "kernel identities and monogenicity", 30, [&] { return suites("kernel", kernel_sigs); }},
      {3, "CK extension: Fueter, plane-wave power, Taylor, dual route", 60, [&] { return suites("ck", kernel_sigs); }},
      {4, "quadrature identities, q = 1, 2, 3", 10, [&] { return suites("quadrature", {{0, 1}, {0, 2}, {0, 3}}); }},
      {5, "isometry of U on |k| <= 3", 600, [&] { return suites("isometry", gram_sigs); }},
      {6, "orthogonality of psi_k on |k| <= 3", 600, [&] { return suites("basis", gram_sigs); }},
      {7, "Schrodinger representation, |k| <= 2", 300, [&] { return suites("schrodinger", {{0, 1}, {1, 1}}); }},
      {8, "classical reduction to z^k e^{-z^2/4}", 10, classical_reduction},
      {9, "determinism of verify all across worker counts", 600, determinism},
  };

  bool all = true;
  double shared_gram_seconds = 0.0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double budget_used = secs;
    if (c.id == 5 || c.id == 6) {
      shared_gram_seconds += secs;
      budget_used = shared_gram_seconds;
    }
    const bool in_time = budget_used <= c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " | " << o.detail << " | "
         << format_double(std::round(secs * 100) / 100) << " s (limit " << c.limit_s << " s"
         << (c.id == 5 || c.id == 6 ? ", shared by 5 and 6" : "") << ")";
    if (!in_time) line << " TIME LIMIT EXCEEDED";
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all ? 0 : 1;
}
