#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gsm/error.hpp"

namespace gsm {

/// k = (k_0, ..., k_p) in N_0^{p+1}. Ordered graded-lexicographically:
/// first by |k|, then lexicographically.
struct MultiIndex {
  std::vector<int> k;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> v) : k(std::move(v)) {
    for (int e : k)
      if (e < 0) throw ContractViolation("multi-index entries must be non-negative");
  }
  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0)); }
  static MultiIndex unit(int dim, int axis) {
    MultiIndex m = zero(dim);
    m.k.at(static_cast<std::size_t>(axis)) = 1;
    return m;
  }

  int dim() const noexcept { return static_cast<int>(k.size()); }
  int operator[](int i) const { return k[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return k[static_cast<std::size_t>(i)]; }

  int total() const noexcept { return std::accumulate(k.begin(), k.end(), 0); }

  /// k! = prod k_i!
  double factorial() const noexcept {
    double f = 1.0;
    for (int e : k)
      for (int j = 2; j <= e; ++j) f *= j;
    return f;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (o.dim() != dim()) throw ContractViolation("multi-index dimension mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(k[i]);
    }
    return s + ")";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.k <=> b.k;
  }
};

/// All multi-indices of the given dimension with |k| <= max_degree, in
/// graded-lexicographic order.
inline std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree) {
  std::vector<MultiIndex> out;
  if (dim <= 0 || max_degree < 0) return out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    // Compositions of deg into dim parts, lexicographically ascending.
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == dim - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        cur[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    rec(rec, 0, deg);
  }
  return out;
}

}  // namespace gsm
