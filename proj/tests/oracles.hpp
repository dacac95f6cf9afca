#pragma once

// Brute-force reference implementations used only by tests. Everything here
// follows the plain definitions with no shortcuts, independently of the
// library code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// max{k : at least k publications have >= k citations}, by counting.
inline std::int64_t h_index(const std::vector<std::int64_t>& counts) {
  const std::int64_t p = static_cast<std::int64_t>(counts.size());
  std::int64_t best = 0;
  for (std::int64_t k = 0; k <= p; ++k) {
    std::int64_t at_least_k = 0;
    for (std::int64_t c : counts) {
      if (c >= k) ++at_least_k;
    }
    if (at_least_k >= k) best = k;
  }
  return best;
}

struct Areas {
  std::int64_t h, c_total, c_core, c_tail, c_excess, tc_rect, ic;
};

// Areas from first principles: tail complement via the rectangle form
// h*(p-h) - C_T, ideal complement by direct summation.
inline Areas areas(std::vector<std::int64_t> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  const std::int64_t p = static_cast<std::int64_t>(counts.size());
  Areas a{};
  a.h = h_index(counts);
  for (std::int64_t i = 0; i < p; ++i) (i < a.h ? a.c_core : a.c_tail) += counts[i];
  a.c_total = a.c_core + a.c_tail;
  a.c_excess = a.c_core - a.h * a.h;
  a.tc_rect = a.h * (p - a.h) - a.c_tail;
  for (std::int64_t c : counts) {
    if (c < p) a.ic += p - c;
  }
  return a;
}

// Fractional ranks (average rank for ties), 1-based.
inline std::vector<double> fractional_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t less = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] < v[i]) ++less;
      if (v[j] == v[i]) ++equal;
    }
    ranks[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
  }
  return ranks;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
    saa += a[i] * a[i];
    sbb += b[i] * b[i];
  }
  return (n * sab - sa * sb) / std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb));
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(fractional_ranks(x), fractional_ranks(y));
}

// Kendall tau-b by direct pair enumeration: tie totals include pairs tied
// in both coordinates (matches the standard tie-corrected definition).
inline double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0) ++ties_x;
      if (dy == 0) ++ties_y;
      if (dx == 0 || dy == 0) continue;
      if (dx * dy > 0) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1) / 2.0;
  const double denom = std::sqrt((n0 - ties_x) * (n0 - ties_y));
  if (denom == 0) return 0.0;
  return (concordant - discordant) / denom;
}

// Seeded random citation curves for the property suites.
inline std::vector<std::int64_t> random_counts(std::mt19937_64& rng, std::int64_t max_p,
                                               std::int64_t max_c) {
  std::uniform_int_distribution<std::int64_t> plen(0, max_p);
  std::uniform_int_distribution<std::int64_t> cite(0, max_c);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(plen(rng)));
  for (auto& c : counts) c = cite(rng);
  return counts;
}

}  // namespace oracle
