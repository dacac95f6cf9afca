#include "citecurve/curve.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "citecurve/errors.hpp"

namespace citecurve {

const char* to_string(AuthorClass c) {
  return c == AuthorClass::Influential ? "influential" : "mass-producer";
}

CitationCurve build_curve(std::span<const std::int64_t> raw_counts) {
  for (std::size_t i = 0; i < raw_counts.size(); ++i) {
    if (raw_counts[i] < 0) {
      throw ValidationError("citation count at index " + std::to_string(i) +
                            " is negative (" + std::to_string(raw_counts[i]) + ")");
    }
  }
  std::vector<std::int64_t> sorted(raw_counts.begin(), raw_counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return CitationCurve(std::move(sorted));
}

std::int64_t h_index(const CitationCurve& curve) {
  const auto& counts = curve.counts();
  std::int64_t h = 0;
  while (h < curve.publications() && counts[h] >= h + 1) ++h;
  return h;
}

AreaDecomposition decompose(const CitationCurve& curve) {
  const auto& counts = curve.counts();
  const std::int64_t p = curve.publications();

  AreaDecomposition d;
  d.h = h_index(curve);
  d.p_tail = p - d.h;
  for (std::int64_t i = 0; i < d.h; ++i) d.c_core += counts[i];
  for (std::int64_t i = d.h; i < p; ++i) {
    d.c_tail += counts[i];
    // Core/tail membership is by rank position, so every tail count <= h.
    d.c_tail_complement += d.h - counts[i];
  }
  d.c_total = d.c_core + d.c_tail;
  d.c_excess = d.c_core - d.h * d.h;
  for (std::int64_t i = 0; i < p; ++i) {
    if (counts[i] < p) d.c_ideal_complement += p - counts[i];
  }
  return d;
}

std::int64_t parameterized_count(const AreaDecomposition& d, const IndexWeights& w) {
  return w.kappa * d.h * d.h + w.epsilon * d.c_excess + w.tau * d.c_tail;
}

std::int64_t penalty_pt(const AreaDecomposition& d, const IndexWeights& w) {
  return w.kappa * d.h * d.h + w.epsilon * d.c_excess - w.sigma * d.c_tail_complement;
}

std::int64_t penalty_pi(const AreaDecomposition& d, const IndexWeights& w) {
  return w.kappa * d.h * d.h + w.epsilon * d.c_excess + w.tau * d.c_tail -
         w.iota * d.c_ideal_complement;
}

AuthorClass classify_author(std::int64_t pt_value) {
  return pt_value < 0 ? AuthorClass::MassProducer : AuthorClass::Influential;
}

Rational m_quotient(std::int64_t h, int first_pub_year, int reference_year) {
  const std::int64_t career = static_cast<std::int64_t>(reference_year) - first_pub_year + 1;
  if (career <= 0) {
    throw ValidationError("career length is not positive: first publication year " +
                          std::to_string(first_pub_year) + " is after reference year " +
                          std::to_string(reference_year));
  }
  return Rational::of(h, career);
}

}  // namespace citecurve
