#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "citecurve/rational.hpp"

namespace citecurve {

/// Per-publication citation counts sorted non-increasing.
/// Every area and index below is defined on this shape; build_curve is the
/// only way to construct one, so the ordering invariant always holds.
class CitationCurve {
 public:
  CitationCurve() = default;

  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t publications() const { return static_cast<std::int64_t>(counts_.size()); }
  bool empty() const { return counts_.empty(); }

 private:
  friend CitationCurve build_curve(std::span<const std::int64_t> raw_counts);
  explicit CitationCurve(std::vector<std::int64_t> sorted) : counts_(std::move(sorted)) {}

  std::vector<std::int64_t> counts_;
};

/// All curve areas for one author. Fields are exact 64-bit integers; see
/// the partition identities under decompose().
struct AreaDecomposition {
  std::int64_t h = 0;
  std::int64_t c_total = 0;
  std::int64_t c_core = 0;
  std::int64_t c_tail = 0;
  std::int64_t c_excess = 0;           // c_core - h^2
  std::int64_t c_tail_complement = 0;  // unfilled part of the h x (p-h) rectangle
  std::int64_t c_ideal_complement = 0; // unfilled part of the p x p square
  std::int64_t p_tail = 0;             // p - h

  friend bool operator==(const AreaDecomposition&, const AreaDecomposition&) = default;
};

/// Integer multipliers of the penalty indices. 32-bit by construction so
/// that 64-bit accumulation cannot overflow for any realistic corpus.
struct IndexWeights {
  std::int32_t kappa = 1;
  std::int32_t epsilon = 1;
  std::int32_t tau = 1;
  std::int32_t sigma = 1;
  std::int32_t iota = 1;
};

enum class AuthorClass { Influential, MassProducer };

/// Canonical display labels: "influential" / "mass-producer".
const char* to_string(AuthorClass c);

/// Validates and sorts raw counts non-increasing. Throws ValidationError
/// naming the offending index on a negative count.
CitationCurve build_curve(std::span<const std::int64_t> raw_counts);

/// Largest h such that counts[h-1] >= h; 0 for an empty or uncited record.
std::int64_t h_index(const CitationCurve& curve);

AreaDecomposition decompose(const CitationCurve& curve);

/// kappa*h^2 + epsilon*c_excess + tau*c_tail. Equals c_total at all-1 weights.
std::int64_t parameterized_count(const AreaDecomposition& d, const IndexWeights& w);

/// kappa*h^2 + epsilon*c_excess - sigma*c_tail_complement. May be negative.
std::int64_t penalty_pt(const AreaDecomposition& d, const IndexWeights& w);

/// kappa*h^2 + epsilon*c_excess + tau*c_tail - iota*c_ideal_complement.
std::int64_t penalty_pi(const AreaDecomposition& d, const IndexWeights& w);

/// PT < 0 is a mass producer; PT >= 0 is influential.
AuthorClass classify_author(std::int64_t pt_value);

/// h over career length in years, both endpoint years counted.
/// Throws ValidationError when reference_year < first_pub_year.
Rational m_quotient(std::int64_t h, int first_pub_year, int reference_year);

}  // namespace citecurve
