#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citecurve/corpus.hpp"
#include "citecurve/curve.hpp"
#include "citecurve/rational.hpp"

namespace citecurve {

enum class MetricId {
  H,
  CTotal,
  CPerP,
  PT,
  PI,
  M,
  CTail,
  CTailComplement,
  CIdealComplement,
  CExcess,
};

/// Accepts the canonical tokens h, c, c_per_p, pt, pi, m, c_t, c_tc, c_ic,
/// c_e (case-insensitive).
std::optional<MetricId> metric_from_string(std::string_view token);
std::string_view metric_token(MetricId id);
/// Table-style display name: h, C, C/p, PT, PI, m, C_T, C_TC, C_IC, C_E.
std::string_view metric_display(MetricId id);
/// C/p and m are fractions; everything else is an exact integer.
bool metric_is_fractional(MetricId id);
std::vector<MetricId> all_metrics();

struct MetricContext {
  IndexWeights weights;
  std::optional<int> reference_year;  // required for m only
};

/// One value per ranked-eligible author (profiles with at least one
/// publication). Throws ValidationError for metric m without a
/// reference year.
std::map<std::string, Rational> compute_metric(const Corpus& corpus, MetricId metric,
                                               const MetricContext& ctx);

struct RankEntry {
  std::string author_id;
  std::string display_name;
  Rational primary_value;
  std::int64_t primary_pos = 0;
  Rational secondary_value;
  std::int64_t secondary_pos = 0;
  std::int64_t p = 0;
  std::int64_t c_total = 0;
  Rational c_per_p;
};

/// Full ranking by the primary metric (descending; ties broken by c_total
/// descending then author_id ascending), annotated with each author's
/// position under the secondary metric over the whole corpus. top_n /
/// bottom_n slice the finished table; oversized requests clamp with a
/// warning.
std::vector<RankEntry> rank_table(const Corpus& corpus, MetricId primary, MetricId secondary,
                                  const MetricContext& ctx,
                                  std::optional<std::int64_t> top_n = std::nullopt,
                                  std::optional<std::int64_t> bottom_n = std::nullopt,
                                  std::vector<std::string>* warnings = nullptr);

struct QQPair {
  std::string author_id;
  Rational x_percentile;  // 100 * rank / n, in (0, 100]
  Rational y_percentile;
  std::string sample_tag;
};

/// One pair per author, sorted by author_id. Optional sample tags label
/// which input sample an author came from when corpora are merged.
std::vector<QQPair> qq_rank_pairs(const Corpus& corpus, MetricId x_metric, MetricId y_metric,
                                  const MetricContext& ctx,
                                  const std::map<std::string, std::string>* sample_tags = nullptr);

/// Percentile of the last ranked author with a non-negative value: the
/// horizontal cut separating influential from mass-producer rank bands.
/// Empty corpus yields nullopt.
std::optional<Rational> zero_split_percentile(const Corpus& corpus, MetricId metric,
                                              const MetricContext& ctx);

struct CdfRow {
  double threshold;
  double fraction;  // share of values <= threshold
};

/// Uniform thresholds across [min, max]; fractions are non-decreasing and
/// end at exactly 1.0. All-equal inputs give the single row (value, 1.0).
/// Throws ValidationError on empty input or n_bins < 1.
std::vector<CdfRow> cumulative_distribution(const std::vector<double>& values, int n_bins);
std::vector<CdfRow> cumulative_distribution(const std::map<std::string, Rational>& values,
                                            int n_bins);

enum class PenaltyIndex { PT, PI };

struct ClassificationCell {
  std::string sample;
  std::int32_t kappa = 1;
  std::int64_t n_negative = 0;
  std::int64_t n_nonnegative = 0;
  double pct_negative = 0;
  double pct_nonnegative = 0;
};

/// Sign counts of PT or PI per (sample, kappa), with non-kappa weights
/// taken from `base`. With more than one sample a pooled "Unioned" row is
/// appended per kappa, deduplicating authors by id (first occurrence wins).
std::vector<ClassificationCell> classification_counts(
    const std::vector<std::pair<std::string, const Corpus*>>& samples, PenaltyIndex index,
    const std::vector<std::int32_t>& kappa_values, const IndexWeights& base);

struct RankCorrelation {
  double spearman = 0;  // fractional ranks, Pearson on ranks
  double kendall = 0;   // tau-b
};

/// Requires identical key sets of size >= 2.
RankCorrelation rank_correlation(const std::map<std::string, Rational>& x,
                                 const std::map<std::string, Rational>& y);

struct DisplacementRow {
  std::string author_id;
  std::int64_t pos_with_self = 0;
  std::int64_t pos_without_self = 0;
  std::int64_t abs_delta = 0;
  double abs_delta_pct = 0;  // 100 * abs_delta / n
};

struct SelfCitationImpact {
  std::vector<DisplacementRow> rows;  // sorted by author_id
  std::vector<QQPair> qq_pairs;       // x = percentile with self, y = without
  double median_abs_delta = 0;
  std::int64_t max_abs_delta = 0;
  double median_abs_delta_pct = 0;
  double max_abs_delta_pct = 0;
};

/// Ranks the corpus under `metric` twice, with self-citations kept and
/// removed, and reports per-author rank displacement. Requires event-level
/// citation data on every publication.
SelfCitationImpact self_citation_impact(const Corpus& corpus, MetricId metric,
                                        const MetricContext& ctx,
                                        SelfCitationScope scope = SelfCitationScope::AllCoauthors);

}  // namespace citecurve
