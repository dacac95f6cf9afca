#include "citecurve/ranking.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "citecurve/errors.hpp"

namespace citecurve {

namespace {

struct AuthorFacts {
  const AuthorProfile* profile = nullptr;
  AreaDecomposition areas;
  std::int64_t p = 0;
  int first_year = 0;
};

// Ranked-eligible authors only: zero-publication profiles carry no curve.
std::vector<AuthorFacts> collect_facts(const Corpus& corpus) {
  std::vector<AuthorFacts> facts;
  facts.reserve(corpus.size());
  for (const auto& profile : corpus) {
    if (profile.publications.empty()) continue;
    AuthorFacts f;
    f.profile = &profile;
    f.areas = decompose(build_curve(profile.citation_counts()));
    f.p = static_cast<std::int64_t>(profile.publications.size());
    f.first_year = profile.first_pub_year();
    facts.push_back(std::move(f));
  }
  return facts;
}

Rational metric_value(const AuthorFacts& f, MetricId metric, const MetricContext& ctx) {
  switch (metric) {
    case MetricId::H: return f.areas.h;
    case MetricId::CTotal: return f.areas.c_total;
    case MetricId::CPerP: return Rational::of(f.areas.c_total, f.p);
    case MetricId::PT: return penalty_pt(f.areas, ctx.weights);
    case MetricId::PI: return penalty_pi(f.areas, ctx.weights);
    case MetricId::M:
      if (!ctx.reference_year) {
        throw ValidationError("metric m requires a reference year");
      }
      return m_quotient(f.areas.h, f.first_year, *ctx.reference_year);
    case MetricId::CTail: return f.areas.c_tail;
    case MetricId::CTailComplement: return f.areas.c_tail_complement;
    case MetricId::CIdealComplement: return f.areas.c_ideal_complement;
    case MetricId::CExcess: return f.areas.c_excess;
  }
  throw ValidationError("unknown metric");
}

struct RankedFact {
  const AuthorFacts* fact = nullptr;
  Rational value;
};

// Total order: value descending, c_total descending, author_id ascending.
bool ranks_before(const RankedFact& a, const RankedFact& b) {
  if (a.value != b.value) return b.value < a.value;
  if (a.fact->areas.c_total != b.fact->areas.c_total) {
    return a.fact->areas.c_total > b.fact->areas.c_total;
  }
  return a.fact->profile->author_id < b.fact->profile->author_id;
}

std::vector<RankedFact> ranked(const std::vector<AuthorFacts>& facts, MetricId metric,
                               const MetricContext& ctx) {
  std::vector<RankedFact> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back({&f, metric_value(f, metric, ctx)});
  std::sort(out.begin(), out.end(), ranks_before);
  return out;
}

std::map<std::string, std::int64_t> positions_of(const std::vector<RankedFact>& order) {
  std::map<std::string, std::int64_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i].fact->profile->author_id] = static_cast<std::int64_t>(i) + 1;
  }
  return pos;
}

}  // namespace

std::optional<MetricId> metric_from_string(std::string_view token) {
  std::string t;
  t.reserve(token.size());
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "h") return MetricId::H;
  if (t == "c") return MetricId::CTotal;
  if (t == "c_per_p" || t == "c/p") return MetricId::CPerP;
  if (t == "pt") return MetricId::PT;
  if (t == "pi") return MetricId::PI;
  if (t == "m") return MetricId::M;
  if (t == "c_t") return MetricId::CTail;
  if (t == "c_tc") return MetricId::CTailComplement;
  if (t == "c_ic") return MetricId::CIdealComplement;
  if (t == "c_e") return MetricId::CExcess;
  return std::nullopt;
}

std::string_view metric_token(MetricId id) {
  switch (id) {
    case MetricId::H: return "h";
    case MetricId::CTotal: return "c";
    case MetricId::CPerP: return "c_per_p";
    case MetricId::PT: return "pt";
    case MetricId::PI: return "pi";
    case MetricId::M: return "m";
    case MetricId::CTail: return "c_t";
    case MetricId::CTailComplement: return "c_tc";
    case MetricId::CIdealComplement: return "c_ic";
    case MetricId::CExcess: return "c_e";
  }
  return "?";
}

std::string_view metric_display(MetricId id) {
  switch (id) {
    case MetricId::H: return "h";
    case MetricId::CTotal: return "C";
    case MetricId::CPerP: return "C/p";
    case MetricId::PT: return "PT";
    case MetricId::PI: return "PI";
    case MetricId::M: return "m";
    case MetricId::CTail: return "C_T";
    case MetricId::CTailComplement: return "C_TC";
    case MetricId::CIdealComplement: return "C_IC";
    case MetricId::CExcess: return "C_E";
  }
  return "?";
}

bool metric_is_fractional(MetricId id) {
  return id == MetricId::CPerP || id == MetricId::M;
}

std::vector<MetricId> all_metrics() {
  return {MetricId::H,  MetricId::CTotal, MetricId::CPerP,           MetricId::PT,
          MetricId::PI, MetricId::M,      MetricId::CTail,           MetricId::CTailComplement,
          MetricId::CIdealComplement,     MetricId::CExcess};
}

std::map<std::string, Rational> compute_metric(const Corpus& corpus, MetricId metric,
                                               const MetricContext& ctx) {
  std::map<std::string, Rational> values;
  for (const auto& f : collect_facts(corpus)) {
    values[f.profile->author_id] = metric_value(f, metric, ctx);
  }
  return values;
}

std::vector<RankEntry> rank_table(const Corpus& corpus, MetricId primary, MetricId secondary,
                                  const MetricContext& ctx, std::optional<std::int64_t> top_n,
                                  std::optional<std::int64_t> bottom_n,
                                  std::vector<std::string>* warnings) {
  const auto facts = collect_facts(corpus);
  const auto primary_order = ranked(facts, primary, ctx);
  const auto secondary_order = ranked(facts, secondary, ctx);
  const auto secondary_pos = positions_of(secondary_order);
  std::map<std::string, Rational> secondary_value;
  for (const auto& r : secondary_order) {
    secondary_value[r.fact->profile->author_id] = r.value;
  }

  std::vector<RankEntry> table;
  table.reserve(primary_order.size());
  for (std::size_t i = 0; i < primary_order.size(); ++i) {
    const auto& r = primary_order[i];
    RankEntry e;
    e.author_id = r.fact->profile->author_id;
    e.display_name = r.fact->profile->display_name;
    e.primary_value = r.value;
    e.primary_pos = static_cast<std::int64_t>(i) + 1;
    e.secondary_value = secondary_value.at(e.author_id);
    e.secondary_pos = secondary_pos.at(e.author_id);
    e.p = r.fact->p;
    e.c_total = r.fact->areas.c_total;
    e.c_per_p = Rational::of(e.c_total, e.p);
    table.push_back(std::move(e));
  }

  if (!top_n && !bottom_n) return table;

  const auto n = static_cast<std::int64_t>(table.size());
  const auto clamp = [&](std::int64_t requested, const char* which) {
    if (requested > n) {
      if (warnings) {
        warnings->push_back(std::string(which) + " " + std::to_string(requested) +
                            " exceeds corpus size " + std::to_string(n) + "; clamped");
      }
      return n;
    }
    return requested;
  };
  const std::int64_t head = top_n ? clamp(*top_n, "top") : 0;
  const std::int64_t tail = bottom_n ? clamp(*bottom_n, "bottom") : 0;

  std::vector<RankEntry> sliced;
  for (std::int64_t i = 0; i < head; ++i) sliced.push_back(table[static_cast<std::size_t>(i)]);
  for (std::int64_t i = std::max(head, n - tail); i < n; ++i) {
    sliced.push_back(table[static_cast<std::size_t>(i)]);
  }
  return sliced;
}

std::vector<QQPair> qq_rank_pairs(const Corpus& corpus, MetricId x_metric, MetricId y_metric,
                                  const MetricContext& ctx,
                                  const std::map<std::string, std::string>* sample_tags) {
  const auto facts = collect_facts(corpus);
  const auto x_pos = positions_of(ranked(facts, x_metric, ctx));
  const auto y_pos = positions_of(ranked(facts, y_metric, ctx));
  const auto n = static_cast<std::int64_t>(facts.size());

  std::vector<QQPair> pairs;
  pairs.reserve(facts.size());
  for (const auto& [author_id, xp] : x_pos) {
    QQPair q;
    q.author_id = author_id;
    q.x_percentile = Rational::of(100 * xp, n);
    q.y_percentile = Rational::of(100 * y_pos.at(author_id), n);
    if (sample_tags) {
      const auto it = sample_tags->find(author_id);
      if (it != sample_tags->end()) q.sample_tag = it->second;
    }
    pairs.push_back(std::move(q));
  }
  return pairs;  // std::map iteration already sorted by author_id
}

std::optional<Rational> zero_split_percentile(const Corpus& corpus, MetricId metric,
                                              const MetricContext& ctx) {
  const auto facts = collect_facts(corpus);
  if (facts.empty()) return std::nullopt;
  std::int64_t nonnegative = 0;
  for (const auto& f : facts) {
    if (!(metric_value(f, metric, ctx) < Rational(0))) ++nonnegative;
  }
  return Rational::of(100 * nonnegative, static_cast<std::int64_t>(facts.size()));
}

std::vector<CdfRow> cumulative_distribution(const std::vector<double>& values, int n_bins) {
  if (values.empty()) throw ValidationError("cumulative distribution of an empty value set");
  if (n_bins < 1) throw ValidationError("n_bins must be >= 1");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  const double n = static_cast<double>(sorted.size());

  std::vector<CdfRow> rows;
  if (lo == hi) {
    rows.push_back({hi, 1.0});
    return rows;
  }
  rows.reserve(static_cast<std::size_t>(n_bins));
  for (int k = 1; k <= n_bins; ++k) {
    // Final threshold is exactly the maximum so the curve closes at 1.0.
    const double threshold =
        k == n_bins ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n_bins);
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), threshold) - sorted.begin();
    rows.push_back({threshold, static_cast<double>(count) / n});
  }
  return rows;
}

std::vector<CdfRow> cumulative_distribution(const std::map<std::string, Rational>& values,
                                            int n_bins) {
  std::vector<double> v;
  v.reserve(values.size());
  for (const auto& [id, value] : values) {
    (void)id;
    v.push_back(value.to_double());
  }
  return cumulative_distribution(v, n_bins);
}

std::vector<ClassificationCell> classification_counts(
    const std::vector<std::pair<std::string, const Corpus*>>& samples, PenaltyIndex index,
    const std::vector<std::int32_t>& kappa_values, const IndexWeights& base) {
  if (samples.empty()) throw ValidationError("classification requires at least one sample");
  if (kappa_values.empty()) throw ValidationError("classification requires at least one kappa");

  struct SampleFacts {
    std::string name;
    std::vector<std::pair<std::string, AreaDecomposition>> authors;  // id, areas
  };
  std::vector<SampleFacts> sample_facts;
  SampleFacts unioned{"Unioned", {}};
  std::map<std::string, bool> seen;
  for (const auto& [name, corpus] : samples) {
    SampleFacts sf{name, {}};
    for (const auto& profile : *corpus) {
      if (profile.publications.empty()) continue;
      const auto areas = decompose(build_curve(profile.citation_counts()));
      sf.authors.emplace_back(profile.author_id, areas);
      if (!seen[profile.author_id]) {
        seen[profile.author_id] = true;
        unioned.authors.emplace_back(profile.author_id, areas);
      }
    }
    sample_facts.push_back(std::move(sf));
  }
  if (samples.size() > 1) sample_facts.push_back(std::move(unioned));

  std::vector<ClassificationCell> cells;
  for (const auto& sf : sample_facts) {
    for (std::int32_t kappa : kappa_values) {
      IndexWeights w = base;
      w.kappa = kappa;
      ClassificationCell cell;
      cell.sample = sf.name;
      cell.kappa = kappa;
      for (const auto& [id, areas] : sf.authors) {
        (void)id;
        const std::int64_t value =
            index == PenaltyIndex::PT ? penalty_pt(areas, w) : penalty_pi(areas, w);
        (value < 0 ? cell.n_negative : cell.n_nonnegative) += 1;
      }
      const std::int64_t total = cell.n_negative + cell.n_nonnegative;
      if (total > 0) {
        cell.pct_negative = 100.0 * static_cast<double>(cell.n_negative) / static_cast<double>(total);
        cell.pct_nonnegative =
            100.0 * static_cast<double>(cell.n_nonnegative) / static_cast<double>(total);
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

namespace {

// Fractional ranks (average rank over exact-value ties), 1-based.
std::vector<double> fractional_ranks(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

RankCorrelation rank_correlation(const std::map<std::string, Rational>& x,
                                 const std::map<std::string, Rational>& y) {
  if (x.size() != y.size()) throw ValidationError("rank correlation requires matching key sets");
  if (x.size() < 2) throw ValidationError("rank correlation requires at least 2 points");

  std::vector<Rational> xs, ys;
  xs.reserve(x.size());
  ys.reserve(x.size());
  for (const auto& [id, value] : x) {
    const auto it = y.find(id);
    if (it == y.end()) {
      throw ValidationError("rank correlation key mismatch: \"" + id + "\" missing");
    }
    xs.push_back(value);
    ys.push_back(it->second);
  }

  RankCorrelation out;

  // Spearman: Pearson correlation of fractional ranks.
  const auto rx = fractional_ranks(xs);
  const auto ry = fractional_ranks(ys);
  const double n = static_cast<double>(rx.size());
  double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sa += rx[i];
    sb += ry[i];
    sab += rx[i] * ry[i];
    saa += rx[i] * rx[i];
    sbb += ry[i] * ry[i];
  }
  const double denom = std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb));
  out.spearman = denom == 0 ? 0.0 : (n * sab - sa * sb) / denom;

  // Kendall tau-b by pair enumeration. Tie totals count every pair tied in
  // that coordinate, including pairs tied in both.
  double concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const bool eq_x = xs[i] == xs[j];
      const bool eq_y = ys[i] == ys[j];
      if (eq_x) ++ties_x;
      if (eq_y) ++ties_y;
      if (eq_x || eq_y) continue;
      if ((xs[i] < xs[j]) == (ys[i] < ys[j])) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n0 = n * (n - 1) / 2.0;
  const double tb_denom = std::sqrt((n0 - ties_x) * (n0 - ties_y));
  out.kendall = tb_denom == 0 ? 0.0 : (concordant - discordant) / tb_denom;
  return out;
}

SelfCitationImpact self_citation_impact(const Corpus& corpus, MetricId metric,
                                        const MetricContext& ctx, SelfCitationScope scope) {
  Corpus filtered;
  filtered.reserve(corpus.size());
  for (const auto& profile : corpus) filtered.push_back(filter_self_citations(profile, scope));

  const auto facts_raw = collect_facts(corpus);
  const auto facts_filtered = collect_facts(filtered);
  const auto pos_raw = positions_of(ranked(facts_raw, metric, ctx));
  const auto pos_filtered = positions_of(ranked(facts_filtered, metric, ctx));
  const auto n = static_cast<std::int64_t>(pos_raw.size());

  SelfCitationImpact impact;
  std::vector<double> deltas;
  for (const auto& [author_id, with_self] : pos_raw) {
    DisplacementRow row;
    row.author_id = author_id;
    row.pos_with_self = with_self;
    row.pos_without_self = pos_filtered.at(author_id);
    row.abs_delta = std::llabs(row.pos_with_self - row.pos_without_self);
    row.abs_delta_pct =
        n > 0 ? 100.0 * static_cast<double>(row.abs_delta) / static_cast<double>(n) : 0.0;

    QQPair q;
    q.author_id = author_id;
    q.x_percentile = Rational::of(100 * row.pos_with_self, n);
    q.y_percentile = Rational::of(100 * row.pos_without_self, n);
    impact.qq_pairs.push_back(std::move(q));

    impact.max_abs_delta = std::max(impact.max_abs_delta, row.abs_delta);
    impact.max_abs_delta_pct = std::max(impact.max_abs_delta_pct, row.abs_delta_pct);
    deltas.push_back(static_cast<double>(row.abs_delta));
    impact.rows.push_back(std::move(row));
  }

  if (!deltas.empty()) {
    std::sort(deltas.begin(), deltas.end());
    const std::size_t mid = deltas.size() / 2;
    impact.median_abs_delta =
        deltas.size() % 2 ? deltas[mid] : (deltas[mid - 1] + deltas[mid]) / 2.0;
    impact.median_abs_delta_pct =
        n > 0 ? 100.0 * impact.median_abs_delta / static_cast<double>(n) : 0.0;
  }
  return impact;
}

}  // namespace citecurve
