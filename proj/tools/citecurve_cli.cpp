// citecurve: citation-curve analytics over JSON-lines author corpora.
// Subcommands: compute, rank, classify, distributions, qq, synth, stats,
// selfcite. Exit codes: 0 success, 1 runtime error, 2 usage/validation error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "citecurve/corpus.hpp"
#include "citecurve/csv.hpp"
#include "citecurve/curve.hpp"
#include "citecurve/errors.hpp"
#include "citecurve/ranking.hpp"
#include "citecurve/synth.hpp"

namespace fs = std::filesystem;
using namespace citecurve;

namespace {

void warn_to_stderr(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

struct CommonOpts {
  std::vector<std::string> inputs;
  std::vector<std::string> labels;
  std::string out;
  std::int64_t kappa = 1, epsilon = 1, tau = 1, sigma = 1, iota = 1;
  std::string weights_csv;
  int reference_year = 0;
  bool exclude_self = false;
  std::string self_scope = "all-coauthors";
  std::int64_t min_pubs = 0, min_cits = 0;

  CLI::Option* weights_opt = nullptr;
  std::vector<CLI::Option*> individual_weight_opts;
  CLI::Option* reference_year_opt = nullptr;
};

void add_input_flags(CLI::App* cmd, CommonOpts& o, bool multi) {
  auto* in = cmd->add_option("--input,-i", o.inputs, "Input corpus file (JSON lines)")->required();
  if (!multi) in->expected(1);
  if (multi) {
    cmd->add_option("--label", o.labels,
                    "Sample label per --input (defaults to the file stem)");
  }
  cmd->add_option("--min-pubs", o.min_pubs, "Admit only authors with at least this many publications")
      ->capture_default_str();
  cmd->add_option("--min-cits", o.min_cits, "Admit only authors with at least this many citations")
      ->capture_default_str();
  cmd->add_flag("--exclude-self-citations", o.exclude_self,
                "Drop self-citations before computing (requires citing-event data)");
  cmd->add_option("--self-scope", o.self_scope,
                  "Self-citation rule: all-coauthors (any shared author) or single-author")
      ->check(CLI::IsMember({"all-coauthors", "single-author"}))
      ->capture_default_str();
}

void add_weight_flags(CLI::App* cmd, CommonOpts& o) {
  o.individual_weight_opts = {
      cmd->add_option("--kappa", o.kappa, "Core-area weight")->capture_default_str(),
      cmd->add_option("--epsilon", o.epsilon, "Excess-area weight")->capture_default_str(),
      cmd->add_option("--tau", o.tau, "Tail-area weight")->capture_default_str(),
      cmd->add_option("--sigma", o.sigma, "Tail-complement weight")->capture_default_str(),
      cmd->add_option("--iota", o.iota, "Ideal-complement weight")->capture_default_str(),
  };
  o.weights_opt = cmd->add_option("--weights", o.weights_csv,
                                  "All five weights as kappa,epsilon,tau,sigma,iota");
}

void add_reference_year_flag(CLI::App* cmd, CommonOpts& o) {
  o.reference_year_opt =
      cmd->add_option("--reference-year", o.reference_year,
                      "Career end year used by metric m (career = ref - first + 1)");
}

std::int32_t checked_weight(std::int64_t v, const char* name) {
  if (v < INT32_MIN || v > INT32_MAX) {
    throw ValidationError(std::string(name) + " must fit in a 32-bit signed integer");
  }
  return static_cast<std::int32_t>(v);
}

IndexWeights resolve_weights(const CommonOpts& o) {
  bool any_individual = false;
  for (const auto* opt : o.individual_weight_opts) {
    if (opt && opt->count() > 0) any_individual = true;
  }
  if (o.weights_opt && o.weights_opt->count() > 0) {
    if (any_individual) {
      throw ValidationError("--weights conflicts with individual weight flags");
    }
    std::vector<std::int64_t> parsed;
    std::stringstream ss(o.weights_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t pos = 0;
        parsed.push_back(std::stoll(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ValidationError("--weights: \"" + item + "\" is not an integer");
      }
    }
    if (parsed.size() != 5) {
      throw ValidationError("--weights expects exactly 5 comma-separated integers");
    }
    return IndexWeights{checked_weight(parsed[0], "kappa"), checked_weight(parsed[1], "epsilon"),
                        checked_weight(parsed[2], "tau"), checked_weight(parsed[3], "sigma"),
                        checked_weight(parsed[4], "iota")};
  }
  return IndexWeights{checked_weight(o.kappa, "--kappa"), checked_weight(o.epsilon, "--epsilon"),
                      checked_weight(o.tau, "--tau"), checked_weight(o.sigma, "--sigma"),
                      checked_weight(o.iota, "--iota")};
}

MetricContext resolve_context(const CommonOpts& o) {
  MetricContext ctx;
  ctx.weights = resolve_weights(o);
  if (o.reference_year_opt && o.reference_year_opt->count() > 0) {
    ctx.reference_year = o.reference_year;
  }
  return ctx;
}

SelfCitationScope resolve_scope(const CommonOpts& o) {
  return o.self_scope == "single-author" ? SelfCitationScope::SingleAuthor
                                         : SelfCitationScope::AllCoauthors;
}

ParseOptions parse_options(const CommonOpts& o) {
  ParseOptions po;
  po.min_pubs = o.min_pubs;
  po.min_cits = o.min_cits;
  po.warn = warn_to_stderr;
  return po;
}

Corpus load_single(const CommonOpts& o) {
  Corpus corpus = load_corpus(o.inputs.at(0), parse_options(o));
  if (o.exclude_self) {
    const auto scope = resolve_scope(o);
    for (auto& profile : corpus) profile = filter_self_citations(profile, scope);
  }
  return corpus;
}

std::string label_for(const CommonOpts& o, std::size_t i) {
  if (i < o.labels.size()) return o.labels[i];
  return fs::path(o.inputs[i]).stem().string();
}

std::vector<std::pair<std::string, Corpus>> load_samples(const CommonOpts& o) {
  if (!o.labels.empty() && o.labels.size() != o.inputs.size()) {
    throw ValidationError("--label count must match --input count");
  }
  std::vector<std::pair<std::string, Corpus>> samples;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    Corpus corpus = load_corpus(o.inputs[i], parse_options(o));
    if (o.exclude_self) {
      const auto scope = resolve_scope(o);
      for (auto& profile : corpus) profile = filter_self_citations(profile, scope);
    }
    samples.emplace_back(label_for(o, i), std::move(corpus));
  }
  return samples;
}

// stdout by default; a file when --out is given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw IoError("write failure on output file");
  }

 private:
  std::ofstream file_;
};

MetricId parse_metric(const std::string& token, const char* flag) {
  const auto id = metric_from_string(token);
  if (!id) {
    throw ValidationError(std::string(flag) + ": unknown metric \"" + token +
                          "\" (expected one of h, c, c_per_p, pt, pi, m, c_t, c_tc, c_ic, c_e)");
  }
  return *id;
}

std::string format_metric_value(MetricId id, const Rational& v) {
  return csv::number(v, metric_is_fractional(id) ? 2 : 0);
}

// ---- compute ---------------------------------------------------------

struct ComputeOpts : CommonOpts {};

void run_compute(const ComputeOpts& o) {
  OutputTarget out(o.out);
  csv::write_row(out.stream(), {"author", "p", "C", "h", "C_T", "C_E", "C_H", "C_TC", "PT",
                                "C_IC", "PI", "class"});
  const IndexWeights weights = resolve_weights(o);
  const auto scope = resolve_scope(o);

  std::ifstream in(o.inputs.at(0), std::ios::binary);
  if (!in) throw ValidationError("cannot open corpus file: " + o.inputs.at(0));
  for_each_author(in, parse_options(o), [&](AuthorProfile&& profile) {
    if (o.exclude_self) profile = filter_self_citations(profile, scope);
    const AreaDecomposition d = decompose(build_curve(profile.citation_counts()));
    const std::int64_t pt = penalty_pt(d, weights);
    std::string cls = to_string(classify_author(pt));
    if (profile.publications.empty()) cls += " (no data)";
    csv::write_row(out.stream(),
                   {profile.label(), std::to_string(profile.publications.size()),
                    std::to_string(d.c_total), std::to_string(d.h), std::to_string(d.c_tail),
                    std::to_string(d.c_excess), std::to_string(d.c_core),
                    std::to_string(d.c_tail_complement), std::to_string(pt),
                    std::to_string(d.c_ideal_complement),
                    std::to_string(penalty_pi(d, weights)), cls});
  });
  out.finish();
}

// ---- rank ------------------------------------------------------------

struct RankOpts : CommonOpts {
  std::string by = "pt";
  std::string secondary = "h";
  std::int64_t top = 0, bottom = 0;
  CLI::Option* top_opt = nullptr;
  CLI::Option* bottom_opt = nullptr;
};

void run_rank(const RankOpts& o) {
  const MetricId primary = parse_metric(o.by, "--by");
  const MetricId secondary = parse_metric(o.secondary, "--secondary");
  const Corpus corpus = load_single(o);
  std::vector<std::string> warnings;
  const auto table = rank_table(
      corpus, primary, secondary, resolve_context(o),
      o.top_opt->count() ? std::optional(o.top) : std::nullopt,
      o.bottom_opt->count() ? std::optional(o.bottom) : std::nullopt, &warnings);
  for (const auto& w : warnings) warn_to_stderr(w);

  OutputTarget out(o.out);
  csv::write_row(out.stream(), {"author", "primary_val", "primary_pos", "secondary_val",
                                "secondary_pos", "p", "C", "C_per_p"});
  for (const auto& e : table) {
    csv::write_row(out.stream(),
                   {e.display_name.empty() ? e.author_id : e.display_name,
                    format_metric_value(primary, e.primary_value), std::to_string(e.primary_pos),
                    format_metric_value(secondary, e.secondary_value),
                    std::to_string(e.secondary_pos), std::to_string(e.p),
                    std::to_string(e.c_total), csv::number(e.c_per_p, 2)});
  }
  out.finish();
}

// ---- classify --------------------------------------------------------

struct ClassifyOpts : CommonOpts {
  std::string index = "pt";
  std::string kappas = "1";
};

void run_classify(const ClassifyOpts& o) {
  PenaltyIndex index;
  if (o.index == "pt" || o.index == "PT") {
    index = PenaltyIndex::PT;
  } else if (o.index == "pi" || o.index == "PI") {
    index = PenaltyIndex::PI;
  } else {
    throw ValidationError("--index must be pt or pi");
  }
  std::vector<std::int32_t> kappas;
  std::stringstream ss(o.kappas);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      kappas.push_back(checked_weight(std::stoll(item, &pos), "--kappa"));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw ValidationError("--kappa: \"" + item + "\" is not an integer");
    }
  }

  const auto samples = load_samples(o);
  std::vector<std::pair<std::string, const Corpus*>> views;
  views.reserve(samples.size());
  for (const auto& [label, corpus] : samples) views.emplace_back(label, &corpus);

  const auto cells = classification_counts(views, index, kappas, resolve_weights(o));
  OutputTarget out(o.out);
  csv::write_row(out.stream(), {"sample", "index", "kappa", "n_negative", "n_nonnegative",
                                "pct_negative", "pct_nonnegative"});
  const std::string index_name = index == PenaltyIndex::PT ? "PT" : "PI";
  for (const auto& c : cells) {
    csv::write_row(out.stream(),
                   {c.sample, index_name, std::to_string(c.kappa), std::to_string(c.n_negative),
                    std::to_string(c.n_nonnegative), csv::fixed(c.pct_negative, 2),
                    csv::fixed(c.pct_nonnegative, 2)});
  }
  out.finish();
}

// ---- distributions ---------------------------------------------------

struct DistributionsOpts : CommonOpts {
  std::string metrics = "h";
  int bins = 20;
};

void write_cdf(std::ostream& os, const std::vector<CdfRow>& rows) {
  csv::write_row(os, {"threshold", "fraction"});
  for (const auto& r : rows) {
    csv::write_row(os, {csv::fixed(r.threshold, 4), csv::fixed(r.fraction, 6)});
  }
}

void run_distributions(const DistributionsOpts& o) {
  std::vector<MetricId> metrics;
  std::stringstream ss(o.metrics);
  std::string item;
  while (std::getline(ss, item, ',')) metrics.push_back(parse_metric(item, "--metrics"));
  if (metrics.empty()) throw ValidationError("--metrics must name at least one metric");

  const Corpus corpus = load_single(o);
  const auto ctx = resolve_context(o);

  if (metrics.size() == 1 && (o.out.empty() || !fs::is_directory(o.out))) {
    OutputTarget out(o.out);
    write_cdf(out.stream(), cumulative_distribution(compute_metric(corpus, metrics[0], ctx), o.bins));
    out.finish();
    return;
  }
  if (o.out.empty()) {
    throw ValidationError("multiple metrics need --out pointing at a directory");
  }
  fs::create_directories(o.out);
  for (const MetricId metric : metrics) {
    const fs::path path = fs::path(o.out) / ("cdf_" + std::string(metric_token(metric)) + ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path.string());
    write_cdf(f, cumulative_distribution(compute_metric(corpus, metric, ctx), o.bins));
    if (!f.flush()) throw IoError("write failure: " + path.string());
  }
}

// ---- qq --------------------------------------------------------------

struct QqOpts : CommonOpts {
  std::string by = "h";
  std::string secondary = "pt";
  std::string correlation_out;
};

void run_qq(const QqOpts& o) {
  const MetricId x_metric = parse_metric(o.by, "--by");
  const MetricId y_metric = parse_metric(o.secondary, "--secondary");

  const auto samples = load_samples(o);
  Corpus merged;
  std::map<std::string, std::string> tags;
  for (const auto& [label, corpus] : samples) {
    for (const auto& profile : corpus) {
      if (tags.count(profile.author_id)) continue;  // first sample wins
      tags[profile.author_id] = label;
      merged.push_back(profile);
    }
  }

  const auto ctx = resolve_context(o);
  const auto pairs = qq_rank_pairs(merged, x_metric, y_metric, ctx, &tags);
  for (const MetricId metric : {x_metric, y_metric}) {
    if (metric == MetricId::PT || metric == MetricId::PI) {
      if (const auto split = zero_split_percentile(merged, metric, ctx)) {
        std::cerr << "note: " << metric_display(metric) << " zero-split percentile: "
                  << csv::fixed(split->to_double(), 4)
                  << " (authors ranked at or above it are non-negative)\n";
      }
      break;
    }
  }

  OutputTarget out(o.out);
  csv::write_row(out.stream(), {"author_id", "x_percentile", "y_percentile", "sample_tag"});
  for (const auto& q : pairs) {
    csv::write_row(out.stream(), {q.author_id, csv::fixed(q.x_percentile.to_double(), 4),
                                  csv::fixed(q.y_percentile.to_double(), 4), q.sample_tag});
  }
  out.finish();

  if (!o.correlation_out.empty()) {
    const auto r = rank_correlation(compute_metric(merged, x_metric, ctx),
                                    compute_metric(merged, y_metric, ctx));
    OutputTarget corr(o.correlation_out);
    csv::write_row(corr.stream(), {"x_metric", "y_metric", "spearman", "kendall"});
    csv::write_row(corr.stream(),
                   {std::string(metric_display(x_metric)), std::string(metric_display(y_metric)),
                    csv::fixed(r.spearman, 4), csv::fixed(r.kendall, 4)});
    corr.finish();
  }
}

// ---- synth -----------------------------------------------------------

struct SynthOpts {
  std::string preset = "random-like";
  std::string config;
  std::int64_t n = -1;
  std::uint64_t seed = 42;
  std::string out;
  bool events = false;
  double self_cite_rate = -1;
  std::string id_prefix;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* config_opt = nullptr;
};

void run_synth(const SynthOpts& o) {
  GeneratorSpec spec;
  if (o.config_opt->count() > 0) {
    if (o.preset_opt->count() > 0) {
      throw ValidationError("--preset and --config are mutually exclusive");
    }
    std::ifstream f(o.config, std::ios::binary);
    if (!f) throw ValidationError("cannot open generator config: " + o.config);
    std::stringstream buf;
    buf << f.rdbuf();
    spec = parse_generator_spec(buf.str());
  } else {
    spec = preset_spec(o.preset);
  }
  if (o.n >= 0) spec.n_authors = o.n;
  if (o.events) spec.events = true;
  if (o.self_cite_rate >= 0) {
    spec.self_cite_rate = o.self_cite_rate;
    spec.events = true;
  }
  if (!o.id_prefix.empty()) spec.id_prefix = o.id_prefix;

  const Corpus corpus = generate_synthetic(spec, o.seed);
  if (o.out.empty()) {
    write_corpus(std::cout, corpus);
    std::cout.flush();
  } else {
    write_corpus(o.out, corpus);
  }
}

// ---- stats -----------------------------------------------------------

struct StatsOpts : CommonOpts {};

void run_stats(const StatsOpts& o) {
  const auto samples = load_samples(o);
  OutputTarget out(o.out);
  csv::write_row(out.stream(),
                 {"sample", "n_authors", "n_publications", "pubs_per_author_mean",
                  "pubs_per_author_min", "pubs_per_author_max", "n_citations",
                  "cits_per_author_mean", "cits_per_author_min", "cits_per_author_max"});
  for (const auto& [label, corpus] : samples) {
    const CorpusStats s = corpus_stats(corpus);
    csv::write_row(out.stream(),
                   {label, std::to_string(s.n_authors), std::to_string(s.n_publications),
                    csv::fixed(s.pubs_mean.to_double(), 2), std::to_string(s.pubs_min),
                    std::to_string(s.pubs_max), std::to_string(s.n_citations),
                    csv::fixed(s.cits_mean.to_double(), 2), std::to_string(s.cits_min),
                    std::to_string(s.cits_max)});
  }
  out.finish();
}

// ---- selfcite --------------------------------------------------------

struct SelfciteOpts : CommonOpts {
  std::string metrics = "h,pt";
};

void run_selfcite(const SelfciteOpts& o) {
  if (o.out.empty()) {
    throw ValidationError("selfcite writes multiple files; --out must name a directory");
  }
  std::vector<MetricId> metrics;
  std::stringstream ss(o.metrics);
  std::string item;
  while (std::getline(ss, item, ',')) metrics.push_back(parse_metric(item, "--by"));
  if (metrics.empty()) throw ValidationError("--by must name at least one metric");

  const Corpus corpus = load_corpus(o.inputs.at(0), parse_options(o));
  const auto ctx = resolve_context(o);
  const auto scope = resolve_scope(o);
  fs::create_directories(o.out);

  std::ofstream summary(fs::path(o.out) / "summary.csv", std::ios::binary);
  if (!summary) throw IoError("cannot open summary.csv");
  csv::write_row(summary, {"metric", "n_authors", "median_abs_delta", "max_abs_delta",
                           "median_abs_delta_pct", "max_abs_delta_pct"});

  for (const MetricId metric : metrics) {
    const SelfCitationImpact impact = self_citation_impact(corpus, metric, ctx, scope);
    const std::string token(metric_token(metric));

    std::ofstream rows(fs::path(o.out) / ("impact_" + token + ".csv"), std::ios::binary);
    if (!rows) throw IoError("cannot open impact_" + token + ".csv");
    csv::write_row(rows, {"author_id", "pos_with_self", "pos_without_self", "abs_delta",
                          "abs_delta_pct"});
    for (const auto& r : impact.rows) {
      csv::write_row(rows, {r.author_id, std::to_string(r.pos_with_self),
                            std::to_string(r.pos_without_self), std::to_string(r.abs_delta),
                            csv::fixed(r.abs_delta_pct, 4)});
    }
    if (!rows.flush()) throw IoError("write failure: impact_" + token + ".csv");

    std::ofstream qq(fs::path(o.out) / ("qq_" + token + "_self_vs_noself.csv"), std::ios::binary);
    if (!qq) throw IoError("cannot open qq_" + token + "_self_vs_noself.csv");
    csv::write_row(qq, {"author_id", "x_percentile", "y_percentile", "sample_tag"});
    for (const auto& q : impact.qq_pairs) {
      csv::write_row(qq, {q.author_id, csv::fixed(q.x_percentile.to_double(), 4),
                          csv::fixed(q.y_percentile.to_double(), 4), q.sample_tag});
    }
    if (!qq.flush()) throw IoError("write failure: qq_" + token + "_self_vs_noself.csv");

    csv::write_row(summary, {std::string(metric_display(metric)),
                             std::to_string(impact.rows.size()),
                             csv::fixed(impact.median_abs_delta, 1),
                             std::to_string(impact.max_abs_delta),
                             csv::fixed(impact.median_abs_delta_pct, 4),
                             csv::fixed(impact.max_abs_delta_pct, 4)});
  }
  if (!summary.flush()) throw IoError("write failure: summary.csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-curve analytics: penalty areas, PT/PI indices, author rankings"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  auto* compute = app.add_subcommand(
      "compute", "Per-author areas and indices (p, C, h, C_T, C_E, C_H, C_TC, PT, C_IC, PI)");
  add_input_flags(compute, compute_opts, false);
  add_weight_flags(compute, compute_opts);
  compute->add_option("--out,-o", compute_opts.out, "Output CSV file (default: stdout)");

  RankOpts rank_opts;
  auto* rank = app.add_subcommand("rank", "Rank authors by a metric with cross-metric positions");
  add_input_flags(rank, rank_opts, false);
  add_weight_flags(rank, rank_opts);
  add_reference_year_flag(rank, rank_opts);
  rank->add_option("--by", rank_opts.by, "Primary metric")->capture_default_str();
  rank->add_option("--secondary", rank_opts.secondary, "Secondary metric")->capture_default_str();
  rank_opts.top_opt = rank->add_option("--top", rank_opts.top, "Keep only the first N entries");
  rank_opts.bottom_opt =
      rank->add_option("--bottom", rank_opts.bottom, "Keep only the last N entries");
  rank->add_option("--out,-o", rank_opts.out, "Output CSV file (default: stdout)");

  ClassifyOpts classify_opts;
  auto* classify =
      app.add_subcommand("classify", "Sign counts of PT or PI per sample and kappa value");
  add_input_flags(classify, classify_opts, true);
  classify->add_option("--index", classify_opts.index, "Penalty index: pt or pi")
      ->capture_default_str();
  // kappa is the swept parameter here; the other weights stay scalar.
  classify->add_option("--kappa", classify_opts.kappas, "Comma-separated kappa values, e.g. 1,2,4")
      ->capture_default_str();
  classify_opts.individual_weight_opts = {
      nullptr,
      classify->add_option("--epsilon", classify_opts.epsilon, "Excess-area weight")
          ->capture_default_str(),
      classify->add_option("--tau", classify_opts.tau, "Tail-area weight")->capture_default_str(),
      classify->add_option("--sigma", classify_opts.sigma, "Tail-complement weight")
          ->capture_default_str(),
      classify->add_option("--iota", classify_opts.iota, "Ideal-complement weight")
          ->capture_default_str(),
  };
  classify->add_option("--out,-o", classify_opts.out, "Output CSV file (default: stdout)");

  DistributionsOpts dist_opts;
  auto* distributions = app.add_subcommand(
      "distributions", "Cumulative distribution tables for one or more metrics");
  add_input_flags(distributions, dist_opts, false);
  add_weight_flags(distributions, dist_opts);
  add_reference_year_flag(distributions, dist_opts);
  distributions->add_option("--metrics", dist_opts.metrics, "Comma-separated metric list")
      ->capture_default_str();
  distributions->add_option("--bins", dist_opts.bins, "Number of thresholds")
      ->capture_default_str();
  distributions->add_option("--out,-o", dist_opts.out,
                            "Output file (single metric) or directory (multiple metrics)");

  QqOpts qq_opts;
  auto* qq = app.add_subcommand("qq", "Per-author percentile pairs under two metric rankings");
  add_input_flags(qq, qq_opts, true);
  add_weight_flags(qq, qq_opts);
  add_reference_year_flag(qq, qq_opts);
  qq->add_option("--by", qq_opts.by, "X-axis metric")->capture_default_str();
  qq->add_option("--secondary", qq_opts.secondary, "Y-axis metric")->capture_default_str();
  qq->add_option("--out,-o", qq_opts.out, "Output CSV file (default: stdout)");
  qq->add_option("--correlation-out", qq_opts.correlation_out,
                 "Also write a Spearman/Kendall summary CSV for the two rankings");

  SynthOpts synth_opts;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus (JSON lines)");
  synth_opts.preset_opt = synth->add_option("--preset", synth_opts.preset,
                                            "random-like | productive-like | top-h-like | "
                                            "selfcite-like")
                              ->capture_default_str();
  synth_opts.config_opt =
      synth->add_option("--config", synth_opts.config, "Generator spec as a JSON file");
  synth->add_option("--n", synth_opts.n, "Number of authors (overrides the preset)");
  synth->add_option("--seed", synth_opts.seed, "Generator seed")->capture_default_str();
  synth->add_flag("--events", synth_opts.events, "Emit citing events instead of bare counts");
  synth->add_option("--self-cite-rate", synth_opts.self_cite_rate,
                    "Target share of self-citations (implies --events)");
  synth->add_option("--id-prefix", synth_opts.id_prefix,
                    "Author id prefix (default a); keeps multiple samples disjoint");
  synth->add_option("--out,-o", synth_opts.out, "Output corpus file (default: stdout)");

  StatsOpts stats_opts;
  auto* stats = app.add_subcommand("stats", "Corpus statistics per sample");
  add_input_flags(stats, stats_opts, true);
  stats->add_option("--out,-o", stats_opts.out, "Output CSV file (default: stdout)");

  SelfciteOpts selfcite_opts;
  auto* selfcite = app.add_subcommand(
      "selfcite", "Rank displacement when self-citations are removed (impact + QQ files)");
  add_input_flags(selfcite, selfcite_opts, false);
  add_weight_flags(selfcite, selfcite_opts);
  add_reference_year_flag(selfcite, selfcite_opts);
  selfcite->add_option("--by", selfcite_opts.metrics, "Comma-separated metric list")
      ->capture_default_str();
  selfcite->add_option("--out,-o", selfcite_opts.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) run_compute(compute_opts);
    if (rank->parsed()) run_rank(rank_opts);
    if (classify->parsed()) run_classify(classify_opts);
    if (distributions->parsed()) run_distributions(dist_opts);
    if (qq->parsed()) run_qq(qq_opts);
    if (synth->parsed()) run_synth(synth_opts);
    if (stats->parsed()) run_stats(stats_opts);
    if (selfcite->parsed()) run_selfcite(selfcite_opts);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
