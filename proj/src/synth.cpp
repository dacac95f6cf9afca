#include "citecurve/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "citecurve/errors.hpp"

namespace citecurve {

namespace {

// Sampling helpers are hand-rolled on top of mt19937_64 so that a given
// (spec, seed) pair yields the same corpus on every platform; the standard
// distributions are implementation-defined.

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Lemire's unbiased bounded sampler.
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (lo < threshold) {
      m = static_cast<unsigned __int128>(rng()) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF sampler over a fixed weight table.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& weights) {
    cdf_.reserve(weights.size());
    double total = 0;
    for (double w : weights) {
      total += w;
      cdf_.push_back(total);
    }
    for (double& c : cdf_) c /= total;
    cdf_.back() = 1.0;
  }

  std::size_t sample(std::mt19937_64& rng) const {
    const double u = unit(rng);
    return static_cast<std::size_t>(
        std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

// Truncated discrete power law on {0..cap}: P(k) proportional to (k+1)^-alpha.
class PowerLawSampler {
 public:
  PowerLawSampler(double alpha, std::int64_t cap) {
    std::vector<double> weights(static_cast<std::size_t>(cap) + 1);
    double total_w = 0, total_kw = 0;
    for (std::int64_t k = 0; k <= cap; ++k) {
      const double w = std::pow(static_cast<double>(k + 1), -alpha);
      weights[static_cast<std::size_t>(k)] = w;
      total_w += w;
      total_kw += static_cast<double>(k) * w;
    }
    mean_ = total_kw / total_w;
    sampler_.emplace(weights);
  }

  std::int64_t sample(std::mt19937_64& rng) const {
    return static_cast<std::int64_t>(sampler_->sample(rng));
  }
  double mean() const { return mean_; }

 private:
  std::optional<DiscreteSampler> sampler_;
  double mean_ = 0;
};

std::int64_t poisson(std::mt19937_64& rng, double lambda) {
  // Knuth's method; preset lambdas stay small.
  if (lambda <= 0) return 0;
  const double limit = std::exp(-lambda);
  std::int64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= unit(rng);
  } while (p > limit);
  return k - 1;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n_authors < 0) throw ValidationError("n_authors must be >= 0");
  if (spec.pubs.min < 0) throw ValidationError("pubs.min must be >= 0");
  if (spec.pubs.min > spec.pubs.max) throw ValidationError("pubs range is empty (min > max)");
  if (spec.pubs.kind == PubCountDist::Kind::PowerLaw && spec.pubs.alpha <= 1.0) {
    throw ValidationError("pubs.alpha must be > 1");
  }
  if (spec.citations.alpha <= 1.0) throw ValidationError("citations.alpha must be > 1");
  if (spec.citations.cap < 0) throw ValidationError("citations.cap must be >= 0");
  const auto& sc = spec.citations.scale_choices;
  const auto& sw = spec.citations.scale_weights;
  if (sc.empty() || sc.size() != sw.size()) {
    throw ValidationError("citations.scale_choices and scale_weights must be non-empty "
                          "and the same length");
  }
  for (double s : sc) {
    if (s < 0) throw ValidationError("citation scale factors must be >= 0");
  }
  for (double w : sw) {
    if (w <= 0) throw ValidationError("citation scale weights must be > 0");
  }
  if (spec.year_min > spec.year_max) throw ValidationError("year range is empty");
  if (spec.self_cite_rate < 0 || spec.self_cite_rate >= 1) {
    throw ValidationError("self_cite_rate must lie in [0, 1)");
  }
  if (spec.self_cite_rate > 0 && !spec.events) {
    throw ValidationError("self_cite_rate requires events=true (counts carry no authorship)");
  }
  if (spec.coauthor_prob < 0 || spec.coauthor_prob > 1) {
    throw ValidationError("coauthor_prob must lie in [0, 1]");
  }
}

std::int64_t sample_pub_count(std::mt19937_64& rng, const PubCountDist& dist,
                              const std::optional<PowerLawSampler>& tail_sampler) {
  if (dist.kind == PubCountDist::Kind::Uniform) {
    return dist.min + static_cast<std::int64_t>(
                          bounded(rng, static_cast<std::uint64_t>(dist.max - dist.min + 1)));
  }
  return dist.min + tail_sampler->sample(rng);
}

}  // namespace

Corpus generate_synthetic(const GeneratorSpec& spec, std::uint64_t seed) {
  validate(spec);
  std::mt19937_64 rng(seed);

  const PowerLawSampler citation_sampler(spec.citations.alpha, spec.citations.cap);
  std::optional<PowerLawSampler> pub_tail_sampler;
  if (spec.pubs.kind == PubCountDist::Kind::PowerLaw) {
    pub_tail_sampler.emplace(spec.pubs.alpha, spec.pubs.max - spec.pubs.min);
  }
  const DiscreteSampler scale_sampler(spec.citations.scale_weights);
  // Authors self-cite at 0x, 1x or 2x the target rate (mean = target).
  const DiscreteSampler rate_sampler(std::vector<double>{1, 2, 1});
  const double year_span = static_cast<double>(spec.year_max - spec.year_min + 1);

  Corpus corpus;
  corpus.reserve(static_cast<std::size_t>(spec.n_authors));
  for (std::int64_t i = 0; i < spec.n_authors; ++i) {
    AuthorProfile author;
    author.author_id = spec.id_prefix + std::to_string(i);
    author.display_name = "Author " + author.author_id;

    const std::int64_t n_pubs = sample_pub_count(rng, spec.pubs, pub_tail_sampler);
    const double scale = spec.citations.scale_choices[scale_sampler.sample(rng)];
    double self_rate = 0;
    if (spec.events && spec.self_cite_rate > 0) {
      self_rate = spec.self_cite_rate * static_cast<double>(rate_sampler.sample(rng));
    }
    const double self_lambda =
        self_rate > 0 ? self_rate / (1.0 - self_rate) * citation_sampler.mean() * scale : 0;
    // External citer ids start with "x"; coauthor ids embed the author id.
    // Neither can collide with any corpus author id.
    const std::string coauthors[2] = {"c" + author.author_id + "a",
                                      "c" + author.author_id + "b"};

    author.publications.reserve(static_cast<std::size_t>(n_pubs));
    for (std::int64_t j = 0; j < n_pubs; ++j) {
      PublicationRecord pub;
      pub.pub_id = author.author_id + "_p" + std::to_string(j);
      pub.year = spec.year_min +
                 static_cast<int>(bounded(rng, static_cast<std::uint64_t>(year_span)));
      pub.author_ids.push_back(author.author_id);
      if (unit(rng) < spec.coauthor_prob) {
        pub.author_ids.push_back(coauthors[bounded(rng, 2)]);
      }
      const auto organic =
          static_cast<std::int64_t>(static_cast<double>(citation_sampler.sample(rng)) * scale);
      if (!spec.events) {
        pub.citation_count = organic;
      } else {
        std::vector<CitingEvent> events;
        const std::string stem = author.author_id + "_" + std::to_string(j) + "_";
        for (std::int64_t k = 0; k < organic; ++k) {
          CitingEvent ev;
          ev.citing_pub_id = "x" + stem + std::to_string(k);
          ev.citing_author_ids.push_back("xa" + stem + std::to_string(k));
          events.push_back(std::move(ev));
        }
        const std::int64_t n_self = poisson(rng, self_lambda);
        for (std::int64_t k = 0; k < n_self; ++k) {
          CitingEvent ev;
          ev.citing_pub_id = "s" + stem + std::to_string(k);
          // Some self-citations arrive via a coauthor, which only the
          // all-coauthors scope recognizes.
          if (pub.author_ids.size() > 1 && unit(rng) < 0.3) {
            ev.citing_author_ids.push_back(pub.author_ids[1]);
          } else {
            ev.citing_author_ids.push_back(author.author_id);
          }
          events.push_back(std::move(ev));
        }
        pub.citing_events = std::move(events);
      }
      author.publications.push_back(std::move(pub));
    }
    corpus.push_back(std::move(author));
  }
  return corpus;
}

GeneratorSpec preset_spec(const std::string& name) {
  GeneratorSpec spec;
  if (name == "random-like") {
    spec.n_authors = 500;
    spec.pubs = {PubCountDist::Kind::Uniform, 10, 200, 2.0};
    spec.citations = {2.3, 2000, {1.0, 2.5, 5.0}, {0.72, 0.18, 0.10}};
  } else if (name == "productive-like") {
    spec.n_authors = 500;
    spec.pubs = {PubCountDist::Kind::Uniform, 354, 1172, 2.0};
    spec.citations = {1.9, 3000, {1.0, 4.0, 10.0, 22.0}, {0.62, 0.25, 0.08, 0.05}};
  } else if (name == "top-h-like") {
    spec.n_authors = 500;
    spec.pubs = {PubCountDist::Kind::Uniform, 92, 1172, 2.0};
    spec.citations = {1.8, 3000, {12.0, 26.0}, {0.5, 0.5}};
  } else if (name == "selfcite-like") {
    spec.n_authors = 300;
    spec.pubs = {PubCountDist::Kind::Uniform, 10, 120, 2.0};
    spec.citations = {2.0, 300, {1.0, 3.0}, {0.8, 0.2}};
    spec.events = true;
    spec.self_cite_rate = 0.2;
    spec.coauthor_prob = 0.3;
  } else {
    throw ValidationError("unknown preset \"" + name + "\"; available: random-like, "
                          "productive-like, top-h-like, selfcite-like");
  }
  return spec;
}

std::vector<std::string> preset_names() {
  return {"random-like", "productive-like", "top-h-like", "selfcite-like"};
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& what) {
  throw ValidationError("generator spec: " + what);
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    bad_config(std::string(key) + " has the wrong type");
  }
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_config(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_config("top level must be an object");

  static const std::vector<std::string> known = {
      "preset",   "n_authors", "pubs",           "citations",     "year_min",
      "year_max", "events",    "self_cite_rate", "coauthor_prob", "id_prefix"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      bad_config("unknown field \"" + key + "\"");
    }
  }

  GeneratorSpec spec;
  if (doc.contains("preset")) {
    std::string preset;
    read_field(doc, "preset", preset);
    spec = preset_spec(preset);
  }
  read_field(doc, "n_authors", spec.n_authors);
  if (doc.contains("pubs")) {
    const json& p = doc.at("pubs");
    if (!p.is_object()) bad_config("pubs must be an object");
    std::string kind = spec.pubs.kind == PubCountDist::Kind::Uniform ? "uniform" : "power-law";
    read_field(p, "kind", kind);
    if (kind == "uniform") {
      spec.pubs.kind = PubCountDist::Kind::Uniform;
    } else if (kind == "power-law") {
      spec.pubs.kind = PubCountDist::Kind::PowerLaw;
    } else {
      bad_config("pubs.kind must be \"uniform\" or \"power-law\"");
    }
    read_field(p, "min", spec.pubs.min);
    read_field(p, "max", spec.pubs.max);
    read_field(p, "alpha", spec.pubs.alpha);
  }
  if (doc.contains("citations")) {
    const json& c = doc.at("citations");
    if (!c.is_object()) bad_config("citations must be an object");
    read_field(c, "alpha", spec.citations.alpha);
    read_field(c, "cap", spec.citations.cap);
    read_field(c, "scale_choices", spec.citations.scale_choices);
    read_field(c, "scale_weights", spec.citations.scale_weights);
  }
  read_field(doc, "year_min", spec.year_min);
  read_field(doc, "year_max", spec.year_max);
  read_field(doc, "events", spec.events);
  read_field(doc, "self_cite_rate", spec.self_cite_rate);
  read_field(doc, "coauthor_prob", spec.coauthor_prob);
  read_field(doc, "id_prefix", spec.id_prefix);
  return spec;
}

}  // namespace citecurve
