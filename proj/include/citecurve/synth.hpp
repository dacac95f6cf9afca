#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "citecurve/corpus.hpp"

namespace citecurve {

/// Publication-count distribution: uniform over [min,max], or a discrete
/// power law over the same range (mass proportional to p^-alpha).
struct PubCountDist {
  enum class Kind { Uniform, PowerLaw };
  Kind kind = Kind::Uniform;
  std::int64_t min = 10;
  std::int64_t max = 200;
  double alpha = 2.0;  // power-law only
};

/// Per-paper citation model: a truncated discrete power law over {0..cap}
/// with mass proportional to (k+1)^-alpha, optionally multiplied by a
/// per-author scale factor drawn from a small mixture.
struct CitationDist {
  double alpha = 2.2;
  std::int64_t cap = 2000;
  std::vector<double> scale_choices = {1.0};
  std::vector<double> scale_weights = {1.0};
};

struct GeneratorSpec {
  std::int64_t n_authors = 0;
  PubCountDist pubs;
  CitationDist citations;
  int year_min = 1985;
  int year_max = 2012;
  // Event-level output. self_cite_rate is the target share of citing events
  // that are self-citations; individual authors get rates {0, r, 2r} so the
  // filter experiments have real variation.
  bool events = false;
  double self_cite_rate = 0.0;
  double coauthor_prob = 0.25;
  // Author ids are id_prefix + index. Give each generated sample its own
  // prefix when the samples must stay disjoint under union semantics.
  std::string id_prefix = "a";
};

/// Built-in presets: "random-like", "productive-like", "top-h-like",
/// "selfcite-like". Throws ValidationError for unknown names.
GeneratorSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

/// Parses a generator spec from a JSON config document (same field names
/// as the struct; all fields optional, defaults as above).
GeneratorSpec parse_generator_spec(const std::string& json_text);

/// Deterministic: identical (spec, seed) pairs yield identical corpora.
Corpus generate_synthetic(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace citecurve
