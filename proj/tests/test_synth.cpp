#include "citecurve/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "citecurve/curve.hpp"
#include "citecurve/errors.hpp"
#include "citecurve/ranking.hpp"

using namespace citecurve;

TEST_SUITE_BEGIN("synth");

TEST_CASE("same spec and seed give byte-identical corpora") {
  GeneratorSpec spec = preset_spec("random-like");
  spec.n_authors = 40;
  std::ostringstream first, second;
  write_corpus(first, generate_synthetic(spec, 7));
  write_corpus(second, generate_synthetic(spec, 7));
  CHECK(first.str() == second.str());

  std::ostringstream other_seed;
  write_corpus(other_seed, generate_synthetic(spec, 8));
  CHECK(first.str() != other_seed.str());
}

TEST_CASE("n_authors zero gives an empty corpus") {
  GeneratorSpec spec = preset_spec("random-like");
  spec.n_authors = 0;
  CHECK(generate_synthetic(spec, 1).empty());
}

TEST_CASE("productive-like respects the publication floor") {
  GeneratorSpec spec = preset_spec("productive-like");
  spec.n_authors = 60;
  const Corpus corpus = generate_synthetic(spec, 42);
  REQUIRE(corpus.size() == 60);
  for (const auto& author : corpus) {
    CHECK(author.publications.size() >= 354);
    CHECK(author.publications.size() <= 1172);
  }
}

TEST_CASE("generated corpora survive a write/load round trip") {
  GeneratorSpec spec = preset_spec("selfcite-like");
  spec.n_authors = 12;
  const Corpus corpus = generate_synthetic(spec, 5);
  std::ostringstream out;
  write_corpus(out, corpus);
  std::istringstream in(out.str());
  CHECK(load_corpus(in) == corpus);
}

TEST_CASE("selfcite-like injects roughly the target share of self events") {
  GeneratorSpec spec = preset_spec("selfcite-like");
  spec.n_authors = 150;
  const Corpus corpus = generate_synthetic(spec, 42);

  std::int64_t total = 0, self = 0;
  for (const auto& author : corpus) {
    for (const auto& pub : author.publications) {
      REQUIRE(pub.has_events());
      for (const auto& ev : *pub.citing_events) {
        ++total;
        for (const auto& id : ev.citing_author_ids) {
          if (std::find(pub.author_ids.begin(), pub.author_ids.end(), id) !=
              pub.author_ids.end()) {
            ++self;
            break;
          }
        }
      }
    }
  }
  REQUIRE(total > 0);
  const double share = static_cast<double>(self) / static_cast<double>(total);
  CHECK(share > 0.10);
  CHECK(share < 0.35);
}

TEST_CASE("filtering a generated events corpus is monotone per author") {
  GeneratorSpec spec = preset_spec("selfcite-like");
  spec.n_authors = 50;
  for (const auto& author : generate_synthetic(spec, 9)) {
    const auto filtered = filter_self_citations(author, SelfCitationScope::AllCoauthors);
    CHECK(filtered.total_citations() <= author.total_citations());
    CHECK(h_index(build_curve(filtered.citation_counts())) <=
          h_index(build_curve(author.citation_counts())));
  }
}

TEST_CASE("preset shapes hold at the documented scale") {
  // random-like: most authors sit under h = 10.
  {
    const Corpus corpus = generate_synthetic(preset_spec("random-like"), 42);
    std::int64_t below10 = 0;
    for (const auto& author : corpus) {
      if (h_index(build_curve(author.citation_counts())) < 10) ++below10;
    }
    const double share = 100.0 * static_cast<double>(below10) / static_cast<double>(corpus.size());
    CHECK(share >= 70.0);
    CHECK(share <= 90.0);
  }
  // top-h-like: boosted citation scale pushes nearly everyone past h = 40.
  {
    const Corpus corpus = generate_synthetic(preset_spec("top-h-like"), 42);
    std::vector<std::int64_t> hs;
    std::int64_t ge40 = 0;
    for (const auto& author : corpus) {
      hs.push_back(h_index(build_curve(author.citation_counts())));
      if (hs.back() >= 40) ++ge40;
    }
    std::sort(hs.begin(), hs.end());
    CHECK(hs[hs.size() / 2] >= 40);
    CHECK(10 * ge40 >= 9 * static_cast<std::int64_t>(corpus.size()));
  }
}

TEST_CASE("frozen classification counts for the shipped productive preset") {
  // Values computed once from (productive-like, n=500, seed=42) and pinned
  // so generator drift is caught immediately.
  const Corpus corpus = generate_synthetic(preset_spec("productive-like"), 42);
  const std::vector<std::pair<std::string, const Corpus*>> samples = {{"productive", &corpus}};
  const auto pt = classification_counts(samples, PenaltyIndex::PT, {1, 2, 4}, IndexWeights{});
  REQUIRE(pt.size() == 3);
  CHECK(pt[0].n_negative == 454);
  CHECK(pt[0].n_nonnegative == 46);
  CHECK(pt[1].n_negative == 443);
  CHECK(pt[2].n_negative == 428);
  const auto pi = classification_counts(samples, PenaltyIndex::PI, {1}, IndexWeights{});
  CHECK(pi[0].n_negative == 500);
  CHECK(pi[0].n_nonnegative == 0);
}

TEST_CASE("invalid generator parameters are rejected") {
  GeneratorSpec spec = preset_spec("random-like");
  spec.citations.alpha = 1.0;
  CHECK_THROWS_AS(generate_synthetic(spec, 1), ValidationError);

  spec = preset_spec("random-like");
  spec.pubs.min = 50;
  spec.pubs.max = 10;
  CHECK_THROWS_WITH_AS(generate_synthetic(spec, 1), doctest::Contains("empty"), ValidationError);

  spec = preset_spec("random-like");
  spec.self_cite_rate = 0.2;  // counts representation cannot carry self-citations
  CHECK_THROWS_AS(generate_synthetic(spec, 1), ValidationError);

  CHECK_THROWS_AS(preset_spec("nope"), ValidationError);
}

TEST_CASE("generator spec parses from JSON with strict field checking") {
  const GeneratorSpec spec = parse_generator_spec(R"({
    "n_authors": 25,
    "pubs": {"kind": "uniform", "min": 5, "max": 9},
    "citations": {"alpha": 2.5, "cap": 100},
    "events": true,
    "self_cite_rate": 0.1
  })");
  CHECK(spec.n_authors == 25);
  CHECK(spec.pubs.min == 5);
  CHECK(spec.pubs.max == 9);
  CHECK(spec.citations.alpha == 2.5);
  CHECK(spec.events);
  const Corpus corpus = generate_synthetic(spec, 3);
  CHECK(corpus.size() == 25);

  CHECK_THROWS_WITH_AS(parse_generator_spec(R"({"n_author": 5})"),
                       doctest::Contains("unknown field"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_generator_spec("[1,2]"), doctest::Contains("object"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_generator_spec("{"), doctest::Contains("invalid JSON"),
                       ValidationError);

  const GeneratorSpec from_preset = parse_generator_spec(R"({"preset": "top-h-like", "n_authors": 7})");
  CHECK(from_preset.pubs.min == 92);
  CHECK(from_preset.n_authors == 7);
}

TEST_SUITE_END();
