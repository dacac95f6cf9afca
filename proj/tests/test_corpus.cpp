#include "citecurve/corpus.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "citecurve/curve.hpp"
#include "citecurve/errors.hpp"

using namespace citecurve;

namespace {

Corpus load_text(const std::string& text, const ParseOptions& options = {}) {
  std::istringstream in(text);
  return load_corpus(in, options);
}

AuthorProfile event_profile() {
  // One author, two publications, first one co-authored.
  AuthorProfile p;
  p.author_id = "a1";
  p.display_name = "Author One";
  PublicationRecord pub1;
  pub1.pub_id = "p1";
  pub1.year = 2001;
  pub1.author_ids = {"a1", "a2"};
  pub1.citing_events = {
      {"q1", {"a2", "a9"}},  // coauthor self-citation
      {"q2", {"a7"}},        // independent
  };
  PublicationRecord pub2;
  pub2.pub_id = "p2";
  pub2.year = 2003;
  pub2.author_ids = {"a1"};
  pub2.citing_events = {
      {"q3", {"a1"}},        // own self-citation
      {"q4", {"a5", "a6"}},  // independent
      {"q5", {"a9"}},        // independent (a9 is not an author of p2)
  };
  p.publications = {pub1, pub2};
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("corpus");

TEST_CASE("worked-example fixture loads and reproduces the expected rows") {
  const Corpus corpus = load_corpus(std::string(CITECURVE_DATA_DIR) + "/worked_example_authors.jsonl");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].author_id == "A");
  CHECK(corpus[1].author_id == "B");
  CHECK(corpus[0].publications.size() == 13);
  CHECK(corpus[1].publications.size() == 24);

  const auto a = decompose(build_curve(corpus[0].citation_counts()));
  CHECK(a == AreaDecomposition{10, 177, 165, 12, 65, 18, 33, 3});
  const auto b = decompose(build_curve(corpus[1].citation_counts()));
  CHECK(b == AreaDecomposition{10, 177, 165, 12, 65, 128, 404, 14});
}

TEST_CASE("round trip through the canonical writer") {
  const std::string path = std::string(CITECURVE_DATA_DIR) + "/worked_example_authors.jsonl";
  const Corpus corpus = load_corpus(path);

  std::ostringstream rewritten;
  write_corpus(rewritten, corpus);
  std::ifstream f(path, std::ios::binary);
  std::stringstream original;
  original << f.rdbuf();
  CHECK(rewritten.str() == original.str());  // fixture is in canonical form

  CHECK(load_text(rewritten.str()) == corpus);
}

TEST_CASE("round trip preserves events and non-ascii names") {
  Corpus corpus = {event_profile()};
  corpus[0].display_name = "K\xc3\xa1rol\xc3\xbd, \"the\" bench\tmark";
  std::ostringstream out;
  write_corpus(out, corpus);
  CHECK(load_text(out.str()) == corpus);
}

TEST_CASE("empty file loads as an empty corpus with a warning") {
  std::vector<std::string> warnings;
  ParseOptions options;
  options.warn = [&](const std::string& w) { warnings.push_back(w); };
  CHECK(load_text("", options).empty());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0] == "corpus is empty");
}

TEST_CASE("malformed input names the line and field") {
  CHECK_THROWS_WITH_AS(load_text("{\"author_id\":\"a\"}\n"),
                       doctest::Contains("line 1"), ValidationError);
  CHECK_THROWS_WITH_AS(
      load_text(R"({"author_id":"a","display_name":"","publications":[]})"
                "\n"
                R"({"author_id":"b","display_name":"","publications":[{"pub_id":"p","year":2000,"author_ids":["b"],"citation_count":-1}]})"
                "\n"),
      doctest::Contains("line 2: publications[0].citation_count"), ValidationError);
  CHECK_THROWS_WITH_AS(load_text("not json\n"), doctest::Contains("invalid JSON"),
                       ValidationError);
}

TEST_CASE("mixed citation representations are rejected") {
  CHECK_THROWS_WITH_AS(
      load_text(R"({"author_id":"a","display_name":"","publications":[{"pub_id":"p","year":2000,"author_ids":["a"],"citation_count":3,"citing_events":[]}]})"
                "\n"),
      doctest::Contains("exactly one of citation_count or citing_events"), ValidationError);
  CHECK_THROWS_WITH_AS(
      load_text(R"({"author_id":"a","display_name":"","publications":[{"pub_id":"p","year":2000,"author_ids":["a"]}]})"
                "\n"),
      doctest::Contains("exactly one of"), ValidationError);
}

TEST_CASE("duplicate author ids are rejected by id") {
  const std::string author = R"({"author_id":"dup","display_name":"","publications":[]})";
  CHECK_THROWS_WITH_AS(load_text(author + "\n" + author + "\n"),
                       doctest::Contains("duplicate author_id \"dup\""), ValidationError);
}

TEST_CASE("author_ids must be non-empty") {
  CHECK_THROWS_WITH_AS(
      load_text(R"({"author_id":"a","display_name":"","publications":[{"pub_id":"p","year":2000,"author_ids":[],"citation_count":1}]})"
                "\n"),
      doctest::Contains("author_ids: must not be empty"), ValidationError);
}

TEST_CASE("admission thresholds skip without failing") {
  const std::string text =
      R"({"author_id":"small","display_name":"","publications":[{"pub_id":"p","year":2000,"author_ids":["small"],"citation_count":1}]})"
      "\n"
      R"({"author_id":"big","display_name":"","publications":[{"pub_id":"q0","year":2000,"author_ids":["big"],"citation_count":5},{"pub_id":"q1","year":2001,"author_ids":["big"],"citation_count":5}]})"
      "\n";
  ParseOptions options;
  options.min_pubs = 2;
  const Corpus corpus = load_text(text, options);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].author_id == "big");
}

TEST_CASE("filter_self_citations applies the shared-author rule") {
  const AuthorProfile p = event_profile();

  const AuthorProfile all = filter_self_citations(p, SelfCitationScope::AllCoauthors);
  // p1: the {a2,a9} event shares coauthor a2; only {a7} survives.
  CHECK(all.publications[0].citing_events->size() == 1);
  CHECK(all.publications[0].citations() == 1);
  CHECK((*all.publications[0].citing_events)[0].citing_pub_id == "q2");
  // p2: only the {a1} event is self.
  CHECK(all.publications[1].citations() == 2);

  const AuthorProfile single = filter_self_citations(p, SelfCitationScope::SingleAuthor);
  // Single-author scope keeps the coauthor citation on p1.
  CHECK(single.publications[0].citations() == 2);
  CHECK(single.publications[1].citations() == 2);
}

TEST_CASE("filter is idempotent and a fixed point without overlaps") {
  const AuthorProfile p = event_profile();
  const AuthorProfile once = filter_self_citations(p, SelfCitationScope::AllCoauthors);
  const AuthorProfile twice = filter_self_citations(once, SelfCitationScope::AllCoauthors);
  CHECK(once == twice);

  AuthorProfile clean = p;
  (*clean.publications[0].citing_events) = {{"q2", {"a7"}}};
  (*clean.publications[1].citing_events) = {{"q4", {"a5"}}};
  CHECK(filter_self_citations(clean, SelfCitationScope::AllCoauthors) == clean);
}

TEST_CASE("filter requires event data") {
  AuthorProfile p;
  p.author_id = "a";
  PublicationRecord pub;
  pub.pub_id = "p";
  pub.year = 2000;
  pub.author_ids = {"a"};
  pub.citation_count = 4;
  p.publications = {pub};
  CHECK_THROWS_WITH_AS(filter_self_citations(p, SelfCitationScope::AllCoauthors),
                       doctest::Contains("requires citing-event data"), ValidationError);
}

TEST_CASE("filter keeps per-publication counts pointwise bounded") {
  const AuthorProfile p = event_profile();
  const AuthorProfile filtered = filter_self_citations(p, SelfCitationScope::AllCoauthors);
  REQUIRE(filtered.publications.size() == p.publications.size());
  for (std::size_t i = 0; i < p.publications.size(); ++i) {
    CHECK(filtered.publications[i].citations() <= p.publications[i].citations());
  }
  const auto h_before = h_index(build_curve(p.citation_counts()));
  const auto h_after = h_index(build_curve(filtered.citation_counts()));
  CHECK(h_after <= h_before);
}

TEST_CASE("corpus_stats matches hand sums for the worked pair") {
  const Corpus corpus = load_corpus(std::string(CITECURVE_DATA_DIR) + "/worked_example_authors.jsonl");
  const CorpusStats s = corpus_stats(corpus);
  CHECK(s.n_authors == 2);
  CHECK(s.n_publications == 37);
  CHECK(s.n_citations == 354);
  CHECK(s.pubs_min == 13);
  CHECK(s.pubs_max == 24);
  CHECK(s.cits_min == 177);
  CHECK(s.cits_max == 177);
  CHECK(s.pubs_mean == Rational::of(37, 2));
  CHECK(s.cits_mean == Rational::of(177, 1));

  CHECK(corpus_stats({}).n_authors == 0);
  CHECK(corpus_stats({corpus[0]}).n_publications == 13);
  CHECK(corpus_stats({corpus[0]}).n_citations == 177);
}

TEST_CASE("stats are additive across parts") {
  const Corpus corpus = load_corpus(std::string(CITECURVE_DATA_DIR) + "/worked_example_authors.jsonl");
  const auto merged = corpus_stats(corpus);
  const auto a = corpus_stats({corpus[0]});
  const auto b = corpus_stats({corpus[1]});
  CHECK(merged.n_authors == a.n_authors + b.n_authors);
  CHECK(merged.n_publications == a.n_publications + b.n_publications);
  CHECK(merged.n_citations == a.n_citations + b.n_citations);
  CHECK(merged.pubs_min == std::min(a.pubs_min, b.pubs_min));
  CHECK(merged.pubs_max == std::max(a.pubs_max, b.pubs_max));
}

TEST_SUITE_END();
