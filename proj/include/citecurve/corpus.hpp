#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "citecurve/rational.hpp"

namespace citecurve {

/// One incoming citation, carried so self-citations can be recognized later.
struct CitingEvent {
  std::string citing_pub_id;
  std::vector<std::string> citing_author_ids;  // non-empty

  friend bool operator==(const CitingEvent&, const CitingEvent&) = default;
};

/// A publication with its citation data in exactly one of two forms:
/// a bare count, or the full list of citing events.
struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::vector<std::string> author_ids;  // non-empty
  std::optional<std::int64_t> citation_count;
  std::optional<std::vector<CitingEvent>> citing_events;

  bool has_events() const { return citing_events.has_value(); }
  std::int64_t citations() const {
    return has_events() ? static_cast<std::int64_t>(citing_events->size()) : *citation_count;
  }

  friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

struct AuthorProfile {
  std::string author_id;
  std::string display_name;
  std::vector<PublicationRecord> publications;

  /// Minimum publication year; only meaningful when publications is non-empty.
  int first_pub_year() const;
  std::vector<std::int64_t> citation_counts() const;
  std::int64_t total_citations() const;
  const std::string& label() const { return display_name.empty() ? author_id : display_name; }

  friend bool operator==(const AuthorProfile&, const AuthorProfile&) = default;
};

using Corpus = std::vector<AuthorProfile>;

struct ParseOptions {
  // Admission thresholds (0 = admit everything). Profiles below either
  // threshold are skipped, not rejected.
  std::int64_t min_pubs = 0;
  std::int64_t min_cits = 0;
  // Non-fatal diagnostics (empty file, zero-publication profiles, skips).
  std::function<void(const std::string&)> warn;
};

/// Streaming JSON-lines reader: one author object per line. Invokes `fn`
/// in file order for every admitted profile. Malformed input throws
/// ValidationError naming the line and field; duplicate author ids throw
/// naming the id.
void for_each_author(std::istream& in, const ParseOptions& options,
                     const std::function<void(AuthorProfile&&)>& fn);

Corpus load_corpus(std::istream& in, const ParseOptions& options = {});
Corpus load_corpus(const std::string& path, const ParseOptions& options = {});

/// Canonical writer: keys in documented order, compact separators, LF line
/// per author. Output is byte-stable for fixture comparison.
std::string to_json_line(const AuthorProfile& profile);
void write_corpus(std::ostream& out, const Corpus& corpus);
void write_corpus(const std::string& path, const Corpus& corpus);

enum class SelfCitationScope {
  SingleAuthor,   // strict diagnostic mode: only the profiled author counts
  AllCoauthors,   // a citation is self if citing and cited share any author
};

/// Drops every citing event that shares an author with the cited paper
/// (per `scope`). Requires event-level data on every publication; throws
/// ValidationError when a counts-only record is hit.
AuthorProfile filter_self_citations(const AuthorProfile& profile, SelfCitationScope scope);

struct CorpusStats {
  std::int64_t n_authors = 0;
  std::int64_t n_publications = 0;
  std::int64_t n_citations = 0;
  std::int64_t pubs_min = 0;
  std::int64_t pubs_max = 0;
  std::int64_t cits_min = 0;
  std::int64_t cits_max = 0;
  Rational pubs_mean{};
  Rational cits_mean{};
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace citecurve
