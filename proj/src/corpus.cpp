#include "citecurve/corpus.hpp"

#include <rapidjson/document.h>
#include <rapidjson/error/en.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "citecurve/errors.hpp"

namespace citecurve {

int AuthorProfile::first_pub_year() const {
  int min_year = std::numeric_limits<int>::max();
  for (const auto& pub : publications) min_year = std::min(min_year, pub.year);
  return publications.empty() ? 0 : min_year;
}

std::vector<std::int64_t> AuthorProfile::citation_counts() const {
  std::vector<std::int64_t> counts;
  counts.reserve(publications.size());
  for (const auto& pub : publications) counts.push_back(pub.citations());
  return counts;
}

std::int64_t AuthorProfile::total_citations() const {
  std::int64_t total = 0;
  for (const auto& pub : publications) total += pub.citations();
  return total;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

std::string json_string(const rapidjson::Value& v) {
  return std::string(v.GetString(), v.GetStringLength());
}

// Field labels for diagnostics are built lazily: the loader's hot path
// must not allocate description strings per record.
using FieldName = std::function<std::string()>;

std::vector<std::string> parse_id_array(const rapidjson::Value& v, std::size_t line_no,
                                        const FieldName& field) {
  if (!v.IsArray()) fail(line_no, field() + ": must be an array of strings");
  std::vector<std::string> ids;
  ids.reserve(v.Size());
  for (const auto& e : v.GetArray()) {
    if (!e.IsString()) fail(line_no, field() + ": must be an array of strings");
    ids.push_back(json_string(e));
  }
  if (ids.empty()) fail(line_no, field() + ": must not be empty");
  return ids;
}

PublicationRecord parse_publication(const rapidjson::Value& v, std::size_t line_no,
                                    std::size_t pub_index) {
  const FieldName field = [pub_index] {
    return "publications[" + std::to_string(pub_index) + "]";
  };
  if (!v.IsObject()) fail(line_no, field() + ": must be an object");
  PublicationRecord pub;

  const auto pub_id = v.FindMember("pub_id");
  if (pub_id == v.MemberEnd() || !pub_id->value.IsString())
    fail(line_no, field() + ".pub_id: required string");
  pub.pub_id = json_string(pub_id->value);

  const auto year = v.FindMember("year");
  if (year == v.MemberEnd() || !year->value.IsInt())
    fail(line_no, field() + ".year: required integer");
  pub.year = year->value.GetInt();

  const auto authors = v.FindMember("author_ids");
  if (authors == v.MemberEnd()) fail(line_no, field() + ".author_ids: required");
  pub.author_ids =
      parse_id_array(authors->value, line_no, [&] { return field() + ".author_ids"; });

  const auto count = v.FindMember("citation_count");
  const auto events = v.FindMember("citing_events");
  const bool has_count = count != v.MemberEnd();
  const bool has_events = events != v.MemberEnd();
  if (has_count == has_events) {
    fail(line_no, field() + ": exactly one of citation_count or citing_events must be present");
  }
  if (has_count) {
    if (!count->value.IsInt64() || count->value.GetInt64() < 0)
      fail(line_no, field() + ".citation_count: must be a non-negative integer");
    pub.citation_count = count->value.GetInt64();
  } else {
    if (!events->value.IsArray()) fail(line_no, field() + ".citing_events: must be an array");
    std::vector<CitingEvent> parsed;
    parsed.reserve(events->value.Size());
    std::size_t k = 0;
    for (const auto& ev : events->value.GetArray()) {
      const FieldName ev_field = [&field, k] {
        return field() + ".citing_events[" + std::to_string(k) + "]";
      };
      if (!ev.IsObject()) fail(line_no, ev_field() + ": must be an object");
      CitingEvent event;
      const auto cid = ev.FindMember("citing_pub_id");
      if (cid == ev.MemberEnd() || !cid->value.IsString())
        fail(line_no, ev_field() + ".citing_pub_id: required string");
      event.citing_pub_id = json_string(cid->value);
      const auto cauth = ev.FindMember("citing_author_ids");
      if (cauth == ev.MemberEnd()) fail(line_no, ev_field() + ".citing_author_ids: required");
      event.citing_author_ids = parse_id_array(cauth->value, line_no, [&] {
        return ev_field() + ".citing_author_ids";
      });
      parsed.push_back(std::move(event));
      ++k;
    }
    pub.citing_events = std::move(parsed);
  }
  return pub;
}

AuthorProfile parse_author_line(std::string& line, std::size_t line_no) {
  rapidjson::Document doc;
  doc.ParseInsitu(line.data());
  if (doc.HasParseError()) {
    fail(line_no, std::string("invalid JSON: ") + rapidjson::GetParseError_En(doc.GetParseError()) +
                      " at offset " + std::to_string(doc.GetErrorOffset()));
  }
  if (!doc.IsObject()) fail(line_no, "author record must be a JSON object");

  AuthorProfile profile;
  const auto id = doc.FindMember("author_id");
  if (id == doc.MemberEnd() || !id->value.IsString() || id->value.GetStringLength() == 0)
    fail(line_no, "author_id: required non-empty string");
  profile.author_id = json_string(id->value);

  const auto name = doc.FindMember("display_name");
  if (name == doc.MemberEnd() || !name->value.IsString())
    fail(line_no, "display_name: required string");
  profile.display_name = json_string(name->value);

  const auto pubs = doc.FindMember("publications");
  if (pubs == doc.MemberEnd() || !pubs->value.IsArray())
    fail(line_no, "publications: required array");
  profile.publications.reserve(pubs->value.Size());
  std::size_t i = 0;
  for (const auto& pub : pubs->value.GetArray()) {
    profile.publications.push_back(parse_publication(pub, line_no, i++));
  }
  return profile;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void for_each_author(std::istream& in, const ParseOptions& options,
                     const std::function<void(AuthorProfile&&)>& fn) {
  const auto warn = [&](const std::string& msg) {
    if (options.warn) options.warn(msg);
  };

  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  std::size_t admitted = 0;
  std::size_t below_threshold = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    AuthorProfile profile = parse_author_line(line, line_no);
    if (!seen_ids.insert(profile.author_id).second) {
      fail(line_no, "duplicate author_id \"" + profile.author_id + "\"");
    }
    if (static_cast<std::int64_t>(profile.publications.size()) < options.min_pubs ||
        profile.total_citations() < options.min_cits) {
      ++below_threshold;
      continue;
    }
    if (profile.publications.empty()) {
      warn("author \"" + profile.author_id +
           "\" has no publications; it loads but is excluded from rankings");
    }
    ++admitted;
    fn(std::move(profile));
  }
  if (in.bad()) throw IoError("read failure while scanning corpus");
  if (below_threshold > 0) {
    warn(std::to_string(below_threshold) + " author(s) below admission thresholds skipped");
  }
  if (admitted == 0) warn("corpus is empty");
}

Corpus load_corpus(std::istream& in, const ParseOptions& options) {
  Corpus corpus;
  for_each_author(in, options, [&](AuthorProfile&& p) { corpus.push_back(std::move(p)); });
  return corpus;
}

Corpus load_corpus(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open corpus file: " + path);
  return load_corpus(in, options);
}

namespace {

void append_json_string(std::string& out, std::string_view s) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void append_id_array(std::string& out, const std::vector<std::string>& ids) {
  out.push_back('[');
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out.push_back(',');
    append_json_string(out, ids[i]);
  }
  out.push_back(']');
}

}  // namespace

std::string to_json_line(const AuthorProfile& profile) {
  std::string out;
  out.reserve(64 + profile.publications.size() * 72);
  out += "{\"author_id\":";
  append_json_string(out, profile.author_id);
  out += ",\"display_name\":";
  append_json_string(out, profile.display_name);
  out += ",\"publications\":[";
  bool first_pub = true;
  for (const auto& pub : profile.publications) {
    if (!first_pub) out.push_back(',');
    first_pub = false;
    out += "{\"pub_id\":";
    append_json_string(out, pub.pub_id);
    out += ",\"year\":";
    out += std::to_string(pub.year);
    out += ",\"author_ids\":";
    append_id_array(out, pub.author_ids);
    if (pub.has_events()) {
      out += ",\"citing_events\":[";
      bool first_ev = true;
      for (const auto& ev : *pub.citing_events) {
        if (!first_ev) out.push_back(',');
        first_ev = false;
        out += "{\"citing_pub_id\":";
        append_json_string(out, ev.citing_pub_id);
        out += ",\"citing_author_ids\":";
        append_id_array(out, ev.citing_author_ids);
        out.push_back('}');
      }
      out.push_back(']');
    } else {
      out += ",\"citation_count\":";
      out += std::to_string(*pub.citation_count);
    }
    out.push_back('}');
  }
  out += "]}";
  return out;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& profile : corpus) {
    out << to_json_line(profile);
    out.put('\n');
  }
}

void write_corpus(const std::string& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  write_corpus(out, corpus);
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

namespace {

bool shares_author(const std::vector<std::string>& citing, const std::vector<std::string>& cited) {
  return std::any_of(citing.begin(), citing.end(), [&](const std::string& id) {
    return std::find(cited.begin(), cited.end(), id) != cited.end();
  });
}

}  // namespace

AuthorProfile filter_self_citations(const AuthorProfile& profile, SelfCitationScope scope) {
  AuthorProfile out = profile;
  for (auto& pub : out.publications) {
    if (!pub.has_events()) {
      throw ValidationError("publication \"" + pub.pub_id + "\" of author \"" +
                            profile.author_id +
                            "\" carries only a citation count; self-citation filtering "
                            "requires citing-event data");
    }
    auto& events = *pub.citing_events;
    const auto is_self = [&](const CitingEvent& ev) {
      if (scope == SelfCitationScope::AllCoauthors) {
        return shares_author(ev.citing_author_ids, pub.author_ids);
      }
      return std::find(ev.citing_author_ids.begin(), ev.citing_author_ids.end(),
                       profile.author_id) != ev.citing_author_ids.end();
    };
    events.erase(std::remove_if(events.begin(), events.end(), is_self), events.end());
  }
  return out;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats s;
  s.n_authors = static_cast<std::int64_t>(corpus.size());
  if (corpus.empty()) return s;
  s.pubs_min = std::numeric_limits<std::int64_t>::max();
  s.cits_min = std::numeric_limits<std::int64_t>::max();
  for (const auto& profile : corpus) {
    const auto pubs = static_cast<std::int64_t>(profile.publications.size());
    const auto cits = profile.total_citations();
    s.n_publications += pubs;
    s.n_citations += cits;
    s.pubs_min = std::min(s.pubs_min, pubs);
    s.pubs_max = std::max(s.pubs_max, pubs);
    s.cits_min = std::min(s.cits_min, cits);
    s.cits_max = std::max(s.cits_max, cits);
  }
  s.pubs_mean = Rational::of(s.n_publications, s.n_authors);
  s.cits_mean = Rational::of(s.n_citations, s.n_authors);
  return s;
}

}  // namespace citecurve
