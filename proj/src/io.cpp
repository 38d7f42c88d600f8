#include "egomap/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "egomap/error.hpp"

namespace egomap {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

// getline with the trailing carriage return of CRLF input stripped.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) {
    return false;
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return true;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<EdgeRecord> parse_edges(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "source,target") {
    throw Error(ErrorKind::Parse, "missing source,target header");
  }
  std::vector<EdgeRecord> records;
  std::size_t lineno = 1;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      parse_fail(lineno, "expected two comma-separated fields");
    }
    std::string source = line.substr(0, comma);
    std::string target = line.substr(comma + 1);
    if (source.empty() || target.empty()) {
      parse_fail(lineno, "empty vertex id");
    }
    records.push_back({std::move(source), std::move(target)});
  }
  return records;
}

std::vector<EdgeRecord> parse_edges(const std::string& text) {
  std::istringstream in(text);
  return parse_edges(in);
}

std::string render_edges(const std::vector<EdgeRecord>& records) {
  std::string out = "source,target\n";
  for (const auto& r : records) {
    out += r.source;
    out += ',';
    out += r.target;
    out += '\n';
  }
  return out;
}

MetadataParse parse_metadata(std::istream& in) {
  MetadataParse result;
  std::map<std::string, std::size_t> first_seen;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    ordered_json doc;
    try {
      doc = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      parse_fail(lineno, "invalid JSON");
    }
    if (!doc.is_object()) {
      parse_fail(lineno, "expected a JSON object");
    }
    auto id_it = doc.find("id");
    if (id_it == doc.end() || !id_it->is_string() ||
        id_it->get<std::string>().empty()) {
      parse_fail(lineno, "missing id");
    }
    std::string id = id_it->get<std::string>();

    VertexMeta meta;
    if (auto it = doc.find("handle"); it != doc.end()) {
      if (!it->is_string()) {
        parse_fail(lineno, "handle must be a string");
      }
      meta.handle = it->get<std::string>();
    }
    if (auto it = doc.find("description"); it != doc.end()) {
      if (!it->is_string()) {
        parse_fail(lineno, "description must be a string");
      }
      meta.description = it->get<std::string>();
    }
    if (auto it = doc.find("follower_count"); it != doc.end()) {
      if (!it->is_number_unsigned()) {
        parse_fail(lineno, "follower_count must be a nonnegative integer");
      }
      meta.follower_count = it->get<std::uint64_t>();
    }

    auto [seen_it, inserted] = first_seen.emplace(id, lineno);
    if (!inserted) {
      result.warnings.push_back("line " + std::to_string(lineno) +
                                ": duplicate id '" + id +
                                "' overrides line " +
                                std::to_string(seen_it->second));
      seen_it->second = lineno;
    }
    result.meta[id] = std::move(meta);
  }
  return result;
}

MetadataParse parse_metadata(const std::string& text) {
  std::istringstream in(text);
  return parse_metadata(in);
}

ExportFormat export_format_from_name(const std::string& name) {
  if (name == "json") {
    return ExportFormat::Json;
  }
  if (name == "dot") {
    return ExportFormat::Dot;
  }
  throw Error(ErrorKind::InvalidInput, "unknown export format: " + name);
}

std::string export_map(const InterestMap& m, ExportFormat format) {
  if (format == ExportFormat::Json) {
    ordered_json doc;
    doc["ego"] = m.ego;
    doc["detector"] = detector_name(m.detector);
    doc["groups"] = ordered_json::array();
    for (const auto& g : m.groups) {
      ordered_json group;
      group["community_id"] = g.community_id;
      group["size"] = g.members.size();
      group["label_terms"] = ordered_json::array();
      for (const auto& t : g.label_terms) {
        group["label_terms"].push_back({{"term", t.term}, {"weight", t.weight}});
      }
      group["members"] = g.members;
      doc["groups"].push_back(std::move(group));
    }
    doc["dropped_vertices"] = m.dropped_vertices;
    return doc.dump(2) + "\n";
  }

  std::string out = "graph interest_map {\n";
  out += "  label=\"" + dot_escape(m.ego) + " (" +
         detector_name(m.detector) + ")\";\n";
  for (std::size_t i = 0; i < m.groups.size(); ++i) {
    const auto& g = m.groups[i];
    out += "  subgraph cluster_" + std::to_string(i) + " {\n";
    std::string label;
    for (const auto& t : g.label_terms) {
      if (!label.empty()) {
        label += ", ";
      }
      label += t.term;
    }
    out += "    label=\"" + dot_escape(label) + "\";\n";
    for (const auto& id : g.members) {
      out += "    \"" + dot_escape(id) + "\";\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string partition_to_json(const Partition& p) {
  ordered_json doc;
  doc["communities"] = p.communities();
  return doc.dump(2) + "\n";
}

Partition partition_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorKind::Parse, "invalid partition JSON");
  }
  if (!doc.is_object() || !doc.contains("communities") ||
      !doc["communities"].is_array()) {
    throw Error(ErrorKind::Parse,
                "partition JSON must be an object with a communities array");
  }
  std::vector<std::vector<std::string>> groups;
  for (const auto& community : doc["communities"]) {
    if (!community.is_array()) {
      throw Error(ErrorKind::Parse, "each community must be an array of ids");
    }
    std::vector<std::string> members;
    for (const auto& id : community) {
      if (!id.is_string()) {
        throw Error(ErrorKind::Parse, "community members must be strings");
      }
      members.push_back(id.get<std::string>());
    }
    groups.push_back(std::move(members));
  }
  return Partition::from_communities(std::move(groups));
}

std::string graph_to_json(const DirectedGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& id : g.vertex_ids()) {
    const auto& meta = g.meta(id);
    doc["vertices"].push_back({{"id", id},
                               {"handle", meta.handle},
                               {"description", meta.description},
                               {"follower_count", meta.follower_count}});
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"source", e.source}, {"target", e.target}});
  }
  return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::InvalidInput, "cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorKind::Internal, "cannot write file: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorKind::Internal,
                "cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

std::string RunManifest::to_json() const {
  ordered_json doc;
  doc["input_paths"] = input_paths;
  doc["config"] = {{"detector", detector_name(config.detector)},
                   {"min_community_size", config.min_community_size},
                   {"label_top_k", config.label_top_k},
                   {"walk_length", config.walk_length},
                   {"seed", config.seed}};
  doc["version"] = version;
  doc["content_hash"] = content_hash;
  doc["timestamp"] = timestamp;
  return doc.dump(2) + "\n";
}

}  // namespace egomap
