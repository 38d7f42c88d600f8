#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "egomap/graph.hpp"
#include "egomap/interest_map.hpp"
#include "egomap/partition.hpp"

namespace egomap {

// CSV with the exact header `source,target`. Blank lines are skipped;
// malformed rows fail with their 1-based line number.
std::vector<EdgeRecord> parse_edges(std::istream& in);
std::vector<EdgeRecord> parse_edges(const std::string& text);

std::string render_edges(const std::vector<EdgeRecord>& records);

struct MetadataParse {
  std::map<std::string, VertexMeta> meta;
  std::vector<std::string> warnings;  // duplicate-id notes
};

// JSONL, one object per line with fields id (required), handle, description,
// follower_count. Duplicate ids: last record wins, with a warning.
MetadataParse parse_metadata(std::istream& in);
MetadataParse parse_metadata(const std::string& text);

enum class ExportFormat { Json, Dot };
ExportFormat export_format_from_name(const std::string& name);

// Canonical serialization: fixed key order, members sorted, so equal maps
// export to identical bytes.
std::string export_map(const InterestMap& m, ExportFormat format);

std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

std::string graph_to_json(const DirectedGraph& g);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t value);

std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

std::string utc_timestamp();

struct RunManifest {
  std::vector<std::string> input_paths;
  MapConfig config;
  std::string version;
  std::string content_hash;  // hex64 of the raw input bytes
  std::string timestamp;     // ISO 8601 UTC

  std::string to_json() const;
};

}  // namespace egomap
