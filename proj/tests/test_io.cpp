#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "egomap/error.hpp"
#include "egomap/io.hpp"
#include "egomap/version.hpp"

using namespace egomap;

TEST_CASE("parse_edges reads the minimal file") {
  auto records = parse_edges(std::string("source,target\na,b\n"));
  REQUIRE(records.size() == 1);
  CHECK(records[0].source == "a");
  CHECK(records[0].target == "b");
}

TEST_CASE("parse_edges skips blank lines and handles CRLF") {
  auto records = parse_edges(std::string("source,target\r\n\r\na,b\r\n"));
  REQUIRE(records.size() == 1);
  CHECK(records[0].source == "a");
}

TEST_CASE("parse_edges reports malformed rows by line") {
  CHECK_THROWS_WITH_AS(parse_edges(std::string("source,target\na\n")),
                       "line 2: expected two comma-separated fields", Error);
  CHECK_THROWS_WITH_AS(parse_edges(std::string("source,target\na,b,c\n")),
                       "line 2: expected two comma-separated fields", Error);
  CHECK_THROWS_WITH_AS(parse_edges(std::string("source,target\n\na,\n")),
                       "line 3: empty vertex id", Error);
  CHECK_THROWS_WITH_AS(parse_edges(std::string("from,to\na,b\n")),
                       "missing source,target header", Error);
  CHECK_THROWS_WITH_AS(parse_edges(std::string("")),
                       "missing source,target header", Error);
}

TEST_CASE("render and parse round-trip") {
  std::vector<EdgeRecord> records{{"a", "b"}, {"b", "c"}, {"x", "a"}};
  auto parsed = parse_edges(render_edges(records));
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].source == records[i].source);
    CHECK(parsed[i].target == records[i].target);
  }
}

TEST_CASE("parse_metadata fills defaults") {
  auto parsed = parse_metadata(std::string(R"({"id":"a"})" "\n"));
  REQUIRE(parsed.meta.count("a") == 1);
  CHECK(parsed.meta.at("a").handle == "");
  CHECK(parsed.meta.at("a").description == "");
  CHECK(parsed.meta.at("a").follower_count == 0);
  CHECK(parsed.warnings.empty());
}

TEST_CASE("parse_metadata reads full records") {
  auto parsed = parse_metadata(std::string(
      R"({"id":"a","handle":"@a","description":"chef","follower_count":10})"
      "\n"));
  CHECK(parsed.meta.at("a").handle == "@a");
  CHECK(parsed.meta.at("a").description == "chef");
  CHECK(parsed.meta.at("a").follower_count == 10);
}

TEST_CASE("parse_metadata last record wins with a warning") {
  auto parsed = parse_metadata(std::string(
      R"({"id":"a","handle":"@first"})" "\n"
      R"({"id":"a","handle":"@second"})" "\n"));
  CHECK(parsed.meta.at("a").handle == "@second");
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0] ==
        "line 2: duplicate id 'a' overrides line 1");
}

TEST_CASE("parse_metadata reports bad lines") {
  CHECK_THROWS_WITH_AS(parse_metadata(std::string("not json\n")),
                       "line 1: invalid JSON", Error);
  CHECK_THROWS_WITH_AS(parse_metadata(std::string("{\"id\":\"a\"}\n[1,2]\n")),
                       "line 2: expected a JSON object", Error);
  CHECK_THROWS_WITH_AS(parse_metadata(std::string("{\"handle\":\"@x\"}\n")),
                       "line 1: missing id", Error);
  CHECK_THROWS_WITH_AS(
      parse_metadata(std::string("{\"id\":\"a\",\"follower_count\":-2}\n")),
      "line 1: follower_count must be a nonnegative integer", Error);
}

namespace {

InterestMap sample_map() {
  InterestMap map;
  map.ego = "ego";
  map.detector = Detector::Louvain;
  InterestGroup group;
  group.community_id = 0;
  group.members = {"a", "b", "c"};
  group.label_terms = {{"cooking", 3.5}, {"recipes", 2.0}};
  map.groups.push_back(group);
  map.dropped_vertices = {"z"};
  return map;
}

}  // namespace

TEST_CASE("json export uses the canonical schema and key order") {
  auto bytes = export_map(sample_map(), ExportFormat::Json);
  CHECK(export_map(sample_map(), ExportFormat::Json) == bytes);

  auto doc = nlohmann::ordered_json::parse(bytes);
  CHECK(doc["ego"] == "ego");
  CHECK(doc["detector"] == "louvain");
  REQUIRE(doc["groups"].size() == 1);
  CHECK(doc["groups"][0]["community_id"] == 0);
  CHECK(doc["groups"][0]["size"] == 3);
  CHECK(doc["groups"][0]["label_terms"][0]["term"] == "cooking");
  CHECK(doc["groups"][0]["label_terms"][0]["weight"] == 3.5);
  CHECK(doc["groups"][0]["members"] ==
        nlohmann::ordered_json({"a", "b", "c"}));
  CHECK(doc["dropped_vertices"] == nlohmann::ordered_json({"z"}));

  auto order = {bytes.find("\"ego\""), bytes.find("\"detector\""),
                bytes.find("\"groups\""), bytes.find("\"community_id\""),
                bytes.find("\"size\""), bytes.find("\"label_terms\""),
                bytes.find("\"members\""), bytes.find("\"dropped_vertices\"")};
  std::size_t prev = 0;
  for (auto pos : order) {
    CHECK(pos != std::string::npos);
    CHECK(pos >= prev);
    prev = pos;
  }
}

TEST_CASE("empty map still exports every top-level key") {
  InterestMap map;
  map.ego = "solo";
  map.detector = Detector::Walktrap;
  auto doc = nlohmann::ordered_json::parse(export_map(map, ExportFormat::Json));
  CHECK(doc["ego"] == "solo");
  CHECK(doc["detector"] == "walktrap");
  CHECK(doc["groups"].is_array());
  CHECK(doc["groups"].empty());
  CHECK(doc["dropped_vertices"].is_array());
}

TEST_CASE("dot export writes one cluster per group") {
  InterestMap map = sample_map();
  InterestGroup second;
  second.community_id = 1;
  second.members = {"d", "e"};
  second.label_terms = {{"hoops", 1.0}};
  map.groups.push_back(second);

  auto dot = export_map(map, ExportFormat::Dot);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  CHECK(dot.find("label=\"cooking, recipes\"") != std::string::npos);
  CHECK(dot.find("\"a\";") != std::string::npos);
  CHECK(dot.find("subgraph cluster_2") == std::string::npos);
}

TEST_CASE("export format names are validated") {
  CHECK(export_format_from_name("json") == ExportFormat::Json);
  CHECK(export_format_from_name("dot") == ExportFormat::Dot);
  CHECK_THROWS_WITH_AS(export_format_from_name("svg"),
                       "unknown export format: svg", Error);
}

TEST_CASE("partition json round-trips through the canonical form") {
  auto p = Partition::from_communities({{"b", "a"}, {"z"}});
  auto text = partition_to_json(p);
  CHECK(partition_from_json(text) == p);
  CHECK(text.find("\"communities\"") != std::string::npos);

  CHECK_THROWS_WITH_AS(partition_from_json("{"), "invalid partition JSON",
                       Error);
  CHECK_THROWS_WITH_AS(
      partition_from_json("{\"x\":1}"),
      "partition JSON must be an object with a communities array", Error);
  CHECK_THROWS_WITH_AS(partition_from_json("{\"communities\":[[1]]}"),
                       "community members must be strings", Error);
}

TEST_CASE("fnv1a64 matches its reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(fnv1a64("source,target")) == "5aebb310d0e21f25");
}

TEST_CASE("atomic writes land complete and readable") {
  auto dir = std::filesystem::temp_directory_path() / "egomap-io-test";
  std::filesystem::create_directories(dir);
  auto path = dir / "out.txt";
  write_file_atomic(path, "first");
  CHECK(read_file(path) == "first");
  write_file_atomic(path, "second");
  CHECK(read_file(path) == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(read_file(dir / "missing.txt"), Error);
}

TEST_CASE("run manifest serializes its fields") {
  RunManifest manifest;
  manifest.input_paths = {"e.csv", "m.jsonl"};
  manifest.config.detector = Detector::Walktrap;
  manifest.config.seed = 7;
  manifest.version = kVersion;
  manifest.content_hash = "deadbeefdeadbeef";
  manifest.timestamp = "2026-01-01T00:00:00Z";

  auto doc = nlohmann::ordered_json::parse(manifest.to_json());
  CHECK(doc["input_paths"] == nlohmann::ordered_json({"e.csv", "m.jsonl"}));
  CHECK(doc["config"]["detector"] == "walktrap");
  CHECK(doc["config"]["seed"] == 7);
  CHECK(doc["config"]["min_community_size"] == 3);
  CHECK(doc["version"] == kVersion);
  CHECK(doc["content_hash"] == "deadbeefdeadbeef");
  CHECK(doc["timestamp"] == "2026-01-01T00:00:00Z");
}

TEST_CASE("utc timestamps follow the iso 8601 shape") {
  auto ts = utc_timestamp();
  REQUIRE(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[19] == 'Z');
}

TEST_CASE("graph json lists sorted vertices and edges") {
  auto g = build_graph({{"b", {"@b", "", 1}}, {"a", {"@a", "x", 2}}},
                       {{"b", "a"}});
  auto doc = nlohmann::ordered_json::parse(graph_to_json(g));
  REQUIRE(doc["vertices"].size() == 2);
  CHECK(doc["vertices"][0]["id"] == "a");
  CHECK(doc["vertices"][0]["follower_count"] == 2);
  CHECK(doc["vertices"][1]["id"] == "b");
  REQUIRE(doc["edges"].size() == 1);
  CHECK(doc["edges"][0]["source"] == "b");
  CHECK(doc["edges"][0]["target"] == "a");
}
