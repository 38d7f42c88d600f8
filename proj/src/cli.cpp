#include "egomap/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>

#include <CLI11.hpp>

#include "egomap/error.hpp"
#include "egomap/girvan_newman.hpp"
#include "egomap/io.hpp"
#include "egomap/louvain.hpp"
#include "egomap/planted.hpp"
#include "egomap/similarity.hpp"
#include "egomap/version.hpp"
#include "egomap/walktrap.hpp"
#include "egomap/baselines.hpp"

namespace egomap {

namespace {

std::string format_q(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", q);
  return buf;
}

// Vertices are everything the inputs mention: edge endpoints plus metadata
// rows. Endpoints without a metadata row get empty metadata rather than an
// undeclared-vertex error.
DirectedGraph assemble_graph(const std::vector<EdgeRecord>& edges,
                             const std::map<std::string, VertexMeta>& meta) {
  std::set<std::string> ids;
  for (const auto& e : edges) {
    ids.insert(e.source);
    ids.insert(e.target);
  }
  for (const auto& [id, m] : meta) {
    ids.insert(id);
  }
  std::vector<VertexRecord> vertices;
  vertices.reserve(ids.size());
  for (const auto& id : ids) {
    auto it = meta.find(id);
    vertices.push_back({id, it == meta.end() ? VertexMeta{} : it->second});
  }
  return build_graph(vertices, edges);
}

UndirectedGraph undirected_from_edge_file(const std::string& path) {
  auto records = parse_edges(read_file(path));
  std::set<std::string> ids;
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(records.size());
  for (const auto& e : records) {
    ids.insert(e.source);
    ids.insert(e.target);
    pairs.emplace_back(e.source, e.target);
  }
  return UndirectedGraph({ids.begin(), ids.end()}, pairs);
}

void print_warnings(const MetadataParse& parsed, std::ostream& err) {
  for (const auto& w : parsed.warnings) {
    err << "warning: " << w << "\n";
  }
}

struct IngestArgs {
  std::string edges_path;
  std::string meta_path;
};

int run_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  std::string edge_bytes = read_file(a.edges_path);
  std::string meta_bytes =
      a.meta_path.empty() ? std::string() : read_file(a.meta_path);

  auto records = parse_edges(edge_bytes);
  MetadataParse parsed = parse_metadata(meta_bytes);
  print_warnings(parsed, err);
  DirectedGraph g = assemble_graph(records, parsed.meta);

  std::string hash = hex64(fnv1a64(edge_bytes + '\0' + meta_bytes));
  const char* env = std::getenv("EGOMAP_CACHE_DIR");
  std::filesystem::path cache_dir = env ? env : ".egomap-cache";
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path graph_path = cache_dir / (hash + ".graph.json");

  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  if (std::filesystem::exists(graph_path)) {
    out << "cache hit " << hash << "\n";
    return 0;
  }
  write_file_atomic(graph_path, graph_to_json(g));
  RunManifest manifest;
  manifest.input_paths.push_back(a.edges_path);
  if (!a.meta_path.empty()) {
    manifest.input_paths.push_back(a.meta_path);
  }
  manifest.version = kVersion;
  manifest.content_hash = hash;
  manifest.timestamp = utc_timestamp();
  write_file_atomic(cache_dir / (hash + ".manifest.json"), manifest.to_json());
  out << "cached " << hash << "\n";
  return 0;
}

struct DetectArgs {
  std::string edges_path;
  std::string detector;
  int k = 0;  // 0 means best-modularity for girvan-newman
  std::uint64_t seed = 0;
  int walk_length = 4;
  std::string out_path;
};

int run_detect(const DetectArgs& a, std::ostream& out) {
  UndirectedGraph g = undirected_from_edge_file(a.edges_path);
  Detector detector = detector_from_name(a.detector);

  Partition partition;
  switch (detector) {
    case Detector::GirvanNewman:
      partition = girvan_newman(g, a.k > 0 ? GnStop::target(a.k)
                                           : GnStop::best_modularity())
                      .partition;
      break;
    case Detector::Louvain:
      partition = louvain(g, a.seed).partition;
      break;
    case Detector::Walktrap:
      partition = walktrap(g, a.walk_length).partition;
      break;
  }

  out << "detector: " << detector_name(detector) << "\n";
  out << "communities: " << partition.community_count() << "\n";
  out << "Q: " << format_q(modularity(g, partition).q) << "\n";
  for (int c = 0; c < partition.community_count(); ++c) {
    out << "community " << c << ":";
    for (const auto& id : partition.communities()[c]) {
      out << " " << id;
    }
    out << "\n";
  }
  if (!a.out_path.empty()) {
    write_file_atomic(a.out_path, partition_to_json(partition));
  }
  return 0;
}

struct MapArgs {
  std::string edges_path;
  std::string meta_path;
  std::string ego;
  std::string detector = "louvain";
  std::uint64_t seed = 0;
  int walk_length = 4;
  int min_size = 3;
  int top_k = 5;
  std::string out_path;
  std::string format = "json";
};

int run_map(const MapArgs& a, std::ostream& out, std::ostream& err) {
  std::string edge_bytes = read_file(a.edges_path);
  std::string meta_bytes = read_file(a.meta_path);
  auto records = parse_edges(edge_bytes);
  MetadataParse parsed = parse_metadata(meta_bytes);
  print_warnings(parsed, err);
  DirectedGraph g = assemble_graph(records, parsed.meta);

  MapConfig cfg;
  cfg.detector = detector_from_name(a.detector);
  cfg.min_community_size = a.min_size;
  cfg.label_top_k = a.top_k;
  cfg.walk_length = a.walk_length;
  cfg.seed = a.seed;

  InterestMap map = build_interest_map(g, a.ego, cfg);
  ExportFormat format = export_format_from_name(a.format);
  write_file_atomic(a.out_path, export_map(map, format));

  RunManifest manifest;
  manifest.input_paths = {a.edges_path, a.meta_path};
  manifest.config = cfg;
  manifest.version = kVersion;
  manifest.content_hash = hex64(fnv1a64(edge_bytes + '\0' + meta_bytes));
  manifest.timestamp = utc_timestamp();
  write_file_atomic(a.out_path + ".manifest.json", manifest.to_json());

  out << "groups: " << map.groups.size() << "\n";
  out << "dropped: " << map.dropped_vertices.size() << "\n";
  out << "wrote " << a.out_path << "\n";
  return 0;
}

struct SynthArgs {
  int blocks = 0;
  int block_size = 0;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
  std::string prefix;
};

int run_synth(const SynthArgs& a, std::ostream& out) {
  PlantedGraph planted =
      planted_partition(a.blocks, a.block_size, a.p_in, a.p_out, a.seed);

  std::vector<EdgeRecord> records;
  records.reserve(planted.graph.edge_count());
  for (const auto& [i, j] : planted.graph.edge_list()) {
    records.push_back({planted.graph.id_of(i), planted.graph.id_of(j)});
  }
  write_file_atomic(a.prefix + ".edges.csv", render_edges(records));
  write_file_atomic(a.prefix + ".truth.json", partition_to_json(planted.truth));

  out << "vertices: " << planted.graph.vertex_count() << "\n";
  out << "edges: " << planted.graph.edge_count() << "\n";
  out << "wrote " << a.prefix << ".edges.csv\n";
  out << "wrote " << a.prefix << ".truth.json\n";
  return 0;
}

struct EvalArgs {
  std::string pred_path;
  std::string truth_path;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  Partition pred = partition_from_json(read_file(a.pred_path));
  Partition truth = partition_from_json(read_file(a.truth_path));

  ConfusionCounts counts = matched_confusion(pred, truth);
  SimilarityScores scores = partition_similarity(pred, truth);
  out << "precision: " << format_q(precision(counts)) << "\n";
  out << "recall: " << format_q(recall(counts)) << "\n";
  out << "nmi: " << format_q(scores.nmi) << "\n";
  out << "ari: " << format_q(scores.ari) << "\n";
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"ego-network interest mapping toolkit", "egomap"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "validate and cache a graph");
  ingest->add_option("--edges", ingest_args.edges_path, "edge CSV")->required();
  ingest->add_option("--meta", ingest_args.meta_path, "metadata JSONL");

  DetectArgs detect_args;
  auto* detect = app.add_subcommand("detect", "run a community detector");
  detect->add_option("--edges", detect_args.edges_path, "edge CSV")->required();
  detect->add_option("--detector", detect_args.detector,
                     "girvan-newman, louvain, or walktrap")->required();
  detect->add_option("--k", detect_args.k, "girvan-newman target community count");
  detect->add_option("--seed", detect_args.seed, "louvain seed");
  detect->add_option("--walk-length", detect_args.walk_length, "walktrap t");
  detect->add_option("--out", detect_args.out_path, "write partition JSON here");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "build a labeled interest map");
  map->add_option("--edges", map_args.edges_path, "edge CSV")->required();
  map->add_option("--meta", map_args.meta_path, "metadata JSONL")->required();
  map->add_option("--ego", map_args.ego, "focal vertex id")->required();
  map->add_option("--detector", map_args.detector, "detector name");
  map->add_option("--seed", map_args.seed, "detector seed");
  map->add_option("--walk-length", map_args.walk_length, "walktrap t");
  map->add_option("--min-size", map_args.min_size, "smallest kept community");
  map->add_option("--top-k", map_args.top_k, "label terms per group");
  map->add_option("--out", map_args.out_path, "output path")->required();
  map->add_option("--format", map_args.format, "json or dot");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "generate a planted-partition graph");
  synth->add_option("--blocks", synth_args.blocks, "block count")->required();
  synth->add_option("--block-size", synth_args.block_size, "vertices per block")
      ->required();
  synth->add_option("--p-in", synth_args.p_in, "intra-block edge probability")
      ->required();
  synth->add_option("--p-out", synth_args.p_out, "inter-block edge probability")
      ->required();
  synth->add_option("--seed", synth_args.seed, "generator seed");
  synth->add_option("--out", synth_args.prefix, "output path prefix")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "score a partition against truth");
  eval->add_option("--pred", eval_args.pred_path, "detected partition JSON")
      ->required();
  eval->add_option("--truth", eval_args.truth_path, "ground-truth partition JSON")
      ->required();

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (ingest->parsed()) {
      return run_ingest(ingest_args, out, err);
    }
    if (detect->parsed()) {
      return run_detect(detect_args, out);
    }
    if (map->parsed()) {
      return run_map(map_args, out, err);
    }
    if (synth->parsed()) {
      return run_synth(synth_args, out);
    }
    return run_eval(eval_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace egomap
