#include "egomap/interest_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "egomap/error.hpp"
#include "egomap/girvan_newman.hpp"
#include "egomap/louvain.hpp"
#include "egomap/walktrap.hpp"

namespace egomap {

const std::string& detector_name(Detector d) {
  static const std::string names[] = {"girvan-newman", "louvain", "walktrap"};
  return names[static_cast<int>(d)];
}

Detector detector_from_name(const std::string& name) {
  for (Detector d : {Detector::GirvanNewman, Detector::Louvain, Detector::Walktrap}) {
    if (detector_name(d) == name) {
      return d;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown detector: " + name);
}

void MapConfig::validate() const {
  if (min_community_size < 1) {
    throw Error(ErrorKind::InvalidInput, "min_community_size must be positive");
  }
  if (label_top_k < 1) {
    throw Error(ErrorKind::InvalidInput, "label_top_k must be positive");
  }
  if (walk_length < 1) {
    throw Error(ErrorKind::InvalidInput, "walk_length must be positive");
  }
}

FilterResult filter_communities(const Partition& p, int min_size) {
  if (min_size < 1) {
    throw Error(ErrorKind::InvalidInput, "min_size must be positive");
  }
  FilterResult result;
  for (const auto& members : p.communities()) {
    if (static_cast<int>(members.size()) >= min_size) {
      result.kept.push_back(members);
    } else {
      result.dropped.insert(result.dropped.end(), members.begin(), members.end());
    }
  }
  std::sort(result.dropped.begin(), result.dropped.end());
  return result;
}

Partition detect_communities(const UndirectedGraph& g, const MapConfig& cfg) {
  if (g.edge_count() == 0) {
    return Partition::singletons(g.vertex_ids());
  }
  switch (cfg.detector) {
    case Detector::GirvanNewman:
      return girvan_newman(g, GnStop::best_modularity()).partition;
    case Detector::Louvain:
      return louvain(g, cfg.seed).partition;
    case Detector::Walktrap:
      return walktrap(g, cfg.walk_length).partition;
  }
  throw Error(ErrorKind::Internal, "unhandled detector");
}

InterestMap build_interest_map(const DirectedGraph& g, const std::string& ego,
                               const MapConfig& cfg) {
  cfg.validate();
  DirectedGraph net = ego_graph(g, ego);  // throws on unknown ego

  InterestMap map;
  map.ego = ego;
  map.detector = cfg.detector;
  if (net.vertex_count() == 0) {
    return map;
  }

  UndirectedGraph ug = undirected_projection(net);
  Partition partition = detect_communities(ug, cfg);
  FilterResult filtered = filter_communities(partition, cfg.min_community_size);
  map.dropped_vertices = std::move(filtered.dropped);

  std::map<std::string, VertexMeta> meta;
  for (const auto& id : net.vertex_ids()) {
    meta.emplace(id, net.meta(id));
  }

  // Documents for IDF are the kept communities; dropped fragments carry no
  // interest signal and would only dilute the weights.
  std::vector<std::set<std::string>> corpus;
  corpus.reserve(filtered.kept.size());
  for (const auto& members : filtered.kept) {
    std::set<std::string> doc;
    for (const auto& id : members) {
      auto tokens = tokenize(meta.at(id).description);
      doc.insert(tokens.begin(), tokens.end());
    }
    corpus.push_back(std::move(doc));
  }

  for (const auto& members : filtered.kept) {
    InterestGroup group;
    group.community_id = partition.community_of(members.front());
    group.members = members;
    group.label_terms = label_community(members, meta, corpus, cfg.label_top_k);
    map.groups.push_back(std::move(group));
  }
  std::sort(map.groups.begin(), map.groups.end(),
            [](const InterestGroup& a, const InterestGroup& b) {
              if (a.members.size() != b.members.size()) {
                return a.members.size() > b.members.size();
              }
              return a.members.front() < b.members.front();
            });
  return map;
}

}  // namespace egomap
