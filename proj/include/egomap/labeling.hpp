#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "egomap/graph.hpp"

namespace egomap {

struct LabelTerm {
  std::string term;
  double weight = 0.0;

  bool operator==(const LabelTerm& other) const {
    return term == other.term && weight == other.weight;
  }
};

// Lowercased word tokens in input order, duplicates kept. Splits on anything
// that is not an ASCII alphanumeric or a non-ASCII byte, drops stopwords and
// tokens shorter than 3 codepoints.
std::vector<std::string> tokenize(const std::string& text);

const std::set<std::string>& english_stopwords();

// TF-IDF labels for one community. Documents are communities: tf counts the
// term across the members' descriptions, idf = ln(N/df) + 1 over the corpus
// of per-community token sets, which must include this community's own set.
// Top top_k terms by weight, ties broken lexicographically.
std::vector<LabelTerm> label_community(
    const std::vector<std::string>& members,
    const std::map<std::string, VertexMeta>& meta,
    const std::vector<std::set<std::string>>& corpus, int top_k);

}  // namespace egomap
