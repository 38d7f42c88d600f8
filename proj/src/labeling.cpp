#include "egomap/labeling.hpp"

#include <algorithm>
#include <cmath>

#include "egomap/error.hpp"

namespace egomap {

namespace {

// Word characters are ASCII alphanumerics plus every non-ASCII byte, so
// UTF-8 text tokenizes without a full Unicode table. Only ASCII letters are
// case-folded.
bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

// Codepoints, not bytes: UTF-8 continuation bytes do not count.
std::size_t codepoint_length(const std::string& token) {
  std::size_t len = 0;
  for (unsigned char c : token) {
    if ((c & 0xC0) != 0x80) {
      ++len;
    }
  }
  return len;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  const auto& stop = english_stopwords();
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (codepoint_length(current) >= 3 && !stop.count(current)) {
      tokens.push_back(current);
    }
    current.clear();
  };
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

const std::set<std::string>& english_stopwords() {
  // Kept in sync with data/stopwords_en.txt; a test compares the two.
  static const std::set<std::string> words = {
      "a",          "about",      "above",      "after",      "again",
      "against",    "ain",        "all",        "also",       "am",
      "an",         "and",        "any",        "are",        "aren",
      "as",         "at",         "be",         "because",    "been",
      "before",     "being",      "below",      "between",    "both",
      "but",        "by",         "can",        "cannot",     "could",
      "couldn",     "did",        "didn",       "do",         "does",
      "doesn",      "doing",      "don",        "down",       "during",
      "each",       "few",        "for",        "from",       "further",
      "had",        "hadn",       "has",        "hasn",       "have",
      "haven",      "having",     "he",         "her",        "here",
      "hers",       "herself",    "him",        "himself",    "his",
      "how",        "i",          "if",         "in",         "into",
      "is",         "isn",        "it",         "its",        "itself",
      "just",       "me",         "might",      "more",       "most",
      "must",       "mustn",      "my",         "myself",     "needn",
      "no",         "nor",        "not",        "now",        "of",
      "off",        "on",         "once",       "only",       "or",
      "other",      "ought",      "our",        "ours",       "ourselves",
      "out",        "over",       "own",        "same",       "shall",
      "shan",       "she",        "should",     "shouldn",    "so",
      "some",       "such",       "than",       "that",       "the",
      "their",      "theirs",     "them",       "themselves", "then",
      "there",      "these",      "they",       "this",       "those",
      "through",    "to",         "too",        "under",      "until",
      "up",         "very",       "was",        "wasn",       "we",
      "were",       "weren",      "what",       "when",       "where",
      "which",      "while",      "who",        "whom",       "why",
      "will",       "with",       "won",        "would",      "wouldn",
      "you",        "your",       "yours",      "yourself",   "yourselves",
  };
  return words;
}

std::vector<LabelTerm> label_community(
    const std::vector<std::string>& members,
    const std::map<std::string, VertexMeta>& meta,
    const std::vector<std::set<std::string>>& corpus, int top_k) {
  if (top_k < 1) {
    throw Error(ErrorKind::InvalidInput, "top_k must be at least 1");
  }

  std::map<std::string, int> tf;
  for (const auto& id : members) {
    auto it = meta.find(id);
    if (it == meta.end()) {
      continue;
    }
    for (const auto& token : tokenize(it->second.description)) {
      ++tf[token];
    }
  }

  const double n_docs = static_cast<double>(corpus.size());
  std::vector<LabelTerm> scored;
  scored.reserve(tf.size());
  for (const auto& [term, count] : tf) {
    int df = 0;
    for (const auto& doc : corpus) {
      if (doc.count(term)) {
        ++df;
      }
    }
    // df is at least 1 when the corpus includes this community's own set;
    // the floor keeps a malformed corpus from dividing by zero.
    df = std::max(df, 1);
    double idf = std::log(n_docs / df) + 1.0;
    scored.push_back({term, count * idf});
  }

  std::sort(scored.begin(), scored.end(), [](const LabelTerm& a, const LabelTerm& b) {
    if (a.weight != b.weight) {
      return a.weight > b.weight;
    }
    return a.term < b.term;
  });
  if (static_cast<int>(scored.size()) > top_k) {
    scored.resize(top_k);
  }
  return scored;
}

}  // namespace egomap
