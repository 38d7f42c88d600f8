#include "egomap/similarity.hpp"

#include <cmath>
#include <vector>

#include "egomap/error.hpp"

namespace egomap {

SimilarityScores partition_similarity(const Partition& p, const Partition& truth) {
  if (p.vertices() != truth.vertices()) {
    throw Error(ErrorKind::InvalidInput,
                "partitions cover different vertex sets");
  }

  const std::size_t rows = p.communities().size();
  const std::size_t cols = truth.communities().size();
  const double n = static_cast<double>(p.vertex_count());
  std::vector<std::vector<double>> table(rows, std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& id : p.communities()[i]) {
      table[i][truth.community_of(id)] += 1.0;
    }
  }
  std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      row_sum[i] += table[i][j];
      col_sum[j] += table[i][j];
    }
  }

  double mi = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double nij = table[i][j];
      if (nij > 0.0) {
        mi += nij / n * std::log(nij * n / (row_sum[i] * col_sum[j]));
      }
    }
  }
  double h1 = 0.0, h2 = 0.0;
  for (double a : row_sum) {
    h1 -= a / n * std::log(a / n);
  }
  for (double b : col_sum) {
    h2 -= b / n * std::log(b / n);
  }

  SimilarityScores s;
  // Both entropies vanish only for two single-community partitions, which
  // are identical by definition.
  s.nmi = h1 + h2 == 0.0 ? 1.0 : 2.0 * mi / (h1 + h2);

  auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      index += pairs(table[i][j]);
    }
  }
  for (double a : row_sum) {
    sum_a += pairs(a);
  }
  for (double b : col_sum) {
    sum_b += pairs(b);
  }
  // Zero denominators arise only when the two partitions agree exactly:
  // fewer than two vertices, both all-singletons, or both one community.
  if (pairs(n) == 0.0) {
    s.ari = 1.0;
    return s;
  }
  double expected = sum_a * sum_b / pairs(n);
  double max_index = (sum_a + sum_b) / 2.0;
  s.ari = max_index == expected ? 1.0
                                : (index - expected) / (max_index - expected);
  return s;
}

}  // namespace egomap
