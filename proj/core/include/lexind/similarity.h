#ifndef LEXIND_SIMILARITY_H_
#define LEXIND_SIMILARITY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"
#include "lexind/dictionary.h"

namespace lexind {

enum class Metric {
  kCityblock,
  kCosine,
  kDiceMin,
  kDiceProd,
  kJaccardMin,
  kJaccardProd,
  kLin,
  kNewDiceMin,  // diceMin with per-dictionary weights; needs a partitioned space
};

inline constexpr Metric kPlainMetrics[] = {Metric::kCityblock,  Metric::kCosine,
                                           Metric::kDiceMin,    Metric::kDiceProd,
                                           Metric::kJaccardMin, Metric::kJaccardProd,
                                           Metric::kLin};

const char* ToString(Metric metric);
// Case-insensitive: cityblock cosine dicemin diceprod jaccardmin jaccardprod
// lin newdicemin.
Metric ParseMetric(const std::string& text);
// Only cityblock is a distance.
inline bool LowerIsBetter(Metric metric) { return metric == Metric::kCityblock; }

// Sparse nonnegative vector bound to a column space; cells sorted by column.
struct ContextVector {
  ColumnSpacePtr space;
  std::vector<Cell> cells;
};

// A context vector over a space whose seeds carry origin dictionaries.
using PartitionedVector = ContextVector;

ContextVector RowVector(const CoocMatrix& m, std::size_t row);

struct VectorStats {
  double sum = 0.0;
  double sum_sq = 0.0;
};

VectorStats ComputeStats(std::span<const Cell> v);

// Origin dictionary of every column of a partitioned space, and the weight
// of every origin.
struct OriginWeights {
  std::vector<std::uint32_t> column_origin;
  std::vector<double> weight;
};

// Metric kernel over two column-sorted sparse vectors. Absent columns are 0.
// Ratio metrics with a zero denominator score 0. kNewDiceMin needs
// `weights`; the other metrics ignore it.
double ScoreVectors(Metric metric, std::span<const Cell> x, const VectorStats& x_stats,
                    std::span<const Cell> y, const VectorStats& y_stats,
                    const OriginWeights* weights = nullptr);

// One of the seven plain metrics. Vectors must share a column space
// (ConfigError otherwise); kNewDiceMin is rejected here, use NewDiceMin.
double Similarity(Metric metric, const ContextVector& x, const ContextVector& y);

// 2 * sum_j sum_{i in Dic_j} min(x_i, y_i) * w_j / (sum x + sum y).
// ConfigError on unpartitioned spaces or a missing weight.
double NewDiceMin(const PartitionedVector& x, const PartitionedVector& y,
                  const WeightSet& weights);

// Origin weights of a partitioned space, looked up by origin id.
OriginWeights MakeOriginWeights(const ColumnSpace& space, const WeightSet& weights);

}  // namespace lexind

#endif  // LEXIND_SIMILARITY_H_
