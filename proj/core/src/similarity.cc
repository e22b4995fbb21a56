#include "lexind/similarity.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lexind/error.h"
#include "lexind/exact_sum.h"

namespace lexind {
namespace {

double Ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

void RequireSameSpace(const ContextVector& x, const ContextVector& y) {
  if (!x.space || !y.space || x.space->id() != y.space->id()) {
    throw ConfigError("vectors belong to different column spaces");
  }
}

}  // namespace

const char* ToString(Metric metric) {
  switch (metric) {
    case Metric::kCityblock: return "cityblock";
    case Metric::kCosine: return "cosine";
    case Metric::kDiceMin: return "dicemin";
    case Metric::kDiceProd: return "diceprod";
    case Metric::kJaccardMin: return "jaccardmin";
    case Metric::kJaccardProd: return "jaccardprod";
    case Metric::kLin: return "lin";
    case Metric::kNewDiceMin: return "newdicemin";
  }
  return "?";
}

Metric ParseMetric(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto m : kPlainMetrics) {
    if (lower == ToString(m)) return m;
  }
  if (lower == "newdicemin") return Metric::kNewDiceMin;
  throw ConfigError("unknown metric: " + text);
}

ContextVector RowVector(const CoocMatrix& m, std::size_t row) {
  auto r = m.row(row);
  return ContextVector{m.columns(), std::vector<Cell>(r.begin(), r.end())};
}

VectorStats ComputeStats(std::span<const Cell> v) {
  ExactSum sum;
  ExactSum sum_sq;
  for (const auto& c : v) {
    sum.Add(c.value);
    sum_sq.Add(c.value * c.value);
  }
  return VectorStats{sum.Result(), sum_sq.Result()};
}

namespace {

// Walks the union of both supports in column order. Every sum is correctly
// rounded, so a score depends on the multiset of per-column terms and not on
// the order they were met in.
template <Metric M>
double Kernel(std::span<const Cell> x, const VectorStats& xs, std::span<const Cell> y,
              const VectorStats& ys, const OriginWeights* weights) {
  constexpr bool kOuter = M == Metric::kCityblock || M == Metric::kJaccardMin;
  ExactSum acc;
  ExactSum acc2;
  // Weighted dice sums the min terms of each origin exactly before weighting,
  // so (a + b) * w and a * w + b * w agree.
  thread_local std::vector<ExactSum> per_origin;
  if constexpr (M == Metric::kNewDiceMin) {
    per_origin.resize(weights->weight.size());
    for (auto& e : per_origin) e.Clear();
  }
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->col < iy->col) {
      if constexpr (kOuter) acc2.Add(ix->value);
      ++ix;
    } else if (iy->col < ix->col) {
      if constexpr (kOuter) acc2.Add(iy->value);
      ++iy;
    } else {
      const double a = ix->value;
      const double b = iy->value;
      if constexpr (M == Metric::kCityblock) {
        acc2.Add(std::fabs(a - b));
      } else if constexpr (M == Metric::kJaccardMin) {
        acc.Add(std::min(a, b));
        acc2.Add(std::max(a, b));
      } else if constexpr (M == Metric::kDiceMin) {
        acc.Add(std::min(a, b));
      } else if constexpr (M == Metric::kNewDiceMin) {
        per_origin[weights->column_origin[ix->col]].Add(std::min(a, b));
      } else if constexpr (M == Metric::kLin) {
        acc.Add(a);
        acc.Add(b);
      } else {
        acc.Add(a * b);
      }
      ++ix;
      ++iy;
    }
  }
  if constexpr (kOuter) {
    for (; ix != x.end(); ++ix) acc2.Add(ix->value);
    for (; iy != y.end(); ++iy) acc2.Add(iy->value);
  }
  if constexpr (M == Metric::kNewDiceMin) {
    for (std::size_t j = 0; j < per_origin.size(); ++j) {
      acc.Add(weights->weight[j] * per_origin[j].Result());
    }
  }
  const double s = acc.Result();
  if constexpr (M == Metric::kCityblock) return acc2.Result();
  if constexpr (M == Metric::kCosine) return Ratio(s, std::sqrt(xs.sum_sq) * std::sqrt(ys.sum_sq));
  if constexpr (M == Metric::kDiceMin || M == Metric::kNewDiceMin) {
    return Ratio(2.0 * s, xs.sum + ys.sum);
  }
  if constexpr (M == Metric::kDiceProd) return Ratio(2.0 * s, xs.sum_sq + ys.sum_sq);
  if constexpr (M == Metric::kJaccardMin) return Ratio(s, acc2.Result());
  if constexpr (M == Metric::kJaccardProd) return Ratio(s, xs.sum_sq + ys.sum_sq - s);
  if constexpr (M == Metric::kLin) return Ratio(s, xs.sum + ys.sum);
  return 0.0;
}

}  // namespace

double ScoreVectors(Metric metric, std::span<const Cell> x, const VectorStats& xs,
                    std::span<const Cell> y, const VectorStats& ys,
                    const OriginWeights* weights) {
  switch (metric) {
    case Metric::kCityblock: return Kernel<Metric::kCityblock>(x, xs, y, ys, nullptr);
    case Metric::kCosine: return Kernel<Metric::kCosine>(x, xs, y, ys, nullptr);
    case Metric::kDiceMin: return Kernel<Metric::kDiceMin>(x, xs, y, ys, nullptr);
    case Metric::kDiceProd: return Kernel<Metric::kDiceProd>(x, xs, y, ys, nullptr);
    case Metric::kJaccardMin: return Kernel<Metric::kJaccardMin>(x, xs, y, ys, nullptr);
    case Metric::kJaccardProd: return Kernel<Metric::kJaccardProd>(x, xs, y, ys, nullptr);
    case Metric::kLin: return Kernel<Metric::kLin>(x, xs, y, ys, nullptr);
    case Metric::kNewDiceMin:
      if (!weights) throw ConfigError("newdicemin needs dictionary weights");
      return Kernel<Metric::kNewDiceMin>(x, xs, y, ys, weights);
  }
  return 0.0;
}

double Similarity(Metric metric, const ContextVector& x, const ContextVector& y) {
  if (metric == Metric::kNewDiceMin) throw ConfigError("newdicemin needs dictionary weights");
  RequireSameSpace(x, y);
  return ScoreVectors(metric, x.cells, ComputeStats(x.cells), y.cells, ComputeStats(y.cells));
}

OriginWeights MakeOriginWeights(const ColumnSpace& space, const WeightSet& weights) {
  if (!space.partitioned()) {
    throw ConfigError("newdicemin needs an independent (partitioned) dictionary combination");
  }
  OriginWeights out;
  for (const auto& id : space.origins()) {
    auto it = weights.find(id);
    if (it == weights.end()) throw ConfigError("no weight for dictionary " + id);
    if (!(it->second > 0.0) || !std::isfinite(it->second)) {
      throw ConfigError("weight of " + id + " must be positive");
    }
    out.weight.push_back(it->second);
  }
  out.column_origin.resize(space.size());
  for (std::size_t col = 0; col < space.size(); ++col) {
    out.column_origin[col] = static_cast<std::uint32_t>(space.origin_of(col));
  }
  return out;
}

double NewDiceMin(const PartitionedVector& x, const PartitionedVector& y,
                  const WeightSet& weights) {
  RequireSameSpace(x, y);
  const auto w = MakeOriginWeights(*x.space, weights);
  return ScoreVectors(Metric::kNewDiceMin, x.cells, ComputeStats(x.cells), y.cells,
                      ComputeStats(y.cells), &w);
}

}  // namespace lexind
