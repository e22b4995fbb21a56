#ifndef LEXIND_EXACT_SUM_H_
#define LEXIND_EXACT_SUM_H_

#include <array>
#include <cmath>
#include <utility>

namespace lexind {

// Correctly rounded sum of finite doubles (Shewchuk's non-overlapping
// partials with the half-way correction used by Python's math.fsum).
//
// The result depends only on the multiset of addends, never on their order,
// so two scores that are equal in exact arithmetic and built from the same
// terms compare equal, whatever order the terms were visited in.
class ExactSum {
 public:
  void Add(double x) {
    int i = 0;
    for (int j = 0; j < n_; ++j) {
      double y = partials_[j];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[i++] = lo;
      x = hi;
    }
    partials_[i++] = x;
    n_ = i;
  }

  void Clear() { n_ = 0; }

  double Result() const {
    if (n_ == 0) return 0.0;
    int n = n_ - 1;
    double hi = partials_[n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      lo = y - (hi - x);
      if (lo != 0.0) break;
    }
    // Round half-way cases the way the remaining partials say.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = lo * 2.0;
      const double x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

 private:
  // Non-overlapping partials of finite doubles never exceed ~40.
  std::array<double, 48> partials_;
  int n_ = 0;
};

}  // namespace lexind

#endif  // LEXIND_EXACT_SUM_H_
