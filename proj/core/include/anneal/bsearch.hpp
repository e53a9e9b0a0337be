#pragma once

#include "anneal/errors.hpp"

namespace anneal {

// Right-most point of [lo, hi] satisfying a predicate that is true at lo:
// hi itself if pred(hi), otherwise bisect until the bracket [l, r] has
// width <= precision and return l. pred(lo) is only evaluated when
// `check_lo` is set (the schedule loop already knows it holds).
template <class Pred>
double monotone_bsearch(double lo, double hi, Pred&& pred, double precision, bool check_lo = false) {
  if (!(precision > 0.0)) throw InvalidArgument("monotone_bsearch: precision must be > 0");
  if (hi < lo) throw InvalidArgument("monotone_bsearch: empty range");
  if (check_lo && !pred(lo)) throw InvalidArgument("monotone_bsearch: predicate is false at lo");
  if (pred(hi)) return hi;
  while (hi - lo > precision) {
    double const mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace anneal
