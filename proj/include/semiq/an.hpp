#pragma once

#include <vector>

#include "semiq/types.hpp"

namespace semiq {

// Support interval of an indecomposable on the equioriented type A quiver
// 1 -> 2 -> ... -> n. Indices are 1-based with i <= j.
struct Interval {
  int i = 1;
  int j = 1;
};

inline bool operator==(const Interval& a, const Interval& b) { return a.i == b.i && a.j == b.j; }
inline bool operator<(const Interval& a, const Interval& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

struct AnTerm {
  Interval interval;
  Int mult = 0;
};

// Aggregated interval multiset, sorted by (i, j), all multiplicities > 0.
struct AnDecomposition {
  std::vector<AnTerm> terms;
};

// dim Hom(S_source, S_target); nonzero exactly when target.i <= source.i <=
// target.j <= source.j, and then 1.
int an_hom_dim(int n, Interval source, Interval target);

// dim Ext(S_source, S_target) = hom - <dim source, dim target>.
int an_ext_dim(int n, Interval source, Interval target);

// Whether every pair of distinct support intervals has vanishing Hom in both
// directions (the summands of a locally semi-simple representation).
bool an_is_lss(int n, const AnDecomposition& d);

// Decomposition of the generic representation of dimension alpha: peel the
// minimum off the whole range, then recurse into the runs between zeros.
AnDecomposition an_generic(const DimVector& alpha);

// Generic locally semi-simple decomposition: emit the interval spanned by the
// first and last minimum, then recurse left of it, right of it, and into its
// interior with the minimum subtracted.
AnDecomposition an_generic_lss(const DimVector& alpha);

DimVector an_dimension(int n, const AnDecomposition& d);

}  // namespace semiq
