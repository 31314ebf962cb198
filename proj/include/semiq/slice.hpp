#pragma once

#include <utility>
#include <vector>

#include "semiq/quiver.hpp"
#include "semiq/regular.hpp"
#include "semiq/types.hpp"

namespace semiq {

// Local model at a semi-simple representation with pairwise distinct summand
// classes: one vertex per summand, ext-many arrows, dims = multiplicities.
// back_map sends basis vectors to the original dimension vectors.
struct LocalQuiver {
  Quiver quiver;
  DimVector dims;
  std::vector<DimVector> back_map;
};

// Summands as (dimension vector, multiplicity) pairs; repeated vectors are
// only meaningful for imaginary roots (distinct homogeneous classes with the
// same dimension). Arrow counts delta_ij - <d_i, d_j> must be nonnegative,
// which fails exactly when a real root is repeated.
LocalQuiver local_quiver(const Quiver& q, const std::vector<std::pair<DimVector, Int>>& summands);

DimVector dv_map(const LocalQuiver& lq, const DimVector& g);

struct DecompTerm {
  DimVector root;
  Int mult = 0;
  bool imaginary = false;
};

// Multiset of roots with multiplicities; imaginary terms first, then sorted
// lexicographically by root.
struct Decomposition {
  std::vector<DecompTerm> terms;
};

Int delta_mult(const Decomposition& d, const DimVector& delta);

// The local quiver at the canonical regular representation: p loop vertices
// carrying delta, then one vertex per supported simple (ascending index).
LocalQuiver canonical_local_quiver(const Quiver& q, const RegularStructure& rs,
                                   const CanonicalDecomp& cd);

// A maximal run of supported simples inside one orbit, in successor order.
struct Segment {
  std::vector<int> simples;
  DimVector gamma;
};

std::vector<Segment> support_segments(const RegularStructure& rs, const CanonicalDecomp& cd);

// Decomposition of the generic representation of a regular dimension vector:
// p copies of delta plus the generic decomposition of each support segment,
// pulled back from the equioriented type A model.
Decomposition tame_generic(const Quiver& q, const DimVector& alpha);

// Same reduction with the locally semi-simple generic decomposition on each
// segment.
Decomposition tame_generic_lss(const Quiver& q, const DimVector& alpha);

}  // namespace semiq
