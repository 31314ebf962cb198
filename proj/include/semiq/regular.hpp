#pragma once

#include <vector>

#include "semiq/quiver.hpp"
#include "semiq/types.hpp"

namespace semiq {

// Regular simple dimension vectors of a connected acyclic extended Dynkin
// quiver, together with the permutation induced by the Coxeter
// transformation. Simples are sorted lexicographically; orbits are the cycles
// of `next`, each listed from its smallest member in successor order and
// ordered by smallest member.
struct RegularStructure {
  DimVector delta;
  std::vector<DimVector> simples;
  std::vector<int> next;
  std::vector<int> prev;
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_index;  // per simple: position in `orbits`

  int count() const { return static_cast<int>(simples.size()); }
  int orbit_count() const { return static_cast<int>(orbits.size()); }
};

RegularStructure regular_simples(const Quiver& q);

// alpha = p*delta + sum q_i e_i with every orbit containing a zero
// coefficient; unique for regular alpha.
struct CanonicalDecomp {
  Int p = 0;
  std::vector<Int> coeff;
};

CanonicalDecomp canonical_decomposition(const Quiver& q, const RegularStructure& rs,
                                        const DimVector& alpha);
CanonicalDecomp canonical_decomposition(const Quiver& q, const DimVector& alpha);

bool in_regular_dims(const Quiver& q, const DimVector& alpha);

// Disjoint cycles: one vertex per simple (labeled e1..ek in sorted order),
// one arrow i -> next[i] per simple.
Quiver eq_quiver(const RegularStructure& rs);

}  // namespace semiq
