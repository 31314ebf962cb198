#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiq/regular.hpp"
#include "semiq/slice.hpp"
#include "semiq/types.hpp"

namespace semiq {

// Contiguous run of simples in successor order: start, next(start), ...,
// with 1 <= len < orbit size.
struct Arc {
  int start = 0;
  int len = 1;
};

std::vector<int> arc_elements(const RegularStructure& rs, Arc a);
int arc_last(const RegularStructure& rs, Arc a);
DimVector arc_root(const RegularStructure& rs, Arc a);

struct OmegaArc {
  Arc arc;
  Int mult = 0;
};

// Expresses each real term of a locally semi-simple decomposition as an arc
// and verifies the structural constraints: pairwise the arcs are disjoint or
// nested strictly inside the interior, and adjacent arcs carry distinct
// multiplicities.
std::vector<OmegaArc> omega_arcs(const RegularStructure& rs, const Decomposition& lss);

// Merges maximal chains of consecutive omega arcs into single arcs. Nested
// arcs are never consecutive with their container, so each nesting level
// contributes its own chains. Every omega arc lands in exactly one chain.
std::vector<Arc> delta_arcs(const RegularStructure& rs, const std::vector<OmegaArc>& omega);

// Sorted set of all arc starts and all successors-of-ends; |J| = |Delta| + |Omega|.
std::vector<int> j_set(const RegularStructure& rs, const std::vector<OmegaArc>& omega);

// Weight of the determinantal semi-invariant attached to a representation of
// dimension e: the character alpha |-> -<alpha, e>, returned as the vector of
// values on the unit vectors.
DimVector weight_of(const Quiver& q, const DimVector& e);

enum class RingCase { Polynomial, Hypersurface };

struct Generator {
  enum class Kind { SimpleWeight, ArcProduct, DeltaWeight };
  Kind kind = Kind::SimpleWeight;
  int index = 0;       // simple index, delta-arc position, or ordinal
  DimVector root;      // e_i, the extended arc sum, or delta
  DimVector weight;    // -<., root>
  std::string detail;  // printable description
};

// Structure of the ring of semi-invariants on the regular locus for a
// regular dimension vector with positive homogeneous part.
struct RingReport {
  std::string type;  // underlying graph class
  int n = 0;         // |Q_0| - 1
  Int p = 0;
  int n_o = 0;
  CanonicalDecomp canonical;
  std::vector<OmegaArc> omega;
  std::vector<Arc> delta;
  std::vector<int> j;
  bool details_computed = false;
  RingCase ring_case = RingCase::Polynomial;
  Int krull_dim = -1;
  std::vector<Generator> generators;
  std::optional<std::string> syzygy;
  std::vector<DimVector> lambda_weights;
  std::vector<std::string> notes;
};

RingReport ring_report(const Quiver& q, const DimVector& alpha);

}  // namespace semiq
