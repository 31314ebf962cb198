#pragma once

#include <cstdint>
#include <vector>

#include "semiq/an.hpp"
#include "semiq/exactmat.hpp"
#include "semiq/quiver.hpp"
#include "semiq/types.hpp"

namespace semiq {

// Exact-rational representation: one matrix per arrow, maps[a] has shape
// dims[head] x dims[tail] (columns act on the tail space).
struct Representation {
  DimVector dims;
  std::vector<DenseMat<Rat>> maps;
};

// Deterministic pseudorandom integer representation with entries in
// [-range, range], filled arrow by arrow in file order, row-major.
Representation random_rep(const Quiver& q, const DimVector& dims, std::uint64_t seed,
                          Int range = 10);

// dim Hom(u, w) as the nullity of the intertwining system
// W(phi) H(tail) = H(head) U(phi), solved exactly.
Int hom_dim(const Quiver& q, const Representation& u, const Representation& w);

// dim Ext(u, w) = hom_dim(u, w) - <dim u, dim w>; needs an acyclic quiver.
Int ext_dim(const Quiver& q, const Representation& u, const Representation& w);

// Determinant of H |-> (H(head) V(phi) - W(phi) H(tail))_phi, defined when
// <dim v, dim w> = 0; nonzero exactly when Hom(v, w) = 0 (and then also
// Ext(v, w) = 0).
Rat schofield_pairing(const Quiver& q, const Representation& v, const Representation& w);

bool is_schurian(const Quiver& q, const Representation& v);

// First representation among random_rep(seed), random_rep(seed+1), ... that
// is Schurian; DomainError after `retries` failures.
Representation sample_schurian(const Quiver& q, const DimVector& dims, std::uint64_t seed,
                               int retries = 20);

// Whether w lies in the right perpendicular category of v:
// Hom(v, w) = 0 and Ext(v, w) = 0.
bool in_right_perp(const Quiver& q, const Representation& v, const Representation& w);

// The indecomposable supported on [iv.i, iv.j] of linear_quiver(n):
// one-dimensional spaces joined by identities.
Representation interval_rep(int n, Interval iv);

}  // namespace semiq
