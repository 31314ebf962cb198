#pragma once

#include <vector>

#include "semiq/quiver.hpp"
#include "semiq/types.hpp"

namespace semiq {

// E with E[i][j] = delta_ij - #arrows(i -> j), so <a,b> = a^T E b.
IntMatrix euler_matrix(const Quiver& q);

Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
Int tits_form(const Quiver& q, const DimVector& a);

// E + E^T; its radical carries the null root in the extended Dynkin case.
IntMatrix symmetric_matrix(const Quiver& q);

// Simple reflection at a loop-free vertex (orientation independent).
DimVector reflect(const Quiver& q, int vertex, const DimVector& a);
IntMatrix reflection_matrix(const Quiver& q, int vertex);

// Vertices in reflection application order: all current sinks (lowest index
// first), then vertices that become sinks once those are peeled, and so on.
// Requires an acyclic quiver.
std::vector<int> sink_peel_order(const Quiver& q);

// Composition of the simple reflections along sink_peel_order, first-applied
// rightmost; independent of which admissible order is used.
IntMatrix coxeter_matrix(const Quiver& q);

// The unique positive non-divisible radical vector of the symmetric form.
// Requires an extended Dynkin underlying graph; entries are in [1,6].
DimVector null_root(const Quiver& q);

// <alpha, delta>; zero exactly on the regular dimension vectors.
Int defect(const Quiver& q, const DimVector& alpha);

}  // namespace semiq
