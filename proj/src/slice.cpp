#include "semiq/slice.hpp"

#include <algorithm>

#include "semiq/an.hpp"
#include "semiq/forms.hpp"

namespace semiq {

LocalQuiver local_quiver(const Quiver& q, const std::vector<std::pair<DimVector, Int>>& summands) {
  const int k = static_cast<int>(summands.size());
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;
  LocalQuiver lq;
  lq.dims = DimVector::Zero(k);
  for (int i = 0; i < k; ++i) {
    const auto& [root, mult] = summands[static_cast<std::size_t>(i)];
    if (root.size() != q.vertex_count()) throw InputError("local_quiver: root length mismatch");
    if (mult < 1) throw InputError("local_quiver: multiplicity must be positive");
    labels.push_back("s" + std::to_string(i + 1));
    lq.dims[i] = mult;
    lq.back_map.push_back(root);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Int count = (i == j ? 1 : 0) - euler_form(q, summands[static_cast<std::size_t>(i)].first,
                                                summands[static_cast<std::size_t>(j)].first);
      if (count < 0) {
        throw DomainError("local_quiver: negative arrow count; summands are not pairwise "
                          "non-isomorphic semi-simples");
      }
      for (Int c = 0; c < count; ++c) arrows.push_back({i, j});
    }
  }
  lq.quiver = Quiver(std::move(labels), std::move(arrows));
  return lq;
}

DimVector dv_map(const LocalQuiver& lq, const DimVector& g) {
  if (g.size() != lq.quiver.vertex_count()) throw InputError("dv_map: vector length mismatch");
  if (lq.back_map.empty()) return DimVector();
  DimVector out = DimVector::Zero(lq.back_map.front().size());
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    out += g[i] * lq.back_map[static_cast<std::size_t>(i)];
  }
  return out;
}

Int delta_mult(const Decomposition& d, const DimVector& delta) {
  for (const auto& t : d.terms) {
    if (t.imaginary && dim_eq(t.root, delta)) return t.mult;
  }
  return 0;
}

LocalQuiver canonical_local_quiver(const Quiver& q, const RegularStructure& rs,
                                   const CanonicalDecomp& cd) {
  std::vector<std::pair<DimVector, Int>> summands;
  for (Int c = 0; c < cd.p; ++c) summands.emplace_back(rs.delta, 1);
  for (int i = 0; i < rs.count(); ++i) {
    Int m = cd.coeff[static_cast<std::size_t>(i)];
    if (m > 0) summands.emplace_back(rs.simples[static_cast<std::size_t>(i)], m);
  }
  return local_quiver(q, summands);
}

std::vector<Segment> support_segments(const RegularStructure& rs, const CanonicalDecomp& cd) {
  std::vector<Segment> segments;
  for (const auto& orbit : rs.orbits) {
    // Every orbit has a zero coefficient, so the support splits into runs
    // that never wrap around; each run is read in successor order.
    for (int start : orbit) {
      if (cd.coeff[static_cast<std::size_t>(start)] == 0) continue;
      if (cd.coeff[static_cast<std::size_t>(rs.prev[static_cast<std::size_t>(start)])] != 0) continue;
      Segment seg;
      int cur = start;
      while (cd.coeff[static_cast<std::size_t>(cur)] != 0) {
        seg.simples.push_back(cur);
        cur = rs.next[static_cast<std::size_t>(cur)];
      }
      seg.gamma = DimVector::Zero(static_cast<Eigen::Index>(seg.simples.size()));
      for (std::size_t s = 0; s < seg.simples.size(); ++s) {
        seg.gamma[static_cast<Eigen::Index>(s)] =
            cd.coeff[static_cast<std::size_t>(seg.simples[s])];
      }
      segments.push_back(std::move(seg));
    }
  }
  return segments;
}

namespace {

void sort_terms(Decomposition& d) {
  std::sort(d.terms.begin(), d.terms.end(), [](const DecompTerm& a, const DecompTerm& b) {
    if (a.imaginary != b.imaginary) return a.imaginary;
    return lex_less(a.root, b.root);
  });
}

Decomposition pipeline(const Quiver& q, const DimVector& alpha, bool lss) {
  RegularStructure rs = regular_simples(q);
  CanonicalDecomp cd = canonical_decomposition(q, rs, alpha);
  // Also validates the arrow-count nonnegativity of the slice model.
  canonical_local_quiver(q, rs, cd);

  Decomposition out;
  if (cd.p > 0) out.terms.push_back({rs.delta, cd.p, true});

  for (const Segment& seg : support_segments(rs, cd)) {
    AnDecomposition an = lss ? an_generic_lss(seg.gamma) : an_generic(seg.gamma);
    for (const AnTerm& t : an.terms) {
      DimVector root = DimVector::Zero(q.vertex_count());
      for (int u = t.interval.i; u <= t.interval.j; ++u) {
        root += rs.simples[static_cast<std::size_t>(seg.simples[static_cast<std::size_t>(u - 1)])];
      }
      Int tf = tits_form(q, root);
      if (tf != 1) throw InternalError("pipeline: segment root is not a real root");
      out.terms.push_back({std::move(root), t.mult, false});
    }
  }

  sort_terms(out);

  DimVector total = DimVector::Zero(q.vertex_count());
  for (const auto& t : out.terms) total += t.mult * t.root;
  if (!dim_eq(total, alpha)) throw InternalError("pipeline: terms do not sum to alpha");
  return out;
}

}  // namespace

Decomposition tame_generic(const Quiver& q, const DimVector& alpha) {
  return pipeline(q, alpha, false);
}

Decomposition tame_generic_lss(const Quiver& q, const DimVector& alpha) {
  return pipeline(q, alpha, true);
}

}  // namespace semiq
