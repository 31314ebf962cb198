#include "semiq/siring.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiq/forms.hpp"

namespace semiq {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int orbit_size(const RegularStructure& rs, int simple) {
  return static_cast<int>(rs.orbits[idx(rs.orbit_index[idx(simple)])].size());
}

std::string product_name(const RegularStructure& rs, Arc arc, int extra) {
  std::string s;
  for (int i : arc_elements(rs, arc)) s += "c(e" + std::to_string(i + 1) + ")";
  if (extra >= 0) s += "c(e" + std::to_string(extra + 1) + ")";
  return s;
}

}  // namespace

std::vector<int> arc_elements(const RegularStructure& rs, Arc a) {
  if (a.start < 0 || a.start >= rs.count()) throw InputError("arc start out of range");
  if (a.len < 1 || a.len >= orbit_size(rs, a.start))
    throw InputError("arc length must be at least 1 and less than the orbit size");
  std::vector<int> out;
  out.reserve(idx(a.len));
  int cur = a.start;
  for (int t = 0; t < a.len; ++t) {
    out.push_back(cur);
    cur = rs.next[idx(cur)];
  }
  return out;
}

int arc_last(const RegularStructure& rs, Arc a) { return arc_elements(rs, a).back(); }

DimVector arc_root(const RegularStructure& rs, Arc a) {
  DimVector sum = DimVector::Zero(rs.delta.size());
  for (int i : arc_elements(rs, a)) sum += rs.simples[idx(i)];
  return sum;
}

std::vector<OmegaArc> omega_arcs(const RegularStructure& rs, const Decomposition& lss) {
  std::vector<OmegaArc> out;
  for (const auto& term : lss.terms) {
    if (term.imaginary) continue;
    bool found = false;
    for (int s = 0; s < rs.count() && !found; ++s) {
      DimVector acc = DimVector::Zero(rs.delta.size());
      int cur = s;
      const int size = orbit_size(rs, s);
      for (int len = 1; len < size; ++len) {
        acc += rs.simples[idx(cur)];
        cur = rs.next[idx(cur)];
        if (dim_eq(acc, term.root)) {
          out.push_back({Arc{s, len}, term.mult});
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw DomainError("real term " + format_dim(term.root) +
                        " is not a sum of consecutive regular simples");
  }

  std::vector<std::set<int>> elems;
  std::vector<int> last(out.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto e = arc_elements(rs, out[i].arc);
    last[i] = e.back();
    elems.emplace_back(e.begin(), e.end());
  }
  auto strictly_inside = [&](std::size_t a, std::size_t b) {
    for (int x : elems[a])
      if (!elems[b].count(x)) return false;
    return !elems[a].count(out[b].arc.start) && !elems[a].count(last[b]);
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (rs.next[idx(last[i])] == out[j].arc.start || rs.next[idx(last[j])] == out[i].arc.start) {
        if (out[i].mult == out[j].mult)
          throw DomainError("consecutive arcs carry equal multiplicities");
      }
      bool disjoint = true;
      for (int x : elems[i])
        if (elems[j].count(x)) {
          disjoint = false;
          break;
        }
      if (disjoint) continue;
      if (!strictly_inside(i, j) && !strictly_inside(j, i))
        throw DomainError("arcs overlap without one lying strictly inside the other");
    }
  }

  std::sort(out.begin(), out.end(), [](const OmegaArc& x, const OmegaArc& y) {
    if (x.arc.start != y.arc.start) return x.arc.start < y.arc.start;
    return x.arc.len < y.arc.len;
  });
  return out;
}

std::vector<Arc> delta_arcs(const RegularStructure& rs, const std::vector<OmegaArc>& omega) {
  const int k = static_cast<int>(omega.size());
  std::map<int, int> by_start;
  for (int i = 0; i < k; ++i)
    if (!by_start.emplace(omega[idx(i)].arc.start, i).second)
      throw DomainError("two arcs share a start");

  std::vector<int> succ(idx(k), -1);
  std::vector<int> pred(idx(k), -1);
  for (int i = 0; i < k; ++i) {
    const int after = rs.next[idx(arc_last(rs, omega[idx(i)].arc))];
    auto it = by_start.find(after);
    if (it == by_start.end()) continue;
    if (pred[idx(it->second)] != -1) throw DomainError("two arcs precede the same arc");
    succ[idx(i)] = it->second;
    pred[idx(it->second)] = i;
  }

  std::vector<Arc> out;
  std::vector<char> seen(idx(k), 0);
  for (int i = 0; i < k; ++i) {
    if (pred[idx(i)] != -1) continue;
    Arc merged{omega[idx(i)].arc.start, 0};
    for (int cur = i; cur != -1; cur = succ[idx(cur)]) {
      merged.len += omega[idx(cur)].arc.len;
      seen[idx(cur)] = 1;
    }
    out.push_back(merged);
  }
  for (int i = 0; i < k; ++i)
    if (!seen[idx(i)]) throw DomainError("arcs tile a whole orbit");

  std::sort(out.begin(), out.end(), [](Arc x, Arc y) {
    if (x.start != y.start) return x.start < y.start;
    return x.len < y.len;
  });
  return out;
}

std::vector<int> j_set(const RegularStructure& rs, const std::vector<OmegaArc>& omega) {
  std::set<int> js;
  for (const auto& oa : omega) {
    js.insert(oa.arc.start);
    js.insert(rs.next[idx(arc_last(rs, oa.arc))]);
  }
  return {js.begin(), js.end()};
}

DimVector weight_of(const Quiver& q, const DimVector& e) {
  if (e.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  return (-(euler_matrix(q) * e)).eval();
}

RingReport ring_report(const Quiver& q, const DimVector& alpha) {
  const RegularStructure rs = regular_simples(q);
  const CanonicalDecomp cd = canonical_decomposition(q, rs, alpha);

  RingReport r;
  r.type = class_name(classify_graph(q), q.vertex_count());
  r.n = q.vertex_count() - 1;
  r.p = cd.p;
  r.n_o = rs.orbit_count();
  r.canonical = cd;

  const Decomposition lss = tame_generic_lss(q, alpha);
  r.omega = omega_arcs(rs, lss);
  r.delta = delta_arcs(rs, r.omega);
  r.j = j_set(rs, r.omega);
  if (r.j.size() != r.delta.size() + r.omega.size())
    throw InternalError("arc endpoint count mismatch");

  if (cd.p == 0) {
    r.notes.push_back(
        "the homogeneous multiplicity is zero: the generic representation has a "
        "dense orbit in the regular locus and the ring data below is not computed");
    return r;
  }
  r.details_computed = true;
  r.krull_dim = static_cast<Int>(r.n) + cd.p - static_cast<Int>(r.omega.size());

  std::vector<int> zeros(idx(rs.orbit_count()), 0);
  for (int i = 0; i < rs.count(); ++i)
    if (cd.coeff[idx(i)] == 0) ++zeros[idx(rs.orbit_index[idx(i)])];
  bool every_orbit_two = true;
  bool some_single = false;
  for (int z : zeros) {
    if (z < 2) every_orbit_two = false;
    if (z == 1) some_single = true;
  }
  const bool hyper = cd.p == 1 && r.n_o == 3 && every_orbit_two;
  const bool redundant = cd.p == 1 && r.n_o == 3 && some_single;
  r.ring_case = hyper ? RingCase::Hypersurface : RingCase::Polynomial;

  const std::set<int> boundary(r.j.begin(), r.j.end());
  for (int i = 0; i < rs.count(); ++i) {
    if (boundary.count(i)) continue;
    Generator g;
    g.kind = Generator::Kind::SimpleWeight;
    g.index = i;
    g.root = rs.simples[idx(i)];
    g.weight = weight_of(q, g.root);
    g.detail = "c(e" + std::to_string(i + 1) + ")";
    r.lambda_weights.push_back(g.weight);
    r.generators.push_back(std::move(g));
  }

  bool dropped = false;
  for (std::size_t d = 0; d < r.delta.size(); ++d) {
    const Arc arc = r.delta[d];
    const int after = rs.next[idx(arc_last(rs, arc))];
    Generator g;
    g.kind = Generator::Kind::ArcProduct;
    g.index = static_cast<int>(d);
    g.root = arc_root(rs, arc) + rs.simples[idx(after)];
    g.weight = weight_of(q, g.root);
    g.detail = product_name(rs, arc, after);
    r.lambda_weights.push_back(g.weight);
    if (redundant && !dropped && dim_eq(g.root, rs.delta)) {
      dropped = true;
      r.notes.push_back("generator " + g.detail +
                        " extends over a whole orbit: it equals that orbit's full "
                        "product, which the relation between the orbit products "
                        "expresses through the other generators, so it is omitted");
      continue;
    }
    r.generators.push_back(std::move(g));
  }
  if (redundant && !dropped) throw InternalError("no full-orbit product to drop");

  const Int extra = std::max<Int>(cd.p + 1 - static_cast<Int>(r.n_o), 0);
  for (Int t = 0; t < extra; ++t) {
    Generator g;
    g.kind = Generator::Kind::DeltaWeight;
    g.index = static_cast<int>(t);
    g.root = rs.delta;
    g.weight = weight_of(q, rs.delta);
    g.detail = "f" + std::to_string(t + 1);
    r.generators.push_back(std::move(g));
  }

  if (hyper) {
    std::string rel = "c1*P1 + c2*P2 + c3*P3 = 0";
    for (int o = 0; o < rs.orbit_count(); ++o) {
      rel += "; P" + std::to_string(o + 1) + " = ";
      std::string prod;
      std::set<int> skip;  // covered elements and chain extensions
      for (std::size_t d = 0; d < r.delta.size(); ++d) {
        const Arc arc = r.delta[d];
        if (rs.orbit_index[idx(arc.start)] != o) continue;
        bool top = true;  // nested chains sit inside another delta arc
        for (std::size_t d2 = 0; d2 < r.delta.size() && top; ++d2) {
          if (d2 == d || rs.orbit_index[idx(r.delta[d2].start)] != o) continue;
          auto big = arc_elements(rs, r.delta[d2]);
          if (std::find(big.begin(), big.end(), arc.start) != big.end()) top = false;
        }
        for (int x : arc_elements(rs, arc)) skip.insert(x);
        if (!top) continue;
        const int after = rs.next[idx(arc_last(rs, arc))];
        skip.insert(after);
        prod += "[" + product_name(rs, arc, after) + "]";
      }
      for (int i : rs.orbits[idx(o)])
        if (!skip.count(i)) prod += "c(e" + std::to_string(i + 1) + ")";
      rel += prod;
    }
    r.syzygy = rel;
  }

  const Int expected = r.krull_dim + (hyper ? 1 : 0);
  if (static_cast<Int>(r.generators.size()) != expected)
    throw InternalError("generator count does not match the ring dimension");
  if (r.lambda_weights.size() + r.omega.size() != rs.simples.size())
    throw InternalError("weight lattice generator count mismatch");

  return r;
}

}  // namespace semiq
