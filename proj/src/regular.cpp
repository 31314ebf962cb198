#include "semiq/regular.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "semiq/forms.hpp"

namespace semiq {

namespace {

// All beta with 0 <= beta <= bound, in ascending lexicographic order.
void enumerate_box(const DimVector& bound, const std::function<void(const DimVector&)>& visit) {
  DimVector beta = DimVector::Zero(bound.size());
  while (true) {
    visit(beta);
    Eigen::Index i = beta.size();
    while (i > 0) {
      --i;
      if (beta[i] < bound[i]) {
        beta[i] += 1;
        for (Eigen::Index j = i + 1; j < beta.size(); ++j) beta[j] = 0;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

RegularStructure regular_simples(const Quiver& q) {
  if (!is_connected(q)) throw DomainError("regular_simples: quiver must be connected");
  if (!is_acyclic(q)) throw DomainError("regular_simples: quiver must be acyclic");
  GraphClass cls = classify_graph(q);
  if (!is_extended_dynkin(cls.tag)) {
    throw DomainError("regular_simples: underlying graph is not extended Dynkin (" +
                      class_name(cls, q.vertex_count()) + ")");
  }

  RegularStructure rs;
  rs.delta = null_root(q);
  const IntMatrix cox = coxeter_matrix(q);
  const int cap = 4 * q.vertex_count();

  enumerate_box(rs.delta, [&](const DimVector& beta) {
    if ((beta.array() == 0).all()) return;
    if (tits_form(q, beta) != 1) return;
    if (euler_form(q, beta, rs.delta) != 0) return;
    // Defect-zero real roots are periodic under the Coxeter transformation;
    // the orbit sum is a multiple of delta and equals delta exactly for the
    // regular simples.
    DimVector sum = DimVector::Zero(q.vertex_count());
    DimVector cur = beta;
    bool closed = false;
    for (int step = 0; step < cap; ++step) {
      sum += cur;
      cur = cox * cur;
      if (dim_eq(cur, beta)) {
        closed = true;
        break;
      }
    }
    if (!closed) throw InternalError("regular_simples: orbit did not close");
    if (dim_eq(sum, rs.delta)) rs.simples.push_back(beta);
  });

  std::sort(rs.simples.begin(), rs.simples.end(), lex_less);

  const int k = rs.count();
  rs.next.assign(static_cast<std::size_t>(k), -1);
  rs.prev.assign(static_cast<std::size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    DimVector img = cox * rs.simples[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) {
      if (dim_eq(img, rs.simples[static_cast<std::size_t>(j)])) {
        rs.next[static_cast<std::size_t>(i)] = j;
        rs.prev[static_cast<std::size_t>(j)] = i;
        break;
      }
    }
    if (rs.next[static_cast<std::size_t>(i)] < 0) {
      throw InternalError("regular_simples: Coxeter image of a simple is not a simple");
    }
  }

  rs.orbit_index.assign(static_cast<std::size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    if (rs.orbit_index[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> orbit;
    int cur = i;
    do {
      rs.orbit_index[static_cast<std::size_t>(cur)] = static_cast<int>(rs.orbits.size());
      orbit.push_back(cur);
      cur = rs.next[static_cast<std::size_t>(cur)];
    } while (cur != i);
    rs.orbits.push_back(std::move(orbit));
  }
  return rs;
}

namespace {

std::optional<CanonicalDecomp> try_canonical(const Quiver& q, const RegularStructure& rs,
                                             const DimVector& alpha, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<CanonicalDecomp> {
    if (why) *why = msg;
    return std::nullopt;
  };

  const Int sigma = euler_form(q, alpha, rs.delta);
  if (sigma != 0) {
    return fail("defect = " + std::to_string(sigma) +
                ", the generic representation is not regular");
  }

  const int k = rs.count();
  std::vector<Int> d(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = euler_form(q, rs.simples[static_cast<std::size_t>(i)], alpha);
  }

  CanonicalDecomp out;
  out.coeff.assign(static_cast<std::size_t>(k), 0);
  for (const auto& orbit : rs.orbits) {
    // <e_i, alpha> = q_i - q_{next(i)}, so the coefficients integrate along
    // the orbit cycle; the smallest value is normalized to zero.
    std::vector<Int> t(orbit.size(), 0);
    for (std::size_t s = 0; s + 1 < orbit.size(); ++s) {
      t[s + 1] = t[s] - d[static_cast<std::size_t>(orbit[s])];
    }
    Int wrap = t.back() - d[static_cast<std::size_t>(orbit.back())];
    if (wrap != t.front()) {
      return fail("orbit coefficient cycle does not close");
    }
    Int lo = *std::min_element(t.begin(), t.end());
    for (std::size_t s = 0; s < orbit.size(); ++s) {
      out.coeff[static_cast<std::size_t>(orbit[s])] = t[s] - lo;
    }
  }

  DimVector rest = alpha;
  for (int i = 0; i < k; ++i) {
    rest -= out.coeff[static_cast<std::size_t>(i)] * rs.simples[static_cast<std::size_t>(i)];
  }
  Int p = rest[0] / rs.delta[0];
  if (p < 0 || !dim_eq(rest, (p * rs.delta).eval())) {
    return fail("remainder is not a nonnegative multiple of delta");
  }
  out.p = p;
  return out;
}

}  // namespace

CanonicalDecomp canonical_decomposition(const Quiver& q, const RegularStructure& rs,
                                        const DimVector& alpha) {
  if (alpha.size() != q.vertex_count()) {
    throw InputError("canonical_decomposition: dimension vector has wrong length");
  }
  if ((alpha.array() < 0).any()) {
    throw InputError("canonical_decomposition: dimension vector must be nonnegative");
  }
  std::string why;
  auto out = try_canonical(q, rs, alpha, &why);
  if (!out) throw NotRegularError("not a regular dimension vector: " + why);
  return *out;
}

CanonicalDecomp canonical_decomposition(const Quiver& q, const DimVector& alpha) {
  return canonical_decomposition(q, regular_simples(q), alpha);
}

bool in_regular_dims(const Quiver& q, const DimVector& alpha) {
  if (alpha.size() != q.vertex_count()) {
    throw InputError("in_regular_dims: dimension vector has wrong length");
  }
  if ((alpha.array() < 0).any()) return false;
  RegularStructure rs = regular_simples(q);
  return try_canonical(q, rs, alpha, nullptr).has_value();
}

Quiver eq_quiver(const RegularStructure& rs) {
  std::vector<std::string> labels;
  for (int i = 0; i < rs.count(); ++i) labels.push_back("e" + std::to_string(i + 1));
  std::vector<Arrow> arrows;
  for (int i = 0; i < rs.count(); ++i) arrows.push_back({i, rs.next[static_cast<std::size_t>(i)]});
  return Quiver(std::move(labels), std::move(arrows));
}

}  // namespace semiq
