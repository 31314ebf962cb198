#include "semiq/forms.hpp"

#include <algorithm>
#include <numeric>

namespace semiq {

namespace {

void check_dim(const Quiver& q, const DimVector& a, const char* what) {
  if (a.size() != q.vertex_count()) {
    throw InputError(std::string(what) + ": dimension vector has wrong length");
  }
}

}  // namespace

IntMatrix euler_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  IntMatrix e = IntMatrix::Identity(n, n);
  for (const auto& a : q.arrows()) e(a.tail, a.head) -= 1;
  return e;
}

Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_dim(q, a, "euler_form");
  check_dim(q, b, "euler_form");
  Int s = a.dot(b);
  for (const auto& ar : q.arrows()) s -= a[ar.tail] * b[ar.head];
  return s;
}

Int tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

IntMatrix symmetric_matrix(const Quiver& q) {
  IntMatrix e = euler_matrix(q);
  return e + e.transpose();
}

DimVector reflect(const Quiver& q, int vertex, const DimVector& a) {
  check_dim(q, a, "reflect");
  if (vertex < 0 || vertex >= q.vertex_count()) throw InputError("reflect: vertex out of range");
  Int nbr = 0;
  for (const auto& ar : q.arrows()) {
    if (ar.tail == ar.head) {
      if (ar.tail == vertex) throw DomainError("reflect: undefined at a loop vertex");
      continue;
    }
    if (ar.tail == vertex) nbr += a[ar.head];
    if (ar.head == vertex) nbr += a[ar.tail];
  }
  DimVector out = a;
  out[vertex] = nbr - a[vertex];
  return out;
}

IntMatrix reflection_matrix(const Quiver& q, int vertex) {
  const int n = q.vertex_count();
  IntMatrix m = IntMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    DimVector basis = DimVector::Zero(n);
    basis[j] = 1;
    m.col(j) = reflect(q, vertex, basis);
  }
  return m;
}

std::vector<int> sink_peel_order(const Quiver& q) {
  if (!is_acyclic(q)) throw DomainError("sink_peel_order: quiver has an oriented cycle");
  const int n = q.vertex_count();
  std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
  for (const auto& a : q.arrows()) outdeg[static_cast<std::size_t>(a.tail)]++;
  std::vector<bool> peeled(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  while (static_cast<int>(order.size()) < n) {
    std::vector<int> round;
    for (int v = 0; v < n; ++v) {
      if (!peeled[static_cast<std::size_t>(v)] && outdeg[static_cast<std::size_t>(v)] == 0) {
        round.push_back(v);
      }
    }
    if (round.empty()) throw InternalError("sink_peel_order: no sink in acyclic quiver");
    for (int v : round) {
      peeled[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      for (const auto& a : q.arrows()) {
        if (a.head == v && !peeled[static_cast<std::size_t>(a.tail)]) {
          outdeg[static_cast<std::size_t>(a.tail)]--;
        }
      }
    }
  }
  return order;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  IntMatrix c = IntMatrix::Identity(n, n);
  for (int v : sink_peel_order(q)) c = reflection_matrix(q, v) * c;
  return c;
}

namespace {

// Depth-first search over candidate radical vectors with entries in [0,6].
// A row of the symmetric matrix is checked as soon as all vertices it touches
// are assigned, so the search tree collapses to near-linear size on the
// extended Dynkin graphs this is used for.
struct RadicalSearch {
  const IntMatrix& b;
  int n;
  std::vector<int> last_touched;  // for row v: max vertex index with b(v,*) != 0
  DimVector x;
  DimVector found;

  RadicalSearch(const IntMatrix& bb) : b(bb), n(static_cast<int>(bb.rows())) {
    last_touched.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      int last = v;
      for (int w = 0; w < n; ++w) {
        if (b(v, w) != 0) last = std::max(last, w);
      }
      last_touched[static_cast<std::size_t>(v)] = last;
    }
    x = DimVector::Zero(n);
    found = DimVector();
  }

  bool run() { return assign(0); }

  bool assign(int v) {
    if (v == n) {
      if ((x.array() == 0).all()) return false;
      found = x;
      return true;
    }
    for (Int val = 0; val <= 6; ++val) {
      x[v] = val;
      bool ok = true;
      for (int r = 0; r <= v && ok; ++r) {
        if (last_touched[static_cast<std::size_t>(r)] == v) {
          Int s = 0;
          for (int w = 0; w <= v; ++w) s += b(r, w) * x[w];
          ok = (s == 0);
        }
      }
      if (ok && assign(v + 1)) return true;
    }
    x[v] = 0;
    return false;
  }
};

}  // namespace

DimVector null_root(const Quiver& q) {
  GraphClass c = classify_graph(q);
  if (!is_extended_dynkin(c.tag)) {
    throw DomainError("null_root: underlying graph is not extended Dynkin (" +
                      class_name(c, q.vertex_count()) + ")");
  }
  IntMatrix b = symmetric_matrix(q);
  RadicalSearch search(b);
  if (!search.run()) throw InternalError("null_root: no radical vector in the search box");
  DimVector d = search.found;
  Int g = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) g = std::gcd(g, d[i]);
  if (g > 1) {
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] /= g;
  }
  if ((d.array() < 1).any()) throw InternalError("null_root: radical vector not positive");
  if (tits_form(q, d) != 0) throw InternalError("null_root: candidate not isotropic");
  return d;
}

Int defect(const Quiver& q, const DimVector& alpha) {
  check_dim(q, alpha, "defect");
  return euler_form(q, alpha, null_root(q));
}

}  // namespace semiq
