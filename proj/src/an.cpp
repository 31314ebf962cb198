#include "semiq/an.hpp"

#include <algorithm>
#include <map>

namespace semiq {

namespace {

void check_interval(int n, Interval iv, const char* what) {
  if (!(1 <= iv.i && iv.i <= iv.j && iv.j <= n)) {
    throw InputError(std::string(what) + ": interval out of range");
  }
}

Int overlap(int a, int b, int c, int d) {
  return std::max(0, std::min(b, d) - std::max(a, c) + 1);
}

void check_alpha(const DimVector& alpha, const char* what) {
  if ((alpha.array() < 0).any()) {
    throw InputError(std::string(what) + ": dimension vector must be nonnegative");
  }
}

using TermMap = std::map<Interval, Int>;

// Positions lo..hi (0-based) of alpha; alpha is mutated in place.
void generic_rec(DimVector& alpha, int lo, int hi, TermMap& out) {
  if (lo > hi) return;
  Int m = alpha[lo];
  for (int u = lo + 1; u <= hi; ++u) m = std::min(m, alpha[u]);
  if (m > 0) {
    out[{lo + 1, hi + 1}] += m;
    for (int u = lo; u <= hi; ++u) alpha[u] -= m;
  }
  int run = lo;
  for (int u = lo; u <= hi + 1; ++u) {
    if (u > hi || alpha[u] == 0) {
      if (run <= u - 1) generic_rec(alpha, run, u - 1, out);
      run = u + 1;
    }
  }
}

void lss_rec(DimVector& alpha, int lo, int hi, TermMap& out) {
  if (lo > hi) return;
  Int m = alpha[lo];
  for (int u = lo + 1; u <= hi; ++u) m = std::min(m, alpha[u]);
  if (m == 0) {
    int run = lo;
    for (int u = lo; u <= hi + 1; ++u) {
      if (u > hi || alpha[u] == 0) {
        if (run <= u - 1) lss_rec(alpha, run, u - 1, out);
        run = u + 1;
      }
    }
    return;
  }
  int t = lo, s = hi;
  while (alpha[t] != m) ++t;
  while (alpha[s] != m) --s;
  out[{t + 1, s + 1}] += m;
  for (int u = t; u <= s; ++u) alpha[u] -= m;
  lss_rec(alpha, lo, t - 1, out);
  lss_rec(alpha, t + 1, s - 1, out);
  lss_rec(alpha, s + 1, hi, out);
}

AnDecomposition collect(const TermMap& m) {
  AnDecomposition d;
  for (const auto& [iv, mult] : m) {
    if (mult > 0) d.terms.push_back({iv, mult});
  }
  return d;
}

}  // namespace

int an_hom_dim(int n, Interval source, Interval target) {
  check_interval(n, source, "an_hom_dim");
  check_interval(n, target, "an_hom_dim");
  return (target.i <= source.i && source.i <= target.j && target.j <= source.j) ? 1 : 0;
}

int an_ext_dim(int n, Interval source, Interval target) {
  check_interval(n, source, "an_ext_dim");
  check_interval(n, target, "an_ext_dim");
  // <dim S_kl, dim S_ij> with arrows u -> u+1: the overlap minus the count of
  // u in [k,l] with u+1 in [i,j].
  Int euler = overlap(source.i, source.j, target.i, target.j) -
              overlap(source.i, source.j, target.i - 1, target.j - 1);
  Int ext = an_hom_dim(n, source, target) - euler;
  if (ext < 0) throw InternalError("an_ext_dim: negative value");
  return static_cast<int>(ext);
}

bool an_is_lss(int n, const AnDecomposition& d) {
  for (const auto& a : d.terms) check_interval(n, a.interval, "an_is_lss");
  for (std::size_t x = 0; x < d.terms.size(); ++x) {
    for (std::size_t y = x + 1; y < d.terms.size(); ++y) {
      Interval p = d.terms[x].interval, q = d.terms[y].interval;
      if (an_hom_dim(n, p, q) != 0 || an_hom_dim(n, q, p) != 0) return false;
    }
  }
  return true;
}

AnDecomposition an_generic(const DimVector& alpha) {
  check_alpha(alpha, "an_generic");
  DimVector work = alpha;
  TermMap out;
  generic_rec(work, 0, static_cast<int>(work.size()) - 1, out);
  return collect(out);
}

AnDecomposition an_generic_lss(const DimVector& alpha) {
  check_alpha(alpha, "an_generic_lss");
  DimVector work = alpha;
  TermMap out;
  lss_rec(work, 0, static_cast<int>(work.size()) - 1, out);
  return collect(out);
}

DimVector an_dimension(int n, const AnDecomposition& d) {
  DimVector v = DimVector::Zero(n);
  for (const auto& t : d.terms) {
    check_interval(n, t.interval, "an_dimension");
    for (int u = t.interval.i; u <= t.interval.j; ++u) v[u - 1] += t.mult;
  }
  return v;
}

}  // namespace semiq
