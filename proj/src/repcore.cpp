#include "semiq/repcore.hpp"

#include <random>

#include "semiq/forms.hpp"

namespace semiq {

namespace {

void validate_rep(const Quiver& q, const Representation& r, const char* what) {
  if (r.dims.size() != q.vertex_count()) {
    throw InputError(std::string(what) + ": dims length does not match quiver");
  }
  if ((r.dims.array() < 0).any()) {
    throw InputError(std::string(what) + ": negative dimension");
  }
  if (static_cast<int>(r.maps.size()) != q.arrow_count()) {
    throw InputError(std::string(what) + ": map count does not match arrow count");
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[static_cast<std::size_t>(a)];
    const auto& m = r.maps[static_cast<std::size_t>(a)];
    if (m.rows() != r.dims[ar.head] || m.cols() != r.dims[ar.tail]) {
      throw InputError(std::string(what) + ": map shape does not match dims");
    }
  }
}

// Offsets of each vertex's vec(H(i)) block inside the unknown vector, with
// H(i) of shape rows_of(i) x cols_of(i) stored row-major.
std::vector<int> block_offsets(const DimVector& rows_of, const DimVector& cols_of) {
  std::vector<int> off(static_cast<std::size_t>(rows_of.size()) + 1, 0);
  for (Eigen::Index i = 0; i < rows_of.size(); ++i) {
    off[static_cast<std::size_t>(i) + 1] =
        off[static_cast<std::size_t>(i)] + static_cast<int>(rows_of[i] * cols_of[i]);
  }
  return off;
}

}  // namespace

Representation random_rep(const Quiver& q, const DimVector& dims, std::uint64_t seed, Int range) {
  if (dims.size() != q.vertex_count()) throw InputError("random_rep: dims length mismatch");
  if ((dims.array() < 0).any()) throw InputError("random_rep: negative dimension");
  if (range < 0) throw InputError("random_rep: negative range");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
  Representation rep;
  rep.dims = dims;
  for (const auto& ar : q.arrows()) {
    DenseMat<Rat> m(static_cast<int>(dims[ar.head]), static_cast<int>(dims[ar.tail]));
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        // Plain modulo keeps the stream identical across standard libraries;
        // the slight bias is irrelevant for genericity sampling.
        m(r, c) = Rat(static_cast<Int>(rng() % span) - range);
      }
    }
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

Int hom_dim(const Quiver& q, const Representation& u, const Representation& w) {
  validate_rep(q, u, "hom_dim");
  validate_rep(q, w, "hom_dim");
  auto off = block_offsets(w.dims, u.dims);
  const int unknowns = off.back();
  int eqs = 0;
  for (const auto& ar : q.arrows()) eqs += static_cast<int>(w.dims[ar.head] * u.dims[ar.tail]);

  DenseMat<Rat> sys(eqs, unknowns);
  int row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[static_cast<std::size_t>(a)];
    const auto& wmap = w.maps[static_cast<std::size_t>(a)];
    const auto& umap = u.maps[static_cast<std::size_t>(a)];
    const int wt = static_cast<int>(w.dims[ar.tail]);
    const int uh = static_cast<int>(u.dims[ar.head]);
    // Entry (r, c) of W(phi) H(tail) - H(head) U(phi) = 0.
    for (int r = 0; r < wmap.rows(); ++r) {
      for (int c = 0; c < umap.cols(); ++c) {
        for (int s = 0; s < wt; ++s) {
          sys(row, off[static_cast<std::size_t>(ar.tail)] + s * static_cast<int>(u.dims[ar.tail]) + c) += wmap(r, s);
        }
        for (int s = 0; s < uh; ++s) {
          sys(row, off[static_cast<std::size_t>(ar.head)] + r * uh + s) -= umap(s, c);
        }
        ++row;
      }
    }
  }
  return unknowns - rank_of(sys);
}

Int ext_dim(const Quiver& q, const Representation& u, const Representation& w) {
  if (!is_acyclic(q)) throw DomainError("ext_dim: quiver must be acyclic (hereditary case)");
  Int ext = hom_dim(q, u, w) - euler_form(q, u.dims, w.dims);
  if (ext < 0) throw InternalError("ext_dim: negative value");
  return ext;
}

Rat schofield_pairing(const Quiver& q, const Representation& v, const Representation& w) {
  validate_rep(q, v, "schofield_pairing");
  validate_rep(q, w, "schofield_pairing");
  if (!is_acyclic(q)) throw DomainError("schofield_pairing: quiver must be acyclic");
  if (euler_form(q, v.dims, w.dims) != 0) {
    throw DomainError("schofield_pairing: <dim v, dim w> must be 0");
  }
  auto off = block_offsets(w.dims, v.dims);
  const int unknowns = off.back();
  int eqs = 0;
  for (const auto& ar : q.arrows()) eqs += static_cast<int>(w.dims[ar.head] * v.dims[ar.tail]);
  if (eqs != unknowns) throw InternalError("schofield_pairing: map not square");

  DenseMat<Rat> sys(eqs, unknowns);
  int row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[static_cast<std::size_t>(a)];
    const auto& wmap = w.maps[static_cast<std::size_t>(a)];
    const auto& vmap = v.maps[static_cast<std::size_t>(a)];
    const int wt = static_cast<int>(w.dims[ar.tail]);
    const int vh = static_cast<int>(v.dims[ar.head]);
    // Entry (r, c) of H(head) V(phi) - W(phi) H(tail).
    for (int r = 0; r < static_cast<int>(w.dims[ar.head]); ++r) {
      for (int c = 0; c < static_cast<int>(v.dims[ar.tail]); ++c) {
        for (int s = 0; s < vh; ++s) {
          sys(row, off[static_cast<std::size_t>(ar.head)] + r * vh + s) += vmap(s, c);
        }
        for (int s = 0; s < wt; ++s) {
          sys(row, off[static_cast<std::size_t>(ar.tail)] + s * static_cast<int>(v.dims[ar.tail]) + c) -= wmap(r, s);
        }
        ++row;
      }
    }
  }
  return det_of(sys);
}

bool is_schurian(const Quiver& q, const Representation& v) { return hom_dim(q, v, v) == 1; }

Representation sample_schurian(const Quiver& q, const DimVector& dims, std::uint64_t seed,
                               int retries) {
  for (int k = 0; k < retries; ++k) {
    Representation r = random_rep(q, dims, seed + static_cast<std::uint64_t>(k));
    if (is_schurian(q, r)) return r;
  }
  throw DomainError("sample_schurian: no Schurian representation found within retry budget");
}

bool in_right_perp(const Quiver& q, const Representation& v, const Representation& w) {
  return hom_dim(q, v, w) == 0 && ext_dim(q, v, w) == 0;
}

Representation interval_rep(int n, Interval iv) {
  if (!(1 <= iv.i && iv.i <= iv.j && iv.j <= n)) throw InputError("interval_rep: out of range");
  Representation rep;
  rep.dims = DimVector::Zero(n);
  for (int u = iv.i; u <= iv.j; ++u) rep.dims[u - 1] = 1;
  for (int u = 1; u < n; ++u) {
    DenseMat<Rat> m(static_cast<int>(rep.dims[u]), static_cast<int>(rep.dims[u - 1]));
    if (m.rows() == 1 && m.cols() == 1) m(0, 0) = Rat(1);
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

}  // namespace semiq
