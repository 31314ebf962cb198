#include "semiq/json_io.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace semiq {

namespace {

std::string simple_name(int i) { return "e" + std::to_string(i + 1); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int int_value(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return j.get<Int>();
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  const Json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty())
    throw InputError("\"vertices\" must be a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& v : verts) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }

  Quiver base(labels, {});
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw InputError("\"arrows\" must be an array");
  std::vector<Arrow> parsed;
  for (const auto& a : arrows) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      throw InputError("each arrow must be a [tail, head] pair of labels");
    parsed.push_back({base.index_of(a[0].get<std::string>()), base.index_of(a[1].get<std::string>())});
  }
  return Quiver(std::move(labels), std::move(parsed));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return quiver_from_json(j);
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.labels();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({q.label(a.tail), q.label(a.head)});
  j["arrows"] = std::move(arrows);
  return j;
}

DimVector parse_dim_csv(const std::string& text, int expected) {
  std::vector<Int> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad dimension entry \"" + token + "\"");
    }
    if (used != token.size()) throw InputError("bad dimension entry \"" + token + "\"");
    entries.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (expected >= 0 && static_cast<int>(entries.size()) != expected)
    throw InputError("expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(entries.size()));
  return from_std(entries);
}

Json dim_to_json(const DimVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

DimVector dim_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("dimension vector must be an array");
  std::vector<Int> entries;
  for (const auto& x : j) entries.push_back(int_value(x, "dimension entry"));
  return from_std(entries);
}

Representation rep_from_json(const Quiver& q, const Json& j) {
  Representation r;
  r.dims = dim_from_json(field(j, "dims"));
  if (r.dims.size() != q.vertex_count())
    throw InputError("\"dims\" length does not match the quiver");
  if ((r.dims.array() < 0).any()) throw InputError("dimensions must be nonnegative");

  const Json& maps = field(j, "maps");
  if (!maps.is_array() || static_cast<int>(maps.size()) != q.arrow_count())
    throw InputError("\"maps\" must list one matrix per arrow");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow arrow = q.arrows()[static_cast<std::size_t>(a)];
    const int rows = static_cast<int>(r.dims[arrow.head]);
    const int cols = static_cast<int>(r.dims[arrow.tail]);
    const Json& flat = maps[static_cast<std::size_t>(a)];
    if (!flat.is_array() || static_cast<int>(flat.size()) != rows * cols)
      throw InputError("matrix " + std::to_string(a) + " must hold " +
                       std::to_string(rows * cols) + " row-major entries");
    DenseMat<Rat> m(rows, cols);
    int t = 0;
    for (int row = 0; row < rows; ++row)
      for (int col = 0; col < cols; ++col)
        m(row, col) = Rat(int_value(flat[static_cast<std::size_t>(t++)], "matrix entry"));
    r.maps.push_back(std::move(m));
  }
  return r;
}

Json rep_to_json(const Representation& r) {
  Json j;
  j["dims"] = dim_to_json(r.dims);
  Json maps = Json::array();
  for (const auto& m : r.maps) {
    Json flat = Json::array();
    for (int row = 0; row < m.rows(); ++row) {
      for (int col = 0; col < m.cols(); ++col) {
        const Rat& x = m(row, col);
        if (denominator(x) == 1)
          flat.push_back(numerator(x).convert_to<Int>());
        else
          flat.push_back(x.str());
      }
    }
    maps.push_back(std::move(flat));
  }
  j["maps"] = std::move(maps);
  return j;
}

Representation load_rep(const Quiver& q, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return rep_from_json(q, j);
}

Json decomposition_to_json(const Decomposition& d, const DimVector& delta) {
  Json j;
  j["delta_mult"] = delta_mult(d, delta);
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    Json jt;
    jt["root"] = dim_to_json(t.root);
    jt["mult"] = t.mult;
    jt["kind"] = t.imaginary ? "imaginary" : "real";
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json regular_to_json(const RegularStructure& rs) {
  Json j;
  j["delta"] = dim_to_json(rs.delta);
  Json simples = Json::array();
  for (int i = 0; i < rs.count(); ++i) {
    Json s;
    s["name"] = simple_name(i);
    s["root"] = dim_to_json(rs.simples[static_cast<std::size_t>(i)]);
    s["next"] = simple_name(rs.next[static_cast<std::size_t>(i)]);
    simples.push_back(std::move(s));
  }
  j["simples"] = std::move(simples);
  Json orbits = Json::array();
  for (const auto& orbit : rs.orbits) {
    Json o = Json::array();
    for (int i : orbit) o.push_back(simple_name(i));
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

Json canonical_to_json(const CanonicalDecomp& cd) {
  Json j;
  j["p"] = cd.p;
  j["coeff"] = cd.coeff;
  return j;
}

Json an_to_json(const AnDecomposition& d) {
  Json j = Json::array();
  for (const auto& t : d.terms) {
    Json jt;
    jt["interval"] = {t.interval.i, t.interval.j};
    jt["mult"] = t.mult;
    j.push_back(std::move(jt));
  }
  return j;
}

Json ring_to_json(const RingReport& r) {
  Json j;
  j["type"] = r.type;
  j["n"] = r.n;
  j["p"] = r.p;
  j["n_o"] = r.n_o;
  j["canonical"] = canonical_to_json(r.canonical);
  Json omega = Json::array();
  for (const auto& oa : r.omega) {
    Json o;
    o["start"] = simple_name(oa.arc.start);
    o["len"] = oa.arc.len;
    o["mult"] = oa.mult;
    omega.push_back(std::move(o));
  }
  j["omega"] = std::move(omega);
  Json delta = Json::array();
  for (const Arc& a : r.delta) {
    Json o;
    o["start"] = simple_name(a.start);
    o["len"] = a.len;
    delta.push_back(std::move(o));
  }
  j["delta_arcs"] = std::move(delta);
  Json boundary = Json::array();
  for (int i : r.j) boundary.push_back(simple_name(i));
  j["J"] = std::move(boundary);
  j["details_computed"] = r.details_computed;
  if (r.details_computed) {
    j["case"] = r.ring_case == RingCase::Hypersurface ? "hypersurface" : "polynomial";
    j["krull_dim"] = r.krull_dim;
    Json gens = Json::array();
    for (const auto& g : r.generators) {
      Json o;
      switch (g.kind) {
        case Generator::Kind::SimpleWeight: o["kind"] = "simple-weight"; break;
        case Generator::Kind::ArcProduct: o["kind"] = "arc-product"; break;
        case Generator::Kind::DeltaWeight: o["kind"] = "delta-weight"; break;
      }
      o["detail"] = g.detail;
      o["root"] = dim_to_json(g.root);
      o["weight"] = dim_to_json(g.weight);
      gens.push_back(std::move(o));
    }
    j["generators"] = std::move(gens);
    if (r.syzygy) j["syzygy"] = *r.syzygy;
    Json lw = Json::array();
    for (const auto& w : r.lambda_weights) lw.push_back(dim_to_json(w));
    j["lambda_weights"] = std::move(lw);
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace semiq
