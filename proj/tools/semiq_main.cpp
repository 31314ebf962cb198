#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiq/an.hpp"
#include "semiq/forms.hpp"
#include "semiq/json_io.hpp"
#include "semiq/quiver.hpp"
#include "semiq/regular.hpp"
#include "semiq/repcore.hpp"
#include "semiq/siring.hpp"
#include "semiq/slice.hpp"
#include "semiq/types.hpp"

namespace {

using namespace semiq;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string simple_name(int i) { return "e" + std::to_string(i + 1); }

// Sum of consecutive simples in successor order, e.g. "(e5+e6)"; empty when
// the root is not such a sum.
std::string arc_name(const RegularStructure& rs, const DimVector& root,
                     std::set<int>* used) {
  for (int s = 0; s < rs.count(); ++s) {
    DimVector acc = DimVector::Zero(rs.delta.size());
    int cur = s;
    const auto& orbit = rs.orbits[static_cast<std::size_t>(rs.orbit_index[static_cast<std::size_t>(s)])];
    for (std::size_t len = 1; len < orbit.size(); ++len) {
      acc += rs.simples[static_cast<std::size_t>(cur)];
      cur = rs.next[static_cast<std::size_t>(cur)];
      if (!dim_eq(acc, root)) continue;
      std::string name;
      int walk = s;
      for (std::size_t t = 0; t < len; ++t) {
        if (t) name += "+";
        name += simple_name(walk);
        if (used) used->insert(walk);
        walk = rs.next[static_cast<std::size_t>(walk)];
      }
      return len == 1 ? name : "(" + name + ")";
    }
  }
  return "";
}

std::string term_string(Int mult, const std::string& name) {
  return mult == 1 ? name : std::to_string(mult) + "*" + name;
}

void print_legend(const RegularStructure& rs, bool with_delta, const std::set<int>& used) {
  if (with_delta) std::cout << "delta = " << format_dim(rs.delta) << "\n";
  for (int i : used)
    std::cout << simple_name(i) << " = "
              << format_dim(rs.simples[static_cast<std::size_t>(i)]) << "\n";
}

void print_decomposition(const Quiver& q, const Decomposition& dec) {
  const RegularStructure rs = regular_simples(q);
  std::vector<std::string> parts;
  std::set<int> used;
  bool with_delta = false;
  for (const auto& t : dec.terms) {
    if (t.imaginary && dim_eq(t.root, rs.delta)) {
      parts.push_back(term_string(t.mult, "delta"));
      with_delta = true;
      continue;
    }
    std::string name = arc_name(rs, t.root, &used);
    if (name.empty()) name = "(" + format_dim(t.root) + ")";
    parts.push_back(term_string(t.mult, name));
  }
  if (parts.empty()) {
    std::cout << "0\n";
    return;
  }
  std::string line = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) line += " + " + parts[i];
  std::cout << line << "\n";
  print_legend(rs, with_delta, used);
}

void print_canonical(const Quiver& q, const CanonicalDecomp& cd) {
  const RegularStructure rs = regular_simples(q);
  std::vector<std::string> parts;
  std::set<int> used;
  if (cd.p > 0) parts.push_back(term_string(cd.p, "delta"));
  for (std::size_t i = 0; i < cd.coeff.size(); ++i) {
    if (cd.coeff[i] == 0) continue;
    parts.push_back(term_string(cd.coeff[i], simple_name(static_cast<int>(i))));
    used.insert(static_cast<int>(i));
  }
  if (parts.empty()) {
    std::cout << "0\n";
    return;
  }
  std::string line = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) line += " + " + parts[i];
  std::cout << line << "\n";
  print_legend(rs, cd.p > 0, used);
}

int run_info(const std::string& path, bool json) {
  const Quiver q = load_quiver(path);
  const GraphClass cls = classify_graph(q);
  const std::string name = class_name(cls, q.vertex_count());
  const bool extended = is_extended_dynkin(cls.tag);
  std::optional<DimVector> delta;
  if (extended) delta = null_root(q);
  if (json) {
    Json j;
    j["class"] = name;
    j["vertices"] = q.vertex_count();
    j["arrows"] = q.arrow_count();
    j["connected"] = is_connected(q);
    j["acyclic"] = is_acyclic(q);
    if (delta) j["delta"] = dim_to_json(*delta);
    print_json(j);
  } else {
    std::cout << "class: " << name << "\n";
    std::cout << "vertices: " << q.vertex_count() << "\n";
    std::cout << "arrows: " << q.arrow_count() << "\n";
    std::cout << "connected: " << (is_connected(q) ? "yes" : "no") << "\n";
    std::cout << "acyclic: " << (is_acyclic(q) ? "yes" : "no") << "\n";
    if (delta) std::cout << "delta: " << format_dim(*delta) << "\n";
  }
  return 0;
}

int run_delta(const std::string& path, bool json) {
  const DimVector d = null_root(load_quiver(path));
  if (json)
    print_json(dim_to_json(d));
  else
    std::cout << format_dim(d) << "\n";
  return 0;
}

int run_regular(const std::string& path, bool json) {
  const Quiver q = load_quiver(path);
  const RegularStructure rs = regular_simples(q);
  if (json) {
    print_json(regular_to_json(rs));
    return 0;
  }
  std::cout << "delta = " << format_dim(rs.delta) << "\n";
  for (int i = 0; i < rs.count(); ++i)
    std::cout << simple_name(i) << " = " << format_dim(rs.simples[static_cast<std::size_t>(i)])
              << "  (next: " << simple_name(rs.next[static_cast<std::size_t>(i)]) << ")\n";
  for (std::size_t o = 0; o < rs.orbits.size(); ++o) {
    std::cout << "orbit " << o + 1 << ":";
    for (int i : rs.orbits[o]) std::cout << " " << simple_name(i);
    std::cout << "\n";
  }
  return 0;
}

int run_decomp(const std::string& path, const std::string& alpha_text, const std::string& kind,
               bool json) {
  const Quiver q = load_quiver(path);
  const DimVector alpha = parse_dim_csv(alpha_text, q.vertex_count());
  if (kind == "canonical") {
    const CanonicalDecomp cd = canonical_decomposition(q, alpha);
    if (json)
      print_json(canonical_to_json(cd));
    else
      print_canonical(q, cd);
    return 0;
  }
  const Decomposition dec = kind == "generic" ? tame_generic(q, alpha) : tame_generic_lss(q, alpha);
  if (json)
    print_json(decomposition_to_json(dec, null_root(q)));
  else
    print_decomposition(q, dec);
  return 0;
}

int run_an(const std::string& alpha_text, const std::string& kind, bool json) {
  const DimVector alpha = parse_dim_csv(alpha_text, -1);
  if ((alpha.array() < 0).any()) throw InputError("dimensions must be nonnegative");
  const AnDecomposition dec = kind == "generic" ? an_generic(alpha) : an_generic_lss(alpha);
  if (json) {
    print_json(an_to_json(dec));
    return 0;
  }
  if (dec.terms.empty()) {
    std::cout << "0\n";
    return 0;
  }
  std::string line;
  for (std::size_t t = 0; t < dec.terms.size(); ++t) {
    if (t) line += " + ";
    line += std::to_string(dec.terms[t].mult) + "*[" + std::to_string(dec.terms[t].interval.i) +
            "," + std::to_string(dec.terms[t].interval.j) + "]";
  }
  std::cout << line << "\n";
  return 0;
}

int run_siring(const std::string& path, const std::string& alpha_text, bool json) {
  const Quiver q = load_quiver(path);
  const DimVector alpha = parse_dim_csv(alpha_text, q.vertex_count());
  const RingReport r = ring_report(q, alpha);
  if (json) {
    print_json(ring_to_json(r));
    return 0;
  }
  std::cout << "type " << r.type << ", n = " << r.n << ", p = " << r.p << ", n_o = " << r.n_o
            << "\n";
  std::cout << "canonical: ";
  print_canonical(q, r.canonical);
  if (!r.omega.empty()) {
    std::cout << "omega:";
    const RegularStructure rs = regular_simples(q);
    for (const auto& oa : r.omega)
      std::cout << " " << arc_name(rs, arc_root(rs, oa.arc), nullptr) << " x"
                << oa.mult;
    std::cout << "\n";
    std::cout << "delta arcs:";
    for (const Arc& a : r.delta) std::cout << " " << arc_name(rs, arc_root(rs, a), nullptr);
    std::cout << "\n";
    std::cout << "J:";
    for (int i : r.j) std::cout << " " << simple_name(i);
    std::cout << "\n";
  }
  if (!r.details_computed) {
    for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
    return 0;
  }
  std::cout << "case: " << (r.ring_case == RingCase::Hypersurface ? "hypersurface" : "polynomial")
            << "\n";
  std::cout << "krull dimension: " << r.krull_dim << "\n";
  std::cout << "generators (" << r.generators.size() << "):\n";
  for (const auto& g : r.generators)
    std::cout << "  " << g.detail << "  root=" << format_dim(g.root)
              << "  weight=" << format_dim(g.weight) << "\n";
  if (r.syzygy) std::cout << "syzygy: " << *r.syzygy << "\n";
  for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
  return 0;
}

int run_verify_an(int n, bool json) {
  if (n < 1) throw InputError("--n must be at least 1");
  long pairs = 0;
  for (int m = 1; m <= n; ++m) {
    const Quiver q = linear_quiver(m);
    for (int i = 1; i <= m; ++i) {
      for (int j = i; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
          for (int l = k; l <= m; ++l) {
            const Interval src{i, j};
            const Interval tgt{k, l};
            const Representation u = interval_rep(m, src);
            const Representation w = interval_rep(m, tgt);
            if (an_hom_dim(m, src, tgt) != hom_dim(q, u, w))
              throw InternalError("hom formula mismatch on A_" + std::to_string(m));
            if (an_ext_dim(m, src, tgt) != ext_dim(q, u, w))
              throw InternalError("ext formula mismatch on A_" + std::to_string(m));
            ++pairs;
          }
        }
      }
    }
  }
  if (json) {
    Json j;
    j["n"] = n;
    j["pairs"] = pairs;
    j["ok"] = true;
    print_json(j);
  } else {
    std::cout << "hom/ext formulas match the solver on " << pairs << " interval pairs (n <= "
              << n << ")\n";
  }
  return 0;
}

int run_verify_eq(const std::string& path, std::uint64_t seed, bool json) {
  const Quiver q = load_quiver(path);
  const RegularStructure rs = regular_simples(q);
  std::vector<Representation> reps;
  for (int i = 0; i < rs.count(); ++i)
    reps.push_back(sample_schurian(q, rs.simples[static_cast<std::size_t>(i)],
                                   seed + 1000 * static_cast<std::uint64_t>(i)));
  for (int i = 0; i < rs.count(); ++i) {
    for (int j = 0; j < rs.count(); ++j) {
      const Int hom = hom_dim(q, reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
      const Int ext = ext_dim(q, reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
      const Int want_hom = i == j ? 1 : 0;
      const Int want_ext = rs.next[static_cast<std::size_t>(i)] == j ? 1 : 0;
      if (hom != want_hom || ext != want_ext)
        throw DomainError("sampled representations are not in general position (pair " +
                          simple_name(i) + ", " + simple_name(j) + "); try another seed");
    }
  }
  if (json) {
    Json j;
    j["simples"] = rs.count();
    j["seed"] = seed;
    j["ok"] = true;
    print_json(j);
  } else {
    std::cout << "local structure verified: " << rs.count()
              << " sampled simples, hom = identity, ext = successor permutation\n";
  }
  return 0;
}

int run_hom(const std::string& qpath, const std::string& apath, const std::string& bpath,
            bool json) {
  const Quiver q = load_quiver(qpath);
  const Representation a = load_rep(q, apath);
  const Representation b = load_rep(q, bpath);
  const Int hom = hom_dim(q, a, b);
  std::optional<Int> ext;
  if (is_acyclic(q)) ext = ext_dim(q, a, b);
  if (json) {
    Json j;
    j["hom"] = hom;
    if (ext) j["ext"] = *ext;
    print_json(j);
  } else {
    std::cout << "hom = " << hom << "\n";
    if (ext) std::cout << "ext = " << *ext << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decompositions and semi-invariant rings for tame quivers"};
  app.require_subcommand(1);

  std::string path;
  std::string alpha;
  std::string kind;
  std::string rep_a;
  std::string rep_b;
  int an_n = 6;
  std::uint64_t seed = 1;
  bool json = false;

  CLI::App* info = app.add_subcommand("info", "classify a quiver");
  info->add_option("quiver", path, "quiver JSON file")->required();
  info->add_flag("--json", json, "machine-readable output");

  CLI::App* delta = app.add_subcommand("delta", "print the null root");
  delta->add_option("quiver", path, "quiver JSON file")->required();
  delta->add_flag("--json", json, "machine-readable output");

  CLI::App* regular = app.add_subcommand("regular", "list the regular simples and orbits");
  regular->add_option("quiver", path, "quiver JSON file")->required();
  regular->add_flag("--json", json, "machine-readable output");

  CLI::App* decomp = app.add_subcommand("decomp", "decompose a regular dimension vector");
  decomp->add_option("--kind", kind, "canonical, generic, or lss")
      ->required()
      ->check(CLI::IsMember({"canonical", "generic", "lss"}));
  decomp->add_option("quiver", path, "quiver JSON file")->required();
  decomp->add_option("alpha", alpha, "dimension vector, comma-separated")->required();
  decomp->add_flag("--json", json, "machine-readable output");

  CLI::App* an = app.add_subcommand("an", "decompose on the equioriented type A quiver");
  an->add_option("--kind", kind, "generic or lss")
      ->required()
      ->check(CLI::IsMember({"generic", "lss"}));
  an->add_option("alpha", alpha, "dimension vector, comma-separated")->required();
  an->add_flag("--json", json, "machine-readable output");

  CLI::App* siring = app.add_subcommand("siring", "classify the ring of semi-invariants");
  siring->add_option("quiver", path, "quiver JSON file")->required();
  siring->add_option("alpha", alpha, "dimension vector, comma-separated")->required();
  siring->add_flag("--json", json, "machine-readable output");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  CLI::App* verify_an = oracle->add_subcommand("verify-an", "compare interval formulas with the solver");
  verify_an->add_option("--n", an_n, "largest path length to check");
  verify_an->add_flag("--json", json, "machine-readable output");
  CLI::App* verify_eq = oracle->add_subcommand("verify-eq", "sample the regular simples and check hom/ext");
  verify_eq->add_option("quiver", path, "quiver JSON file")->required();
  verify_eq->add_option("--seed", seed, "sampling seed");
  verify_eq->add_flag("--json", json, "machine-readable output");
  CLI::App* hom = oracle->add_subcommand("hom", "hom/ext dimensions between two representations");
  hom->add_option("quiver", path, "quiver JSON file")->required();
  hom->add_option("repA", rep_a, "representation JSON file")->required();
  hom->add_option("repB", rep_b, "representation JSON file")->required();
  hom->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(info)) return run_info(path, json);
    if (app.got_subcommand(delta)) return run_delta(path, json);
    if (app.got_subcommand(regular)) return run_regular(path, json);
    if (app.got_subcommand(decomp)) return run_decomp(path, alpha, kind, json);
    if (app.got_subcommand(an)) return run_an(alpha, kind, json);
    if (app.got_subcommand(siring)) return run_siring(path, alpha, json);
    if (app.got_subcommand(oracle)) {
      if (oracle->got_subcommand(verify_an)) return run_verify_an(an_n, json);
      if (oracle->got_subcommand(verify_eq)) return run_verify_eq(path, seed, json);
      if (oracle->got_subcommand(hom)) return run_hom(path, rep_a, rep_b, json);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
