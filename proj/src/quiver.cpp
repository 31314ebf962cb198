#include "semiq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace semiq {

namespace {

std::vector<std::string> default_labels(int n) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}

void validate(const std::vector<std::string>& labels, const std::vector<Arrow>& arrows) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InputError("duplicate vertex label: " + l);
  }
  const int n = static_cast<int>(labels.size());
  for (const auto& a : arrows) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw InputError("arrow endpoint out of range");
    }
  }
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : labels_(default_labels(vertex_count)), arrows_(std::move(arrows)) {
  validate(labels_, arrows_);
}

Quiver::Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
  validate(labels_, arrows_);
}

int Quiver::index_of(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  throw InputError("unknown vertex label: " + label);
}

Quiver linear_quiver(int n) {
  if (n < 1) throw InputError("linear quiver needs at least one vertex");
  std::vector<Arrow> arrows;
  for (int u = 0; u + 1 < n; ++u) arrows.push_back({u, u + 1});
  return Quiver(n, std::move(arrows));
}

bool is_acyclic(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& a : q.arrows()) indeg[static_cast<std::size_t>(a.head)]++;
  std::queue<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++removed;
    for (const auto& a : q.arrows()) {
      if (a.tail == v && --indeg[static_cast<std::size_t>(a.head)] == 0) ready.push(a.head);
    }
  }
  return removed == n;
}

bool is_connected(const Quiver& q) {
  const int n = q.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& a : q.arrows()) {
    adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  int count = 0;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    ++count;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        bfs.push(w);
      }
    }
  }
  return count == n;
}

bool is_extended_dynkin(GraphTag tag) {
  switch (tag) {
    case GraphTag::ATilde:
    case GraphTag::DTilde:
    case GraphTag::E6Tilde:
    case GraphTag::E7Tilde:
    case GraphTag::E8Tilde:
      return true;
    default:
      return false;
  }
}

bool is_finite_dynkin(GraphTag tag) {
  switch (tag) {
    case GraphTag::A:
    case GraphTag::D:
    case GraphTag::E6:
    case GraphTag::E7:
    case GraphTag::E8:
      return true;
    default:
      return false;
  }
}

std::string to_string(GraphTag tag) {
  switch (tag) {
    case GraphTag::A: return "A";
    case GraphTag::D: return "D";
    case GraphTag::E6: return "E6";
    case GraphTag::E7: return "E7";
    case GraphTag::E8: return "E8";
    case GraphTag::ATilde: return "A~";
    case GraphTag::DTilde: return "D~";
    case GraphTag::E6Tilde: return "E6~";
    case GraphTag::E7Tilde: return "E7~";
    case GraphTag::E8Tilde: return "E8~";
    case GraphTag::Other: return "other";
  }
  return "other";
}

std::string class_name(const GraphClass& c, int vertex_count) {
  switch (c.tag) {
    case GraphTag::A: return "A" + std::to_string(vertex_count);
    case GraphTag::D: return "D" + std::to_string(vertex_count);
    case GraphTag::ATilde: return "A" + std::to_string(vertex_count - 1) + "~";
    case GraphTag::DTilde: return "D" + std::to_string(vertex_count - 1) + "~";
    default: return to_string(c.tag);
  }
}

namespace {

// Undirected view with edge multiplicities; loops counted separately.
struct UGraph {
  int n = 0;
  std::vector<int> loops;
  std::map<std::pair<int, int>, int> edges;  // key (min,max), value multiplicity
  std::vector<std::vector<int>> adj;         // simple adjacency (ignores multiplicity)

  explicit UGraph(const Quiver& q) : n(q.vertex_count()) {
    loops.assign(static_cast<std::size_t>(n), 0);
    adj.assign(static_cast<std::size_t>(n), {});
    for (const auto& a : q.arrows()) {
      if (a.tail == a.head) {
        loops[static_cast<std::size_t>(a.tail)]++;
      } else {
        edges[{std::min(a.tail, a.head), std::max(a.tail, a.head)}]++;
      }
    }
    for (const auto& [e, mult] : edges) {
      (void)mult;
      adj[static_cast<std::size_t>(e.first)].push_back(e.second);
      adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  }

  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

// Walk from `from` away from `prev` until a vertex of degree != 2; returns the
// trail including `from` and the final vertex.
std::vector<int> walk_branch(const UGraph& g, int prev, int from) {
  std::vector<int> trail;
  int p = prev, v = from;
  while (true) {
    trail.push_back(v);
    if (g.degree(v) != 2) break;
    int next = -1;
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (w != p) next = w;
    }
    p = v;
    v = next;
  }
  return trail;
}

GraphClass classify_tree(const UGraph& g) {
  const int n = g.n;
  GraphClass out;
  int maxdeg = 0;
  std::vector<int> junctions;
  for (int v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, g.degree(v));
    if (g.degree(v) >= 3) junctions.push_back(v);
  }

  if (maxdeg <= 2) {
    out.tag = GraphTag::A;
    if (n == 1) {
      out.canonical_order = {0};
      return out;
    }
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 1) {
        start = v;
        break;
      }
    }
    out.canonical_order = {start};
    auto rest = walk_branch(g, start, g.adj[static_cast<std::size_t>(start)][0]);
    out.canonical_order.insert(out.canonical_order.end(), rest.begin(), rest.end());
    return out;
  }

  if (junctions.size() == 1) {
    const int c = junctions[0];
    const int deg = g.degree(c);
    std::vector<std::vector<int>> branches;
    for (int w : g.adj[static_cast<std::size_t>(c)]) {
      auto trail = walk_branch(g, c, w);
      if (g.degree(trail.back()) != 1) return {};  // hits another junction: impossible here
      branches.push_back(std::move(trail));
    }
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
    std::vector<int> lens;
    for (const auto& b : branches) lens.push_back(static_cast<int>(b.size()));

    GraphTag tag = GraphTag::Other;
    if (deg == 3) {
      if (lens[0] == 1 && lens[1] == 1) tag = GraphTag::D;
      else if (lens == std::vector<int>{1, 2, 2}) tag = GraphTag::E6;
      else if (lens == std::vector<int>{1, 2, 3}) tag = GraphTag::E7;
      else if (lens == std::vector<int>{1, 2, 4}) tag = GraphTag::E8;
      else if (lens == std::vector<int>{2, 2, 2}) tag = GraphTag::E6Tilde;
      else if (lens == std::vector<int>{1, 3, 3}) tag = GraphTag::E7Tilde;
      else if (lens == std::vector<int>{1, 2, 5}) tag = GraphTag::E8Tilde;
    } else if (deg == 4 && lens == std::vector<int>{1, 1, 1, 1}) {
      tag = GraphTag::DTilde;
    }
    if (tag == GraphTag::Other) return {};
    out.tag = tag;
    out.canonical_order.push_back(c);
    for (const auto& b : branches) {
      out.canonical_order.insert(out.canonical_order.end(), b.begin(), b.end());
    }
    return out;
  }

  if (junctions.size() == 2 && g.degree(junctions[0]) == 3 && g.degree(junctions[1]) == 3) {
    // D~_n with n >= 5: two junctions joined by a path, two leaves on each.
    const int u = junctions[0], v = junctions[1];
    std::vector<int> uleaves, vleaves, link;
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      auto trail = walk_branch(g, u, w);
      if (trail.back() == v) link = trail;
      else if (trail.size() == 1 && g.degree(trail[0]) == 1) uleaves.push_back(trail[0]);
      else return {};
    }
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      auto trail = walk_branch(g, v, w);
      if (trail.back() == u) continue;
      if (trail.size() == 1 && g.degree(trail[0]) == 1) vleaves.push_back(trail[0]);
      else return {};
    }
    if (uleaves.size() != 2 || vleaves.size() != 2 || link.empty()) return {};
    out.tag = GraphTag::DTilde;
    out.canonical_order.push_back(u);
    out.canonical_order.insert(out.canonical_order.end(), uleaves.begin(), uleaves.end());
    out.canonical_order.insert(out.canonical_order.end(), link.begin(), link.end());
    out.canonical_order.insert(out.canonical_order.end(), vleaves.begin(), vleaves.end());
    return out;
  }

  return {};
}

}  // namespace

GraphClass classify_graph(const Quiver& q) {
  const int n = q.vertex_count();
  if (n == 0) return {};
  UGraph g(q);

  int loop_total = std::accumulate(g.loops.begin(), g.loops.end(), 0);
  if (n == 1) {
    GraphClass out;
    if (loop_total == 0) out.tag = GraphTag::A;
    else if (loop_total == 1) out.tag = GraphTag::ATilde;
    else return {};
    out.canonical_order = {0};
    return out;
  }
  if (loop_total > 0) return {};
  if (!is_connected(q)) return {};

  int edge_total = 0;
  int max_mult = 0;
  for (const auto& [e, mult] : g.edges) {
    (void)e;
    edge_total += mult;
    max_mult = std::max(max_mult, mult);
  }

  if (max_mult >= 2) {
    // Only the double edge on two vertices stays within the list.
    if (n == 2 && edge_total == 2 && max_mult == 2) {
      return {GraphTag::ATilde, {0, 1}};
    }
    return {};
  }

  if (edge_total == n) {
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != 2) return {};
    }
    GraphClass out;
    out.tag = GraphTag::ATilde;
    std::vector<int> order{0};
    int prev = 0, cur = g.adj[0][0];
    while (cur != 0) {
      order.push_back(cur);
      int next = -1;
      for (int w : g.adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
    out.canonical_order = std::move(order);
    return out;
  }

  if (edge_total != n - 1) return {};
  return classify_tree(g);
}

}  // namespace semiq
