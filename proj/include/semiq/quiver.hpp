#pragma once

#include <string>
#include <vector>

#include "semiq/types.hpp"

namespace semiq {

struct Arrow {
  int tail = 0;
  int head = 0;
};

inline bool operator==(const Arrow& a, const Arrow& b) {
  return a.tail == b.tail && a.head == b.head;
}

// Finite quiver with 0-based vertex indices. Every vertex carries a label
// (the name used in JSON files and CLI output); internally all computations
// use indices and labels only round-trip through I/O.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);
  Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  int index_of(const std::string& label) const;  // InputError if unknown

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
};

// Equioriented type A quiver: vertices 1..n, arrows u -> u+1.
Quiver linear_quiver(int n);

bool is_acyclic(const Quiver& q);
bool is_connected(const Quiver& q);

enum class GraphTag {
  A,
  D,
  E6,
  E7,
  E8,
  ATilde,
  DTilde,
  E6Tilde,
  E7Tilde,
  E8Tilde,
  Other,
};

bool is_extended_dynkin(GraphTag tag);
bool is_finite_dynkin(GraphTag tag);
std::string to_string(GraphTag tag);

// Classification of the underlying undirected multigraph. canonical_order is
// a matching-specific vertex listing (empty for Other):
//   A:        the path from the lower-indexed endpoint
//   ATilde:   the cycle from the lowest vertex toward its lower neighbor
//   D/E, DTilde (one junction), E*Tilde: junction, then branches in
//             increasing length (ties by first vertex), each walked outward
//   DTilde with two junctions: first junction, its two leaves, the connecting
//             path, second junction, its two leaves
struct GraphClass {
  GraphTag tag = GraphTag::Other;
  std::vector<int> canonical_order;
};

GraphClass classify_graph(const Quiver& q);

// "A5", "D4~", "E8", "other": tag plus the conventional subscript.
std::string class_name(const GraphClass& c, int vertex_count);

}  // namespace semiq
