#ifndef HK_DIGRAPH_HPP
#define HK_DIGRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hk {

// Hard cap on the vertex count so that vertex sets fit in a 32-bit mask.
inline constexpr int kMaxVertices = 32;

// A finite simple oriented digraph on vertices 1..n: no loops, and between
// any two vertices at most one arrow (anti-parallel pairs are rejected).
// Immutable after construction.
class Digraph {
 public:
  // Validates all invariants; throws ParseError on loops, duplicate or
  // anti-parallel arrows, or indices outside 1..n.
  Digraph(int n, std::vector<std::pair<int, int>> arrows);

  int vertex_count() const { return n_; }
  // Sorted, deduplicated list of arrows (i, j) meaning i -> j.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  bool has_arrow(int i, int j) const;
  bool connected(int i, int j) const {
    return has_arrow(i, j) || has_arrow(j, i);
  }
  // Bit k-1 set iff there is an arrow i -> k (resp. k -> i).
  std::uint32_t out_mask(int i) const { return out_[i - 1]; }
  std::uint32_t in_mask(int i) const { return in_[i - 1]; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::uint32_t> out_, in_;
};

// Graph file format: optional comment lines starting with '#', a line
// `n=<count>`, then one arrow per line as `i->j`.  Whitespace tolerant.
Digraph parse_digraph(const std::string& text);

// Canonical file form: `n=<count>` followed by sorted arrows, one per line.
// parse_digraph(to_text(g)) == g.
std::string to_text(const Digraph& g);

// DOT digraph export for visualization.
std::string to_dot(const Digraph& g);

// The oriented cycle 1 -> 2 -> ... -> n -> 1.  Requires n >= 3.
Digraph cycle_graph(int n);

// The oriented path 1 -> 2 -> ... -> n.  Requires n >= 1.
Digraph path_graph(int n);

// Built-in 4-vertex example: triangle a -> b -> c -> a with an extra arrow
// a -> d, labelled a,b,c,d = 1,2,3,4.
Digraph example_s4();

// True iff g has no oriented cycle (Kahn's algorithm).
bool is_acyclic(const Digraph& g);

// True iff g contains two distinct oriented cycles joined by an oriented
// path of length >= 0 (two cycles sharing a vertex qualify).  Detected on
// the condensation: either one strongly connected component carries more
// than one cycle, or two cyclic components are connected.
bool has_two_connected_cycles(const Digraph& g);

// Strongly connected components in reverse topological order of the
// condensation; vertices are 1-based.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

}  // namespace hk

#endif  // HK_DIGRAPH_HPP
