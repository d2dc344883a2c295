#include "hk/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hk/detail/scc.hpp"
#include "hk/errors.hpp"

namespace hk {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arrows)
    : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 1) throw ParseError("vertex count must be positive");
  if (n_ > kMaxVertices) {
    throw ParseError("vertex count exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
  std::sort(arrows_.begin(), arrows_.end());
  out_.assign(n_, 0);
  in_.assign(n_, 0);
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    auto [i, j] = arrows_[k];
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw ParseError("arrow " + std::to_string(i) + "->" +
                       std::to_string(j) + " has a vertex outside 1.." +
                       std::to_string(n_));
    }
    if (i == j) throw ParseError("loop at vertex " + std::to_string(i));
    if (k > 0 && arrows_[k] == arrows_[k - 1]) {
      throw ParseError("duplicate arrow " + std::to_string(i) + "->" +
                       std::to_string(j));
    }
    out_[i - 1] |= 1u << (j - 1);
    in_[j - 1] |= 1u << (i - 1);
  }
  for (auto [i, j] : arrows_) {
    if ((out_[j - 1] >> (i - 1)) & 1u) {
      throw ParseError("anti-parallel pair between " + std::to_string(i) +
                       " and " + std::to_string(j) +
                       " (the graph must be oriented)");
    }
  }
}

bool Digraph::has_arrow(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return (out_[i - 1] >> (j - 1)) & 1u;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string remove_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty()) throw ParseError(context + ": expected an integer");
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw ParseError(context + ": '" + s + "' is not a valid integer");
    }
  }
  if (s.size() > 9) throw ParseError(context + ": '" + s + "' is too large");
  return std::stoi(s);
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> arrows;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    s = remove_spaces(s);
    const std::string where = "line " + std::to_string(line_no);
    if (n < 0) {
      if (s.rfind("n=", 0) != 0) {
        throw ParseError(where + ": expected 'n=<count>' before any arrows");
      }
      n = parse_int(s.substr(2), where);
      continue;
    }
    std::size_t pos = s.find("->");
    if (pos == std::string::npos) {
      throw ParseError(where + ": expected an arrow of the form 'i->j'");
    }
    int i = parse_int(s.substr(0, pos), where);
    int j = parse_int(s.substr(pos + 2), where);
    arrows.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing 'n=<count>' line");
  return Digraph(n, std::move(arrows));
}

std::string to_text(const Digraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (auto [i, j] : g.arrows()) out << i << "->" << j << "\n";
  return out.str();
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph theta {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [i, j] : g.arrows()) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

Digraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i < n; ++i) arrows.emplace_back(i, i + 1);
  arrows.emplace_back(n, 1);
  return Digraph(n, std::move(arrows));
}

Digraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph requires n >= 1");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i < n; ++i) arrows.emplace_back(i, i + 1);
  return Digraph(n, std::move(arrows));
}

Digraph example_s4() { return Digraph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}}); }

bool is_acyclic(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> in_degree(n, 0);
  for (auto [i, j] : g.arrows()) ++in_degree[j - 1];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (in_degree[v] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    std::uint32_t targets = g.out_mask(v + 1);
    while (targets != 0) {
      int w = __builtin_ctz(targets);
      targets &= targets - 1;
      if (--in_degree[w] == 0) queue.push_back(w);
    }
  }
  return removed == n;
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : g.arrows()) adj[i - 1].push_back(j - 1);
  int count = 0;
  std::vector<int> comp = detail::scc_ids(adj, &count);
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v + 1);
  return out;
}

bool has_two_connected_cycles(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : g.arrows()) adj[i - 1].push_back(j - 1);
  int count = 0;
  std::vector<int> comp = detail::scc_ids(adj, &count);

  std::vector<int> size(count, 0), edges(count, 0);
  for (int v = 0; v < n; ++v) ++size[comp[v]];
  for (auto [i, j] : g.arrows()) {
    if (comp[i - 1] == comp[j - 1]) ++edges[comp[i - 1]];
  }
  // no loops, so a component carries a cycle iff it has >= 2 vertices;
  // more in-component edges than vertices means two distinct cycles
  std::vector<bool> cyclic(count, false);
  for (int c = 0; c < count; ++c) {
    cyclic[c] = size[c] >= 2;
    if (cyclic[c] && edges[c] > size[c]) return true;
  }

  // reaches[c] = true when some cyclic component is reachable from c in
  // >= 1 condensation steps; component ids are reverse topological
  std::vector<bool> reaches(count, false);
  for (int c = 0; c < count; ++c) {
    for (int v = 0; v < n; ++v) {
      if (comp[v] != c) continue;
      for (int w : adj[v]) {
        int d = comp[w];
        if (d == c) continue;
        if (cyclic[d] || reaches[d]) {
          reaches[c] = true;
          break;
        }
      }
      if (reaches[c]) break;
    }
    if (cyclic[c] && reaches[c]) return true;
  }
  return false;
}

}  // namespace hk
