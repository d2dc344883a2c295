#ifndef HK_DETAIL_SCC_HPP
#define HK_DETAIL_SCC_HPP

#include <cstdint>
#include <vector>

namespace hk::detail {

// Iterative Tarjan over a 0-based adjacency list.  Returns for each node the
// id of its component; components are numbered in reverse topological order
// (a component only points to components with smaller ids).
inline std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj,
                                int* component_count = nullptr) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      int v = f.node;
      if (f.edge < adj[v].size()) {
        int w = adj[v][f.edge++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          if (index[w] < lowlink[v]) lowlink[v] = index[w];
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().node;
          if (lowlink[v] < lowlink[parent]) lowlink[parent] = lowlink[v];
        }
      }
    }
  }
  if (component_count != nullptr) *component_count = next_comp;
  return comp;
}

}  // namespace hk::detail

#endif  // HK_DETAIL_SCC_HPP
