#include "gameforms/digraph.hpp"

#include <algorithm>

#include "gameforms/errors.hpp"

namespace gf {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> e)
    : num_vertices(n), edges(std::move(e)), out(n) {
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError("edge endpoint out of range");
        out[u].push_back(static_cast<int>(i));
    }
}

SccInfo strongly_connected_components(const Digraph& g) {
    const int n = g.num_vertices;
    SccInfo info;
    info.component_of.assign(n, -1);

    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    // explicit DFS frame: vertex + position in its out list
    struct Frame {
        int v;
        size_t ei;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.ei < g.out[f.v].size()) {
                int w = g.edge_to(g.out[f.v][f.ei++]);
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    int comp = info.num_components++;
                    std::vector<int> members;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        info.component_of[w] = comp;
                        members.push_back(w);
                    } while (w != f.v);
                    std::sort(members.begin(), members.end());
                    info.members.push_back(std::move(members));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            }
        }
    }

    info.has_cycle.assign(info.num_components, false);
    for (const auto& [u, v] : g.edges)
        if (info.component_of[u] == info.component_of[v]) info.has_cycle[info.component_of[u]] = true;
    return info;
}

namespace {

std::vector<bool> bfs(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> queue = {start};
    seen[start] = true;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[queue[i]])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    return seen;
}

}  // namespace

std::vector<bool> reachable_from(const Digraph& g, int from) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (const auto& [u, v] : g.edges) adj[u].push_back(v);
    return bfs(adj, from);
}

std::vector<bool> reaches(const Digraph& g, int to) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (const auto& [u, v] : g.edges) adj[v].push_back(u);
    return bfs(adj, to);
}

}  // namespace gf
