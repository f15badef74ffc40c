#pragma once

#include <utility>
#include <vector>

namespace gf {

/// Directed multigraph. Edges are indexed; strategies and walks refer to
/// edge ids so parallel edges stay distinguishable.
struct Digraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> out;  // vertex -> out-edge ids, in edge order

    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> e);

    int out_degree(int v) const { return static_cast<int>(out[v].size()); }
    int edge_from(int e) const { return edges[e].first; }
    int edge_to(int e) const { return edges[e].second; }
};

/// Strongly connected components, single-pass lowlink computation without
/// recursion. Component ids are in reverse topological order: every edge
/// between distinct components goes from a higher id to a lower one.
struct SccInfo {
    std::vector<int> component_of;         // vertex -> component id
    int num_components = 0;
    std::vector<std::vector<int>> members;  // component -> sorted vertices
    std::vector<bool> has_cycle;            // internal edge (incl. self-loop)?
};

SccInfo strongly_connected_components(const Digraph& g);

// vertices reachable from `from` (forward) or reaching `to` (backward)
std::vector<bool> reachable_from(const Digraph& g, int from);
std::vector<bool> reaches(const Digraph& g, int to);

}  // namespace gf
