#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gameforms/core_forms.hpp"
#include "gameforms/digraph.hpp"
#include "gameforms/tightness.hpp"

namespace gf {

enum class Owner { Alice, Bob, Terminal };

/// Positional game structure: a digraph with owned positions, terminals of
/// out-degree zero, and a fixed non-terminal start.
class GameGraph {
  public:
    GameGraph(int n, std::vector<Owner> owners, std::vector<std::pair<int, int>> edges, int v0);

    const Digraph& graph() const { return graph_; }
    Owner owner(int v) const { return owners_[v]; }
    const std::vector<Owner>& owners() const { return owners_; }
    int v0() const { return v0_; }
    int num_vertices() const { return graph_.num_vertices; }

    // owned positions of one side, ascending
    std::vector<int> positions(Owner side) const;

  private:
    Digraph graph_;
    std::vector<Owner> owners_;
    int v0_;
};

enum class SccKind { Terminal, Transient, Cyclic };

/// SCC structure of a game graph with outcome indexing: outcomes are the
/// non-transient components (terminals and components carrying a cycle),
/// numbered by ascending smallest member vertex.
struct SccDecomposition {
    SccInfo scc;
    std::vector<SccKind> kind;          // per component
    std::vector<int> outcome_of_comp;   // component -> outcome id, -1 if transient
    std::vector<int> comp_of_outcome;   // outcome id -> component
    int num_outcomes = 0;
};

SccDecomposition scc_decompose(const GameGraph& g);

/// Deterministic walk of a strategy pair: ends at a terminal or loops as a
/// lasso whose cycle starts at vertices[cycle_start].
struct Play {
    std::vector<int> vertices;
    std::vector<int> edge_ids;  // taken moves, size vertices.size()-1
    int cycle_start = -1;       // -1 means terminal play
    bool terminal() const { return cycle_start < 0; }
};

// moves: chosen out-edge id for every non-terminal vertex (ignored at
// terminals).
Play play(const GameGraph& g, const std::vector<int>& moves);

// component receiving the play: the terminal's component, or the component
// containing the lasso cycle
int play_component(const GameGraph& g, const SccDecomposition& dec, const Play& p);

enum class GraphMode {
    Msdggs,  // outcomes = non-transient components
    Dggs,    // outcomes = terminals plus one merged cycling outcome
};

/// Normal form of the positional structure, restricted to the outcomes that
/// strategy pairs actually realize (keeps the form surjective).
struct ExtractedForm {
    GameForm form;
    std::vector<std::string> outcome_labels;       // "t<vertex>", "scc<vertex>", "c"
    std::vector<int> outcome_comp;                 // component id; -1 for merged "c"
    std::vector<std::vector<int>> row_strategies;  // per row: edge choice per Alice position
    std::vector<std::vector<int>> col_strategies;
    std::vector<int> alice_positions;
    std::vector<int> bob_positions;
};

ExtractedForm normal_form(const GameGraph& g, GraphMode mode,
                          uint64_t budget = kDefaultEnumBudget);

enum class Winner { Alice, Bob };

/// Win-lose solver over a partition of the outcomes (alice_outcomes holds
/// the outcome ids Alice wins; Bob wins the rest). Processes the
/// condensation bottom-up; inside a cycling component the side losing the
/// cycle wins exactly its attractor to already-evaluated winning positions.
/// Linear in vertices + edges.
std::vector<Winner> solve_win_lose(const GameGraph& g, const SccDecomposition& dec,
                                   const OutcomeSet& alice_outcomes);

// Relabels outcomes through a surjective grouping (group ids are compacted
// by first occurrence). Merging outcomes preserves tightness.
GameForm merge_outcomes(const GameForm& g, const std::vector<int>& group_of);

}  // namespace gf
