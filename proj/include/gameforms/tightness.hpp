#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gameforms/core_forms.hpp"

namespace gf {

inline constexpr uint64_t kDefaultEnumBudget = 10'000'000;

/// A response strategy answers every opposing strategy with one of our own:
/// Bob's phi maps rows to columns, Alice's psi maps columns to rows.
struct ResponseStrategy {
    enum class Kind { Bob, Alice };
    Kind kind;
    std::vector<int> map;
};

/// Pair of response strategies whose graph images miss each other; certifies
/// that a form is not tight.
struct TightnessWitness {
    ResponseStrategy phi;  // Bob, X -> Y
    ResponseStrategy psi;  // Alice, Y -> X
};

/// Multi-hypergraph on the outcome ground set. Duplicate edges are kept.
class Hypergraph {
  public:
    Hypergraph(int ground_size, std::vector<OutcomeSet> edges);

    int ground_size() const { return ground_size_; }
    const std::vector<OutcomeSet>& edges() const { return edges_; }

  private:
    int ground_size_;
    std::vector<OutcomeSet> edges_;
};

struct TightnessCheck {
    bool tight;
    std::optional<TightnessWitness> witness;  // present iff not tight
};

// Outcomes a response strategy can realize: { g(x, phi(x)) } resp.
// { g(psi(y), y) }.
OutcomeSet response_image(const GameForm& g, const ResponseStrategy& r);

bool witness_valid(const GameForm& g, const TightnessWitness& w);

// Direct definition: every pair of response-strategy images intersects.
// Throws BudgetExceeded when |Y|^|X| + |X|^|Y| exceeds the budget; use the
// duality route instead in that case.
TightnessCheck is_tight_j(const GameForm& g, uint64_t budget = kDefaultEnumBudget);

// For every phi some column support is contained in phi's image; jjB is the
// row/psi mirror.
bool is_tight_jjA(const GameForm& g, uint64_t budget = kDefaultEnumBudget);
bool is_tight_jjB(const GameForm& g, uint64_t budget = kDefaultEnumBudget);

// Row-support and column-support hypergraphs on the outcome set.
std::pair<Hypergraph, Hypergraph> build_hypergraphs(const GameForm& g);

enum class DualMethod {
    SubsetEnumeration,  // 2^|O| oracle; small ground sets only
    Transversal,        // sequential minimal-transversal computation
};

// Dual pair: edges pairwise intersect and every transversal of one contains
// an edge of the other (both directions).
bool is_dual(const Hypergraph& a, const Hypergraph& b,
             DualMethod method = DualMethod::Transversal,
             uint64_t budget = kDefaultEnumBudget);

// Inclusion-minimal transversals, computed edge by edge with minimization.
std::vector<OutcomeSet> minimal_transversals(const Hypergraph& h);

// Scalable tightness check via hypergraph duality.
bool is_tight(const GameForm& g);

// Zero-sum +-1 reward built from a non-tightness witness: -1 on phi's image,
// +1 everywhere else. The resulting win-lose game has maxmin < minmax.
Reward winlose_from_witness(const GameForm& g, const TightnessWitness& w);

// Distinct response-strategy images with one representative map each, keyed
// by image for deterministic iteration. Shared by the tightness checks and
// the solvability sweeps.
std::map<OutcomeSet, std::vector<int>> distinct_response_images(const GameForm& g,
                                                                ResponseStrategy::Kind kind);

}  // namespace gf
