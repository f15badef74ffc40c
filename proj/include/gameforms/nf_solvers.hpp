#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gameforms/core_forms.hpp"

namespace gf {

struct Situation {
    int x;
    int y;
    bool operator==(const Situation&) const = default;
    auto operator<=>(const Situation&) const = default;
};

// Enumeration control for the solvability predicates: orders (or order
// pairs, or +-1 partitions) are enumerated exhaustively up to
// exhaustive_limit, sampled `samples` times beyond that.
struct SolveBudget {
    uint64_t exhaustive_limit = 1'000'000;
    uint64_t samples = 10'000;
    uint64_t seed = 1;
};

// Situations where both strategies are mutual best responses; both players
// maximize their own reward.
std::vector<Situation> nash_equilibria(const GameForm& g, const Reward& ra, const Reward& rb);

struct SaddleResult {
    std::optional<Situation> saddle;  // present iff maxmin == minmax
    Rat maxmin;
    Rat minmax;
};

// Zero-sum evaluation of r: Alice maximizes, Bob minimizes.
SaddleResult saddle_point(const GameForm& g, const Reward& r);

struct NashSolvability {
    bool solvable;
    bool exhaustive;  // false when the order space was sampled
    std::optional<std::pair<PreferenceOrder, PreferenceOrder>> counterexample;
};

struct OrderSolvability {
    bool solvable;
    bool exhaustive;
    std::optional<PreferenceOrder> counterexample;
};

struct WinLoseSolvability {
    bool solvable;
    bool exhaustive;
    std::optional<OutcomeSet> counterexample;  // outcomes on which Alice wins
};

// NE for every pair of strict preference orders. Strict orders decide the
// general-reward question; ties only merge adjacent values, which preserves
// best responses.
NashSolvability is_nash_solvable(const GameForm& g, const SolveBudget& budget = {});

// Saddle point for every strict order read as a zero-sum reward.
OrderSolvability is_zero_sum_solvable(const GameForm& g, const SolveBudget& budget = {});

// Saddle point for every +-1 outcome partition.
WinLoseSolvability is_win_lose_solvable(const GameForm& g, const SolveBudget& budget = {});

struct SolvabilityReport {
    bool tight;
    bool nash_solvable;
    bool zero_sum_solvable;
    bool win_lose_solvable;
    bool consistent() const {
        return tight == nash_solvable && tight == zero_sum_solvable && tight == win_lose_solvable;
    }
};
SolvabilityReport solvability_report(const GameForm& g, const SolveBudget& budget = {});

// Alice's lexicographically safe row: maximizes the ascending-sorted vector
// of her reward over the row support, compared from the worst entry with
// exhausted vectors reading as +infinity. Ties break to the lowest index.
int lex_safe_strategy(const GameForm& g, const Reward& ra);

// The special equilibrium seeded by Alice's lex-safe row: Bob answers with a
// best response to it that Alice cannot improve on, preferring simple cells
// and basic columns. Throws NeGuaranteeViolated when no best-response column
// completes an equilibrium (cannot happen on a tight form).
Situation lex_safe_ne(const GameForm& g, const Reward& ra, const Reward& rb);

// Fast integer-valued internals used by the enumeration sweeps.
namespace detail {
bool ne_exists(const GameForm& g, std::span<const int> va, std::span<const int> vb);
bool saddle_exists(const GameForm& g, std::span<const int> v);
}  // namespace detail

}  // namespace gf
