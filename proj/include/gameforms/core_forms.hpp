#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

#include "gameforms/errors.hpp"
#include "gameforms/rational.hpp"

namespace gf {

// Set of outcome indices over a fixed ground set {0..|O|-1}.
using OutcomeSet = boost::dynamic_bitset<>;

/// Finite two-person game form: a total, surjective table X x Y -> O.
/// Outcomes are dense 0-based indices; labels are display metadata only.
class GameForm {
  public:
    GameForm(int rows, int cols, std::vector<int> table,
             std::vector<std::string> labels = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_outcomes() const { return num_outcomes_; }
    int at(int x, int y) const { return table_[static_cast<size_t>(x) * cols_ + y]; }
    const std::vector<int>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const GameForm& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && table_ == o.table_;
    }

  private:
    int rows_;
    int cols_;
    int num_outcomes_;
    std::vector<int> table_;  // row-major
    std::vector<std::string> labels_;
};

/// One value per outcome. Players evaluate situations through these.
struct Reward {
    std::vector<Rat> values;
};

/// Strict total order over outcomes, best first. Finite surrogate for an
/// arbitrary real-valued reward with no ties.
struct PreferenceOrder {
    std::vector<int> ranking;  // permutation of 0..|O|-1

    // Reward giving the k-th ranked outcome value |O|-1-k.
    Reward to_reward() const;
    // Integer values, same convention; fast path for enumeration loops.
    std::vector<int> to_int_values() const;
};

struct Supports {
    std::vector<OutcomeSet> row;  // row[x] = { g(x,y) : y }
    std::vector<OutcomeSet> col;  // col[y] = { g(x,y) : x }
};

// Supports of all strategies of both players.
Supports supports(const GameForm& g);

// A strategy is basic iff no other same-side strategy has a support that is
// a proper subset of its support.
struct BasicStrategies {
    std::vector<bool> rows;
    std::vector<bool> cols;
};
BasicStrategies basic_strategies(const GameForm& g);

// A situation (x,y) is simple iff g(x) and g(y) intersect exactly in g(x,y).
bool is_simple(const GameForm& g, int x, int y);

// Every outcome's preimage is a combinatorial box; equivalent to all
// situations being simple.
bool is_rectangular(const GameForm& g);

// Swaps the players' roles.
GameForm transpose(const GameForm& g);

// Relabels outcomes by first occurrence in row-major order. Two forms are
// equal modulo outcome relabeling iff their canonical tables are equal.
std::vector<int> canonical_table(const GameForm& g);

}  // namespace gf
