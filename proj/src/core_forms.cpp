#include "gameforms/core_forms.hpp"

#include <algorithm>

namespace gf {

GameForm::GameForm(int rows, int cols, std::vector<int> table, std::vector<std::string> labels)
    : rows_(rows), cols_(cols), table_(std::move(table)), labels_(std::move(labels)) {
    if (rows_ < 1 || cols_ < 1) throw ValidationError("game form needs at least one row and one column");
    if (table_.size() != static_cast<size_t>(rows_) * cols_)
        throw ValidationError("game form table size does not match dimensions");
    int max_id = -1;
    for (int o : table_) {
        if (o < 0) throw ValidationError("negative outcome index");
        max_id = std::max(max_id, o);
    }
    num_outcomes_ = max_id + 1;
    std::vector<bool> seen(num_outcomes_, false);
    for (int o : table_) seen[o] = true;
    for (int o = 0; o < num_outcomes_; ++o)
        if (!seen[o]) throw ValidationError("outcome " + std::to_string(o) + " never occurs (form must be surjective)");
    if (!labels_.empty() && labels_.size() != static_cast<size_t>(num_outcomes_))
        throw ValidationError("label count does not match outcome count");
}

Reward PreferenceOrder::to_reward() const {
    Reward r;
    r.values.resize(ranking.size());
    for (size_t k = 0; k < ranking.size(); ++k)
        r.values[ranking[k]] = Rat(static_cast<long>(ranking.size() - 1 - k));
    return r;
}

std::vector<int> PreferenceOrder::to_int_values() const {
    std::vector<int> v(ranking.size());
    for (size_t k = 0; k < ranking.size(); ++k)
        v[ranking[k]] = static_cast<int>(ranking.size() - 1 - k);
    return v;
}

Supports supports(const GameForm& g) {
    Supports s;
    s.row.assign(g.rows(), OutcomeSet(g.num_outcomes()));
    s.col.assign(g.cols(), OutcomeSet(g.num_outcomes()));
    for (int x = 0; x < g.rows(); ++x)
        for (int y = 0; y < g.cols(); ++y) {
            s.row[x].set(g.at(x, y));
            s.col[y].set(g.at(x, y));
        }
    return s;
}

namespace {

std::vector<bool> minimal_supports(const std::vector<OutcomeSet>& supp) {
    std::vector<bool> basic(supp.size(), true);
    for (size_t i = 0; i < supp.size(); ++i)
        for (size_t j = 0; j < supp.size(); ++j)
            if (i != j && supp[j].is_proper_subset_of(supp[i])) {
                basic[i] = false;
                break;
            }
    return basic;
}

}  // namespace

BasicStrategies basic_strategies(const GameForm& g) {
    Supports s = supports(g);
    return {minimal_supports(s.row), minimal_supports(s.col)};
}

bool is_simple(const GameForm& g, int x, int y) {
    if (x < 0 || x >= g.rows() || y < 0 || y >= g.cols())
        throw ValidationError("situation index out of range");
    Supports s = supports(g);
    OutcomeSet inter = s.row[x] & s.col[y];
    return inter.count() == 1 && inter.test(g.at(x, y));
}

bool is_rectangular(const GameForm& g) {
    // Each outcome must fill the full box spanned by its row and column
    // projections.
    for (int o = 0; o < g.num_outcomes(); ++o) {
        std::vector<bool> in_row(g.rows(), false), in_col(g.cols(), false);
        int count = 0;
        for (int x = 0; x < g.rows(); ++x)
            for (int y = 0; y < g.cols(); ++y)
                if (g.at(x, y) == o) {
                    in_row[x] = true;
                    in_col[y] = true;
                    ++count;
                }
        int nr = static_cast<int>(std::count(in_row.begin(), in_row.end(), true));
        int nc = static_cast<int>(std::count(in_col.begin(), in_col.end(), true));
        if (count != nr * nc) return false;
    }
    return true;
}

GameForm transpose(const GameForm& g) {
    std::vector<int> t(static_cast<size_t>(g.rows()) * g.cols());
    for (int x = 0; x < g.rows(); ++x)
        for (int y = 0; y < g.cols(); ++y)
            t[static_cast<size_t>(y) * g.rows() + x] = g.at(x, y);
    return GameForm(g.cols(), g.rows(), std::move(t), g.labels());
}

std::vector<int> canonical_table(const GameForm& g) {
    std::vector<int> relabel(g.num_outcomes(), -1);
    std::vector<int> out(g.table().size());
    int next = 0;
    for (size_t i = 0; i < g.table().size(); ++i) {
        int o = g.table()[i];
        if (relabel[o] < 0) relabel[o] = next++;
        out[i] = relabel[o];
    }
    return out;
}

}  // namespace gf
