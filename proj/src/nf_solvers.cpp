#include "gameforms/nf_solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gameforms/rng.hpp"
#include "gameforms/tightness.hpp"

namespace gf {

namespace {

void check_reward(const GameForm& g, const Reward& r) {
    if (r.values.size() != static_cast<size_t>(g.num_outcomes()))
        throw ValidationError("reward length does not match outcome count");
}

uint64_t factorial_saturating(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        if (r > (uint64_t(1) << 62) / i) return uint64_t(1) << 62;
        r *= i;
    }
    return r;
}

PreferenceOrder random_order(int n, Rng& rng) {
    PreferenceOrder o;
    o.ranking.resize(n);
    std::iota(o.ranking.begin(), o.ranking.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(o.ranking[i], o.ranking[rng.below(i + 1)]);
    return o;
}

}  // namespace

namespace detail {

bool ne_exists(const GameForm& g, std::span<const int> va, std::span<const int> vb) {
    int rows = g.rows(), cols = g.cols();
    // col_max: Alice's best reply value per column; row_max: Bob's per row.
    for (int x = 0; x < rows; ++x) {
        int row_max = vb[g.at(x, 0)];
        for (int y = 1; y < cols; ++y) row_max = std::max(row_max, vb[g.at(x, y)]);
        for (int y = 0; y < cols; ++y) {
            if (vb[g.at(x, y)] != row_max) continue;
            int a = va[g.at(x, y)];
            bool best = true;
            for (int x2 = 0; x2 < rows; ++x2)
                if (va[g.at(x2, y)] > a) {
                    best = false;
                    break;
                }
            if (best) return true;
        }
    }
    return false;
}

bool saddle_exists(const GameForm& g, std::span<const int> v) {
    int rows = g.rows(), cols = g.cols();
    int maxmin = std::numeric_limits<int>::min();
    for (int x = 0; x < rows; ++x) {
        int m = v[g.at(x, 0)];
        for (int y = 1; y < cols; ++y) m = std::min(m, v[g.at(x, y)]);
        maxmin = std::max(maxmin, m);
    }
    int minmax = std::numeric_limits<int>::max();
    for (int y = 0; y < cols; ++y) {
        int m = v[g.at(0, y)];
        for (int x = 1; x < rows; ++x) m = std::max(m, v[g.at(x, y)]);
        minmax = std::min(minmax, m);
    }
    return maxmin == minmax;
}

}  // namespace detail

std::vector<Situation> nash_equilibria(const GameForm& g, const Reward& ra, const Reward& rb) {
    check_reward(g, ra);
    check_reward(g, rb);
    std::vector<Rat> col_max(g.cols()), row_max(g.rows());
    for (int y = 0; y < g.cols(); ++y) {
        col_max[y] = ra.values[g.at(0, y)];
        for (int x = 1; x < g.rows(); ++x) col_max[y] = std::max(col_max[y], ra.values[g.at(x, y)]);
    }
    for (int x = 0; x < g.rows(); ++x) {
        row_max[x] = rb.values[g.at(x, 0)];
        for (int y = 1; y < g.cols(); ++y) row_max[x] = std::max(row_max[x], rb.values[g.at(x, y)]);
    }
    std::vector<Situation> out;
    for (int x = 0; x < g.rows(); ++x)
        for (int y = 0; y < g.cols(); ++y)
            if (ra.values[g.at(x, y)] == col_max[y] && rb.values[g.at(x, y)] == row_max[x])
                out.push_back({x, y});
    return out;
}

SaddleResult saddle_point(const GameForm& g, const Reward& r) {
    check_reward(g, r);
    std::vector<Rat> row_min(g.rows()), col_max(g.cols());
    for (int x = 0; x < g.rows(); ++x) {
        row_min[x] = r.values[g.at(x, 0)];
        for (int y = 1; y < g.cols(); ++y) row_min[x] = std::min(row_min[x], r.values[g.at(x, y)]);
    }
    for (int y = 0; y < g.cols(); ++y) {
        col_max[y] = r.values[g.at(0, y)];
        for (int x = 1; x < g.rows(); ++x) col_max[y] = std::max(col_max[y], r.values[g.at(x, y)]);
    }
    SaddleResult res;
    res.maxmin = *std::max_element(row_min.begin(), row_min.end());
    res.minmax = *std::min_element(col_max.begin(), col_max.end());
    if (res.maxmin == res.minmax)
        for (int x = 0; x < g.rows() && !res.saddle; ++x)
            for (int y = 0; y < g.cols(); ++y)
                if (row_min[x] == res.maxmin && col_max[y] == res.maxmin &&
                    r.values[g.at(x, y)] == res.maxmin) {
                    res.saddle = Situation{x, y};
                    break;
                }
    return res;
}

NashSolvability is_nash_solvable(const GameForm& g, const SolveBudget& budget) {
    int n = g.num_outcomes();
    uint64_t pairs = factorial_saturating(n);
    pairs = pairs > (uint64_t(1) << 31) ? uint64_t(1) << 62 : pairs * pairs;
    if (pairs <= budget.exhaustive_limit) {
        PreferenceOrder oa, ob;
        oa.ranking.resize(n);
        std::iota(oa.ranking.begin(), oa.ranking.end(), 0);
        do {
            auto va = oa.to_int_values();
            ob.ranking.assign(oa.ranking.size(), 0);
            std::iota(ob.ranking.begin(), ob.ranking.end(), 0);
            do {
                auto vb = ob.to_int_values();
                if (!detail::ne_exists(g, va, vb)) return {false, true, std::make_pair(oa, ob)};
            } while (std::next_permutation(ob.ranking.begin(), ob.ranking.end()));
        } while (std::next_permutation(oa.ranking.begin(), oa.ranking.end()));
        return {true, true, std::nullopt};
    }
    Rng rng(budget.seed);
    for (uint64_t i = 0; i < budget.samples; ++i) {
        PreferenceOrder oa = random_order(n, rng), ob = random_order(n, rng);
        if (!detail::ne_exists(g, oa.to_int_values(), ob.to_int_values()))
            return {false, false, std::make_pair(oa, ob)};
    }
    return {true, false, std::nullopt};
}

OrderSolvability is_zero_sum_solvable(const GameForm& g, const SolveBudget& budget) {
    int n = g.num_outcomes();
    if (factorial_saturating(n) <= budget.exhaustive_limit) {
        PreferenceOrder o;
        o.ranking.resize(n);
        std::iota(o.ranking.begin(), o.ranking.end(), 0);
        do {
            if (!detail::saddle_exists(g, o.to_int_values())) return {false, true, o};
        } while (std::next_permutation(o.ranking.begin(), o.ranking.end()));
        return {true, true, std::nullopt};
    }
    Rng rng(budget.seed);
    for (uint64_t i = 0; i < budget.samples; ++i) {
        PreferenceOrder o = random_order(n, rng);
        if (!detail::saddle_exists(g, o.to_int_values())) return {false, false, o};
    }
    return {true, false, std::nullopt};
}

WinLoseSolvability is_win_lose_solvable(const GameForm& g, const SolveBudget& budget) {
    int n = g.num_outcomes();
    auto check = [&](const OutcomeSet& alice_wins) {
        std::vector<int> v(n);
        for (int o = 0; o < n; ++o) v[o] = alice_wins.test(o) ? 1 : -1;
        return detail::saddle_exists(g, v);
    };
    if (n < 63 && (uint64_t(1) << n) <= budget.exhaustive_limit) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
            OutcomeSet s(n, 0);
            for (int i = 0; i < n; ++i)
                if (bits & (uint64_t(1) << i)) s.set(i);
            if (!check(s)) return {false, true, s};
        }
        return {true, true, std::nullopt};
    }
    Rng rng(budget.seed);
    for (uint64_t i = 0; i < budget.samples; ++i) {
        OutcomeSet s(n, 0);
        for (int o = 0; o < n; ++o)
            if (rng.coin()) s.set(o);
        if (!check(s)) return {false, false, s};
    }
    return {true, false, std::nullopt};
}

SolvabilityReport solvability_report(const GameForm& g, const SolveBudget& budget) {
    return {is_tight(g), is_nash_solvable(g, budget).solvable,
            is_zero_sum_solvable(g, budget).solvable, is_win_lose_solvable(g, budget).solvable};
}

namespace {

// Ascending reward values over a support; the security profile of a strategy.
std::vector<Rat> security_vector(const OutcomeSet& support, const Reward& r) {
    std::vector<Rat> v;
    for (auto o = support.find_first(); o != OutcomeSet::npos; o = support.find_next(o))
        v.push_back(r.values[o]);
    std::sort(v.begin(), v.end());
    return v;
}

// Lexicographic from the worst entry; a vector that runs out reads +infinity
// (so a support that is a proper subset compares strictly better).
// Returns <0, 0, >0 like a three-way comparison of a against b.
int compare_security(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0;; ++i) {
        bool ea = i >= a.size(), eb = i >= b.size();
        if (ea && eb) return 0;
        if (ea) return 1;
        if (eb) return -1;
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
}

}  // namespace

int lex_safe_strategy(const GameForm& g, const Reward& ra) {
    check_reward(g, ra);
    Supports s = supports(g);
    int best = 0;
    std::vector<Rat> best_vec = security_vector(s.row[0], ra);
    for (int x = 1; x < g.rows(); ++x) {
        auto v = security_vector(s.row[x], ra);
        if (compare_security(v, best_vec) > 0) {
            best = x;
            best_vec = std::move(v);
        }
    }
    return best;
}

Situation lex_safe_ne(const GameForm& g, const Reward& ra, const Reward& rb) {
    check_reward(g, ra);
    check_reward(g, rb);
    int x0 = lex_safe_strategy(g, ra);
    Supports s = supports(g);
    BasicStrategies basic = basic_strategies(g);

    Rat bob_best = rb.values[g.at(x0, 0)];
    for (int y = 1; y < g.cols(); ++y) bob_best = std::max(bob_best, rb.values[g.at(x0, y)]);

    std::vector<Rat> col_max(g.cols());
    for (int y = 0; y < g.cols(); ++y) {
        col_max[y] = ra.values[g.at(0, y)];
        for (int x = 1; x < g.rows(); ++x) col_max[y] = std::max(col_max[y], ra.values[g.at(x, y)]);
    }

    int pick = -1;
    bool pick_nice = false;
    std::vector<Rat> pick_vec;
    for (int y = 0; y < g.cols(); ++y) {
        if (rb.values[g.at(x0, y)] != bob_best) continue;       // Bob best response
        if (ra.values[g.at(x0, y)] != col_max[y]) continue;     // Alice cannot improve
        OutcomeSet inter = s.row[x0] & s.col[y];
        bool nice = basic.cols[y] && inter.count() == 1;        // basic and simple
        auto vec = security_vector(s.col[y], rb);
        bool better = pick < 0 || (nice && !pick_nice) ||
                      (nice == pick_nice && compare_security(vec, pick_vec) > 0);
        if (better) {
            pick = y;
            pick_nice = nice;
            pick_vec = std::move(vec);
        }
    }
    if (pick < 0)
        throw NeGuaranteeViolated("no best-response column completes an equilibrium at the lex-safe row");
    return {x0, pick};
}

}  // namespace gf
