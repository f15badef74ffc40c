#include "gameforms/tightness.hpp"

#include <algorithm>

#include "gameforms/errors.hpp"

namespace gf {

namespace {

// |base|^|exp| capped at 2^63; avoids overflow in budget checks.
uint64_t pow_saturating(uint64_t base, uint64_t exp) {
    const uint64_t cap = uint64_t(1) << 63;
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (r > cap / std::max<uint64_t>(base, 1)) return cap;
        r *= base;
    }
    return r;
}

void check_enum_budget(const GameForm& g, uint64_t budget) {
    uint64_t n = pow_saturating(g.cols(), g.rows());
    uint64_t m = pow_saturating(g.rows(), g.cols());
    if (n > budget || m > budget || n + m > budget)
        throw BudgetExceeded("response-strategy enumeration over budget; use the duality route");
}

std::vector<OutcomeSet> minimal_sets(const std::vector<OutcomeSet>& sets) {
    std::vector<OutcomeSet> out;
    for (const auto& s : sets) {
        bool minimal = true;
        for (const auto& t : sets)
            if (t != s && t.is_subset_of(s)) {
                minimal = false;
                break;
            }
        if (minimal && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int ground_size, std::vector<OutcomeSet> edges)
    : ground_size_(ground_size), edges_(std::move(edges)) {
    if (ground_size_ <= 0) throw ValidationError("hypergraph needs a nonempty ground set");
    for (const auto& e : edges_) {
        if (static_cast<int>(e.size()) != ground_size_)
            throw ValidationError("hypergraph edge over wrong ground set");
        if (e.none()) throw ValidationError("hypergraph edge must be nonempty");
    }
}

OutcomeSet response_image(const GameForm& g, const ResponseStrategy& r) {
    OutcomeSet img(g.num_outcomes());
    if (r.kind == ResponseStrategy::Kind::Bob) {
        if (static_cast<int>(r.map.size()) != g.rows())
            throw ValidationError("phi must map every row");
        for (int x = 0; x < g.rows(); ++x) {
            if (r.map[x] < 0 || r.map[x] >= g.cols()) throw ValidationError("phi target out of range");
            img.set(g.at(x, r.map[x]));
        }
    } else {
        if (static_cast<int>(r.map.size()) != g.cols())
            throw ValidationError("psi must map every column");
        for (int y = 0; y < g.cols(); ++y) {
            if (r.map[y] < 0 || r.map[y] >= g.rows()) throw ValidationError("psi target out of range");
            img.set(g.at(r.map[y], y));
        }
    }
    return img;
}

bool witness_valid(const GameForm& g, const TightnessWitness& w) {
    if (w.phi.kind != ResponseStrategy::Kind::Bob || w.psi.kind != ResponseStrategy::Kind::Alice)
        return false;
    try {
        return !response_image(g, w.phi).intersects(response_image(g, w.psi));
    } catch (const ValidationError&) {
        return false;
    }
}

std::map<OutcomeSet, std::vector<int>> distinct_response_images(const GameForm& g,
                                                                ResponseStrategy::Kind kind) {
    // One step per row (Bob) or column (Alice); state is the image built so
    // far plus a representative choice list. Deduplication keeps the state
    // space at most 2^|O| regardless of how many raw maps exist.
    int steps = kind == ResponseStrategy::Kind::Bob ? g.rows() : g.cols();
    int choices = kind == ResponseStrategy::Kind::Bob ? g.cols() : g.rows();
    std::map<OutcomeSet, std::vector<int>> front;
    front.emplace(OutcomeSet(g.num_outcomes()), std::vector<int>{});
    for (int i = 0; i < steps; ++i) {
        std::map<OutcomeSet, std::vector<int>> next;
        // first column realizing each distinct outcome of this line
        std::vector<std::pair<int, int>> opts;  // (outcome, choice index)
        std::vector<bool> seen(g.num_outcomes(), false);
        for (int j = 0; j < choices; ++j) {
            int o = kind == ResponseStrategy::Kind::Bob ? g.at(i, j) : g.at(j, i);
            if (!seen[o]) {
                seen[o] = true;
                opts.emplace_back(o, j);
            }
        }
        for (const auto& [img, rep] : front)
            for (const auto& [o, j] : opts) {
                OutcomeSet img2 = img;
                img2.set(o);
                if (next.count(img2)) continue;  // keep first representative
                std::vector<int> rep2 = rep;
                rep2.push_back(j);
                next.emplace(std::move(img2), std::move(rep2));
            }
        front = std::move(next);
    }
    return front;
}

TightnessCheck is_tight_j(const GameForm& g, uint64_t budget) {
    check_enum_budget(g, budget);
    auto phi_images = distinct_response_images(g, ResponseStrategy::Kind::Bob);
    auto psi_images = distinct_response_images(g, ResponseStrategy::Kind::Alice);

    // Every image contains a minimal one, so checking minimal pairs decides
    // the universal claim; a disjoint minimal pair is already a witness.
    std::vector<OutcomeSet> phi_sets, psi_sets;
    for (const auto& [s, _] : phi_images) phi_sets.push_back(s);
    for (const auto& [s, _] : psi_images) psi_sets.push_back(s);
    for (const auto& p : minimal_sets(phi_sets))
        for (const auto& q : minimal_sets(psi_sets))
            if (!p.intersects(q)) {
                TightnessWitness w{{ResponseStrategy::Kind::Bob, phi_images.at(p)},
                                   {ResponseStrategy::Kind::Alice, psi_images.at(q)}};
                return {false, std::move(w)};
            }
    return {true, std::nullopt};
}

namespace {

bool jj_holds(const GameForm& g, ResponseStrategy::Kind respond_kind) {
    // (jjA): every phi image contains some column support (and mirrored).
    Supports s = supports(g);
    const auto& partner = respond_kind == ResponseStrategy::Kind::Bob ? s.col : s.row;
    auto images = distinct_response_images(g, respond_kind);
    std::vector<OutcomeSet> sets;
    for (const auto& [img, _] : images) sets.push_back(img);
    for (const auto& img : minimal_sets(sets)) {
        bool covered = false;
        for (const auto& supp : partner)
            if (supp.is_subset_of(img)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

}  // namespace

bool is_tight_jjA(const GameForm& g, uint64_t budget) {
    check_enum_budget(g, budget);
    return jj_holds(g, ResponseStrategy::Kind::Bob);
}

bool is_tight_jjB(const GameForm& g, uint64_t budget) {
    check_enum_budget(g, budget);
    return jj_holds(g, ResponseStrategy::Kind::Alice);
}

std::pair<Hypergraph, Hypergraph> build_hypergraphs(const GameForm& g) {
    Supports s = supports(g);
    return {Hypergraph(g.num_outcomes(), s.row), Hypergraph(g.num_outcomes(), s.col)};
}

std::vector<OutcomeSet> minimal_transversals(const Hypergraph& h) {
    std::vector<OutcomeSet> tr = {OutcomeSet(h.ground_size())};
    for (const auto& e : h.edges()) {
        std::vector<OutcomeSet> grown;
        for (const auto& t : tr) {
            if (t.intersects(e)) {
                grown.push_back(t);
            } else {
                for (auto v = e.find_first(); v != OutcomeSet::npos; v = e.find_next(v)) {
                    OutcomeSet t2 = t;
                    t2.set(v);
                    grown.push_back(std::move(t2));
                }
            }
        }
        tr = minimal_sets(grown);
    }
    return tr;
}

namespace {

std::vector<OutcomeSet> minimal_edges(const Hypergraph& h) { return minimal_sets(h.edges()); }

bool edges_pairwise_intersect(const Hypergraph& a, const Hypergraph& b) {
    for (const auto& ea : a.edges())
        for (const auto& eb : b.edges())
            if (!ea.intersects(eb)) return false;
    return true;
}

bool is_dual_subsets(const Hypergraph& a, const Hypergraph& b, uint64_t budget) {
    int n = a.ground_size();
    if (n >= 63 || (uint64_t(1) << n) > budget)
        throw BudgetExceeded("ground set too large for subset enumeration");
    if (!edges_pairwise_intersect(a, b)) return false;
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        OutcomeSet s(n, 0);
        for (int i = 0; i < n; ++i)
            if (bits & (uint64_t(1) << i)) s.set(i);
        bool hits_all_b = true;
        for (const auto& e : b.edges())
            if (!s.intersects(e)) {
                hits_all_b = false;
                break;
            }
        if (hits_all_b) {
            bool contains_a_edge = false;
            for (const auto& e : a.edges())
                if (e.is_subset_of(s)) {
                    contains_a_edge = true;
                    break;
                }
            if (!contains_a_edge) return false;  // (jjjA) fails
        }
        bool hits_all_a = true;
        for (const auto& e : a.edges())
            if (!s.intersects(e)) {
                hits_all_a = false;
                break;
            }
        if (hits_all_a) {
            bool contains_b_edge = false;
            for (const auto& e : b.edges())
                if (e.is_subset_of(s)) {
                    contains_b_edge = true;
                    break;
                }
            if (!contains_b_edge) return false;  // (jjjB) fails
        }
    }
    return true;
}

bool is_dual_transversal(const Hypergraph& a, const Hypergraph& b) {
    // Dual iff the minimal transversals of one equal the inclusion-minimal
    // edges of the other (pairwise intersection follows).
    auto tr = minimal_transversals(Hypergraph(a.ground_size(), minimal_edges(a)));
    auto bm = minimal_edges(b);
    if (tr.size() != bm.size()) return false;
    std::sort(tr.begin(), tr.end());
    std::sort(bm.begin(), bm.end());
    return tr == bm;
}

}  // namespace

bool is_dual(const Hypergraph& a, const Hypergraph& b, DualMethod method, uint64_t budget) {
    if (a.ground_size() != b.ground_size()) throw ValidationError("hypergraph ground sets differ");
    if (a.edges().empty() || b.edges().empty())
        throw ValidationError("dual check needs nonempty edge lists");
    return method == DualMethod::SubsetEnumeration ? is_dual_subsets(a, b, budget)
                                                   : is_dual_transversal(a, b);
}

bool is_tight(const GameForm& g) {
    auto [a, b] = build_hypergraphs(g);
    return is_dual(a, b, DualMethod::Transversal);
}

Reward winlose_from_witness(const GameForm& g, const TightnessWitness& w) {
    if (!witness_valid(g, w)) throw ValidationError("witness images intersect; not a valid witness");
    OutcomeSet lose = response_image(g, w.phi);
    Reward r;
    r.values.assign(g.num_outcomes(), Rat(1));
    for (auto o = lose.find_first(); o != OutcomeSet::npos; o = lose.find_next(o))
        r.values[o] = Rat(-1);
    return r;
}

}  // namespace gf
