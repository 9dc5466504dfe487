#pragma once

// Exchange classes and bounded Legendrian equivalence search.
//
// Nodes are canonical keys, so every set here is modulo torus translation.

#include "invariants.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace legendrid {

struct ExploreOptions {
    std::size_t node_budget = 1'000'000;
    unsigned threads = 1;
    // Alexander polynomials are costly; the tripwire computes them on every
    // k-th member (0 disables). tb and rotation are checked on all.
    std::size_t alexander_stride = 4096;
};

struct ExchangeClass {
    OrientedGridDiagram representative = minimal_unknot();
    std::vector<std::string> members; // sorted canonical keys
    bool complete = false;

    std::size_t size() const { return members.size(); }
    bool contains(const OrientedGridDiagram &r) const {
        return std::binary_search(members.begin(), members.end(), canonical_key(r));
    }
};

/// Thrown when a member of a class disagrees with the representative on an
/// invariant that exchange moves must preserve.
class InvariantTripwire : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

namespace detail {

// writhe is left out: a cyclic column or row shift can change it
struct CheapInvariants {
    int tbp, tbm, rotp, rotm;
    bool operator==(const CheapInvariants &) const = default;
};
inline CheapInvariants cheap_invariants(const OrientedGridDiagram &r) {
    return {tb_plus(r), tb_minus(r), rotation_plus(r), rotation_minus(r)};
}

// neighbours of one node under exchanges, as canonical keys
inline std::vector<std::string> exchange_neighbours(const std::string &key) {
    const auto d = from_key(key);
    std::vector<std::string> out;
    for (const auto &m : applicable_exchanges(d))
        out.push_back(canonical_key(apply_exchange(d, m)));
    return out;
}

// Expands a frontier, possibly on several threads. The result is in frontier
// order so that the caller's merge is deterministic.
template <class Fn>
std::vector<std::vector<std::string>> expand(const std::vector<std::string> &frontier, unsigned threads, Fn &&fn) {
    std::vector<std::vector<std::string>> out(frontier.size());
    if (threads <= 1 || frontier.size() < 64) {
        for (std::size_t i = 0; i < frontier.size(); ++i)
            out[i] = fn(frontier[i]);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < frontier.size(); i += threads)
                out[i] = fn(frontier[i]);
        });
    for (auto &th : pool)
        th.join();
    return out;
}

} // namespace detail

inline ExchangeClass exchange_class(const OrientedGridDiagram &r, const ExploreOptions &opt = {}) {
    ExchangeClass cls;
    cls.representative = r;
    const auto ref = detail::cheap_invariants(r);
    const auto ref_alex = opt.alexander_stride ? alexander(r) : LaurentPolynomial{};

    std::unordered_set<std::string> seen;
    std::vector<std::string> frontier{canonical_key(r)};
    seen.insert(frontier[0]);
    std::size_t checked = 0;
    bool exhausted = true;
    while (!frontier.empty()) {
        if (seen.size() > opt.node_budget) {
            exhausted = false;
            break;
        }
        auto next_lists = detail::expand(frontier, opt.threads, detail::exchange_neighbours);
        std::vector<std::string> next;
        for (auto &list : next_lists)
            for (auto &k : list)
                if (seen.insert(k).second) {
                    const auto d = from_key(k);
                    if (!(detail::cheap_invariants(d) == ref))
                        throw InvariantTripwire("exchange changed a classical invariant at " + k);
                    if (opt.alexander_stride && ++checked % opt.alexander_stride == 0 && !(alexander(d) == ref_alex))
                        throw InvariantTripwire("exchange changed the Alexander polynomial at " + k);
                    next.push_back(k);
                }
        frontier = std::move(next);
    }
    cls.complete = exhausted && seen.size() <= opt.node_budget;
    cls.members.assign(seen.begin(), seen.end());
    std::sort(cls.members.begin(), cls.members.end());
    return cls;
}

enum class Decision { Yes, No, Unknown };

inline const char *to_string(Decision d) {
    switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
    }
    return "?";
}

/// Exact when the closure of `a` is complete; otherwise only a Yes is final.
inline Decision same_class(const OrientedGridDiagram &a, const OrientedGridDiagram &b,
                           const ExploreOptions &opt = {}) {
    if (a.size() != b.size())
        return Decision::No;
    auto cls = exchange_class(a, opt);
    if (cls.contains(b))
        return Decision::Yes;
    return cls.complete ? Decision::No : Decision::Unknown;
}

/// Some exchange leads to a diagram that is not a translate of r.
inline bool admits_nontrivial_exchange(const OrientedGridDiagram &r) {
    for (const auto &m : applicable_exchanges(r))
        if (!is_trivial_exchange(r, m))
            return true;
    return false;
}

/// Exchange class of a type-T stabilization, taken at the X vertex of column 0.
inline ExchangeClass stab_class(const OrientedGridDiagram &r, StabType t, const ExploreOptions &opt = {}) {
    return exchange_class(stabilize(r, t, 0, Role::X), opt);
}

struct StabClaim {
    std::string id;
    OrientedGridDiagram lhs;
    StabType lhs_type;
    OrientedGridDiagram rhs;
    StabType rhs_type;
};

struct StabClaimResult {
    std::string id;
    Decision verdict = Decision::Unknown;
    std::size_t lhs_size = 0, rhs_size = 0;
    bool lhs_complete = false, rhs_complete = false;
};

/// Equality of two stabilization classes. Yes needs the right-hand
/// stabilization inside the left-hand class; No needs a complete left-hand
/// class that misses it.
inline StabClaimResult verify_stab_claim(const StabClaim &c, const ExploreOptions &opt = {}) {
    StabClaimResult res;
    res.id = c.id;
    auto left = stab_class(c.lhs, c.lhs_type, opt);
    auto right = stab_class(c.rhs, c.rhs_type, opt);
    res.lhs_size = left.size();
    res.rhs_size = right.size();
    res.lhs_complete = left.complete;
    res.rhs_complete = right.complete;
    const bool meet = left.contains(right.representative) || right.contains(left.representative);
    if (meet)
        res.verdict = Decision::Yes;
    else if (left.complete || right.complete)
        res.verdict = Decision::No;
    return res;
}

inline std::vector<StabClaimResult> verify_stab_equalities(const std::vector<StabClaim> &claims,
                                                           const ExploreOptions &opt = {}) {
    std::vector<StabClaimResult> out;
    for (const auto &c : claims)
        out.push_back(verify_stab_claim(c, opt));
    return out;
}

// ---------------------------------------------------------------------------
// Bounded Legendrian equivalence

enum class ContactSign { Plus, Minus };

inline const char *to_string(ContactSign s) { return s == ContactSign::Plus ? "+" : "-"; }

/// Moves allowed for the given sign: exchanges, and (de)stabilizations of
/// type I for xi_+ or type II for xi_-.
inline std::vector<MoveDescriptor> legendrian_moves(const OrientedGridDiagram &r, ContactSign sign, int size_cap) {
    std::vector<MoveDescriptor> out = applicable_exchanges(r);
    const bool want_one = sign == ContactSign::Plus;
    if (r.size() < size_cap)
        for (auto t : kAllStabTypes) {
            if (is_type_one(t) != want_one)
                continue;
            for (int c = 0; c < r.size(); ++c)
                for (Role role : {Role::X, Role::O})
                    out.emplace_back(Stabilize{t, c, role});
        }
    for (auto &d : destabilizations(r))
        if (is_type_one(d.type) == want_one)
            out.emplace_back(d.move);
    return out;
}

struct SearchVerdict {
    bool found = false; // false means Unknown: budget or size cap exhausted
    std::vector<MoveDescriptor> path;
    std::size_t nodes = 0;
    int size_cap_used = 0;
};

/// Replays a path. Each move acts on the canonical form of the current
/// diagram.
inline OrientedGridDiagram replay(const OrientedGridDiagram &start, const std::vector<MoveDescriptor> &path) {
    auto d = canonical_form(start);
    for (const auto &m : path)
        d = canonical_form(apply_move(d, m));
    return d;
}

namespace detail {

// Bidirectional BFS with all sizes up to `cap`. Parents are stored per side;
// on meeting, the backward half is re-derived move by move.
inline SearchVerdict bidirectional(const OrientedGridDiagram &a, const OrientedGridDiagram &b, ContactSign sign,
                                   int cap, std::size_t budget) {
    SearchVerdict v;
    v.size_cap_used = cap;
    const auto ka = canonical_key(a), kb = canonical_key(b);
    struct Side {
        std::unordered_map<std::string, std::pair<std::string, MoveDescriptor>> parent;
        std::vector<std::string> frontier;
    };
    Side s[2];
    s[0].parent.emplace(ka, std::pair{std::string{}, MoveDescriptor{ExchangeColumns{-1}}});
    s[1].parent.emplace(kb, std::pair{std::string{}, MoveDescriptor{ExchangeColumns{-1}}});
    s[0].frontier = {ka};
    s[1].frontier = {kb};

    auto chain = [&](int side, std::string k) {
        std::vector<std::string> keys{k};
        while (!s[side].parent.at(k).first.empty()) {
            k = s[side].parent.at(k).first;
            keys.push_back(k);
        }
        return keys; // from k back to the root
    };
    auto finish = [&](const std::string &meet) {
        auto fwd = chain(0, meet);
        std::reverse(fwd.begin(), fwd.end());
        for (std::size_t i = 1; i < fwd.size(); ++i)
            v.path.push_back(s[0].parent.at(fwd[i]).second);
        auto back = chain(1, meet); // meet ... kb
        for (std::size_t i = 0; i + 1 < back.size(); ++i) {
            const auto d = from_key(back[i]);
            bool ok = false;
            for (const auto &m : legendrian_moves(d, sign, cap)) {
                if (canonical_key(apply_move(d, m)) == back[i + 1]) {
                    v.path.push_back(m);
                    ok = true;
                    break;
                }
            }
            if (!ok)
                throw std::logic_error("move graph is not symmetric at " + back[i]);
        }
        v.found = true;
    };

    if (ka == kb) {
        v.found = true;
        return v;
    }
    while (!s[0].frontier.empty() && !s[1].frontier.empty()) {
        const int side = s[0].frontier.size() <= s[1].frontier.size() ? 0 : 1;
        std::vector<std::string> next;
        for (const auto &k : s[side].frontier) {
            const auto d = from_key(k);
            for (const auto &m : legendrian_moves(d, sign, cap)) {
                auto child = canonical_key(apply_move(d, m));
                if (s[side].parent.count(child))
                    continue;
                s[side].parent.emplace(child, std::pair{k, m});
                ++v.nodes;
                if (s[1 - side].parent.count(child)) {
                    finish(child);
                    return v;
                }
                if (s[0].parent.size() + s[1].parent.size() > budget)
                    return v;
                next.push_back(child);
            }
        }
        s[side].frontier = std::move(next);
    }
    return v;
}

} // namespace detail

/// Searches for a sequence of sign-appropriate moves between r1 and r2 with
/// all intermediate sizes at most size_cap. The cap is widened one step at a
/// time from max(n1, n2). A found path is replayed before it is returned.
inline SearchVerdict legendrian_equiv_bounded(const OrientedGridDiagram &r1, const OrientedGridDiagram &r2,
                                              ContactSign sign, int size_cap, std::size_t node_budget) {
    SearchVerdict last;
    std::size_t spent = 0;
    for (int cap = std::max(r1.size(), r2.size()); cap <= size_cap; ++cap) {
        if (spent >= node_budget)
            break;
        auto v = detail::bidirectional(r1, r2, sign, cap, node_budget - spent);
        spent += v.nodes;
        v.nodes = spent;
        if (v.found) {
            if (!equivalent(replay(r1, v.path), r2))
                throw std::logic_error("witness path does not replay");
            return v;
        }
        last = v;
    }
    last.found = false;
    last.path.clear();
    last.nodes = spent;
    return last;
}

} // namespace legendrid
