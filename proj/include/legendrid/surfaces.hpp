#pragma once

// Rectangular diagrams of surfaces and dividing codes.
//
// A patch is a rectangle [t1, t2] x [p1, p2] on the torus, both intervals read
// in the positive direction (east, north) and possibly wrapping. Its four
// corners are the vertices; a vertex lying in exactly one patch is a boundary
// vertex, a vertex lying in two patches glues them. Each level (a theta
// meridian or a phi longitude) carries a point of the surface; the link of
// that point is the union of the patch sides lying on the level.

#include "grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace legendrid {

class SurfaceError : public std::runtime_error {
  public:
    enum class Kind { Syntax, Degenerate, TripleSharing, NonSurfaceIncidence, Disconnected, NonOrientable };
    SurfaceError(Kind k, const std::string &what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

struct RectanglePatch {
    int t1, t2, p1, p2;
    bool operator==(const RectanglePatch &) const = default;
    auto operator<=>(const RectanglePatch &) const = default;
};

// Corner index order used throughout: SW, SE, NW, NE.
enum class Corner : std::uint8_t { SW = 0, SE = 1, NW = 2, NE = 3 };

struct SurfaceVertex {
    int theta, phi;
    auto operator<=>(const SurfaceVertex &) const = default;
};

namespace detail {

// cyclic interval [a, b] on Z/m, positive direction
struct CyclicInterval {
    int a, b, m;
    int length() const { return mod(b - a, m); }
    bool contains_point(int p) const { return mod(p - a, m) <= length(); }
    bool contains_unit(int s) const { return mod(s - a, m) < length(); } // segment s..s+1
    bool strictly_inside(const CyclicInterval &o) const {
        if (a == o.a || a == o.b || b == o.a || b == o.b)
            return false;
        for (int d = 0; d <= length(); ++d)
            if (!o.contains_point(mod(a + d, m)))
                return false;
        return true;
    }
};

inline bool intervals_share_point(const CyclicInterval &u, const CyclicInterval &v) {
    for (int p = 0; p < u.m; ++p)
        if (u.contains_point(p) && v.contains_point(p))
            return true;
    return false;
}
inline bool intervals_share_segment(const CyclicInterval &u, const CyclicInterval &v) {
    for (int s = 0; s < u.m; ++s)
        if (u.contains_unit(s) && v.contains_unit(s))
            return true;
    return false;
}

} // namespace detail

class SurfaceDiagram {
  public:
    int theta_levels() const { return nt_; }
    int phi_levels() const { return np_; }
    const std::vector<RectanglePatch> &patches() const { return patches_; }

    /// Orientation sign of each patch (+1 / -1), patch 0 positive. Empty when
    /// the surface is not orientable.
    const std::vector<int> &signs() const { return signs_; }
    bool orientable() const { return !signs_.empty() || patches_.empty(); }

    std::array<SurfaceVertex, 4> corners(std::size_t i) const {
        const auto &r = patches_[i];
        return {{{r.t1, r.p1}, {r.t2, r.p1}, {r.t1, r.p2}, {r.t2, r.p2}}};
    }
    /// Number of patches having v as a corner.
    int multiplicity(const SurfaceVertex &v) const {
        auto it = count_.find(v);
        return it == count_.end() ? 0 : it->second;
    }
    std::vector<SurfaceVertex> boundary_vertices() const {
        std::vector<SurfaceVertex> out;
        for (auto &[v, c] : count_)
            if (c == 1)
                out.push_back(v);
        return out;
    }
    int interior_vertex_count() const {
        int k = 0;
        for (auto &[v, c] : count_)
            k += c == 2;
        return k;
    }
    int used_levels() const {
        std::set<int> t, p;
        for (auto &r : patches_) {
            t.insert(r.t1);
            t.insert(r.t2);
            p.insert(r.p1);
            p.insert(r.p2);
        }
        return static_cast<int>(t.size() + p.size());
    }

    friend SurfaceDiagram validate_surface(int, int, std::vector<RectanglePatch>);

  private:
    int nt_ = 0, np_ = 0;
    std::vector<RectanglePatch> patches_;
    std::map<SurfaceVertex, int> count_;
    std::vector<int> signs_;
};

/// Two patches may meet only in shared corners, or cross each other with
/// each interval of one strictly inside the matching interval of the other.
inline bool patches_compatible(const RectanglePatch &a, const RectanglePatch &b, int nt, int np) {
    using detail::CyclicInterval;
    const CyclicInterval ai{a.t1, a.t2, nt}, bi{b.t1, b.t2, nt};
    const CyclicInterval aj{a.p1, a.p2, np}, bj{b.p1, b.p2, np};
    if (!detail::intervals_share_point(ai, bi) || !detail::intervals_share_point(aj, bj))
        return true;
    const bool si = detail::intervals_share_segment(ai, bi), sj = detail::intervals_share_segment(aj, bj);
    if (!si && !sj)
        return true;
    if (si != sj)
        return false;
    return (ai.strictly_inside(bi) && bj.strictly_inside(aj)) || (bi.strictly_inside(ai) && aj.strictly_inside(bj));
}

inline SurfaceDiagram validate_surface(int nt, int np, std::vector<RectanglePatch> patches) {
    using K = SurfaceError::Kind;
    if (nt < 2 || np < 2)
        throw SurfaceError(K::Degenerate, "need at least two levels in each direction");
    for (auto &r : patches) {
        if (r.t1 < 0 || r.t1 >= nt || r.t2 < 0 || r.t2 >= nt || r.p1 < 0 || r.p1 >= np || r.p2 < 0 || r.p2 >= np)
            throw SurfaceError(K::Degenerate, "patch level out of range");
        if (r.t1 == r.t2 || r.p1 == r.p2)
            throw SurfaceError(K::Degenerate, "degenerate patch");
    }
    SurfaceDiagram s;
    s.nt_ = nt;
    s.np_ = np;
    s.patches_ = std::move(patches);
    const auto &ps = s.patches_;
    const std::size_t f = ps.size();

    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = i + 1; j < f; ++j)
            if (ps[i] == ps[j] || !patches_compatible(ps[i], ps[j], nt, np))
                throw SurfaceError(K::NonSurfaceIncidence,
                                   "patches " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

    // vertex sharing: at most two patches, in diagonal position
    std::map<SurfaceVertex, std::vector<std::pair<std::size_t, int>>> at;
    for (std::size_t i = 0; i < f; ++i) {
        auto cs = s.corners(i);
        for (int k = 0; k < 4; ++k)
            at[cs[static_cast<std::size_t>(k)]].emplace_back(i, k);
    }
    std::vector<std::vector<std::size_t>> adj(f);
    for (auto &[v, list] : at) {
        s.count_[v] = static_cast<int>(list.size());
        if (list.size() > 2)
            throw SurfaceError(K::TripleSharing, "vertex shared by more than two patches");
        if (list.size() == 2) {
            if (list[0].second + list[1].second != 3)
                throw SurfaceError(K::NonSurfaceIncidence, "patches share a vertex in non-diagonal position");
            adj[list[0].first].push_back(list[1].first);
            adj[list[1].first].push_back(list[0].first);
        }
    }

    // links: at each level the sides form a single path or a single cycle
    auto check_links = [&](bool theta) {
        const int m = theta ? nt : np;
        for (int level = 0; level < m; ++level) {
            std::map<int, std::vector<int>> g;
            for (auto &r : ps) {
                const bool on = theta ? (r.t1 == level || r.t2 == level) : (r.p1 == level || r.p2 == level);
                if (!on)
                    continue;
                const int a = theta ? r.p1 : r.t1, b = theta ? r.p2 : r.t2;
                g[a].push_back(b);
                g[b].push_back(a);
            }
            if (g.empty())
                continue;
            std::set<int> seen{g.begin()->first};
            std::vector<int> stack{g.begin()->first};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g[u])
                    if (seen.insert(w).second)
                        stack.push_back(w);
            }
            if (seen.size() != g.size())
                throw SurfaceError(K::NonSurfaceIncidence,
                                   std::string(theta ? "theta" : "phi") + " level " + std::to_string(level) +
                                       " has a disconnected link");
        }
    };
    check_links(true);
    check_links(false);

    // orientation: adjacent patches carry opposite signs
    if (f > 0) {
        std::vector<int> sign(f, 0);
        bool ok = true;
        for (std::size_t s0 = 0; s0 < f && ok; ++s0) {
            if (sign[s0])
                continue;
            sign[s0] = 1;
            std::vector<std::size_t> stack{s0};
            while (!stack.empty() && ok) {
                auto u = stack.back();
                stack.pop_back();
                for (auto w : adj[u]) {
                    if (!sign[w]) {
                        sign[w] = -sign[u];
                        stack.push_back(w);
                    } else if (sign[w] == sign[u]) {
                        ok = false;
                    }
                }
            }
        }
        if (ok)
            s.signs_ = std::move(sign);
    }
    return s;
}

inline bool connected(const SurfaceDiagram &s) {
    const std::size_t f = s.patches().size();
    if (f == 0)
        return false;
    std::vector<std::size_t> parent(f);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<SurfaceVertex, std::size_t> first;
    for (std::size_t i = 0; i < f; ++i)
        for (auto &v : s.corners(i)) {
            auto [it, fresh] = first.emplace(v, i);
            if (!fresh)
                parent[find(i)] = find(it->second);
        }
    for (std::size_t i = 0; i < f; ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

/// Levels minus vertex arcs plus patches.
inline int euler_characteristic(const SurfaceDiagram &s) {
    int v = 0;
    for (std::size_t i = 0; i < s.patches().size(); ++i)
        for (auto &c : s.corners(i))
            v += s.multiplicity(c) == 1 ? 2 : 1; // interior vertices are seen twice
    v /= 2;
    return s.used_levels() - v + static_cast<int>(s.patches().size());
}

inline bool orientable(const SurfaceDiagram &s) { return s.orientable(); }

struct BoundaryCurve {
    std::vector<std::vector<SurfaceVertex>> components; // each traversed alternately vertical, horizontal
};

inline BoundaryCurve boundary_curve(const SurfaceDiagram &s) {
    auto bv = s.boundary_vertices();
    std::map<int, std::vector<SurfaceVertex>> by_theta, by_phi;
    for (auto &v : bv) {
        by_theta[v.theta].push_back(v);
        by_phi[v.phi].push_back(v);
    }
    for (auto &[_, l] : by_theta)
        if (l.size() != 2)
            throw SurfaceError(SurfaceError::Kind::NonSurfaceIncidence, "boundary is not a closed rectilinear curve");
    for (auto &[_, l] : by_phi)
        if (l.size() != 2)
            throw SurfaceError(SurfaceError::Kind::NonSurfaceIncidence, "boundary is not a closed rectilinear curve");
    BoundaryCurve out;
    std::set<SurfaceVertex> used;
    for (auto &start : bv) {
        if (used.count(start))
            continue;
        std::vector<SurfaceVertex> comp;
        SurfaceVertex v = start;
        bool vertical = true;
        do {
            comp.push_back(v);
            used.insert(v);
            const auto &pair = vertical ? by_theta[v.theta] : by_phi[v.phi];
            v = pair[0] == v ? pair[1] : pair[0];
            vertical = !vertical;
        } while (!(v == start && vertical));
        out.components.push_back(std::move(comp));
    }
    return out;
}

/// Number of boundary components.
inline int boundary_components(const SurfaceDiagram &s) {
    return static_cast<int>(boundary_curve(s).components.size());
}

inline int genus(const SurfaceDiagram &s) {
    if (!connected(s))
        throw SurfaceError(SurfaceError::Kind::Disconnected, "genus of a disconnected surface diagram");
    if (!s.orientable())
        throw SurfaceError(SurfaceError::Kind::NonOrientable, "genus requested for a non-orientable surface");
    const int twice = 2 - euler_characteristic(s) - boundary_components(s);
    return twice / 2;
}

/// The boundary as a grid diagram. Levels without boundary vertices are
/// dropped. For an orientable surface, a boundary vertex is an O when it is
/// the SW or NE corner of a positive patch or the SE or NW corner of a
/// negative one; the result is oriented from X to O along verticals. For a
/// non-orientable surface, labels alternate along the curve.
inline OrientedGridDiagram boundary(const SurfaceDiagram &s) {
    auto curve = boundary_curve(s);
    if (curve.components.size() != 1)
        throw GridError(GridError::Kind::NotAKnot, "boundary has " + std::to_string(curve.components.size()) +
                                                       " components");
    std::set<int> ts, ps;
    for (auto &v : curve.components[0]) {
        ts.insert(v.theta);
        ps.insert(v.phi);
    }
    std::map<int, int> tmap, pmap;
    for (int t : ts)
        tmap[t] = static_cast<int>(tmap.size());
    for (int p : ps)
        pmap[p] = static_cast<int>(pmap.size());
    const int n = static_cast<int>(ts.size());
    std::vector<int> x(static_cast<std::size_t>(n), -1), o(static_cast<std::size_t>(n), -1);

    std::map<SurfaceVertex, bool> is_o;
    if (s.orientable()) {
        for (std::size_t i = 0; i < s.patches().size(); ++i) {
            auto cs = s.corners(i);
            for (int k = 0; k < 4; ++k) {
                const auto &v = cs[static_cast<std::size_t>(k)];
                if (s.multiplicity(v) != 1)
                    continue;
                const bool diag = k == 0 || k == 3;
                is_o[v] = s.signs()[i] > 0 ? diag : !diag;
            }
        }
    } else {
        const auto &c = curve.components[0];
        for (std::size_t i = 0; i < c.size(); ++i)
            is_o[c[i]] = i % 2 == 1;
    }
    for (auto &[v, o_label] : is_o) {
        auto &target = o_label ? o : x;
        target[static_cast<std::size_t>(tmap[v.theta])] = pmap[v.phi];
    }
    return OrientedGridDiagram::validate(n, x, o, Direction::XtoO);
}

// ---------------------------------------------------------------------------
// Fixture format:
//   levels <theta levels> <phi levels>
//   rect t1 t2 p1 p2
// '#' starts a comment.

inline SurfaceDiagram parse_surface(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int nt = -1, np = -1;
    std::vector<RectanglePatch> ps;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        if (word == "levels") {
            if (!(ls >> nt >> np))
                throw SurfaceError(SurfaceError::Kind::Syntax, "bad levels line");
        } else if (word == "rect") {
            RectanglePatch r{};
            if (!(ls >> r.t1 >> r.t2 >> r.p1 >> r.p2))
                throw SurfaceError(SurfaceError::Kind::Syntax, "bad rect line: " + line);
            ps.push_back(r);
        } else {
            throw SurfaceError(SurfaceError::Kind::Syntax, "unknown keyword: " + word);
        }
        std::string extra;
        if (ls >> extra)
            throw SurfaceError(SurfaceError::Kind::Syntax, "trailing text: " + line);
    }
    if (nt < 0)
        throw SurfaceError(SurfaceError::Kind::Syntax, "missing levels line");
    return validate_surface(nt, np, std::move(ps));
}

inline std::string serialize(const SurfaceDiagram &s) {
    std::ostringstream out;
    out << "levels " << s.theta_levels() << ' ' << s.phi_levels() << '\n';
    for (auto &r : s.patches())
        out << "rect " << r.t1 << ' ' << r.t2 << ' ' << r.p1 << ' ' << r.p2 << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Dividing codes

class CodeError : public std::runtime_error {
  public:
    enum class Kind { Syntax, LabelCoverage };
    CodeError(Kind k, const std::string &what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

struct CodeCycle {
    std::vector<int> labels;
    bool closed = false; // printed with the first label repeated at the end
    bool operator==(const CodeCycle &) const = default;
};

struct DividingCode {
    std::vector<std::vector<int>> family_a;
    std::vector<CodeCycle> family_b;
    int label_count() const {
        int k = 0;
        for (auto &t : family_a)
            k += static_cast<int>(t.size());
        return k;
    }
    bool operator==(const DividingCode &) const = default;
};

inline DividingCode parse_code(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    std::size_t i = 0;
    auto fail = [&](const std::string &why) {
        return CodeError(CodeError::Kind::Syntax, why + " at offset " + std::to_string(i));
    };
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c)
            throw fail(std::string("expected '") + c + "'");
        ++i;
    };
    auto number = [&] {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i || j - i > 6)
            throw fail("expected a label");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    auto family = [&] {
        std::vector<std::vector<int>> out;
        expect('{');
        for (;;) {
            expect('(');
            std::vector<int> t{number()};
            while (i < s.size() && s[i] == ',') {
                ++i;
                t.push_back(number());
            }
            expect(')');
            out.push_back(std::move(t));
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect('}');
        return out;
    };
    DividingCode code;
    code.family_a = family();
    expect(',');
    for (auto &t : family()) {
        CodeCycle c;
        if (t.size() >= 2 && t.front() == t.back()) {
            c.closed = true;
            t.pop_back();
        }
        c.labels = std::move(t);
        code.family_b.push_back(std::move(c));
    }
    if (i < s.size() && s[i] == '.')
        ++i;
    if (i != s.size())
        throw fail("trailing text");

    const int n = code.label_count();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (auto &t : code.family_a)
        for (int l : t) {
            if (l < 1 || l > n || seen[static_cast<std::size_t>(l)]++)
                throw CodeError(CodeError::Kind::LabelCoverage,
                                "label " + std::to_string(l) + " breaks coverage of 1.." + std::to_string(n));
        }
    for (auto &c : code.family_b)
        for (int l : c.labels)
            if (l < 1 || l > n)
                throw CodeError(CodeError::Kind::LabelCoverage, "label " + std::to_string(l) + " out of range");
    return code;
}

inline std::string serialize_code(const DividingCode &c) {
    std::string out = "{";
    auto tuple = [&](const std::vector<int> &t, bool closed) {
        out += '(';
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k)
                out += ',';
            out += std::to_string(t[k]);
        }
        if (closed && !t.empty())
            out += ',' + std::to_string(t.front());
        out += ')';
    };
    for (std::size_t k = 0; k < c.family_a.size(); ++k) {
        if (k)
            out += ',';
        tuple(c.family_a[k], false);
    }
    out += "},{";
    for (std::size_t k = 0; k < c.family_b.size(); ++k) {
        if (k)
            out += ',';
        tuple(c.family_b[k].labels, c.family_b[k].closed);
    }
    out += '}';
    return out;
}

struct CodeIsoOptions {
    bool allow_reflection = false; // permit reversing cyclic order
};

namespace detail {

// cyclic sequences as multisets of rotation classes under a partial label map
class CodeMatcher {
  public:
    CodeMatcher(const DividingCode &a, const DividingCode &b, CodeIsoOptions opt) : a_(a), b_(b), opt_(opt) {
        for (auto &t : a.family_a)
            seqs_a_.push_back({t, 0});
        for (auto &c : a.family_b)
            seqs_a_.push_back({c.labels, 1});
        for (auto &t : b.family_a)
            seqs_b_.push_back({t, 0});
        for (auto &c : b.family_b)
            seqs_b_.push_back({c.labels, 1});
        // longest first, to fix many labels early
        order_.resize(seqs_a_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](auto x, auto y) { return seqs_a_[x].first.size() > seqs_a_[y].first.size(); });
    }

    bool run() {
        const int n = a_.label_count();
        if (n != b_.label_count() || seqs_a_.size() != seqs_b_.size())
            return false;
        map_.assign(static_cast<std::size_t>(n) + 1, 0);
        inv_.assign(static_cast<std::size_t>(n) + 1, 0);
        used_.assign(seqs_b_.size(), false);
        return step(0);
    }

  private:
    using Seq = std::pair<std::vector<int>, int>;
    const DividingCode &a_, &b_;
    CodeIsoOptions opt_;
    std::vector<Seq> seqs_a_, seqs_b_;
    std::vector<std::size_t> order_;
    std::vector<int> map_, inv_;
    std::vector<bool> used_;

    bool try_map(const std::vector<int> &src, const std::vector<int> &dst, std::size_t shift, bool rev,
                 std::vector<int> &assigned) {
        const std::size_t m = src.size();
        for (std::size_t k = 0; k < m; ++k) {
            const int s = src[k];
            const std::size_t idx = rev ? (shift + m - k) % m : (shift + k) % m;
            const int d = dst[idx];
            auto &fs = map_[static_cast<std::size_t>(s)];
            auto &bd = inv_[static_cast<std::size_t>(d)];
            if (fs == 0 && bd == 0) {
                fs = d;
                bd = s;
                assigned.push_back(s);
            } else if (fs != d || bd != s) {
                return false;
            }
        }
        return true;
    }
    void undo(std::vector<int> &assigned) {
        for (int s : assigned) {
            inv_[static_cast<std::size_t>(map_[static_cast<std::size_t>(s)])] = 0;
            map_[static_cast<std::size_t>(s)] = 0;
        }
        assigned.clear();
    }

    bool step(std::size_t k) {
        if (k == order_.size())
            return true;
        const auto &[src, fam] = seqs_a_[order_[k]];
        for (std::size_t j = 0; j < seqs_b_.size(); ++j) {
            const auto &[dst, fam2] = seqs_b_[j];
            if (used_[j] || fam2 != fam || dst.size() != src.size())
                continue;
            used_[j] = true;
            for (int rev = 0; rev <= (opt_.allow_reflection ? 1 : 0); ++rev) {
                for (std::size_t shift = 0; shift < dst.size(); ++shift) {
                    std::vector<int> assigned;
                    if (try_map(src, dst, shift, rev == 1, assigned) && step(k + 1))
                        return true;
                    undo(assigned);
                }
            }
            used_[j] = false;
        }
        return false;
    }
};

} // namespace detail

/// True when a bijection of labels carries each family onto the same family
/// of the other code, preserving cyclic order.
inline bool codes_isomorphic(const DividingCode &a, const DividingCode &b, CodeIsoOptions opt = {}) {
    return detail::CodeMatcher(a, b, opt).run();
}

} // namespace legendrid
