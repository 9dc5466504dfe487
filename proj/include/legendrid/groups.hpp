#pragma once

// Free words, finitely presented groups, Wirtinger presentations of grid
// diagrams, abelianization, Fox calculus and certificate-producing searches
// for identities in finitely presented groups.

#include "grid.hpp"
#include "laurent.hpp"

#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace legendrid {

class GroupError : public std::runtime_error {
  public:
    enum class Kind { Syntax, NotKnotLike, BadEndomorphism };
    GroupError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

// ---------------------------------------------------------------------------
// Free words. Letter +(i+1) is generator i, -(i+1) its inverse.

class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(std::span<const int> letters) {
        for (int l : letters)
            push_back(l);
    }
    FreeWord(std::initializer_list<int> letters) {
        for (int l : letters)
            push_back(l);
    }

    static FreeWord generator(int index, int exponent = 1) {
        FreeWord w;
        const int l = exponent < 0 ? -(index + 1) : index + 1;
        for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
            w.push_back(l);
        return w;
    }

    void push_back(int letter) {
        if (letter == 0)
            throw std::invalid_argument("zero is not a letter");
        if (!letters_.empty() && letters_.back() == -letter)
            letters_.pop_back();
        else
            letters_.push_back(letter);
    }

    const std::vector<int> &letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    FreeWord inverse() const {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(-*it);
        return w;
    }

    friend FreeWord operator*(FreeWord a, const FreeWord &b) {
        for (int l : b.letters_)
            a.push_back(l);
        return a;
    }

    /// Removes cancelling first/last letter pairs.
    FreeWord cyclically_reduced() const {
        std::size_t b = 0, e = letters_.size();
        while (e - b >= 2 && letters_[b] == -letters_[e - 1]) {
            ++b;
            --e;
        }
        FreeWord w;
        w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(b),
                          letters_.begin() + static_cast<std::ptrdiff_t>(e));
        return w;
    }

    /// Rotation that starts at position k.
    FreeWord rotated(std::size_t k) const {
        FreeWord w;
        if (letters_.empty())
            return w;
        k %= letters_.size();
        w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
        w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
        return w;
    }

    std::vector<std::int64_t> exponent_sums(int generators) const {
        std::vector<std::int64_t> v(static_cast<std::size_t>(generators), 0);
        for (int l : letters_)
            v[static_cast<std::size_t>((l < 0 ? -l : l) - 1)] += l < 0 ? -1 : 1;
        return v;
    }

    bool operator==(const FreeWord &) const = default;
    auto operator<=>(const FreeWord &) const = default;

  private:
    std::vector<int> letters_;
};

inline FreeWord free_reduce(std::span<const int> letters) { return FreeWord(letters); }
inline FreeWord cyclic_reduce(const FreeWord &w) { return w.cyclically_reduced(); }

/// Minimal rotation of a cyclically reduced word; a conjugacy-class key in
/// the free group.
inline std::vector<int> min_rotation(const FreeWord &w) {
    const auto c = w.cyclically_reduced();
    std::vector<int> best = c.letters();
    for (std::size_t k = 1; k < c.size(); ++k) {
        auto r = c.rotated(k).letters();
        if (r < best)
            best = std::move(r);
    }
    return best;
}

/// If a and b are conjugate in the free group, returns c with c a c^-1 == b.
inline std::optional<FreeWord> free_conjugator(const FreeWord &a, const FreeWord &b) {
    auto split = [](const FreeWord &w) {
        // w == p * core * p^-1
        const auto core = w.cyclically_reduced();
        const std::size_t plen = (w.size() - core.size()) / 2;
        FreeWord p(std::span<const int>(w.letters().data(), plen));
        return std::pair{p, core};
    };
    auto [pa, ca] = split(a);
    auto [pb, cb] = split(b);
    if (ca.size() != cb.size())
        return std::nullopt;
    if (ca.empty())
        return FreeWord{};
    for (std::size_t k = 0; k < ca.size(); ++k) {
        if (ca.rotated(k) == cb) {
            // ca = u v, cb = v u = u^-1 ca u
            FreeWord u(std::span<const int>(ca.letters().data(), k));
            return pb * u.inverse() * pa.inverse();
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Presentations

class GroupPresentation {
  public:
    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> names, std::vector<FreeWord> relators) : names_(std::move(names)) {
        for (auto &r : relators) {
            for (int l : r.letters())
                if ((l < 0 ? -l : l) > static_cast<int>(names_.size()))
                    throw GroupError(GroupError::Kind::Syntax, "relator uses an unknown generator");
            auto c = r.cyclically_reduced();
            if (!c.empty())
                relators_.push_back(std::move(c));
        }
    }

    int generators() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string> &names() const noexcept { return names_; }
    const std::vector<FreeWord> &relators() const noexcept { return relators_; }

    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    /// Words in the fixture notation: space-separated generator names, a
    /// trailing '^' marks an inverse.
    FreeWord parse_word(std::string_view text) const {
        FreeWord w;
        std::stringstream ss{std::string(text)};
        for (std::string tok; ss >> tok;) {
            bool inv = false;
            if (tok.size() > 1 && tok.back() == '^') {
                inv = true;
                tok.pop_back();
            }
            const int i = index_of(tok);
            if (i < 0)
                throw GroupError(GroupError::Kind::Syntax, "unknown generator '" + tok + "'");
            w.push_back(inv ? -(i + 1) : i + 1);
        }
        return w;
    }

    std::string format(const FreeWord &w) const {
        std::string out;
        for (int l : w.letters()) {
            if (!out.empty())
                out += ' ';
            out += names_[static_cast<std::size_t>((l < 0 ? -l : l) - 1)];
            if (l < 0)
                out += '^';
        }
        return out;
    }

    static GroupPresentation parse(std::string_view text) {
        std::vector<std::string> lines;
        std::stringstream ss{std::string(text)};
        for (std::string line; std::getline(ss, line);) {
            auto t = detail::trim(line);
            if (!t.empty() && t[0] != '#')
                lines.push_back(t);
        }
        if (lines.empty() || !lines[0].starts_with("gens"))
            throw GroupError(GroupError::Kind::Syntax, "presentation must start with a 'gens' line");
        std::vector<std::string> names;
        std::stringstream gs(lines[0].substr(4));
        for (std::string g; gs >> g;) {
            if (g.back() == '^' || std::find(names.begin(), names.end(), g) != names.end())
                throw GroupError(GroupError::Kind::Syntax, "bad generator name '" + g + "'");
            names.push_back(g);
        }
        GroupPresentation p(names, {});
        std::vector<FreeWord> rels;
        for (std::size_t i = 1; i < lines.size(); ++i)
            rels.push_back(p.parse_word(lines[i]));
        return GroupPresentation(std::move(names), std::move(rels));
    }

    std::string serialize() const {
        std::string out = "gens";
        for (auto &n : names_)
            out += " " + n;
        out += "\n";
        for (auto &r : relators_)
            out += format(r) + "\n";
        return out;
    }

  private:
    std::vector<std::string> names_;
    std::vector<FreeWord> relators_;
};

// ---------------------------------------------------------------------------
// Wirtinger presentation of a grid diagram (vertical edges pass over).

namespace detail {
inline int sgn(int v) { return (v > 0) - (v < 0); }
} // namespace detail

/// One generator per arc, one relator per crossing. Arcs are numbered by
/// the (column, row) position of the undercrossing at which they start.
inline GroupPresentation wirtinger(const OrientedGridDiagram &diagram) {
    const auto r = diagram.normalized();
    const auto &g = r.base();
    const int n = g.size();
    const auto xinv = detail::inverse_permutation(g.x());

    struct Under {
        int column; // over column
        int row;
    };
    // horizontal edge leaving column c (in row o[c]) towards the X of that row
    std::vector<std::vector<Under>> unders(static_cast<std::size_t>(n));
    std::vector<int> hdir(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const int row = g.o(c);
        const int to = xinv[static_cast<std::size_t>(row)];
        const int step = to > c ? 1 : -1;
        hdir[static_cast<std::size_t>(c)] = step;
        for (int k = c + step; k != to; k += step) {
            const int lo = std::min(g.x(k), g.o(k)), hi = std::max(g.x(k), g.o(k));
            if (lo < row && row < hi)
                unders[static_cast<std::size_t>(c)].push_back({k, row});
        }
    }

    // traversal order of columns starting at column 0
    std::vector<int> order;
    for (int c = 0, k = 0; k < n; ++k) {
        order.push_back(c);
        c = xinv[static_cast<std::size_t>(g.o(c))];
    }
    std::size_t first = order.size();
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!unders[static_cast<std::size_t>(order[i])].empty()) {
            first = i;
            break;
        }
    if (first == order.size())
        return GroupPresentation({"a0"}, {});

    // Walk from just after the first undercrossing of that edge.
    struct Crossing {
        int over_column;
        int in_arc;
        int out_arc;
        int sign;
    };
    std::vector<Crossing> crossings;
    std::vector<int> column_arc(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> arc_start; // (column, row) of the starting undercrossing
    const int c0 = order[first];
    arc_start.push_back({unders[static_cast<std::size_t>(c0)][0].column, unders[static_cast<std::size_t>(c0)][0].row});
    int arc = 0;
    auto pass_under = [&](int c, const Under &u) {
        const int vy = detail::sgn(g.o(u.column) - g.x(u.column));
        const int hx = hdir[static_cast<std::size_t>(c)];
        crossings.push_back({u.column, arc, arc + 1, -vy * hx});
        ++arc;
        arc_start.push_back({u.column, u.row});
    };
    // rest of the first edge
    for (std::size_t i = 1; i < unders[static_cast<std::size_t>(c0)].size(); ++i)
        pass_under(c0, unders[static_cast<std::size_t>(c0)][i]);
    for (std::size_t s = 1; s <= order.size(); ++s) {
        const int c = order[(first + s) % order.size()];
        column_arc[static_cast<std::size_t>(c)] = arc;
        if (s == order.size()) {
            // the first undercrossing of c0 closes the walk
            break;
        }
        for (const auto &u : unders[static_cast<std::size_t>(c)])
            pass_under(c, u);
    }
    // the walk ends at the first undercrossing of c0, which leads into arc 0
    {
        const auto &u = unders[static_cast<std::size_t>(c0)][0];
        const int vy = detail::sgn(g.o(u.column) - g.x(u.column));
        crossings.push_back({u.column, arc, 0, -vy * hdir[static_cast<std::size_t>(c0)]});
    }
    const int arcs = arc + 1;
    if (static_cast<int>(arc_start.size()) != arcs)
        throw std::logic_error("wirtinger: arc bookkeeping mismatch");

    // renumber arcs by start position
    std::vector<int> perm(static_cast<std::size_t>(arcs));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return arc_start[static_cast<std::size_t>(a)] < arc_start[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(static_cast<std::size_t>(arcs));
    for (int i = 0; i < arcs; ++i)
        rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

    std::vector<std::string> names;
    for (int i = 0; i < arcs; ++i)
        names.push_back("a" + std::to_string(i));
    std::vector<FreeWord> rels;
    for (const auto &cr : crossings) {
        const int a = rank[static_cast<std::size_t>(column_arc[static_cast<std::size_t>(cr.over_column)])] + 1;
        const int b = rank[static_cast<std::size_t>(cr.in_arc)] + 1;
        const int c = rank[static_cast<std::size_t>(cr.out_arc)] + 1;
        if (cr.sign > 0)
            rels.push_back(FreeWord{a, b, -a, -c});
        else
            rels.push_back(FreeWord{-a, b, a, -c});
    }
    return GroupPresentation(std::move(names), std::move(rels));
}

// ---------------------------------------------------------------------------
// Smith normal form

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
    std::vector<std::int64_t> diagonal; // nonzero invariant factors, d_i | d_{i+1}
    IntMatrix column_transform;         // unimodular V with U * M * V = D
    int columns = 0;
};

inline SmithForm smith_normal_form(IntMatrix m, int columns) {
    const int rows = static_cast<int>(m.size());
    IntMatrix v(static_cast<std::size_t>(columns), std::vector<std::int64_t>(static_cast<std::size_t>(columns), 0));
    for (int i = 0; i < columns; ++i)
        v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    auto at = [&](int i, int j) -> std::int64_t & { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    auto swap_cols = [&](int a, int b) {
        for (auto &row : m)
            std::swap(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]);
        for (auto &row : v)
            std::swap(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]);
    };
    auto add_col = [&](int dst, int src, std::int64_t f) { // col dst += f * col src
        for (auto &row : m)
            row[static_cast<std::size_t>(dst)] = detail::checked_add(
                row[static_cast<std::size_t>(dst)], detail::checked_mul(f, row[static_cast<std::size_t>(src)]));
        for (auto &row : v)
            row[static_cast<std::size_t>(dst)] = detail::checked_add(
                row[static_cast<std::size_t>(dst)], detail::checked_mul(f, row[static_cast<std::size_t>(src)]));
    };
    auto add_row = [&](int dst, int src, std::int64_t f) {
        for (int j = 0; j < columns; ++j)
            at(dst, j) = detail::checked_add(at(dst, j), detail::checked_mul(f, at(src, j)));
    };

    SmithForm out;
    out.columns = columns;
    for (int t = 0; t < std::min(rows, columns); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < columns; ++j)
                    if (at(i, j) != 0 && (pi < 0 || std::llabs(at(i, j)) < std::llabs(at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                out.column_transform = std::move(v);
                return out;
            }
            std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(pi)]);
            swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                add_row(i, t, -(at(i, t) / at(t, t)));
                clean = clean && at(i, t) == 0;
            }
            for (int j = t + 1; j < columns; ++j) {
                add_col(j, t, -(at(t, j) / at(t, t)));
                clean = clean && at(t, j) == 0;
            }
            if (!clean)
                continue;
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < columns; ++j)
                    if (at(i, j) % at(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            add_row(t, bad, 1);
        }
        if (at(t, t) < 0)
            at(t, t) = -at(t, t);
        out.diagonal.push_back(at(t, t));
    }
    out.column_transform = std::move(v);
    return out;
}

inline IntMatrix relation_matrix(const GroupPresentation &p) {
    IntMatrix m;
    for (const auto &r : p.relators())
        m.push_back(r.exponent_sums(p.generators()));
    return m;
}

struct Abelianization {
    int free_rank = 0;
    std::vector<std::int64_t> torsion; // invariant factors > 1
};

inline Abelianization abelianization(const GroupPresentation &p) {
    auto s = smith_normal_form(relation_matrix(p), p.generators());
    Abelianization a;
    a.free_rank = p.generators() - static_cast<int>(s.diagonal.size());
    for (auto d : s.diagonal)
        if (d > 1)
            a.torsion.push_back(d);
    return a;
}

/// Whether the vector lies in the lattice spanned by the abelianized
/// relators, i.e. represents 0 in H_1.
inline bool in_relation_lattice(const GroupPresentation &p, std::span<const std::int64_t> vec) {
    auto s = smith_normal_form(relation_matrix(p), p.generators());
    const int g = p.generators();
    for (int j = 0; j < g; ++j) {
        std::int64_t y = 0;
        for (int i = 0; i < g; ++i)
            y = detail::checked_add(y, detail::checked_mul(vec[static_cast<std::size_t>(i)],
                                                           s.column_transform[static_cast<std::size_t>(i)]
                                                                             [static_cast<std::size_t>(j)]));
        if (j < static_cast<int>(s.diagonal.size())) {
            if (y % s.diagonal[static_cast<std::size_t>(j)] != 0)
                return false;
        } else if (y != 0) {
            return false;
        }
    }
    return true;
}

/// [a] == [b] in the abelianization.
inline bool homologous(const GroupPresentation &p, const FreeWord &a, const FreeWord &b) {
    auto va = a.exponent_sums(p.generators());
    auto vb = b.exponent_sums(p.generators());
    for (std::size_t i = 0; i < va.size(); ++i)
        va[i] -= vb[i];
    return in_relation_lattice(p, va);
}

// ---------------------------------------------------------------------------
// Tietze simplification

/// Repeatedly solves a relator for a generator that occurs in it exactly once
/// and substitutes the solution everywhere else. Stops when no such relator
/// exists or when the total relator length would exceed `max_total_length`.
inline GroupPresentation tietze_simplify(const GroupPresentation &p, std::size_t max_total_length = 4000) {
    auto names = p.names();
    auto rels = p.relators();
    for (;;) {
        int best_r = -1, best_g = -1;
        std::size_t best_len = 0;
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            std::map<int, int> occ;
            for (int l : rels[ri].letters())
                ++occ[l < 0 ? -l : l];
            for (auto [gen, cnt] : occ) {
                if (cnt != 1)
                    continue;
                if (best_r < 0 || rels[ri].size() < best_len) {
                    best_r = static_cast<int>(ri);
                    best_g = gen;
                    best_len = rels[ri].size();
                }
            }
        }
        if (best_r < 0)
            break;
        // r = A x^e B  =>  x = (B A)^(-e) in cyclic form
        const auto &r = rels[static_cast<std::size_t>(best_r)];
        std::size_t pos = 0;
        while ((r.letters()[pos] < 0 ? -r.letters()[pos] : r.letters()[pos]) != best_g)
            ++pos;
        const int e = r.letters()[pos] > 0 ? 1 : -1;
        auto rot = r.rotated(pos); // x^e C with C = B A
        FreeWord rest(std::span<const int>(rot.letters().data() + 1, rot.size() - 1));
        const FreeWord image = e > 0 ? rest.inverse() : rest;
        std::vector<FreeWord> next;
        std::size_t total = 0;
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            if (static_cast<int>(ri) == best_r)
                continue;
            FreeWord w;
            for (int l : rels[ri].letters()) {
                const int gen = l < 0 ? -l : l;
                if (gen == best_g)
                    w = w * (l > 0 ? image : image.inverse());
                else
                    w.push_back(l);
            }
            auto c = w.cyclically_reduced();
            total += c.size();
            if (!c.empty())
                next.push_back(std::move(c));
        }
        if (total > max_total_length)
            break;
        // drop generator best_g and renumber letters above it
        for (auto &w : next) {
            std::vector<int> ls;
            for (int l : w.letters()) {
                const int gen = l < 0 ? -l : l;
                const int ng = gen > best_g ? gen - 1 : gen;
                ls.push_back(l < 0 ? -ng : ng);
            }
            w = FreeWord(ls);
        }
        names.erase(names.begin() + (best_g - 1));
        rels = std::move(next);
        // remove duplicates up to conjugation and inversion
        std::set<std::vector<int>> seen;
        std::vector<FreeWord> uniq;
        for (auto &w : rels) {
            auto k1 = min_rotation(w), k2 = min_rotation(w.inverse());
            if (seen.count(k1) || seen.count(k2))
                continue;
            seen.insert(k1);
            uniq.push_back(w);
        }
        rels = std::move(uniq);
    }
    return GroupPresentation(std::move(names), std::move(rels));
}

// ---------------------------------------------------------------------------
// Fox calculus

namespace detail {
/// Bareiss fraction-free determinant over Z[t] (entries with low() >= 0).
inline LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> a) {
    const std::size_t k = a.size();
    if (k == 0)
        return LaurentPolynomial(1);
    LaurentPolynomial prev(1);
    int sign = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (a[c][c].is_zero()) {
            std::size_t r = c + 1;
            while (r < k && a[r][c].is_zero())
                ++r;
            if (r == k)
                return {};
            std::swap(a[c], a[r]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i)
            for (std::size_t j = c + 1; j < k; ++j)
                a[i][j] = divexact(a[c][c] * a[i][j] - a[i][c] * a[c][j], prev);
        prev = a[c][c];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

inline void for_each_combination(int n, int k, const std::function<void(const std::vector<int> &)> &f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}
} // namespace detail

/// Images of the generators under the abelianization map onto Z, for a
/// presentation whose abelianization is infinite cyclic.
inline std::vector<int> abelian_degrees(const GroupPresentation &p) {
    auto s = smith_normal_form(relation_matrix(p), p.generators());
    const int g = p.generators();
    const int rank = static_cast<int>(s.diagonal.size());
    if (g - rank != 1 || std::any_of(s.diagonal.begin(), s.diagonal.end(), [](auto d) { return d != 1; }))
        throw GroupError(GroupError::Kind::NotKnotLike, "abelianization is not infinite cyclic");
    std::vector<int> deg(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
        deg[static_cast<std::size_t>(i)] =
            static_cast<int>(s.column_transform[static_cast<std::size_t>(i)][static_cast<std::size_t>(g - 1)]);
    return deg;
}

/// Fox derivative d(word)/d(gen) pushed forward to Z[t, 1/t].
inline LaurentPolynomial fox_derivative(const FreeWord &w, int gen, std::span<const int> degrees) {
    std::map<int, std::int64_t> terms;
    int prefix = 0;
    for (int l : w.letters()) {
        const int g = (l < 0 ? -l : l) - 1;
        const int d = degrees[static_cast<std::size_t>(g)];
        if (l > 0) {
            if (g == gen)
                terms[prefix] += 1;
            prefix += d;
        } else {
            prefix -= d;
            if (g == gen)
                terms[prefix] -= 1;
        }
    }
    return LaurentPolynomial::from_terms(terms);
}

/// Alexander polynomial of a knot-like group: gcd of the (g-1)-minors of
/// the abelianized Fox Jacobian, normalized symmetric with value 1 at t = 1.
inline LaurentPolynomial fox_alexander(const GroupPresentation &input) {
    (void)abelian_degrees(input); // rejects non-knot-like input before simplification
    const auto p = tietze_simplify(input);
    const auto deg = abelian_degrees(p);
    const int g = p.generators();
    const int r = static_cast<int>(p.relators().size());
    if (g == 1)
        return LaurentPolynomial(1);
    std::vector<std::vector<LaurentPolynomial>> jac(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < g; ++j)
            jac[static_cast<std::size_t>(i)].push_back(fox_derivative(p.relators()[static_cast<std::size_t>(i)], j, deg));
        // make the row polynomial
        int lo = 0;
        for (auto &e : jac[static_cast<std::size_t>(i)])
            if (!e.is_zero())
                lo = std::min(lo, e.low());
        for (auto &e : jac[static_cast<std::size_t>(i)])
            e = e.shifted(-lo);
    }
    LaurentPolynomial acc;
    detail::for_each_combination(r, g - 1, [&](const std::vector<int> &rows) {
        for (int drop = 0; drop < g; ++drop) {
            std::vector<std::vector<LaurentPolynomial>> minor;
            for (int i : rows) {
                std::vector<LaurentPolynomial> row;
                for (int j = 0; j < g; ++j)
                    if (j != drop)
                        row.push_back(jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                minor.push_back(std::move(row));
            }
            acc = gcd(acc, detail::determinant(std::move(minor)));
        }
    });
    return normalize_alexander(acc);
}

// ---------------------------------------------------------------------------
// Endomorphisms and certified identities

struct EndoSpec {
    std::vector<FreeWord> images; // one per generator

    FreeWord apply(const FreeWord &w) const {
        FreeWord out;
        for (int l : w.letters()) {
            const auto &img = images.at(static_cast<std::size_t>((l < 0 ? -l : l) - 1));
            out = out * (l > 0 ? img : img.inverse());
        }
        return out;
    }

    static EndoSpec identity(int generators) {
        EndoSpec e;
        for (int i = 0; i < generators; ++i)
            e.images.push_back(FreeWord::generator(i));
        return e;
    }
};

inline void check_endo_shape(const GroupPresentation &p, const EndoSpec &e) {
    if (static_cast<int>(e.images.size()) != p.generators())
        throw GroupError(GroupError::Kind::BadEndomorphism, "endomorphism must give one image per generator");
    for (const auto &w : e.images)
        for (int l : w.letters())
            if ((l < 0 ? -l : l) > p.generators())
                throw GroupError(GroupError::Kind::BadEndomorphism, "image uses an unknown generator");
}

/// One rewriting step on a cyclic word: the piece of `length` letters
/// starting at `position` equals the cyclic subword of relator^(+-1)
/// starting at `offset`; it is replaced by the inverse of the rest of that
/// relator, and the result is cyclically reduced.
struct RewriteStep {
    int position;
    int relator;
    bool inverse;
    int offset;
    int length;
    bool operator==(const RewriteStep &) const = default;
};

struct Certificate {
    FreeWord start;
    std::vector<RewriteStep> steps;
};

struct SearchBudget {
    int max_length = 64;
    int max_depth = 8;
    std::size_t max_nodes = 200000;
};

enum class Verdict { Verified, Unknown };

inline const char *to_string(Verdict v) { return v == Verdict::Verified ? "verified" : "unknown"; }

namespace detail {
inline std::optional<FreeWord> apply_step(const GroupPresentation &p, const FreeWord &w, const RewriteStep &s) {
    if (s.relator < 0 || s.relator >= static_cast<int>(p.relators().size()) || w.empty())
        return std::nullopt;
    const auto rel = s.inverse ? p.relators()[static_cast<std::size_t>(s.relator)].inverse()
                               : p.relators()[static_cast<std::size_t>(s.relator)];
    const int L = static_cast<int>(rel.size());
    const int n = static_cast<int>(w.size());
    if (s.length < 1 || s.length > L || s.length > n || s.offset < 0 || s.offset >= L || s.position < 0 ||
        s.position >= n)
        return std::nullopt;
    const auto rw = w.rotated(static_cast<std::size_t>(s.position));
    const auto rr = rel.rotated(static_cast<std::size_t>(s.offset));
    for (int i = 0; i < s.length; ++i)
        if (rw.letters()[static_cast<std::size_t>(i)] != rr.letters()[static_cast<std::size_t>(i)])
            return std::nullopt;
    FreeWord rest(std::span<const int>(rr.letters().data() + s.length, static_cast<std::size_t>(L - s.length)));
    FreeWord tail(std::span<const int>(rw.letters().data() + s.length, static_cast<std::size_t>(n - s.length)));
    return (rest.inverse() * tail).cyclically_reduced();
}
} // namespace detail

/// Replays a certificate by pure rewriting; true iff every step applies and
/// the final word is empty.
inline bool replay(const GroupPresentation &p, const Certificate &c) {
    FreeWord w = c.start.cyclically_reduced();
    for (const auto &s : c.steps) {
        auto next = detail::apply_step(p, w, s);
        if (!next)
            return false;
        w = std::move(*next);
    }
    return w.empty();
}

/// Best-first search for a certificate that w is trivial in the group.
/// Substitutions replace at least half of a relator, so no step lengthens
/// the word by more than one letter.
inline std::optional<Certificate> prove_trivial(const GroupPresentation &p, const FreeWord &w,
                                                const SearchBudget &budget = {}) {
    const FreeWord start = w.cyclically_reduced();
    Certificate cert{w, {}};
    if (start.empty())
        return cert;
    struct Node {
        FreeWord word;
        std::vector<RewriteStep> path;
    };
    auto cmp = [](const Node &a, const Node &b) {
        return std::pair(a.word.size(), a.path.size()) > std::pair(b.word.size(), b.path.size());
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
    std::set<std::vector<int>> seen;
    open.push({start, {}});
    seen.insert(min_rotation(start));
    std::size_t expanded = 0;
    std::vector<FreeWord> rels;
    for (const auto &r : p.relators()) {
        rels.push_back(r);
        rels.push_back(r.inverse());
    }
    while (!open.empty() && expanded < budget.max_nodes) {
        Node cur = open.top();
        open.pop();
        ++expanded;
        if (static_cast<int>(cur.path.size()) >= budget.max_depth)
            continue;
        const int n = static_cast<int>(cur.word.size());
        for (int pos = 0; pos < n; ++pos) {
            const auto rw = cur.word.rotated(static_cast<std::size_t>(pos));
            for (std::size_t ri = 0; ri < rels.size(); ++ri) {
                const auto &rel = rels[ri];
                const int L = static_cast<int>(rel.size());
                for (int off = 0; off < L; ++off) {
                    if (rel.letters()[static_cast<std::size_t>(off)] != rw.letters()[0])
                        continue;
                    int match = 0;
                    while (match < L && match < n &&
                           rel.letters()[static_cast<std::size_t>((off + match) % L)] ==
                               rw.letters()[static_cast<std::size_t>(match)])
                        ++match;
                    for (int len = match; len >= 1 && 2 * len + 1 >= L; --len) {
                        RewriteStep step{pos, static_cast<int>(ri / 2), ri % 2 == 1, off, len};
                        auto next = detail::apply_step(p, cur.word, step);
                        if (!next || static_cast<int>(next->size()) > budget.max_length)
                            continue;
                        auto path = cur.path;
                        path.push_back(step);
                        if (next->empty()) {
                            cert.steps = std::move(path);
                            return cert;
                        }
                        if (!seen.insert(min_rotation(*next)).second)
                            continue;
                        open.push({std::move(*next), std::move(path)});
                    }
                }
            }
        }
    }
    return std::nullopt;
}

struct EndoCheck {
    Verdict verdict = Verdict::Unknown;
    std::vector<Certificate> certificates; // one per relator when verified
};

/// Verified iff the image of every relator is certified trivial.
inline EndoCheck check_endo(const GroupPresentation &p, const EndoSpec &e, const SearchBudget &budget = {}) {
    check_endo_shape(p, e);
    EndoCheck out;
    for (const auto &r : p.relators()) {
        auto c = prove_trivial(p, e.apply(r), budget);
        if (!c) {
            out.certificates.clear();
            return out;
        }
        out.certificates.push_back(std::move(*c));
    }
    out.verdict = Verdict::Verified;
    return out;
}

struct InnerCheck {
    Verdict verdict = Verdict::Unknown;
    FreeWord conjugator;                  // c with E(E(g)) = c g c^-1
    std::vector<Certificate> certificates; // E(E(g)) (c g c^-1)^-1 trivial, per generator
};

/// Looks for one word c with E(E(g)) = c g c^-1 for every generator g.
/// Candidates: the empty word and the conjugators E(E(g)) exhibits in the
/// free group.
inline InnerCheck check_involution_mod_inner(const GroupPresentation &p, const EndoSpec &e,
                                             const SearchBudget &budget = {}) {
    check_endo_shape(p, e);
    std::vector<FreeWord> candidates{FreeWord{}};
    for (int g = 0; g < p.generators(); ++g) {
        auto gg = e.apply(e.apply(FreeWord::generator(g)));
        if (auto c = free_conjugator(FreeWord::generator(g), gg))
            if (std::find(candidates.begin(), candidates.end(), *c) == candidates.end())
                candidates.push_back(*c);
    }
    for (const auto &c : candidates) {
        InnerCheck out;
        out.conjugator = c;
        bool ok = true;
        for (int g = 0; g < p.generators() && ok; ++g) {
            const auto gen = FreeWord::generator(g);
            auto w = e.apply(e.apply(gen)) * (c * gen * c.inverse()).inverse();
            auto cert = prove_trivial(p, w, budget);
            ok = cert.has_value();
            if (ok)
                out.certificates.push_back(std::move(*cert));
        }
        if (ok) {
            out.verdict = Verdict::Verified;
            return out;
        }
    }
    return {};
}

struct ConjugacyCheck {
    Verdict verdict = Verdict::Unknown;
    bool abelian_equal = false; // exact: [E(w)] == [w]
    FreeWord conjugator;        // c with c E(w) c^-1 = w
    Certificate certificate;    // c E(w) c^-1 w^-1 trivial
};

/// Conjugacy of E(w) and w, certified either in the free group or by a
/// bounded relator search with conjugators drawn from rotations of E(w).
inline ConjugacyCheck check_class_preserved(const GroupPresentation &p, const EndoSpec &e, const FreeWord &w,
                                            const SearchBudget &budget = {}) {
    check_endo_shape(p, e);
    ConjugacyCheck out;
    const auto ew = e.apply(w);
    out.abelian_equal = homologous(p, ew, w);
    std::vector<FreeWord> candidates;
    if (auto c = free_conjugator(ew, w))
        candidates.push_back(*c);
    candidates.emplace_back();
    const auto core = ew.cyclically_reduced();
    for (std::size_t k = 1; k < core.size(); ++k)
        candidates.push_back(FreeWord(std::span<const int>(core.letters().data(), k)).inverse());
    for (const auto &c : candidates) {
        auto probe = c * ew * c.inverse() * w.inverse();
        if (auto cert = prove_trivial(p, probe, budget)) {
            out.verdict = Verdict::Verified;
            out.conjugator = c;
            out.certificate = std::move(*cert);
            return out;
        }
    }
    return out;
}

/// [E(g)] == [g] in H_1.
inline bool check_homology_fixed(const GroupPresentation &p, const EndoSpec &e, const FreeWord &g) {
    check_endo_shape(p, e);
    return homologous(p, e.apply(g), g);
}

} // namespace legendrid
