#pragma once

// Rectangular (grid) diagrams of knots on the torus.
//
// A diagram of size n places one X and one O in every column and every row of
// an n x n grid whose columns and rows are read modulo n. Vertical edges join
// the X and O of a column, horizontal edges join the X and O of a row, and
// vertical edges pass over horizontal ones in the planar picture obtained by
// cutting the torus along column 0 and row 0.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legendrid {

enum class Role : std::uint8_t { X, O };
enum class Compass : std::uint8_t { NE, NW, SE, SW };
enum class Direction : std::uint8_t { XtoO, OtoX };

inline constexpr std::array<Compass, 4> kAllCompass{Compass::NE, Compass::NW, Compass::SE, Compass::SW};

inline Role opposite(Role r) { return r == Role::X ? Role::O : Role::X; }

inline const char *to_string(Role r) { return r == Role::X ? "X" : "O"; }

inline Compass diagonal(Compass c) {
    switch (c) {
    case Compass::NE: return Compass::SW;
    case Compass::NW: return Compass::SE;
    case Compass::SE: return Compass::NW;
    case Compass::SW: return Compass::NE;
    }
    return c;
}

inline const char *to_string(Compass c) {
    switch (c) {
    case Compass::NE: return "NE";
    case Compass::NW: return "NW";
    case Compass::SE: return "SE";
    case Compass::SW: return "SW";
    }
    return "?";
}

inline const char *to_string(Direction d) { return d == Direction::XtoO ? "XtoO" : "OtoX"; }

class GridError : public std::runtime_error {
  public:
    enum class Kind { InvalidSize, NotAPermutation, VertexCollision, NotAKnot, Syntax, IllegalMove, IncompatibleSite };

    GridError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

namespace detail {
inline int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

inline std::vector<int> inverse_permutation(std::span<const int> p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss{std::string(s)};
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (t.empty())
            throw GridError(GridError::Kind::Syntax, "empty entry in integer list");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception &) {
            throw GridError(GridError::Kind::Syntax, "not an integer: '" + t + "'");
        }
        if (used != t.size())
            throw GridError(GridError::Kind::Syntax, "not an integer: '" + t + "'");
        out.push_back(v);
    }
    return out;
}
} // namespace detail

/// Unoriented-by-convention rectangular diagram: column -> row maps for the X
/// and O vertices. Every instance satisfies the permutation, collision and
/// single-component conditions.
class GridDiagram {
  public:
    /// Checks every invariant; throws GridError on the first violation.
    static GridDiagram validate(int n, std::vector<int> x, std::vector<int> o) {
        if (n < 2)
            throw GridError(GridError::Kind::InvalidSize, "grid size must be at least 2");
        if (x.size() != static_cast<std::size_t>(n) || o.size() != static_cast<std::size_t>(n))
            throw GridError(GridError::Kind::NotAPermutation, "X and O must list exactly n rows");
        for (const auto *p : {&x, &o}) {
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            for (int v : *p) {
                if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                    throw GridError(GridError::Kind::NotAPermutation, "vertex rows do not form a permutation");
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
        for (int i = 0; i < n; ++i)
            if (x[static_cast<std::size_t>(i)] == o[static_cast<std::size_t>(i)])
                throw GridError(GridError::Kind::VertexCollision,
                                "column " + std::to_string(i) + " carries X and O in the same cell");
        GridDiagram g(n, std::move(x), std::move(o));
        if (g.components() != 1)
            throw GridError(GridError::Kind::NotAKnot,
                            "diagram has " + std::to_string(g.components()) + " components");
        return g;
    }

    /// Number of closed components of the curve drawn by any pair of
    /// permutations; a diagram is a knot iff this is 1.
    static int count_components(std::span<const int> x, std::span<const int> o) {
        const auto n = x.size();
        auto xinv = detail::inverse_permutation(x);
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (seen[c])
                continue;
            ++cycles;
            std::size_t k = c;
            while (!seen[k]) {
                seen[k] = true;
                k = static_cast<std::size_t>(xinv[static_cast<std::size_t>(o[k])]);
            }
        }
        return cycles;
    }

    int size() const noexcept { return n_; }
    std::span<const int> x() const noexcept { return x_; }
    std::span<const int> o() const noexcept { return o_; }
    int x(int column) const { return x_[static_cast<std::size_t>(column)]; }
    int o(int column) const { return o_[static_cast<std::size_t>(column)]; }
    int row_of(int column, Role r) const { return r == Role::X ? x(column) : o(column); }

    int components() const { return count_components(x_, o_); }

    /// Column holding the vertex of role r in the given row.
    int column_of(int row, Role r) const {
        const auto &v = r == Role::X ? x_ : o_;
        return static_cast<int>(std::find(v.begin(), v.end(), row) - v.begin());
    }

    /// Simultaneous cyclic shift: column c -> c + dc, row r -> r + dr.
    GridDiagram shifted(int dc, int dr) const {
        std::vector<int> nx(x_.size()), no(o_.size());
        for (int c = 0; c < n_; ++c) {
            nx[static_cast<std::size_t>(detail::mod(c + dc, n_))] = detail::mod(x(c) + dr, n_);
            no[static_cast<std::size_t>(detail::mod(c + dc, n_))] = detail::mod(o(c) + dr, n_);
        }
        return GridDiagram(n_, std::move(nx), std::move(no));
    }

    GridDiagram with_roles_swapped() const { return GridDiagram(n_, o_, x_); }

    bool operator==(const GridDiagram &) const = default;

    /// Unchecked construction for callers that preserve the invariants.
    static GridDiagram trusted(int n, std::vector<int> x, std::vector<int> o) {
        return GridDiagram(n, std::move(x), std::move(o));
    }

  private:
    GridDiagram(int n, std::vector<int> x, std::vector<int> o) : n_(n), x_(std::move(x)), o_(std::move(o)) {}

    int n_;
    std::vector<int> x_;
    std::vector<int> o_;
};

struct Vertex {
    int column;
    int row;
    Role role;
    bool operator==(const Vertex &) const = default;
};

/// Grid diagram together with the orientation of its single component.
/// With XtoO, vertical edges run from X to O and horizontal edges from O to X.
class OrientedGridDiagram {
  public:
    OrientedGridDiagram(GridDiagram base, Direction dir) : base_(std::move(base)), dir_(dir) {}

    static OrientedGridDiagram validate(int n, std::vector<int> x, std::vector<int> o,
                                        Direction dir = Direction::XtoO) {
        return {GridDiagram::validate(n, std::move(x), std::move(o)), dir};
    }

    const GridDiagram &base() const noexcept { return base_; }
    Direction direction() const noexcept { return dir_; }
    int size() const noexcept { return base_.size(); }

    /// The same oriented curve written with direction XtoO.
    OrientedGridDiagram normalized() const {
        if (dir_ == Direction::XtoO)
            return *this;
        return {base_.with_roles_swapped(), Direction::XtoO};
    }

    /// True when the curve arrives at this vertex along its vertical edge.
    bool entered_vertically(Role r) const { return (dir_ == Direction::XtoO) == (r == Role::O); }

    /// Vertex signs: X vertices are positive in the XtoO reading.
    int vertex_sign(Role r) const { return entered_vertically(r) ? -1 : 1; }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(2 * size()));
        for (int c = 0; c < size(); ++c) {
            out.push_back({c, base_.x(c), Role::X});
            out.push_back({c, base_.o(c), Role::O});
        }
        return out;
    }

    OrientedGridDiagram shifted(int dc, int dr) const { return {base_.shifted(dc, dr), dir_}; }

    bool operator==(const OrientedGridDiagram &) const = default;

  private:
    GridDiagram base_;
    Direction dir_;
};

// ---------------------------------------------------------------------------
// Symmetries

/// r_|: reflection in a vertical line, column i -> n-1-i.
inline OrientedGridDiagram reflect_vertical(const OrientedGridDiagram &r) {
    const int n = r.size();
    std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        x[static_cast<std::size_t>(n - 1 - c)] = r.base().x(c);
        o[static_cast<std::size_t>(n - 1 - c)] = r.base().o(c);
    }
    return {GridDiagram::trusted(n, std::move(x), std::move(o)), r.direction()};
}

/// Reflection in a horizontal line, row j -> n-1-j.
inline OrientedGridDiagram flip_rows(const OrientedGridDiagram &r) {
    const int n = r.size();
    std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        x[static_cast<std::size_t>(c)] = n - 1 - r.base().x(c);
        o[static_cast<std::size_t>(c)] = n - 1 - r.base().o(c);
    }
    return {GridDiagram::trusted(n, std::move(x), std::move(o)), r.direction()};
}

/// mu: reflection in the origin.
inline OrientedGridDiagram rotate_pi(const OrientedGridDiagram &r) { return flip_rows(reflect_vertical(r)); }

/// Orientation reversal.
inline OrientedGridDiagram reverse(const OrientedGridDiagram &r) {
    return {r.base(), r.direction() == Direction::XtoO ? Direction::OtoX : Direction::XtoO};
}

// ---------------------------------------------------------------------------
// Canonical forms

/// Lexicographically smallest (X, O) sequence pair over all n^2 torus
/// translations, written with direction XtoO.
inline OrientedGridDiagram canonical_form(const OrientedGridDiagram &r) {
    const auto norm = r.normalized();
    const auto &g = norm.base();
    const int n = g.size();
    std::vector<int> best;
    std::vector<int> cand(static_cast<std::size_t>(2 * n));
    for (int start = 0; start < n; ++start) {
        // column `start` moves to 0 and its X to row 0
        const int dr = -g.x(start);
        for (int c = 0; c < n; ++c) {
            const int src = (start + c) % n;
            cand[static_cast<std::size_t>(c)] = detail::mod(g.x(src) + dr, n);
            cand[static_cast<std::size_t>(n + c)] = detail::mod(g.o(src) + dr, n);
        }
        if (best.empty() || cand < best)
            best = cand;
    }
    std::vector<int> x(best.begin(), best.begin() + n), o(best.begin() + n, best.end());
    return {GridDiagram::trusted(n, std::move(x), std::move(o)), Direction::XtoO};
}

/// Compact byte key of the canonical form; equal keys <=> equivalent diagrams.
inline std::string canonical_key(const OrientedGridDiagram &r) {
    const auto c = canonical_form(r);
    const int n = c.size();
    std::string key(static_cast<std::size_t>(2 * n + 1), '\0');
    key[0] = static_cast<char>(n);
    for (int i = 0; i < n; ++i) {
        key[static_cast<std::size_t>(1 + i)] = static_cast<char>(c.base().x(i));
        key[static_cast<std::size_t>(1 + n + i)] = static_cast<char>(c.base().o(i));
    }
    return key;
}

/// Inverse of canonical_key.
inline OrientedGridDiagram from_key(std::string_view key) {
    const int n = static_cast<unsigned char>(key[0]);
    std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = static_cast<unsigned char>(key[static_cast<std::size_t>(1 + i)]);
        o[static_cast<std::size_t>(i)] = static_cast<unsigned char>(key[static_cast<std::size_t>(1 + n + i)]);
    }
    return {GridDiagram::trusted(n, std::move(x), std::move(o)), Direction::XtoO};
}

/// Combinatorial equivalence: equality up to torus translations.
inline bool equivalent(const OrientedGridDiagram &a, const OrientedGridDiagram &b) {
    if (a.size() != b.size())
        return false;
    return canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------
// Corners

/// Compass type of the turn at a vertex in the planar picture: a vertex whose
/// edges leave towards north and east is a SW corner, and so on.
inline Compass corner_type(const GridDiagram &g, int column, Role role) {
    const int row = g.row_of(column, role);
    const int partner_row = g.row_of(column, opposite(role));
    const int partner_col = g.column_of(row, opposite(role));
    const bool up = partner_row > row;
    const bool east = partner_col > column;
    if (up)
        return east ? Compass::SW : Compass::SE;
    return east ? Compass::NW : Compass::NE;
}

/// Counts of the 2n vertices by corner type and by how the oriented curve
/// enters them. For each front projection the cusp orientation (up or down)
/// of a corner is fixed by this entry direction.
struct CornerCensus {
    // [compass][0 = entered horizontally, 1 = entered vertically]
    std::array<std::array<int, 2>, 4> counts{};

    int at(Compass c, bool vertical) const { return counts[static_cast<std::size_t>(c)][vertical ? 1 : 0]; }
    int of(Compass c) const { return at(c, false) + at(c, true); }
    int total() const {
        int t = 0;
        for (auto c : kAllCompass)
            t += of(c);
        return t;
    }
};

inline CornerCensus corner_census(const OrientedGridDiagram &r) {
    CornerCensus census;
    for (int c = 0; c < r.size(); ++c)
        for (Role role : {Role::X, Role::O}) {
            auto t = corner_type(r.base(), c, role);
            ++census.counts[static_cast<std::size_t>(t)][r.entered_vertically(role) ? 1 : 0];
        }
    return census;
}

// ---------------------------------------------------------------------------
// Text format

inline std::string serialize(const OrientedGridDiagram &r) {
    std::ostringstream os;
    os << "n=" << r.size() << "\nX=";
    for (int c = 0; c < r.size(); ++c)
        os << (c ? "," : "") << r.base().x(c);
    os << "\nO=";
    for (int c = 0; c < r.size(); ++c)
        os << (c ? "," : "") << r.base().o(c);
    os << "\norient=" << to_string(r.direction()) << "\n";
    return os.str();
}

/// Parses the four-line fixture format. Blank lines and lines starting with
/// '#' are ignored.
inline OrientedGridDiagram parse(std::string_view text) {
    std::vector<std::string> lines;
    std::stringstream ss{std::string(text)};
    for (std::string line; std::getline(ss, line);) {
        auto t = detail::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        lines.push_back(t);
    }
    static constexpr std::array<std::string_view, 4> keys{"n", "X", "O", "orient"};
    if (lines.size() != keys.size())
        throw GridError(GridError::Kind::Syntax, "expected 4 lines (n, X, O, orient), got " +
                                                     std::to_string(lines.size()));
    std::array<std::string, 4> values;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto eq = lines[i].find('=');
        if (eq == std::string::npos || detail::trim(lines[i].substr(0, eq)) != keys[i])
            throw GridError(GridError::Kind::Syntax, "expected '" + std::string(keys[i]) + "=' on line " +
                                                         std::to_string(i + 1));
        values[i] = detail::trim(lines[i].substr(eq + 1));
    }
    auto nlist = detail::parse_int_list(values[0]);
    if (nlist.size() != 1)
        throw GridError(GridError::Kind::Syntax, "n must be a single integer");
    Direction dir;
    if (values[3] == "XtoO")
        dir = Direction::XtoO;
    else if (values[3] == "OtoX")
        dir = Direction::OtoX;
    else
        throw GridError(GridError::Kind::Syntax, "orient must be XtoO or OtoX");
    return OrientedGridDiagram::validate(nlist[0], detail::parse_int_list(values[1]),
                                         detail::parse_int_list(values[2]), dir);
}

// ---------------------------------------------------------------------------
// Constructions

/// Connected sum: g1 in the lower-left block, g2 in the upper-right block,
/// joined by exchanging the O rows of the two columns adjacent to the block
/// boundary. The joining band crosses nothing.
inline GridDiagram connected_sum(const GridDiagram &g1, const GridDiagram &g2) {
    const int n1 = g1.size(), n = n1 + g2.size();
    std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    for (int c = 0; c < n1; ++c) {
        x[static_cast<std::size_t>(c)] = g1.x(c);
        o[static_cast<std::size_t>(c)] = g1.o(c);
    }
    for (int c = 0; c < g2.size(); ++c) {
        x[static_cast<std::size_t>(n1 + c)] = n1 + g2.x(c);
        o[static_cast<std::size_t>(n1 + c)] = n1 + g2.o(c);
    }
    std::swap(o[static_cast<std::size_t>(n1 - 1)], o[static_cast<std::size_t>(n1)]);
    return GridDiagram::validate(n, std::move(x), std::move(o));
}

/// The 2 x 2 unknot.
inline OrientedGridDiagram minimal_unknot() { return OrientedGridDiagram::validate(2, {1, 0}, {0, 1}); }

} // namespace legendrid
