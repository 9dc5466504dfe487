#pragma once

// Exchange moves, oriented stabilizations and destabilizations.
//
// Oriented stabilization types and their (role, compass) labels:
//
//   I>  : X:NE, O:SW      I<  : X:SW, O:NE
//   II> : X:SE, O:NW      II< : X:NW, O:SE
//
// A stabilization at a vertex v of role r replaces v by a 2 x 2 block holding
// two vertices of role r on a diagonal and one vertex of the opposite role.
// The compass label is the position of the empty cell of the block, which is
// diagonally across from the opposite-role vertex.

#include "grid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace legendrid {

enum class StabType : std::uint8_t { IRight, ILeft, IIRight, IILeft };

inline constexpr std::array<StabType, 4> kAllStabTypes{StabType::IRight, StabType::ILeft, StabType::IIRight,
                                                       StabType::IILeft};

inline const char *to_string(StabType t) {
    switch (t) {
    case StabType::IRight: return "I>";
    case StabType::ILeft: return "I<";
    case StabType::IIRight: return "II>";
    case StabType::IILeft: return "II<";
    }
    return "?";
}

inline std::optional<StabType> parse_stab_type(std::string_view s) {
    for (auto t : kAllStabTypes)
        if (s == to_string(t))
            return t;
    return std::nullopt;
}

/// Type I moves keep the xi_+ Legendrian class, type II moves keep xi_-.
inline bool is_type_one(StabType t) { return t == StabType::IRight || t == StabType::ILeft; }

inline Compass compass_for(StabType t, Role r) {
    const bool x = r == Role::X;
    switch (t) {
    case StabType::IRight: return x ? Compass::NE : Compass::SW;
    case StabType::ILeft: return x ? Compass::SW : Compass::NE;
    case StabType::IIRight: return x ? Compass::SE : Compass::NW;
    case StabType::IILeft: return x ? Compass::NW : Compass::SE;
    }
    return Compass::NE;
}

inline StabType stab_type_for(Role r, Compass c) {
    for (auto t : kAllStabTypes)
        if (compass_for(t, r) == c)
            return t;
    throw std::logic_error("stabilization dictionary is not a bijection");
}

struct ExchangeColumns {
    int column; // swaps column and column+1 (mod n)
    bool operator==(const ExchangeColumns &) const = default;
};
struct ExchangeRows {
    int row; // swaps row and row+1 (mod n)
    bool operator==(const ExchangeRows &) const = default;
};
struct Stabilize {
    StabType type;
    int column;
    Role role;
    bool operator==(const Stabilize &) const = default;
};
/// Removes the 2 x 2 block whose corner vertex (the one with both neighbours
/// inside the block) sits at (column, row).
struct Destabilize {
    StabType type;
    int column;
    int row;
    bool operator==(const Destabilize &) const = default;
};

using MoveDescriptor = std::variant<ExchangeColumns, ExchangeRows, Stabilize, Destabilize>;

inline std::string to_string(const MoveDescriptor &m) {
    struct V {
        std::string operator()(const ExchangeColumns &e) const { return "xch-col:" + std::to_string(e.column); }
        std::string operator()(const ExchangeRows &e) const { return "xch-row:" + std::to_string(e.row); }
        std::string operator()(const Stabilize &s) const {
            return std::string("stab:") + legendrid::to_string(s.type) + "," + legendrid::to_string(s.role) + "," +
                   legendrid::to_string(compass_for(s.type, s.role)) + "@" + std::to_string(s.column);
        }
        std::string operator()(const Destabilize &d) const {
            return std::string("destab:") + legendrid::to_string(d.type) + "@" + std::to_string(d.column) + "," +
                   std::to_string(d.row);
        }
    };
    return std::visit(V{}, m);
}

inline MoveDescriptor parse_move(std::string_view s) {
    auto fail = [&] { return GridError(GridError::Kind::Syntax, "bad move descriptor: " + std::string(s)); };
    auto to_int = [&](std::string_view v) {
        auto l = detail::parse_int_list(v);
        if (l.size() != 1)
            throw fail();
        return l[0];
    };
    if (s.starts_with("xch-col:"))
        return ExchangeColumns{to_int(s.substr(8))};
    if (s.starts_with("xch-row:"))
        return ExchangeRows{to_int(s.substr(8))};
    if (s.starts_with("stab:")) {
        auto body = s.substr(5);
        auto at = body.find('@');
        if (at == std::string_view::npos)
            throw fail();
        std::vector<std::string> parts;
        std::stringstream ss{std::string(body.substr(0, at))};
        for (std::string p; std::getline(ss, p, ',');)
            parts.push_back(p);
        if (parts.size() != 3)
            throw fail();
        auto t = parse_stab_type(parts[0]);
        if (!t || (parts[1] != "X" && parts[1] != "O"))
            throw fail();
        Role r = parts[1] == "X" ? Role::X : Role::O;
        if (parts[2] != to_string(compass_for(*t, r)))
            throw GridError(GridError::Kind::IncompatibleSite, "compass does not match type: " + std::string(s));
        return Stabilize{*t, to_int(body.substr(at + 1)), r};
    }
    if (s.starts_with("destab:")) {
        auto body = s.substr(7);
        auto at = body.find('@');
        if (at == std::string_view::npos)
            throw fail();
        auto t = parse_stab_type(body.substr(0, at));
        auto coords = detail::parse_int_list(body.substr(at + 1));
        if (!t || coords.size() != 2)
            throw fail();
        return Destabilize{*t, coords[0], coords[1]};
    }
    throw fail();
}

// ---------------------------------------------------------------------------
// Exchange moves

namespace detail {
/// Two disjoint pairs of points on a circle are interleaved iff exactly one
/// point of the second pair lies strictly between the points of the first.
inline bool interleaved(int a, int b, int c, int d) {
    if (a > b)
        std::swap(a, b);
    const bool ci = a < c && c < b;
    const bool di = a < d && d < b;
    return ci != di;
}
} // namespace detail

inline bool exchange_legal(const GridDiagram &g, const MoveDescriptor &m) {
    const int n = g.size();
    if (const auto *e = std::get_if<ExchangeColumns>(&m)) {
        if (e->column < 0 || e->column >= n)
            return false;
        const int a = e->column, b = (e->column + 1) % n;
        const int p = g.x(a), q = g.o(a), r = g.x(b), s = g.o(b);
        if (p == r || p == s || q == r || q == s)
            return false;
        return !detail::interleaved(p, q, r, s);
    }
    if (const auto *e = std::get_if<ExchangeRows>(&m)) {
        if (e->row < 0 || e->row >= n)
            return false;
        const int a = e->row, b = (e->row + 1) % n;
        const int p = g.column_of(a, Role::X), q = g.column_of(a, Role::O);
        const int r = g.column_of(b, Role::X), s = g.column_of(b, Role::O);
        if (p == r || p == s || q == r || q == s)
            return false;
        return !detail::interleaved(p, q, r, s);
    }
    return false;
}

/// Every legal exchange site, columns first, in increasing index order.
inline std::vector<MoveDescriptor> applicable_exchanges(const OrientedGridDiagram &r) {
    std::vector<MoveDescriptor> out;
    const int n = r.size();
    if (n < 3)
        return out;
    for (int c = 0; c < n; ++c)
        if (exchange_legal(r.base(), ExchangeColumns{c}))
            out.emplace_back(ExchangeColumns{c});
    for (int j = 0; j < n; ++j)
        if (exchange_legal(r.base(), ExchangeRows{j}))
            out.emplace_back(ExchangeRows{j});
    return out;
}

inline OrientedGridDiagram apply_exchange(const OrientedGridDiagram &r, const MoveDescriptor &m) {
    if (r.size() < 3 || !exchange_legal(r.base(), m))
        throw GridError(GridError::Kind::IllegalMove, "exchange not applicable: " + to_string(m));
    const int n = r.size();
    std::vector<int> x(r.base().x().begin(), r.base().x().end());
    std::vector<int> o(r.base().o().begin(), r.base().o().end());
    if (const auto *e = std::get_if<ExchangeColumns>(&m)) {
        const auto a = static_cast<std::size_t>(e->column), b = static_cast<std::size_t>((e->column + 1) % n);
        std::swap(x[a], x[b]);
        std::swap(o[a], o[b]);
    } else {
        const int a = std::get<ExchangeRows>(m).row, b = (a + 1) % n;
        auto swap_rows = [&](int v) { return v == a ? b : v == b ? a : v; };
        for (auto &v : x)
            v = swap_rows(v);
        for (auto &v : o)
            v = swap_rows(v);
    }
    return {GridDiagram::trusted(n, std::move(x), std::move(o)), r.direction()};
}

// ---------------------------------------------------------------------------
// Stabilization

/// Replaces the vertex of the given role in `column` by a 2 x 2 block whose
/// empty cell sits at the compass position that the dictionary assigns to
/// (type, role). New rows and columns are inserted next to the
/// vertex; every other vertex keeps its relative order.
/// Roles are read in the XtoO picture: X means a positive vertex.
inline OrientedGridDiagram stabilize(const OrientedGridDiagram &r, StabType type, int column, Role oriented_role) {
    const int n = r.size();
    const Role role = r.direction() == Direction::XtoO ? oriented_role : opposite(oriented_role);
    if (column < 0 || column >= n)
        throw GridError(GridError::Kind::IncompatibleSite, "stabilization column out of range");
    const auto &g = r.base();
    const Compass odd = diagonal(compass_for(type, oriented_role));
    // The empty cell is the intersection
    // of the original column and row, so the new column goes on the side of
    // `odd` horizontally and the new row on its side vertically.
    const bool new_col_east = odd == Compass::NE || odd == Compass::SE;
    const bool new_row_north = odd == Compass::NE || odd == Compass::NW;
    const int row = g.row_of(column, role);

    auto colmap = [&](int k) { return k + ((k > column || (k == column && !new_col_east)) ? 1 : 0); };
    auto rowmap = [&](int j) { return j + ((j > row || (j == row && !new_row_north)) ? 1 : 0); };
    const int old_col = colmap(column);
    const int new_col = new_col_east ? column + 1 : column;
    const int old_row = rowmap(row);
    const int new_row = new_row_north ? row + 1 : row;

    const int m = n + 1;
    std::vector<int> same(static_cast<std::size_t>(m)), other(static_cast<std::size_t>(m));
    for (int k = 0; k < n; ++k) {
        if (k == column)
            continue;
        same[static_cast<std::size_t>(colmap(k))] = rowmap(g.row_of(k, role));
        other[static_cast<std::size_t>(colmap(k))] = rowmap(g.row_of(k, opposite(role)));
    }
    same[static_cast<std::size_t>(old_col)] = new_row;
    other[static_cast<std::size_t>(old_col)] = rowmap(g.row_of(column, opposite(role)));
    same[static_cast<std::size_t>(new_col)] = old_row;
    other[static_cast<std::size_t>(new_col)] = new_row;

    auto &x = role == Role::X ? same : other;
    auto &o = role == Role::X ? other : same;
    return {GridDiagram::trusted(m, std::move(x), std::move(o)), r.direction()};
}

/// Site given as a vertex; the descriptor form used in reports.
inline OrientedGridDiagram stabilize(const OrientedGridDiagram &r, const Stabilize &s) {
    return stabilize(r, s.type, s.column, s.role);
}

struct DestabilizationSite {
    StabType type;
    Destabilize move;
    Stabilize inverse;           // applied to `result`, reproduces the input up to translation
    OrientedGridDiagram result;  // the (n-1) x (n-1) diagram
};

/// Every 2 x 2 block that a stabilization could have produced.
inline std::vector<DestabilizationSite> destabilizations(const OrientedGridDiagram &r) {
    std::vector<DestabilizationSite> out;
    const int n = r.size();
    if (n <= 2)
        return out;
    const auto &g = r.base();
    for (int k = 0; k < n; ++k) {
        for (Role corner_role : {Role::X, Role::O}) {
            const int rho = g.row_of(k, corner_role);
            const int rho2 = g.row_of(k, opposite(corner_role)); // column partner
            const int k2 = g.column_of(rho, opposite(corner_role)); // row partner
            const bool north = detail::mod(rho - rho2, n) == 1;
            const bool south = detail::mod(rho2 - rho, n) == 1;
            const bool east = detail::mod(k - k2, n) == 1;
            const bool west = detail::mod(k2 - k, n) == 1;
            if (!(north || south) || !(east || west))
                continue;
            // the empty cell (k2, rho2) must not hold a vertex
            if (g.x(k2) == rho2 || g.o(k2) == rho2)
                continue;
            // c locates the corner vertex; the label names the empty cell across from it
            const Compass c = north ? (east ? Compass::SW : Compass::SE) : (east ? Compass::NW : Compass::NE);
            const Role merged = opposite(corner_role);
            const Role oriented = r.direction() == Direction::XtoO ? merged : opposite(merged);
            const StabType t = stab_type_for(oriented, c);

            std::vector<int> same, oth;
            for (int col = 0; col < n; ++col) {
                if (col == k)
                    continue;
                auto rm = [&](int j) { return j - (j > rho ? 1 : 0); };
                int s = g.row_of(col, merged), ot = g.row_of(col, corner_role);
                if (col == k2)
                    s = rho2; // merged vertex takes the empty cell
                same.push_back(rm(s));
                oth.push_back(rm(ot));
            }
            auto &x = merged == Role::X ? same : oth;
            auto &o = merged == Role::X ? oth : same;
            const int site_col = k2 - (k2 > k ? 1 : 0);
            OrientedGridDiagram res{GridDiagram::trusted(n - 1, std::move(x), std::move(o)), r.direction()};
            out.push_back({t, Destabilize{t, k, rho}, Stabilize{t, site_col, oriented}, std::move(res)});
        }
    }
    return out;
}

inline OrientedGridDiagram apply_destabilize(const OrientedGridDiagram &r, const Destabilize &d) {
    for (auto &s : destabilizations(r))
        if (s.move == d)
            return s.result;
    throw GridError(GridError::Kind::IllegalMove, "no destabilization at " + to_string(MoveDescriptor{d}));
}

/// Applies any move descriptor.
inline OrientedGridDiagram apply_move(const OrientedGridDiagram &r, const MoveDescriptor &m) {
    if (const auto *s = std::get_if<Stabilize>(&m))
        return stabilize(r, *s);
    if (const auto *d = std::get_if<Destabilize>(&m))
        return apply_destabilize(r, *d);
    return apply_exchange(r, m);
}

/// An exchange is trivial when its result is combinatorially equivalent to
/// the input.
inline bool is_trivial_exchange(const OrientedGridDiagram &r, const MoveDescriptor &m) {
    return equivalent(apply_exchange(r, m), r);
}

} // namespace legendrid
