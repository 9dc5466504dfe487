#pragma once

// Classical and contact invariants of oriented grid diagrams.

#include "groups.hpp"
#include "moves.hpp"


namespace legendrid {

/// Sum of crossing signs; vertical edges pass over horizontal ones.
inline int writhe(const OrientedGridDiagram &diagram) {
    const auto r = diagram.normalized();
    const auto &g = r.base();
    const int n = g.size();
    const auto xinv = detail::inverse_permutation(g.x());
    int w = 0;
    for (int k = 0; k < n; ++k) {
        const int vy = g.o(k) > g.x(k) ? 1 : -1;
        const int lo = std::min(g.x(k), g.o(k)), hi = std::max(g.x(k), g.o(k));
        for (int c = 0; c < n; ++c) {
            // horizontal edge in row o[c], from column c to the X of that row
            const int row = g.o(c);
            if (row <= lo || row >= hi)
                continue;
            const int to = xinv[static_cast<std::size_t>(row)];
            if (std::min(c, to) < k && k < std::max(c, to))
                w += -vy * (to > c ? 1 : -1);
        }
    }
    return w;
}

/// tb for xi_+: cusps of the front are the NW and SE corners.
inline int tb_plus(const OrientedGridDiagram &r) {
    const auto cc = corner_census(r);
    return writhe(r) - (cc.of(Compass::NW) + cc.of(Compass::SE)) / 2;
}

/// tb for xi_-: cusps are the NE and SW corners.
inline int tb_minus(const OrientedGridDiagram &r) {
    const auto cc = corner_census(r);
    return -writhe(r) - (cc.of(Compass::NE) + cc.of(Compass::SW)) / 2;
}

// A corner entered horizontally and one entered vertically give cusps of
// opposite orientation.
inline int rotation_plus(const OrientedGridDiagram &r) {
    const auto cc = corner_census(r);
    const int twice = cc.at(Compass::NW, false) + cc.at(Compass::SE, true) - cc.at(Compass::NW, true) -
                      cc.at(Compass::SE, false);
    return twice / 2;
}

inline int rotation_minus(const OrientedGridDiagram &r) {
    const auto cc = corner_census(r);
    const int twice = cc.at(Compass::NE, false) + cc.at(Compass::SW, true) - cc.at(Compass::NE, true) -
                      cc.at(Compass::SW, false);
    return twice / 2;
}

inline LaurentPolynomial alexander(const OrientedGridDiagram &r) { return fox_alexander(wirtinger(r)); }

// ---------------------------------------------------------------------------
// Knot table

enum class KnotType {
    Unknot,
    K3_1,
    K4_1,
    K5_1,
    K5_2,
    K6_1,
    K6_2,
    K6_3,
    K7_1,
    K7_2,
    K7_3,
    K7_4,
    K7_5,
    K7_6,
    K7_7,
    K3_1Sum4_1,
    Unknown,
    Ambiguous
};

inline const char *to_string(KnotType k) {
    switch (k) {
    case KnotType::Unknot: return "unknot";
    case KnotType::K3_1: return "3_1";
    case KnotType::K4_1: return "4_1";
    case KnotType::K5_1: return "5_1";
    case KnotType::K5_2: return "5_2";
    case KnotType::K6_1: return "6_1";
    case KnotType::K6_2: return "6_2";
    case KnotType::K6_3: return "6_3";
    case KnotType::K7_1: return "7_1";
    case KnotType::K7_2: return "7_2";
    case KnotType::K7_3: return "7_3";
    case KnotType::K7_4: return "7_4";
    case KnotType::K7_5: return "7_5";
    case KnotType::K7_6: return "7_6";
    case KnotType::K7_7: return "7_7";
    case KnotType::K3_1Sum4_1: return "3_1#4_1";
    case KnotType::Unknown: return "unknown";
    case KnotType::Ambiguous: return "ambiguous";
    }
    return "?";
}

struct KnotTableEntry {
    KnotType type;
    std::vector<int> x, o; // a small grid diagram of the knot
};

/// Small grid diagrams, one per prime knot up to seven crossings, plus the
/// unknot. Their Alexander polynomials are computed on first use.
inline const std::vector<KnotTableEntry> &knot_grids() {
    static const std::vector<KnotTableEntry> table = {
#include "knot_grids.inc"
    };
    return table;
}

inline OrientedGridDiagram table_grid(const KnotTableEntry &e) {
    if (e.type == KnotType::K3_1Sum4_1) {
        const auto &t = knot_grids();
        auto find = [&](KnotType k) -> const KnotTableEntry & {
            return *std::find_if(t.begin(), t.end(), [&](const auto &x) { return x.type == k; });
        };
        const auto &a = find(KnotType::K3_1), &b = find(KnotType::K4_1);
        return {connected_sum(GridDiagram::validate(static_cast<int>(a.x.size()), a.x, a.o),
                              GridDiagram::validate(static_cast<int>(b.x.size()), b.x, b.o)),
                Direction::XtoO};
    }
    return OrientedGridDiagram::validate(static_cast<int>(e.x.size()), e.x, e.o);
}

inline const std::vector<std::pair<KnotType, LaurentPolynomial>> &alexander_table() {
    static const auto table = [] {
        std::vector<std::pair<KnotType, LaurentPolynomial>> t;
        for (const auto &e : knot_grids())
            t.emplace_back(e.type, alexander(table_grid(e)));
        t.emplace_back(KnotType::K3_1Sum4_1, alexander(table_grid({KnotType::K3_1Sum4_1, {}, {}})));
        return t;
    }();
    return table;
}

/// Table lookup on the normalized Alexander polynomial. Mirror images are
/// not distinguished.
inline KnotType identify_polynomial(const LaurentPolynomial &delta) {
    KnotType found = KnotType::Unknown;
    for (const auto &[k, p] : alexander_table()) {
        if (p != delta)
            continue;
        if (found != KnotType::Unknown)
            return KnotType::Ambiguous;
        found = k;
    }
    return found;
}

inline KnotType identify(const OrientedGridDiagram &r) { return identify_polynomial(alexander(r)); }

struct InvariantSummary {
    int n = 0;
    int writhe = 0;
    int tb_plus = 0;
    int tb_minus = 0;
    int rot_plus = 0;
    int rot_minus = 0;
    LaurentPolynomial alexander;
    KnotType type = KnotType::Unknown;
};

inline InvariantSummary summarize(const OrientedGridDiagram &r) {
    InvariantSummary s;
    s.n = r.size();
    s.writhe = writhe(r);
    s.tb_plus = tb_plus(r);
    s.tb_minus = tb_minus(r);
    s.rot_plus = rotation_plus(r);
    s.rot_minus = rotation_minus(r);
    s.alexander = alexander(r);
    s.type = identify_polynomial(s.alexander);
    return s;
}

} // namespace legendrid
