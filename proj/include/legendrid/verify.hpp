#pragma once

// Fixture registry and claim verification.
//
// Fixture directory layout:
//   R1.grid .. R8.grid      oriented grid diagrams
//   Pi1.surf, Pi2.surf      surface diagrams
//   dc1.code, dc2.code, fig5.code
//   u.pres, v.pres          group presentations
//   claims.json             the claims to verify, grouped as prop1 and prop2

#include "explorer.hpp"
#include "surfaces.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace legendrid {

class FixtureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Fixtures {
    std::filesystem::path dir;
    std::map<std::string, OrientedGridDiagram> grids;
    std::map<std::string, SurfaceDiagram> surfaces;
    std::map<std::string, std::string> code_text;
    std::map<std::string, DividingCode> codes;
    std::map<std::string, GroupPresentation> presentations;
    nlohmann::json claims;

    /// Diagram expressions: a fixture name preceded by operators applied
    /// right to left, e.g. "mu r R4" or "- mu R7". Operators: "-" (reverse),
    /// "mu" (point reflection), "r" (vertical reflection).
    OrientedGridDiagram diagram(const std::string &expr) const {
        std::vector<std::string> tok;
        std::istringstream in(expr);
        for (std::string t; in >> t;)
            tok.push_back(t);
        if (tok.empty())
            throw FixtureError("empty diagram expression");
        auto it = grids.find(tok.back());
        if (it == grids.end())
            throw FixtureError("unknown diagram '" + tok.back() + "'");
        auto d = it->second;
        for (auto k = tok.size() - 1; k-- > 0;) {
            if (tok[k] == "-")
                d = reverse(d);
            else if (tok[k] == "mu")
                d = rotate_pi(d);
            else if (tok[k] == "r")
                d = reflect_vertical(d);
            else
                throw FixtureError("unknown operator '" + tok[k] + "' in '" + expr + "'");
        }
        return d;
    }
};

namespace detail {
inline std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    if (!in)
        throw FixtureError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace detail

/// Loads every fixture in the directory. Each file must pass its module's
/// validation; any failure is a FixtureError naming the file.
inline Fixtures load_fixtures(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir))
        throw FixtureError("fixture directory not found: " + dir.string());
    Fixtures f;
    f.dir = dir;
    std::vector<std::filesystem::path> files;
    for (auto &e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file())
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (auto &p : files) {
        const auto name = p.stem().string(), ext = p.extension().string();
        try {
            if (ext == ".grid")
                f.grids.emplace(name, parse(detail::read_file(p)));
            else if (ext == ".surf")
                f.surfaces.emplace(name, parse_surface(detail::read_file(p)));
            else if (ext == ".code") {
                auto text = detail::trim(detail::read_file(p));
                f.codes.emplace(name, parse_code(text));
                f.code_text.emplace(name, text);
            } else if (ext == ".pres")
                f.presentations.emplace(name, GroupPresentation::parse(detail::read_file(p)));
            else if (p.filename() == "claims.json")
                f.claims = nlohmann::json::parse(detail::read_file(p));
        } catch (const FixtureError &) {
            throw;
        } catch (const std::exception &e) {
            throw FixtureError(p.filename().string() + ": " + e.what());
        }
    }
    if (f.claims.is_null())
        throw FixtureError("claims.json missing in " + dir.string());
    return f;
}

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Unknown, Assumed };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::Assumed: return "assumed";
    }
    return "?";
}

struct ClaimOutcome {
    std::string id;
    std::string kind;
    Status status = Status::Unknown;
    std::string detail;
    nlohmann::json witness; // move path, certificate summary, sizes
    double millis = 0;
};

struct VerificationReport {
    static constexpr int schema = 1;
    std::string name;
    std::vector<ClaimOutcome> claims;

    bool any(Status s) const {
        return std::any_of(claims.begin(), claims.end(), [&](auto &c) { return c.status == s; });
    }
    /// 0 all pass, 1 a failure, 2 unknowns only.
    int exit_code() const { return any(Status::Fail) ? 1 : any(Status::Unknown) ? 2 : 0; }

    nlohmann::json to_json(bool timings) const {
        nlohmann::json out{{"schema", schema}, {"report", name}};
        auto &arr = out["claims"] = nlohmann::json::array();
        for (auto &c : claims) {
            nlohmann::json j{{"id", c.id}, {"kind", c.kind}, {"status", to_string(c.status)}, {"detail", c.detail}};
            if (!c.witness.is_null())
                j["witness"] = c.witness;
            if (timings)
                j["ms"] = c.millis;
            arr.push_back(std::move(j));
        }
        return out;
    }
};

struct VerifyOptions {
    ExploreOptions explore;
    int size_cap_extra = 2;         // Legendrian search: sizes up to max(n1, n2) + this
    int size_cap = 0;               // absolute cap when positive
    std::size_t search_budget = 1'000'000;
    SearchBudget group_budget{};
};

namespace detail {

inline StabType stab_type_from(const nlohmann::json &j) {
    auto t = parse_stab_type(j.get<std::string>());
    if (!t)
        throw FixtureError("bad stabilization type " + j.dump());
    return *t;
}

inline nlohmann::json path_json(const std::vector<MoveDescriptor> &path) {
    auto a = nlohmann::json::array();
    for (auto &m : path)
        a.push_back(to_string(m));
    return a;
}

inline void check_tb(const Fixtures &f, const nlohmann::json &c, ClaimOutcome &out) {
    const auto d = f.diagram(c.at("diagram"));
    std::ostringstream msg;
    bool ok = true;
    if (c.contains("plus")) {
        const int v = tb_plus(d);
        ok &= v == c["plus"].get<int>();
        msg << "tb+ " << v << ' ';
    }
    if (c.contains("minus")) {
        const int v = tb_minus(d);
        ok &= v == c["minus"].get<int>();
        msg << "tb- " << v;
    }
    out.status = ok ? Status::Pass : Status::Fail;
    out.detail = detail::trim(msg.str());
}

inline void check_rot(const Fixtures &f, const nlohmann::json &c, ClaimOutcome &out) {
    const auto d = f.diagram(c.at("diagram"));
    const bool plus = c.value("sign", std::string("+")) == "+";
    const int v = plus ? rotation_plus(d) : rotation_minus(d);
    out.status = v == c.at("value").get<int>() ? Status::Pass : Status::Fail;
    out.detail = std::string("rot") + (plus ? "+ " : "- ") + std::to_string(v);
}

inline void check_type(const Fixtures &f, const nlohmann::json &c, ClaimOutcome &out) {
    const auto d = f.diagram(c.at("diagram"));
    const auto k = identify(d);
    out.status = c.at("type").get<std::string>() == to_string(k) ? Status::Pass : Status::Fail;
    out.detail = std::string("type ") + to_string(k);
}

inline void check_stab(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o, ClaimOutcome &out) {
    StabClaim sc{out.id, f.diagram(c.at("lhs")), stab_type_from(c.at("lhs_type")), f.diagram(c.at("rhs")),
                 stab_type_from(c.at("rhs_type"))};
    auto r = verify_stab_claim(sc, o.explore);
    // equality is only asserted on complete closures
    if (r.verdict == Decision::Yes)
        out.status = (r.lhs_complete && r.rhs_complete) ? Status::Pass : Status::Unknown;
    else
        out.status = r.verdict == Decision::No ? Status::Fail : Status::Unknown;
    out.detail = "classes " + std::to_string(r.lhs_size) + (r.lhs_complete ? "" : "+") + " / " +
                 std::to_string(r.rhs_size) + (r.rhs_complete ? "" : "+");
    out.witness = {{"lhs_size", r.lhs_size}, {"rhs_size", r.rhs_size}, {"complete", r.lhs_complete && r.rhs_complete}};
}

inline void check_rigid(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o, ClaimOutcome &out) {
    const auto d = f.diagram(c.at("diagram"));
    const bool nontrivial = admits_nontrivial_exchange(d);
    auto cls = exchange_class(d, o.explore);
    const bool singleton = cls.complete && cls.size() == 1;
    out.status = (!nontrivial && singleton) ? Status::Pass : Status::Fail;
    out.detail = std::string(nontrivial ? "admits" : "no") + " non-trivial exchange, class size " +
                 std::to_string(cls.size());
}

inline void check_class_ne(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o, ClaimOutcome &out) {
    const auto a = f.diagram(c.at("lhs")), b = f.diagram(c.at("rhs"));
    auto ca = exchange_class(a, o.explore);
    auto cb = exchange_class(b, o.explore);
    const bool met = ca.contains(b) || cb.contains(a);
    if (met)
        out.status = Status::Fail;
    else
        out.status = (ca.complete || cb.complete) ? Status::Pass : Status::Unknown;
    out.detail = "classes " + std::to_string(ca.size()) + (ca.complete ? "" : "+") + " / " +
                 std::to_string(cb.size()) + (cb.complete ? "" : "+");
    out.witness = {{"lhs_size", ca.size()}, {"rhs_size", cb.size()}};
}

inline void check_not_in(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o, ClaimOutcome &out) {
    const auto d = f.diagram(c.at("diagram"));
    out.status = Status::Pass;
    std::string msg;
    for (auto &e : c.at("classes")) {
        auto cls = exchange_class(f.diagram(e.get<std::string>()), o.explore);
        if (cls.contains(d)) {
            out.status = Status::Fail;
            msg += "in E(" + e.get<std::string>() + ") ";
        } else if (!cls.complete && out.status == Status::Pass) {
            out.status = Status::Unknown;
        }
    }
    out.detail = msg.empty() ? "outside all classes" : detail::trim(msg);
}

inline void check_legendrian(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o,
                             ClaimOutcome &out) {
    const auto a = f.diagram(c.at("lhs")), b = f.diagram(c.at("rhs"));
    const auto sign = c.at("sign").get<std::string>() == "+" ? ContactSign::Plus : ContactSign::Minus;
    const int cap = o.size_cap > 0 ? o.size_cap : std::max(a.size(), b.size()) + o.size_cap_extra;
    auto v = legendrian_equiv_bounded(a, b, sign, cap, o.search_budget);
    // a Yes is replayed inside the search; "no path" is never a refutation
    out.status = v.found ? Status::Pass : Status::Unknown;
    out.detail = v.found ? "path of " + std::to_string(v.path.size()) + " moves, cap " +
                               std::to_string(v.size_cap_used)
                         : "no path within cap " + std::to_string(cap);
    if (v.found)
        out.witness = {{"path", path_json(v.path)}, {"nodes", v.nodes}};
}

inline EndoSpec endo_from(const GroupPresentation &p, const nlohmann::json &images) {
    EndoSpec e = EndoSpec::identity(p.generators());
    for (auto &[gen, word] : images.items()) {
        const int i = p.index_of(gen);
        if (i < 0)
            throw FixtureError("endomorphism names unknown generator " + gen);
        e.images[static_cast<std::size_t>(i)] = p.parse_word(word.get<std::string>());
    }
    return e;
}

inline std::string summarize_certs(const std::vector<Certificate> &cs) {
    std::size_t steps = 0;
    for (auto &c : cs)
        steps += c.steps.size();
    return std::to_string(cs.size()) + " certificates, " + std::to_string(steps) + " steps";
}

// Group checks. Sub-checks run in order and the first failing one decides.
inline void check_group(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o, ClaimOutcome &out) {
    const auto &pres = f.presentations.at(c.at("presentation").get<std::string>());
    const auto check = c.at("check").get<std::string>();
    if (check == "alexander") {
        const auto d = f.diagram(c.at("diagram"));
        const auto a = fox_alexander(wirtinger(d));
        const auto b = fox_alexander(pres);
        out.status = a == b ? Status::Pass : Status::Fail;
        out.detail = "diagram " + a.to_string() + ", presentation " + b.to_string();
        return;
    }
    const auto e = endo_from(pres, c.at("endo"));
    if (check == "endo") {
        auto r = check_endo(pres, e, o.group_budget);
        bool replays = r.verdict == Verdict::Verified;
        for (auto &cert : r.certificates)
            replays = replays && replay(pres, cert);
        out.status = replays ? Status::Pass : Status::Unknown;
        out.detail = std::string(to_string(r.verdict)) + ", " + summarize_certs(r.certificates);
    } else if (check == "involution") {
        auto r = check_involution_mod_inner(pres, e, o.group_budget);
        out.status = r.verdict == Verdict::Verified ? Status::Pass : Status::Unknown;
        out.detail = std::string(to_string(r.verdict)) + ", conjugator '" + pres.format(r.conjugator) + "'";
    } else if (check == "conjugacy") {
        const auto w = pres.parse_word(c.at("word").get<std::string>());
        auto r = check_class_preserved(pres, e, w, o.group_budget);
        if (!r.abelian_equal)
            out.status = Status::Fail;
        else
            out.status = r.verdict == Verdict::Verified && replay(pres, r.certificate) ? Status::Pass
                                                                                      : Status::Unknown;
        out.detail = std::string(to_string(r.verdict)) + ", conjugator '" + pres.format(r.conjugator) + "'";
    } else if (check == "homology") {
        const auto g = pres.parse_word(c.at("word").get<std::string>());
        out.status = check_homology_fixed(pres, e, g) ? Status::Pass : Status::Fail;
        out.detail = "[E(" + c.at("word").get<std::string>() + ")] " + (out.status == Status::Pass ? "==" : "!=") +
                     " [" + c.at("word").get<std::string>() + "]";
    } else {
        throw FixtureError("unknown group check " + check);
    }
}

inline void check_surface(const Fixtures &f, const nlohmann::json &c, ClaimOutcome &out) {
    const auto &s = f.surfaces.at(c.at("surface").get<std::string>());
    const auto d = f.diagram(c.at("boundary"));
    const auto b = boundary(s);
    const bool bounds = equivalent(b, d) || equivalent(reverse(b), d);
    const int chi = euler_characteristic(s);
    const int g = s.orientable() && connected(s) ? genus(s) : -1;
    const bool ok = bounds && s.orientable() && g == c.at("genus").get<int>();
    out.status = ok ? Status::Pass : Status::Fail;
    out.detail = std::string(bounds ? "bounds " : "does not bound ") + c.at("boundary").get<std::string>() +
                 ", chi " + std::to_string(chi) + ", genus " + std::to_string(g) +
                 (s.orientable() ? ", orientable" : ", non-orientable");
}

inline void check_code(const Fixtures &f, const nlohmann::json &c, ClaimOutcome &out) {
    const auto check = c.at("check").get<std::string>();
    if (check == "roundtrip") {
        const auto &name = c.at("code").get<std::string>();
        const auto &text = f.code_text.at(name);
        const auto back = serialize_code(f.codes.at(name));
        std::string squeezed;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                squeezed += ch;
        if (!squeezed.empty() && squeezed.back() == '.')
            squeezed.pop_back();
        const bool labels = !c.contains("labels") || f.codes.at(name).label_count() == c["labels"].get<int>();
        out.status = back == squeezed && labels ? Status::Pass : Status::Fail;
        out.detail = std::to_string(f.codes.at(name).label_count()) + " labels";
    } else if (check == "isomorphic") {
        const bool iso = codes_isomorphic(f.codes.at(c.at("lhs").get<std::string>()),
                                          f.codes.at(c.at("rhs").get<std::string>()));
        out.status = iso == c.at("expect").get<bool>() ? Status::Pass : Status::Fail;
        out.detail = std::string("isomorphic ") + (iso ? "true" : "false");
    } else {
        throw FixtureError("unknown code check " + check);
    }
}

} // namespace detail

inline ClaimOutcome verify_claim(const Fixtures &f, const nlohmann::json &c, const VerifyOptions &o = {}) {
    ClaimOutcome out;
    out.id = c.at("id").get<std::string>();
    out.kind = c.at("kind").get<std::string>();
    const auto t0 = std::chrono::steady_clock::now();
    const auto &k = out.kind;
    try {
        if (k == "tb")
            detail::check_tb(f, c, out);
        else if (k == "rot")
            detail::check_rot(f, c, out);
        else if (k == "type")
            detail::check_type(f, c, out);
        else if (k == "stab_eq")
            detail::check_stab(f, c, o, out);
        else if (k == "rigid")
            detail::check_rigid(f, c, o, out);
        else if (k == "class_ne")
            detail::check_class_ne(f, c, o, out);
        else if (k == "not_in")
            detail::check_not_in(f, c, o, out);
        else if (k == "legendrian")
            detail::check_legendrian(f, c, o, out);
        else if (k == "group")
            detail::check_group(f, c, o, out);
        else if (k == "surface")
            detail::check_surface(f, c, out);
        else if (k == "code")
            detail::check_code(f, c, out);
        else if (k == "atlas") {
            out.status = Status::Assumed;
            out.detail = c.at("statement").get<std::string>() + " (visual identification, not verified)";
        } else
            throw FixtureError("unknown claim kind " + k);
    } catch (const std::out_of_range &) {
        throw FixtureError("claim " + out.id + " names a fixture that is not loaded");
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

using ProgressFn = std::function<void(const ClaimOutcome &)>;

inline VerificationReport verify_group(const Fixtures &f, const std::string &group, const VerifyOptions &o = {},
                                       const ProgressFn &progress = {}) {
    if (!f.claims.contains(group))
        throw FixtureError("claims.json has no group '" + group + "'");
    VerificationReport r;
    r.name = group;
    for (auto &c : f.claims.at(group)) {
        r.claims.push_back(verify_claim(f, c, o));
        if (progress)
            progress(r.claims.back());
    }
    return r;
}

inline VerificationReport verify_prop1(const Fixtures &f, const VerifyOptions &o = {}, const ProgressFn &p = {}) {
    return verify_group(f, "prop1", o, p);
}
inline VerificationReport verify_prop2(const Fixtures &f, const VerifyOptions &o = {}, const ProgressFn &p = {}) {
    return verify_group(f, "prop2", o, p);
}

} // namespace legendrid
