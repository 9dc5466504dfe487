// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include "support.hpp"

#include <legendrid/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace legendrid;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

std::string squeeze(const std::string &text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

Result tb_values(const Fixtures &f) {
    std::string d;
    bool ok = true;
    for (auto name : {"R1", "R2", "R6"}) {
        const auto &r = f.grids.at(name);
        ok &= tb_plus(r) == -8 && tb_minus(r) == -1;
        d += std::string(name) + " (" + std::to_string(tb_plus(r)) + "," + std::to_string(tb_minus(r)) + ") ";
    }
    return {ok, d};
}

Result rotation_numbers(const Fixtures &f) {
    std::string d;
    bool ok = true;
    for (auto name : {"R1", "R2", "R3"}) {
        const int v = rotation_plus(f.grids.at(name));
        ok &= v == 1;
        d += std::string(name) + " " + std::to_string(v) + " ";
    }
    return {ok, "rot+ " + d};
}

Result tb_identity(const Fixtures &f) {
    for (auto &[name, r] : f.grids)
        if (tb_plus(r) + tb_minus(r) != -r.size())
            return {false, name + " breaks tb+ + tb- = -n"};
    std::mt19937_64 rng(2024);
    for (int i = 0; i < testkit::kPropertyInstances; ++i) {
        auto r = testkit::random_diagram(rng, 2, 8);
        if (tb_plus(r) + tb_minus(r) != -r.size())
            return {false, "random diagram breaks it:\n" + serialize(r)};
    }
    return {true, "8 fixtures and " + std::to_string(testkit::kPropertyInstances) + " random diagrams"};
}

Result stab_equalities(const Fixtures &f) {
    const std::vector<std::array<std::string, 4>> claims = {
        {"R1", "II>", "R6", "II>"},      {"R2", "I<", "R6", "I<"},       {"mu R3", "I>", "R7", "I>"},
        {"R7", "II<", "- mu R7", "II<"}, {"R7", "I<", "R8", "I<"},       {"R7", "II<", "r R4", "II>"},
        {"R8", "II>", "mu r R4", "II>"},
    };
    ExploreOptions opt;
    opt.node_budget = 1'000'000;
    std::string d;
    bool ok = true;
    for (auto &c : claims) {
        auto r = verify_stab_claim(
            {c[0], f.diagram(c[0]), *parse_stab_type(c[1]), f.diagram(c[2]), *parse_stab_type(c[3])}, opt);
        const bool pass = r.verdict == Decision::Yes && r.lhs_complete && r.rhs_complete;
        ok &= pass;
        d += "(" + c[0] + "," + c[1] + ")=(" + c[2] + "," + c[3] + ") " + (pass ? "yes" : to_string(r.verdict)) +
             " [" + std::to_string(r.lhs_size) + "]; ";
    }
    return {ok, d};
}

Result rigidity(const Fixtures &f) {
    std::string d;
    bool ok = true;
    std::vector<ExchangeClass> classes;
    for (auto e : {"R1", "- mu R1", "R5", "- mu R5"}) {
        const auto r = f.diagram(e);
        const bool rigid = !admits_nontrivial_exchange(r);
        ok &= rigid;
        classes.push_back(exchange_class(r));
        d += std::string(e) + (rigid ? " rigid; " : " NOT rigid; ");
    }
    const auto &r6 = f.grids.at("R6");
    for (auto &c : classes)
        ok &= c.complete && !c.contains(r6);
    d += ok ? "R6 outside all four" : "R6 check failed";
    return {ok, d};
}

Result class_inequalities(const Fixtures &f) {
    auto e7 = exchange_class(f.grids.at("R7"));
    auto e8 = exchange_class(f.grids.at("R8"));
    auto em = exchange_class(f.diagram("- mu R7"));
    const bool complete = e7.complete && e8.complete && em.complete;
    const bool ne8 = !e7.contains(f.grids.at("R8"));
    const bool nem = !e7.contains(f.diagram("- mu R7"));
    return {complete && ne8 && nem, "|E(R7)| " + std::to_string(e7.size()) + ", |E(R8)| " + std::to_string(e8.size()) +
                                        ", |E(-mu R7)| " + std::to_string(em.size()) +
                                        (complete ? ", complete" : ", INCOMPLETE")};
}

Result surfaces(const Fixtures &f) {
    std::string d;
    bool ok = true;
    for (auto [name, bd] : {std::pair{"Pi1", "R1"}, {"Pi2", "R7"}}) {
        auto it = f.surfaces.find(name);
        if (it == f.surfaces.end()) {
            ok = false;
            d += std::string(name) + " missing; ";
            continue;
        }
        const auto &s = it->second;
        const auto b = boundary(s);
        const bool bounds = equivalent(b, f.grids.at(bd)) || equivalent(reverse(b), f.grids.at(bd));
        const bool good = bounds && s.orientable() && connected(s) && genus(s) == 2 && euler_characteristic(s) == -3;
        ok &= good;
        d += std::string(name) + (bounds ? " bounds " : " does not bound ") + bd + ", chi " +
             std::to_string(euler_characteristic(s)) + "; ";
    }
    return {ok, d};
}

Result groups(const Fixtures &f) {
    const auto &u = f.presentations.at("u");
    const auto &v = f.presentations.at("v");
    const auto a1 = fox_alexander(wirtinger(f.grids.at("R1")));
    bool ok = a1 == fox_alexander(u) && a1 == fox_alexander(v);
    std::string d = "Delta " + a1.to_string();
    auto endo = [](const GroupPresentation &p, std::vector<std::pair<std::string, std::string>> images) {
        auto e = EndoSpec::identity(p.generators());
        for (auto &[g, w] : images)
            e.images[static_cast<std::size_t>(p.index_of(g))] = p.parse_word(w);
        return e;
    };
    const auto su = endo(u, {{"x1", "x1^"}, {"x2", "x2^"}, {"x3", "x3^"}, {"x4", "x4^"}, {"u", "x2^ u"}});
    const auto sv = endo(v, {{"y1", "y1^"}, {"y2", "y2^"}, {"y3", "y3^"}, {"y4", "y4^"}, {"v", "v y3^"}});
    for (auto [p, e] : {std::pair{&u, &su}, {&v, &sv}}) {
        auto r = check_endo(*p, *e);
        bool replays = r.verdict == Verdict::Verified;
        for (auto &c : r.certificates)
            replays = replays && replay(*p, c);
        ok &= replays;
        d += std::string(", endo ") + (replays ? "verified" : "unverified");
    }
    const bool hu = check_homology_fixed(u, su, u.parse_word("u"));
    ok &= hu;
    d += std::string(", [s(u)] ") + (hu ? "= [u]" : "!= [u]");
    return {ok, d};
}

Result identification(const Fixtures &f) {
    bool ok = true;
    std::string d;
    for (auto &[name, r] : f.grids) {
        const auto k = identify(r);
        ok &= k == KnotType::K7_6;
        if (k != KnotType::K7_6)
            d += name + " is " + to_string(k) + "; ";
    }
    const auto sum = table_grid({KnotType::K3_1Sum4_1, {}, {}});
    const auto ds = alexander(sum);
    const auto d76 = alexander(f.grids.at("R1"));
    ok &= !(ds == d76);
    return {ok, d + "all 7_6; Delta(3_1#4_1) = " + ds.to_string()};
}

Result codes(const Fixtures &f) {
    bool ok = true;
    std::string d;
    for (auto name : {"fig5", "dc1", "dc2"}) {
        const bool rt = serialize_code(f.codes.at(name)) == squeeze(f.code_text.at(name));
        ok &= rt;
        d += std::string(name) + (rt ? " round-trips; " : " DIFFERS; ");
    }
    const bool iso = codes_isomorphic(f.codes.at("dc1"), f.codes.at("dc2"));
    ok &= !iso;
    return {ok, d + "dc1 ~ dc2: " + (iso ? "true" : "false")};
}

} // namespace

int main(int argc, char **argv) {
    const std::string dir = argc > 1 ? argv[1] : LEGENDRID_FIXTURES;
    Fixtures f;
    try {
        f = load_fixtures(dir);
    } catch (const std::exception &e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 3;
    }
    const std::vector<std::pair<std::string, std::function<Result(const Fixtures &)>>> criteria = {
        {"tb values of R1, R2, R6", tb_values},
        {"rotation numbers of R1, R2, R3", rotation_numbers},
        {"tb+ + tb- = -n", tb_identity},
        {"seven stabilization class equalities", stab_equalities},
        {"exchange rigidity and R6 exclusion", rigidity},
        {"exchange class inequalities", class_inequalities},
        {"genus two surfaces bounded by R1 and R7", surfaces},
        {"group pipeline", groups},
        {"knot identification", identification},
        {"dividing codes", codes},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second(f);
        } catch (const std::exception &e) {
            r = {false, std::string("error: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !r.pass;
        std::printf("criterion %2zu %s  %s (%.2fs): %s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), s,
                    r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
