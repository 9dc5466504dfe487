// legendrid: command line front end for the fixture registry and verifier.
//
// Exit codes: 0 all pass, 1 a claim failed, 2 unknowns but no failure,
// 3 fixture or IO error.

#include <legendrid/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifndef LEGENDRID_FIXTURES
#define LEGENDRID_FIXTURES "fixtures"
#endif

using namespace legendrid;

namespace {

constexpr int kExitFixture = 3;

OrientedGridDiagram resolve_diagram(const Fixtures &f, const std::string &arg) {
    if (arg.size() > 5 && arg.ends_with(".grid"))
        return parse(detail::read_file(arg));
    return f.diagram(arg);
}

void print_invariants(const OrientedGridDiagram &d) {
    auto s = summarize(d);
    nlohmann::ordered_json alex = nlohmann::ordered_json::array();
    for (auto [e, c] : s.alexander.terms())
        alex.push_back({e, c});
    nlohmann::ordered_json j = {{"n", s.n},
                        {"writhe", s.writhe},
                        {"tb_plus", s.tb_plus},
                        {"tb_minus", s.tb_minus},
                        {"rot_plus", s.rot_plus},
                        {"rot_minus", s.rot_minus},
                        {"alexander", alex},
                        {"type", to_string(s.type)}};
    std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grid-diagram calculus for Legendrian knots"};
    app.require_subcommand(1);
    std::string fixture_dir = LEGENDRID_FIXTURES;
    if (const char *env = std::getenv("LEGENDRID_FIXTURES"))
        fixture_dir = env;
    app.add_option("--fixtures", fixture_dir, "fixture directory");

    ExploreOptions explore;
    app.add_option("--threads", explore.threads, "threads for class enumeration")->check(CLI::Range(1u, 256u));

    std::string diagram_arg, type_arg, name_arg, name_b;
    auto *inv = app.add_subcommand("invariants", "classical invariants of a diagram");
    inv->add_option("diagram", diagram_arg, "fixture expression, e.g. 'mu R3', or a .grid file")->required();

    auto *orbit = app.add_subcommand("orbit", "exchange class of a diagram");
    orbit->add_option("diagram", diagram_arg)->required();
    std::size_t budget = explore.node_budget;
    orbit->add_option("--budget", budget, "node budget");

    auto *stab = app.add_subcommand("stab", "exchange class of a stabilization");
    stab->add_option("diagram", diagram_arg)->required();
    stab->add_option("type", type_arg, "I> I< II> or II<")->required();
    stab->add_option("--budget", budget, "node budget");

    auto *surface = app.add_subcommand("surface", "surface diagram summary");
    surface->add_option("name", name_arg)->required();

    auto *group = app.add_subcommand("group", "presentation summary");
    group->add_option("name", name_arg)->required();

    auto *code = app.add_subcommand("code", "dividing codes");
    code->require_subcommand(1);
    auto *code_show = code->add_subcommand("show", "parse and reprint a code");
    code_show->add_option("name", name_arg)->required();
    auto *code_iso = code->add_subcommand("iso", "isomorphism test");
    code_iso->add_option("a", name_arg)->required();
    code_iso->add_option("b", name_b)->required();
    bool reflect = false;
    code_iso->add_flag("--reflect", reflect, "allow reversal of cyclic order");

    auto *verify = app.add_subcommand("verify", "verify the claims in claims.json");
    std::string which;
    verify->add_option("which", which, "prop1, prop2 or all")->required()->check(CLI::IsMember({"prop1", "prop2", "all"}));
    VerifyOptions vo;
    std::size_t vbudget = vo.explore.node_budget;
    int size_cap = 0;
    std::string json_out;
    bool timings = false;
    verify->add_option("--budget", vbudget, "node budget for each class and search");
    verify->add_option("--size-cap", size_cap, "largest grid size in Legendrian searches");
    verify->add_option("--json", json_out, "write the JSON report here");
    verify->add_flag("--timings", timings, "include wall time per claim (breaks byte-for-byte reproducibility)");

    CLI11_PARSE(app, argc, argv);

    Fixtures f;
    try {
        f = load_fixtures(fixture_dir);
    } catch (const std::exception &e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kExitFixture;
    }

    try {
        if (*inv) {
            print_invariants(resolve_diagram(f, diagram_arg));
        } else if (*orbit) {
            explore.node_budget = budget;
            auto d = resolve_diagram(f, diagram_arg);
            auto cls = exchange_class(d, explore);
            std::cout << "size " << cls.size() << "\ncomplete " << (cls.complete ? "true" : "false")
                      << "\nrepresentative\n"
                      << serialize(canonical_form(d));
            return cls.complete ? 0 : 2;
        } else if (*stab) {
            explore.node_budget = budget;
            auto t = parse_stab_type(type_arg);
            if (!t) {
                std::cerr << "unknown stabilization type " << type_arg << "\n";
                return kExitFixture;
            }
            auto cls = stab_class(resolve_diagram(f, diagram_arg), *t, explore);
            std::cout << "size " << cls.size() << "\ncomplete " << (cls.complete ? "true" : "false") << "\n";
            return cls.complete ? 0 : 2;
        } else if (*surface) {
            auto it = f.surfaces.find(name_arg);
            if (it == f.surfaces.end()) {
                std::cerr << "unknown surface " << name_arg << "\n";
                return kExitFixture;
            }
            const auto &s = it->second;
            std::cout << "patches " << s.patches().size() << "\nchi " << euler_characteristic(s) << "\norientable "
                      << (s.orientable() ? "true" : "false") << "\nboundary components " << boundary_components(s)
                      << "\n";
            if (s.orientable() && connected(s))
                std::cout << "genus " << genus(s) << "\n";
            auto b = boundary(s);
            for (auto &[name, g] : f.grids)
                if (equivalent(b, g) || equivalent(reverse(b), g))
                    std::cout << "boundary " << name << "\n";
            std::cout << serialize(b);
        } else if (*group) {
            auto it = f.presentations.find(name_arg);
            if (it == f.presentations.end()) {
                std::cerr << "unknown presentation " << name_arg << "\n";
                return kExitFixture;
            }
            const auto &p = it->second;
            auto ab = abelianization(p);
            std::cout << "generators " << p.generators() << "\nrelators " << p.relators().size()
                      << "\nabelian rank " << ab.free_rank << "\ntorsion";
            for (auto t : ab.torsion)
                std::cout << ' ' << t;
            std::cout << "\nalexander " << fox_alexander(p).to_string() << "\n";
        } else if (*code_show) {
            auto it = f.codes.find(name_arg);
            if (it == f.codes.end()) {
                std::cerr << "unknown code " << name_arg << "\n";
                return kExitFixture;
            }
            std::cout << serialize_code(it->second) << "\nlabels " << it->second.label_count() << "\n";
        } else if (*code_iso) {
            if (!f.codes.count(name_arg) || !f.codes.count(name_b)) {
                std::cerr << "unknown code\n";
                return kExitFixture;
            }
            const bool iso = codes_isomorphic(f.codes.at(name_arg), f.codes.at(name_b), {reflect});
            std::cout << "isomorphic " << (iso ? "true" : "false") << (reflect ? " (reflections allowed)" : "")
                      << "\n";
        } else if (*verify) {
            vo.explore = explore;
            vo.explore.node_budget = vbudget;
            vo.search_budget = vbudget;
            vo.size_cap = size_cap;
            std::vector<std::string> groups = which == "all" ? std::vector<std::string>{"prop1", "prop2"}
                                                             : std::vector<std::string>{which};
            int code_out = 0;
            nlohmann::json all = nlohmann::json::array();
            for (auto &g : groups) {
                auto rep = verify_group(f, g, vo, [&](const ClaimOutcome &c) {
                    if (json_out.empty() || json_out != "-")
                        std::cout << g << " " << c.id << " " << to_string(c.status) << " : " << c.detail << "\n"
                                  << std::flush;
                });
                all.push_back(rep.to_json(timings));
                const int rc = rep.exit_code();
                code_out = rc == 1 || code_out == 1 ? 1 : std::max(code_out, rc);
            }
            if (!json_out.empty()) {
                nlohmann::json doc{{"schema", VerificationReport::schema}, {"reports", all}};
                if (json_out == "-") {
                    std::cout << doc.dump(2) << "\n";
                } else {
                    std::ofstream out(json_out);
                    if (!out) {
                        std::cerr << "cannot write " << json_out << "\n";
                        return kExitFixture;
                    }
                    out << doc.dump(2) << "\n";
                }
            }
            return code_out;
        }
    } catch (const FixtureError &e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kExitFixture;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFixture;
    }
    return 0;
}
