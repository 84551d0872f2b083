// loopforge: command-line front end for the finite loop/quasigroup toolkit.
//
// Subcommands: enumerate, check, isotope, tcheck, twitness, iso, canon, verify.
// Exit codes: 0 = success/true/confirmed, 1 = property false / not isomorphic /
// counterexample found, 2 = usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopforge/enumeration.hpp"
#include "loopforge/isomorphy.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/loop.hpp"
#include "loopforge/properties.hpp"
#include "loopforge/theorems.hpp"

namespace {

using loopforge::FiniteLoop;
using nlohmann::json;

int default_threads() {
    if (const char* env = std::getenv("LOOPFORGE_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

// Rough work estimate printed before an --allow-large run.
void print_cost_model(int n, bool up_to_iso) {
    std::cerr << "note: order " << n << " enumeration is outside the desk-scale caps; "
              << "expect on the order of 1.7e7 tables at n=7 and >1e10 at n=8"
              << (up_to_iso ? ", each canonicalized at (n-1)! relabelings" : "") << "\n";
}

int cmd_enumerate(int n, bool up_to_iso, const std::string& outdir, bool allow_large) {
    if (allow_large && (n > loopforge::kEnumerationCap || (up_to_iso && n > loopforge::kIsoEnumerationCap)))
        print_cost_model(n, up_to_iso);
    long index = 0;
    auto emit = [&](const FiniteLoop& L) {
        if (outdir.empty()) {
            if (index) std::cout << '\n';
            std::cout << loopforge::to_loop_text(L);
        } else {
            std::ostringstream name;
            name << "loop_" << n << "_" << std::setw(6) << std::setfill('0') << index << ".loop";
            loopforge::write_loop_file((std::filesystem::path(outdir) / name.str()).string(), L);
        }
        ++index;
    };
    if (!outdir.empty()) std::filesystem::create_directories(outdir);
    if (up_to_iso) {
        loopforge::IsoClassEnumerator cursor(n, allow_large);
        while (auto L = cursor.next()) emit(*L);
    } else {
        loopforge::LoopEnumerator cursor(n, allow_large);
        while (auto L = cursor.next()) emit(*L);
    }
    std::cerr << index << " loop(s)\n";
    return 0;
}

int cmd_check(const std::string& file, const std::string& props_arg, bool as_json) {
    FiniteLoop L = loopforge::read_loop_file(file);
    json out = json::array();
    bool all_hold = true;

    std::stringstream ss(props_arg);
    std::string prop;
    while (std::getline(ss, prop, ',')) {
        if (prop == "wip" || prop == "cip" || prop == "lip" || prop == "rip" || prop == "ip" ||
            prop.rfind("m-inverse:", 0) == 0) {
            loopforge::PropertyReport r;
            if (prop == "wip")
                r = loopforge::has_wip(L);
            else if (prop == "cip")
                r = loopforge::has_cip(L);
            else if (prop == "lip")
                r = loopforge::has_lip(L);
            else if (prop == "rip")
                r = loopforge::has_rip(L);
            else if (prop == "ip")
                r = loopforge::has_ip(L);
            else
                r = loopforge::m_inverse_check(L, std::stoi(prop.substr(10)));
            all_hold = all_hold && r.holds;
            if (as_json)
                out.push_back(r.to_json());
            else {
                std::cout << r.property << ": " << (r.holds ? "holds" : "FAILS at (");
                if (!r.holds) {
                    for (size_t i = 0; i < r.witness.size(); ++i)
                        std::cout << (i ? "," : "") << r.witness[i];
                    std::cout << ")";
                }
                std::cout << "\n";
            }
        } else if (prop == "centrum") {
            auto c = loopforge::centrum(L);
            if (as_json)
                out.push_back(json{{"property", "centrum"}, {"elements", c}});
            else {
                std::cout << "centrum:";
                for (int x : c) std::cout << ' ' << x;
                std::cout << "\n";
            }
        } else if (prop == "nuclei") {
            auto ns = loopforge::nuclei(L);
            if (as_json)
                out.push_back(json{{"property", "nuclei"},
                                   {"left", ns.left},
                                   {"middle", ns.middle},
                                   {"right", ns.right}});
            else {
                auto line = [](const char* name, const std::vector<int>& v) {
                    std::cout << name << ":";
                    for (int x : v) std::cout << ' ' << x;
                    std::cout << "\n";
                };
                line("left nucleus", ns.left);
                line("middle nucleus", ns.middle);
                line("right nucleus", ns.right);
            }
        } else if (prop.rfind("traits:", 0) == 0) {
            auto t = loopforge::element_traits(L, std::stoi(prop.substr(7)));
            if (as_json)
                out.push_back(t.to_json());
            else
                std::cout << "traits of " << t.element << ": flexible=" << t.flexible
                          << " left_alt=" << t.left_alternative << " right_alt=" << t.right_alternative
                          << " centrum=" << t.centrum << " rho_aipe=" << loopforge::to_string(t.rho_aipe)
                          << " lambda_aipe=" << loopforge::to_string(t.lambda_aipe)
                          << " rho_aaipe=" << loopforge::to_string(t.rho_aaipe)
                          << " lambda_aaipe=" << loopforge::to_string(t.lambda_aaipe) << "\n";
        } else {
            std::cerr << "error: unknown property '" << prop << "'\n";
            return 2;
        }
    }
    if (as_json) std::cout << out.dump() << "\n";
    return all_hold ? 0 : 1;
}

int cmd_isotope(const std::string& file, int f, int g, const std::string& out) {
    FiniteLoop L = loopforge::read_loop_file(file);
    FiniteLoop H = loopforge::principal_isotope(L, f, g);
    if (out.empty())
        std::cout << loopforge::to_loop_text(H);
    else
        loopforge::write_loop_file(out, H);
    return 0;
}

int cmd_tcheck(const std::string& file1, const std::string& file2, const std::string& triple_file,
               bool as_json) {
    FiniteLoop G = loopforge::read_loop_file(file1);
    FiniteLoop H = loopforge::read_loop_file(file2);
    std::ifstream in(triple_file);
    if (!in) {
        std::cerr << "error: cannot open " << triple_file << "\n";
        return 2;
    }
    json tj = json::parse(in);
    auto t = loopforge::IsotopismTriple::from_json(tj);
    auto rep = loopforge::t_conditions(G, H, t);
    if (as_json)
        std::cout << rep.to_json().dump() << "\n";
    else
        std::cout << "t1=" << rep.t1 << " t21=" << rep.t21 << " t22=" << rep.t22 << " t31=" << rep.t31
                  << " t32=" << rep.t32 << " t2=" << rep.t2() << " t3=" << rep.t3() << " t="
                  << rep.t() << "\n";
    return rep.t() ? 0 : 1;
}

int cmd_twitness(const std::string& file, bool as_json, bool allow_large) {
    FiniteLoop L = loopforge::read_loop_file(file);
    auto ws = loopforge::find_t_witnesses(L, allow_large);
    if (as_json) {
        json out = json::array();
        for (const auto& w : ws)
            out.push_back(json{{"f", w.f}, {"g", w.g}, {"report", w.report.to_json()}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& w : ws) std::cout << "(" << w.f << ", " << w.g << ")\n";
        std::cerr << ws.size() << " witness(es)\n";
    }
    return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2, bool as_json) {
    FiniteLoop G = loopforge::read_loop_file(file1);
    FiniteLoop H = loopforge::read_loop_file(file2);
    auto a = loopforge::find_isomorphism(G, H);
    if (as_json) {
        json out;
        out["isomorphic"] = a.has_value();
        out["isomorphism"] = a ? json(a->image()) : json(nullptr);
        std::cout << out.dump() << "\n";
    } else if (a) {
        std::cout << "isomorphic via " << a->to_cycle_string() << "  image=[";
        for (int i = 0; i < a->degree(); ++i) std::cout << (i ? " " : "") << (*a)[i];
        std::cout << "]\n";
    } else {
        std::cout << "not isomorphic\n";
    }
    return a ? 0 : 1;
}

int cmd_canon(const std::string& file, bool as_json) {
    FiniteLoop L = loopforge::read_loop_file(file);
    auto cf = loopforge::canonical_form(L);
    if (as_json) {
        json out{{"loop", loopforge::loop_to_json(cf.loop)},
                 {"relabeling", cf.relabeling.image()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << loopforge::to_loop_text(cf.loop);
        std::cout << "relabeling: [";
        for (int i = 0; i < cf.relabeling.degree(); ++i)
            std::cout << (i ? " " : "") << cf.relabeling[i];
        std::cout << "]\n";
    }
    return 0;
}

int cmd_verify(const std::string& claim, int max_order, long budget, std::uint64_t seed,
               int threads, bool as_json) {
    loopforge::ScanScope sc;
    sc.max_order = max_order;
    sc.threads = threads;
    auto rep = loopforge::verify(claim, sc);

    if (budget > 0) {
        auto w = loopforge::find_counterexample(claim, budget, seed);
        rep.details["random_search"] = json{{"budget", budget}, {"seed", seed}, {"found", w.has_value()}};
        if (w) {
            rep.status = loopforge::VerifyStatus::counterexample;
            rep.witnesses.push_back(*w);
            ++rep.violations;
        }
    }

    if (as_json)
        std::cout << rep.to_json().dump() << "\n";
    else
        std::cout << rep.to_table();
    return rep.status == loopforge::VerifyStatus::counterexample ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite loop/quasigroup toolkit: properties, isotopes, T conditions, "
                 "enumeration, claim verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--json, --threads, ...) may follow the subcommand

    bool as_json = false;
    bool allow_large = false;
    int threads = default_threads();
    app.add_flag("--json", as_json, "emit JSON instead of human-readable output");
    app.add_flag("--allow-large", allow_large, "override desk-scale order caps (prints a cost note)");
    app.add_option("--threads", threads, "worker threads for scans (default $LOOPFORGE_THREADS or 1)");

    auto* enumerate = app.add_subcommand("enumerate", "stream all reduced loops of an order");
    int n = 0;
    bool up_to_iso = false;
    std::string outdir;
    enumerate->add_option("-n", n, "order")->required();
    enumerate->add_flag("--up-to-iso", up_to_iso, "one canonical representative per isomorphism class");
    enumerate->add_option("-o", outdir, "write one .loop file per loop into this directory");

    auto* check = app.add_subcommand("check", "evaluate properties of a loop file");
    std::string check_file, props;
    check->add_option("file", check_file, ".loop file")->required();
    check->add_option("--props", props,
                      "comma list: wip,cip,lip,rip,ip,m-inverse:M,centrum,nuclei,traits:X")
        ->required();

    auto* isotope = app.add_subcommand("isotope", "write an f,g-principal isotope");
    std::string iso_file, iso_out;
    int opt_f = 0, opt_g = 0;
    isotope->add_option("file", iso_file, ".loop file")->required();
    isotope->add_option("-f", opt_f, "translation element f")->required();
    isotope->add_option("-g", opt_g, "translation element g")->required();
    isotope->add_option("-o", iso_out, "output file (stdout when absent)");

    auto* tcheck = app.add_subcommand("tcheck", "evaluate the T sub-conditions of an isotopic pair");
    std::string t_file1, t_file2, triple_file;
    tcheck->add_option("file1", t_file1, "source .loop")->required();
    tcheck->add_option("file2", t_file2, "isotope .loop")->required();
    tcheck->add_option("--triple", triple_file, "JSON file {\"A\":[...],\"B\":[...],\"C\":[...]}")
        ->required();

    auto* twitness = app.add_subcommand("twitness", "list all (f,g) whose principal isotope satisfies T");
    std::string w_file;
    twitness->add_option("file", w_file, ".loop file")->required();

    auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two loop files");
    std::string i_file1, i_file2;
    iso_cmd->add_option("file1", i_file1)->required();
    iso_cmd->add_option("file2", i_file2)->required();

    auto* canon = app.add_subcommand("canon", "canonical form of a loop file");
    std::string c_file;
    canon->add_option("file", c_file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "scan a registered claim over small orders");
    std::string claim;
    int max_order = 5;
    long budget = 0;
    std::uint64_t seed = 0;
    bool list_claims = false;
    verify_cmd->add_option("claim", claim, "claim id (see --list)");
    verify_cmd->add_option("--max-order", max_order, "largest order to scan (default 5)");
    verify_cmd->add_option("--budget", budget, "extra random instances beyond the exhaustive scan");
    verify_cmd->add_option("--seed", seed, "seed for the random search");
    verify_cmd->add_flag("--list", list_claims, "list registered claim ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) return cmd_enumerate(n, up_to_iso, outdir, allow_large);
        if (*check) return cmd_check(check_file, props, as_json);
        if (*isotope) return cmd_isotope(iso_file, opt_f, opt_g, iso_out);
        if (*tcheck) return cmd_tcheck(t_file1, t_file2, triple_file, as_json);
        if (*twitness) return cmd_twitness(w_file, as_json, allow_large);
        if (*iso_cmd) return cmd_iso(i_file1, i_file2, as_json);
        if (*canon) return cmd_canon(c_file, as_json);
        if (*verify_cmd) {
            if (list_claims) {
                for (const auto& c : loopforge::registered_claims())
                    std::cout << c.id << "  " << c.description << "\n";
                return 0;
            }
            if (claim.empty()) {
                std::cerr << "error: claim id required (or --list)\n";
                return 2;
            }
            return cmd_verify(claim, max_order, budget, seed, threads, as_json);
        }
    } catch (const loopforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
