// Command line front end. Reports are "key: value" lines ending in RESULT: PASS|FAIL.
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or IO error.

#include "eislat/codes.hpp"
#include "eislat/diagram.hpp"
#include "eislat/isomorphism.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reduction.hpp"
#include "eislat/relations.hpp"
#include "eislat/textio.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <variant>

using namespace eislat;
namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string enumerator_str(const std::map<int, long>& e) {
    std::string s;
    for (const auto& [w, n] : e) {
        if (!s.empty()) s += " + ";
        s += std::to_string(n) + (w ? "w^" + std::to_string(w) : "");
    }
    return s;
}

void print(const Report& r) {
    for (const auto& c : r.checks)
        std::cout << c.name << ": " << (c.ok ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")")
                  << "\n";
}

int finish(const Report& r) {
    std::cout << "RESULT: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return r.ok() ? 0 : 1;
}

std::vector<EVec> read_basis(const std::string& path) {
    if (!fs::exists(path)) throw IoError("no such file: " + path);
    return read_basis_file(path);
}

// ---- per-module reports ----

Report codes_report() {
    Report r;
    auto t = tetracode(), g = golay12();
    r.add("tetracode_size", t.words.size() == 9, std::to_string(t.words.size()));
    r.add("golay12_size", g.words.size() == 729, std::to_string(g.words.size()));
    auto e = g.weight_enumerator();
    std::map<int, long> want{{0, 1}, {6, 264}, {9, 440}, {12, 24}};
    r.add("golay12_weight_enumerator", e == want, enumerator_str(e));
    r.add("golay12_self_orthogonal", g.self_orthogonal());
    auto q = std::get<TernaryCode>(qr_code(11));
    r.add("qr11_weight_enumerator", q.weight_enumerator() == want, enumerator_str(q.weight_enumerator()));
    auto b = std::get<BinaryCode>(qr_code(23));
    std::map<int, long> want24{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    r.add("qr23_weight_enumerator", b.weight_enumerator() == want24, enumerator_str(b.weight_enumerator()));
    return r;
}

Report lattice_report(bool shell) {
    Report r;
    Rat d = discriminant(lh_lattice());
    r.add("disc_L", d == 2187, d.get_str());
    Rat d2 = discriminant(e8h_lattice());
    r.add("disc_3E8_H", d2 == 2187, d2.get_str());
    auto e8 = shell_e8(-3);
    r.add("shell_E8_roots", e8.size() == 240, std::to_string(e8.size()));
    if (shell) {
        auto a = leech_shell_by_shape();
        auto b = leech_shell_by_coordinate();
        r.add("shell_Leech_by_shape", a.size() == 196560, std::to_string(a.size()));
        r.add("shell_Leech_by_coordinate", b.size() == 196560, std::to_string(b.size()));
        r.add("shell_Leech_methods_agree", a == b);
    }
    return r;
}

Report diagram_report(int probe) {
    Report r = verify_diagram();
    r.append(verify_automorphisms());
    if (probe > 0) {
        // numeric and informational: printed, never gating
        auto p = local_max_probe(probe, 1e-4, 1e-9);
        std::cout << "probe_directions: " << p.directions << "\n";
        std::cout << "probe_increased: " << p.increased << "\n";
        std::cout << "probe_max_increase: " << p.max_increase << "\n";
        std::cout << "probe_special_direction_all_decrease: " << (p.special_all_decrease ? "yes" : "no") << "\n";
    }
    return r;
}

Report isom_verify_report(const std::string& e1, const std::string& e1p) {
    Report r;
    const auto e2 = e2_rows();
    auto c = verify_change_of_basis(read_basis(e1), e2);
    for (auto ch : c.report.checks) r.add("E1_" + ch.name, ch.ok, ch.detail);
    auto cp = verify_change_of_basis(read_basis(e1p), e2);
    for (auto ch : cp.report.checks) r.add("E1prime_" + ch.name, ch.ok, ch.detail);
    auto m = verify_m666_leech_form(read_basis(e1p));
    for (auto ch : m.report.checks) r.add("E1prime_" + ch.name, ch.ok, ch.detail);
    return r;
}

Report isom_search_report(const std::string& e1) {
    Report r;
    auto shell = leech_shell_by_shape();
    auto sf = step_f_from_basis(shell, read_basis(e1), 0, 1);
    r.add("step_f_on_shipped_hands", sf.orthogonal.size() == 8,
          std::to_string(sf.orthogonal.size()) + " orthogonal of " + std::to_string(sf.at_min_distance) +
              " at minimal distance");
    auto s = run_search(shell);
    r.append(s.report);
    r.add("search_step_f_counts", s.step_f_orthogonal >= 4,
          std::to_string(s.step_f_orthogonal) + " orthogonal of " + std::to_string(s.step_f_min_distance) +
              " at minimal distance");
    if (!s.basis.empty()) {
        std::cout << "# basis found by the search\n";
        for (const auto& row : s.basis) std::cout << "# " << format_row(row) << "\n";
    }
    return r;
}

std::string cert_name(int k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "g%02d.json", k);
    return buf;
}

int reduce_run(const std::string& out) {
    auto certs = certify_generators();
    if (!out.empty()) {
        std::error_code ec;
        fs::create_directories(out, ec);
        if (ec) throw IoError("cannot create " + out);
        for (const auto& c : certs) {
            std::ofstream f(fs::path(out) / cert_name(c.generator));
            if (!f) throw IoError("cannot write into " + out);
            f << certificate_to_json(c) << "\n";
        }
    }
    for (const auto& c : certs) {
        int p = 0;
        for (const auto& s : c.steps) p += s.perturb;
        std::cout << "g" << c.generator << ": steps " << c.steps.size() << ", perturbations " << p << ", node "
                  << Diagram::get().node(c.terminal_node - 1).name << "\n";
    }
    Report r = check_certificates(certs);
    print(r);
    return finish(r);
}

int reduce_check(const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
    std::vector<ReductionCertificate> certs;
    Report r;
    bool parsed = true;
    for (int k = 1; k <= 50; ++k) {
        fs::path p = fs::path(dir) / cert_name(k);
        std::ifstream f(p);
        if (!f) throw IoError("missing " + p.string());
        std::stringstream ss;
        ss << f.rdbuf();
        try {
            certs.push_back(certificate_from_json(ss.str()));
        } catch (const std::invalid_argument& e) {
            parsed = false;
            r.add("parse_" + cert_name(k), false, e.what());
        }
    }
    if (parsed) r.append(check_certificates(certs));
    print(r);
    return finish(r);
}

Report scan_report() {
    Report r;
    auto s = min_height_scan();
    std::set<int> nodes;
    bool only_nodes = true;
    for (const auto& h : s.hits) {
        only_nodes = only_nodes && h.node != 0;
        nodes.insert(h.node);
    }
    r.add("min_height_only_nodes", only_nodes, std::to_string(s.hits.size()) + " roots");
    r.add("min_height_all_26_nodes", nodes.size() == 26 && !nodes.count(0), std::to_string(nodes.size()));
    std::cout << "scan_multisets: " << s.multisets << "\nscan_reconstructed: " << s.reconstructed << "\n";
    return r;
}

Report relations_report() {
    Report r = verify_relations();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein lattice L: constructions and certificates"};
    app.require_subcommand(1);

    auto* codes = app.add_subcommand("codes", "tetracode, ternary Golay code, QR codes");

    bool shell = false;
    auto* lattice = app.add_subcommand("lattice", "discriminants and shells");
    lattice->add_flag("--shell", shell, "enumerate the Leech shell both ways (minutes)");

    int probe = 0;
    auto* diagram = app.add_subcommand("diagram", "the 26 node diagram and its automorphisms");
    diagram->add_option("--probe", probe, "numeric local maximum probe with this many directions");

    std::string e1 = data_path("e1.txt"), e1p = data_path("e1prime.txt");
    auto* isom = app.add_subcommand("isom", "the isomorphism Lambda+H ~ 3E8+H");
    isom->require_subcommand(1);
    auto* isom_verify = isom->add_subcommand("verify", "check E1 and E1' against E2");
    isom_verify->add_option("--e1", e1, "basis file for E1");
    isom_verify->add_option("--e1prime", e1p, "basis file for E1'");
    auto* isom_search = isom->add_subcommand("search", "rediscover a basis from the Leech shell");
    isom_search->add_option("--e1", e1, "basis whose hands are used for the step (f) count");

    std::string out, dir;
    bool all = false;
    auto* reduce = app.add_subcommand("reduce", "height reduction certificates");
    reduce->require_subcommand(1);
    auto* reduce_run_cmd = reduce->add_subcommand("run", "certify the 50 generators");
    reduce_run_cmd->add_flag("--all", all, "all 50 generators (the default)");
    reduce_run_cmd->add_option("--out", out, "directory for g01.json .. g50.json");
    auto* reduce_check_cmd = reduce->add_subcommand("check", "replay certificates from a directory");
    reduce_check_cmd->add_option("dir", dir, "directory with g01.json .. g50.json")->required();
    auto* reduce_scan = reduce->add_subcommand("scan", "roots of height at most one");

    auto* relations = app.add_subcommand("relations", "spider, deflation, Coxeter orders, phi12 and phi23");
    relations->require_subcommand(1);
    auto* rel_verify = relations->add_subcommand("verify", "verify the relations");
    rel_verify->add_flag("--all", all, "all relations (the default)");

    bool with_search = false;
    auto* verify_all = app.add_subcommand("verify-all", "every module check on the shipped data");
    verify_all->add_flag("--shell", shell, "include the Leech shell enumeration");
    verify_all->add_flag("--search", with_search, "include the search from scratch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*codes) {
            Report r = codes_report();
            print(r);
            return finish(r);
        }
        if (*lattice) {
            Report r = lattice_report(shell);
            print(r);
            return finish(r);
        }
        if (*diagram) {
            Report r = diagram_report(probe);
            print(r);
            return finish(r);
        }
        if (*isom_verify) {
            Report r = isom_verify_report(e1, e1p);
            print(r);
            return finish(r);
        }
        if (*isom_search) {
            Report r = isom_search_report(e1);
            print(r);
            return finish(r);
        }
        if (*reduce_run_cmd) return reduce_run(out);
        if (*reduce_check_cmd) return reduce_check(dir);
        if (*reduce_scan) {
            Report r = scan_report();
            print(r);
            return finish(r);
        }
        if (*rel_verify) {
            Report r = relations_report();
            print(r);
            return finish(r);
        }
        if (*verify_all) {
            Report r;
            auto section = [&](const std::string& name, const Report& s) {
                for (auto c : s.checks) r.add(name + "." + c.name, c.ok, c.detail);
            };
            section("codes", codes_report());
            section("lattice", lattice_report(shell));
            section("diagram", diagram_report(0));
            section("isom", isom_verify_report(e1, e1p));
            if (with_search) section("search", isom_search_report(e1));
            section("reduce", check_certificates(certify_generators()));
            section("scan", scan_report());
            section("relations", relations_report());
            print(r);
            return finish(r);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // file parsing and IO failures surface here
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
