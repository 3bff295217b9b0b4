#include "doctest.h"

#include "eislat/diagram.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reflections.hpp"
#include "eislat/textio.hpp"

#include <fstream>
#include <map>
#include <sstream>

using namespace eislat;

namespace {

std::string data_file(const char* name) { return std::string(EISLAT_TEST_DATA) + "/" + name; }

struct Row {
    std::string role;
    EVec root;
    F3Vec plane{};
};

std::map<std::string, Row> load_oracle() {
    std::map<std::string, Row> m;
    std::ifstream in(data_file("diagram.txt"));
    REQUIRE(in);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name, role, tok;
        ls >> name >> role;
        Row r;
        r.role = role;
        while (ls >> tok) r.root.push_back(parse_eint(tok));
        m[name] = r;
    }
    std::ifstream p(data_file("p2f3.txt"));
    REQUIRE(p);
    while (std::getline(p, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        F3Vec v;
        ls >> name >> v[0] >> v[1] >> v[2];
        m.at(name).plane = v;
    }
    return m;
}

bool same_projective(F3Vec a, F3Vec b) {
    for (int s : {1, -1}) {
        bool eq = true;
        for (int k = 0; k < 3; ++k) eq = eq && f3(a[k] - s * b[k]) == 0;
        if (eq) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("diagram roots match the reference table") {
    const auto& D = Diagram::get();
    auto oracle = load_oracle();
    REQUIRE(oracle.size() == 26);
    for (const auto& n : D.nodes()) {
        const auto& o = oracle.at(n.name);
        CHECK(n.root == o.root);
        CHECK((o.role == "point") == n.point);
        CHECK(same_projective(n.plane, o.plane));
    }
    const Eint w2 = Eint::w2();
    EVec a(12, Eint(0));
    a.push_back(Eint(1));
    a.push_back(w2);
    CHECK(D.root("a") == a);
}

TEST_CASE("nodes are roots of L and adjacency is incidence") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    for (int i = 0; i < 26; ++i) {
        const auto& n = D.node(i);
        CHECK(f.raw(n.root, n.root) == Eint(-3));
        CHECK(in_3e8h(n.root));
        CHECK(is_primitive_in(n.root, in_3e8h));
        int deg = 0;
        for (int j = 0; j < 26; ++j) {
            if (i == j) continue;
            bool adj = adjacent(f, n.root, D.node(j).root);
            CHECK(adj == D.incident(i, j));
            deg += adj;
        }
        CHECK(deg == 4);
    }
    // M666: a joined to b_i, b_i to c_i, c_i to d_i, d_i to e_i, e_i to f_i
    auto edge = [&](const std::string& x, const std::string& y) { return adjacent(f, D.root(x), D.root(y)); };
    auto m = D.m666_names();
    int edges = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) edges += edge(m[i], m[j]);
    CHECK(edges == 15);
    for (int i = 1; i <= 3; ++i) {
        std::string k = std::to_string(i);
        CHECK(edge("a", "b" + k));
        CHECK(edge("b" + k, "c" + k));
        CHECK(edge("c" + k, "d" + k));
        CHECK(edge("d" + k, "e" + k));
        CHECK(edge("e" + k, "f" + k));
    }
}

TEST_CASE("diagram identities") {
    Report r = verify_diagram();
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.ok);
    }
    CHECK(disc_f() == Rat(39));
    CHECK(f_primitive());
    CHECK(verify_linear_relations());
}

TEST_CASE("diagram constants") {
    const auto& D = Diagram::get();
    const Form f = form_3e8h();
    const Eint w = Eint::w(), th = Eint::theta();
    CHECK(f.raw(D.w_p, D.w_p) == Eint(3));
    CHECK(f.raw(D.w_l, D.w_l) == Eint(3));
    CHECK(f.raw(D.w_p, D.w_l) == Eint(-4) * th * w);
    Sqrt3 n = real_value(ip(D.rho, D.rho)) / Sqrt3(26 * 26);
    CHECK(n == Sqrt3(Rat(-3, 26), Rat(2, 13)));
    Sqrt3 nm = real_value(ip(D.rho_minus, D.rho_minus)) / Sqrt3(26 * 26);
    CHECK(nm == Sqrt3(Rat(-3, 26), Rat(-2, 13)));
    // <w_P, rho-bar> = sqrt3 / 2
    CHECK(ip(embed(D.w_p), D.rho) == Cint(13) * Cint::sqrt3());
}

TEST_CASE("heights") {
    const auto& D = Diagram::get();
    const Form f = form_3e8h();
    for (const auto& n : D.nodes()) CHECK(height_sq(n.root) == Sqrt3(1));
    CHECK(height_sq(EVec(14, Eint(0))) == Sqrt3(0));
    EVec r = reflect(f, D.root("b1"), Eint::w(), D.root("a"));
    Sqrt3 h = height_sq(r);
    CHECK(h > Sqrt3(1));
    // floating point cross-check of the exact value
    std::complex<double> x = ip(D.rho, embed(r)).to_complex();
    double nr = real_value(ip(D.rho, D.rho)).to_double() / 26;
    CHECK(h.to_double() == doctest::Approx(std::norm(x) / (nr * nr)).epsilon(1e-12));
}

TEST_CASE("angles to rho-bar") {
    const auto& D = Diagram::get();
    Sqrt3 nrho = real_value(ip(D.rho, D.rho)) / Sqrt3(26 * 26);
    for (const auto& n : D.nodes()) {
        CVec r = embed(n.root);
        CHECK(c_squared(D.rho, r) == -(height_sq(r) * nrho) / Sqrt3(3));
    }
    Sqrt3 expect = Sqrt3(Rat(3, 4), Rat(0)) / (Sqrt3(3) * nrho);
    CHECK(c_squared(D.rho, embed(D.w_p)) == expect);
    CHECK(c_squared(D.rho, D.rho) == Sqrt3(1));
    CHECK_THROWS(c_squared(D.rho, CVec(14, Cint(0))));
}

TEST_CASE("projective plane and PGL3") {
    auto els = pgl3_elements();
    CHECK(els.size() == 5616);
    const auto& D = Diagram::get();
    for (int x : D.points()) {
        int k = 0;
        for (int l : D.lines()) k += D.incident(x, l);
        CHECK(k == 4);
    }
    F3Mat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(g_action(id).is_identity());
    CHECK(f3_mul(els[100], f3_inverse(els[100])) == id);
    CHECK_THROWS(g_action(F3Mat{1, 0, 0, 0, 1, 0, 0, 0, 0}));
}

TEST_CASE("automorphisms") {
    Report r = verify_automorphisms();
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.ok);
    }
    // G permutes the roots exactly and preserves L
    const auto& D = Diagram::get();
    auto els = pgl3_elements();
    const Form f = form_3e8h();
    for (std::size_t k = 0; k < els.size(); k += 401) {
        RMat g = g_action(els[k]);
        CHECK(f.preserved_by(g));
        CHECK(preserves_lattice(g));
        auto perm = node_permutation(els[k]);
        for (int i = 0; i < 26; ++i) CHECK(g * to_rat(D.node(i).root) == to_rat(D.node(perm[i]).root));
    }
}

TEST_CASE("local maximum probe") {
    auto p = local_max_probe(1000, 1e-4, 1e-9);
    CHECK(p.directions == 1000);
    CHECK(p.increased == 0);
    auto z = local_max_probe(10, 0.0, 1e-9);
    CHECK(z.max_increase == 0.0);
    // moving along i * rho-minus pushes rho-bar away from every mirror, at second order
    for (long n : {10L, 10000L})
        for (int s : special_direction_signs(n)) CHECK(s == 1);
    CHECK(p.special_all_increase);
}
