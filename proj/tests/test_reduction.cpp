#include "doctest.h"

#include "eislat/diagram.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reduction.hpp"
#include "eislat/reflections.hpp"
#include "eislat/textio.hpp"

#include <random>
#include <set>

using namespace eislat;

namespace {

std::string data_file(const char* name) { return std::string(EISLAT_TEST_DATA) + "/" + name; }

const ChangeOfBasis& cob() {
    static const auto c = verify_change_of_basis(read_basis_file(data_path("e1.txt")), e2_rows());
    return c;
}

EVec rho_lh() {
    EVec v(14, Eint(0));
    v[13] = Eint(1);
    return v;
}

// D nodes carried to Lambda+H coordinates
const std::vector<EVec>& nodes_lh() {
    static const std::vector<EVec> n = [] {
        std::vector<EVec> out;
        for (const auto& r : Diagram::get().roots()) out.push_back(to_int(cob().c_inv * to_rat(r)));
        return out;
    }();
    return n;
}

EVec random_root_lh(std::mt19937& rng, int length) {
    EVec v = root_r1();
    std::uniform_int_distribution<int> node(0, 25), bit(0, 1);
    for (int k = 0; k < length; ++k)
        v = reflect(form_lh(), nodes_lh()[node(rng)], bit(rng) ? Eint::w() : Eint::w2(), v);
    return v;
}

Translation t_of(const EVec& l) {
    Erat n = form_leech().ip(l, l);
    Int alpha = mpz_odd_p(n.a.get_num().get_mpz_t()) ? 1 : 0;
    return build_translation(l, alpha);
}

}  // namespace

TEST_CASE("translations") {
    auto basis = leech_z_basis();
    SUBCASE("T_{0,0} is the identity") {
        CHECK(build_translation(EVec(12, Eint(0)), Int(0)).matrix() == RMat::identity(14));
    }
    SUBCASE("form preserving and fixing rho") {
        for (int j = 0; j < 24; j += 5) {
            auto t = t_of(basis[j]);
            CHECK(form_lh().preserved_by(t.matrix()));
            CHECK(t.apply(rho_lh()) == rho_lh());
            for (const auto& g : default_generators().lh) CHECK(in_lh(t.apply(g)));
        }
    }
    SUBCASE("composition law") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, 23), a(-3, 3);
        for (int k = 0; k < 40; ++k) {
            auto t1 = t_of(basis[pick(rng)]);
            auto t2 = t_of(basis[pick(rng)]);
            t1.alpha += 2 * a(rng);
            auto c = compose(t1, t2);
            CHECK(t1.matrix() * t2.matrix() == c.matrix());
        }
    }
    SUBCASE("commutator is a central translation") {
        auto shell = leech_shell_by_shape();
        const EVec& l = basis[0];
        // -theta w in the convention conjugate-linear in the second slot
        const Eint want = -(Eint::theta() * Eint::w());
        std::optional<EVec> l2;
        for (const auto& s : shell) {
            EVec v = to_evec(s);
            if (form_leech().ip(v, l) == to_rat(want)) {
                l2 = v;
                break;
            }
        }
        REQUIRE(l2.has_value());
        RMat t = t_of(l).matrix(), u = t_of(*l2).matrix();
        RMat comm = *inverse(t) * *inverse(u) * t * u;
        CHECK(comm == build_translation(EVec(12, Eint(0)), Int(2)).matrix());
    }
    SUBCASE("parity and membership are enforced") {
        CHECK_THROWS_AS(build_translation(basis[0], Int(1)), std::invalid_argument);
        EVec bad = basis[0];
        bad[0] += Eint(1);
        CHECK_THROWS_AS(build_translation(bad, Int(0)), std::invalid_argument);
    }
}

TEST_CASE("the 50 generators") {
    const auto& g = default_generators();
    REQUIRE(g.roots.size() == 50);
    CHECK(leech_real_det(leech_z_basis()) * leech_real_det(leech_z_basis()) == 1);
    for (std::size_t k = 0; k < 50; ++k) {
        CHECK(form_3e8h().raw(g.roots[k], g.roots[k]) == Eint(-3));
        CHECK(in_3e8h(g.roots[k]));
        CHECK(in_lh(g.lh[k]));
    }
    // independent computation of the same vectors
    CHECK(read_rows_file(data_file("generators_ref.txt")) == g.roots);
    CHECK(g.provenance[0] == "T_1(r1)");
    CHECK(g.provenance[49] == "r2");
    // r1, r2 are not adjacent: <r1, r2> = 2 theta w
    CHECK(form_lh().ip(root_r1(), root_r2()) == to_rat(Eint(2) * Eint::theta() * Eint::w()));

    auto basis = leech_z_basis();
    basis[1] = basis[0];
    CHECK_THROWS_AS(build_generators(basis, cob()), std::invalid_argument);
}

TEST_CASE("height reduction certificates") {
    const auto& g = default_generators();
    const auto& D = Diagram::get();
    SUBCASE("a node needs no steps") {
        auto c = reduce_height(D.root("a"));
        CHECK(c.steps.empty());
        CHECK(c.terminal_node == D.index("a") + 1);
        CHECK(check_certificate(c).ok);
    }
    SUBCASE("g3 reduces directly, g1 needs one perturbation") {
        ReduceOptions none;
        none.certified = {};
        auto c3 = reduce_height(g.roots[2], none);
        for (const auto& s : c3.steps) CHECK_FALSE(s.perturb);
        CHECK(check_certificate(c3).ok);

        CHECK_THROWS_AS(reduce_height(g.roots[0], none), std::runtime_error);
        ReduceOptions some;
        some.certified = {3, 4, 6};
        auto c1 = reduce_height(g.roots[0], some);
        int p = 0;
        for (const auto& s : c1.steps) p += s.perturb;
        CHECK(p == 1);
        CHECK(check_certificate(c1).ok);

        auto bad = c1;
        bad.steps[bad.steps.size() / 2].eps = bad.steps[bad.steps.size() / 2].eps == Eint::w() ? Eint::w2() : Eint::w();
        CHECK_FALSE(check_certificate(bad).ok);
        bad = c1;
        bad.steps.pop_back();
        CHECK_FALSE(check_certificate(bad).ok);
        bad = c1;
        bad.terminal_unit = bad.terminal_unit * Eint::w();
        CHECK_FALSE(check_certificate(bad).ok);

        auto back = certificate_from_json(certificate_to_json(c1));
        CHECK(back.target == c1.target);
        CHECK(back.steps.size() == c1.steps.size());
        CHECK(check_certificate(back).ok);
        CHECK_THROWS_AS(certificate_from_json("{\"steps\": 3}"), std::invalid_argument);
    }
    SUBCASE("an empty certificate on another root fails") {
        ReductionCertificate c;
        c.target = g.roots[2];
        c.terminal_node = 1;
        CHECK_FALSE(check_certificate(c).ok);
    }
    SUBCASE("budget") {
        ReduceOptions tight;
        tight.budget = 5;
        CHECK_THROWS_AS(reduce_height(g.roots[2], tight), std::runtime_error);
    }
}

TEST_CASE("all 50 generators are certified") {
    auto certs = certify_generators();
    auto rep = check_certificates(certs);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.ok);
    }
    // the policy generators are certified without help
    for (int k : {3, 4, 6})
        for (const auto& s : certs[k - 1].steps) CHECK_FALSE(s.perturb);
}

TEST_CASE("Leech closest vector") {
    auto basis = leech_z_basis();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int k = 0; k < 100; ++k) {
        std::vector<cplx> t(12);
        for (auto& x : t) x = cplx(u(rng), u(rng));
        EVec l = leech_closest(t);
        REQUIRE(leech_contains(l).has_value());
        double d = 0;
        for (int i = 0; i < 12; ++i) d += std::norm(t[i] - l[i].to_complex());
        CHECK(d <= 9 + 1e-9);  // covering radius
        // moving by a basis vector never helps
        for (const auto& b : basis)
            for (int s : {-1, 1}) {
                double e = 0;
                for (int i = 0; i < 12; ++i) e += std::norm(t[i] - (l[i] + Eint(s) * b[i]).to_complex());
                CHECK(e >= d - 1e-9);
            }
    }
    // a lattice point perturbed slightly decodes to itself
    for (int k = 0; k < 20; ++k) {
        EVec v(12, Eint(0));
        for (const auto& b : basis) {
            int m = c(rng);
            for (int i = 0; i < 12; ++i) v[i] += Eint(m) * b[i];
        }
        std::vector<cplx> t(12);
        for (int i = 0; i < 12; ++i) t[i] = v[i].to_complex() + cplx(u(rng), u(rng)) * 0.05;
        CHECK(leech_closest(t) == v);
    }
}

TEST_CASE("h-reduction by Psi reflections") {
    SUBCASE("h = 1 needs nothing") {
        auto r = conway_reduce(root_r1());
        CHECK(r.steps.empty());
        CHECK(r.final_root == root_r1());
    }
    SUBCASE("random roots reduce with strictly decreasing h") {
        std::mt19937 rng(3);
        int nontrivial = 0;
        for (int k = 0; k < 150; ++k) {
            EVec mu = random_root_lh(rng, 5);
            auto res = conway_reduce(mu);
            CHECK(h_squared(res.final_root) == 1);
            Int prev = h_squared(mu);
            EVec y = mu;
            for (const auto& s : res.steps) {
                CHECK(s.h2_after < prev);
                prev = s.h2_after;
                EVec r = s.r.root();
                CHECK(form_lh().raw(r, r) == Eint(-9));
                CHECK(in_lh(r));
                CHECK(r[12] == Eint(1));
                y = reflect(form_lh(), r, s.eps, y);
            }
            CHECK(y == res.final_root);
            nontrivial += !res.steps.empty();
        }
        CHECK(nontrivial > 100);
    }
    SUBCASE("rejects non-roots") {
        EVec v = root_r1();
        v[12] = Eint(2);
        CHECK_THROWS_AS(conway_reduce(v), std::invalid_argument);
    }
}

TEST_CASE("roots of height at most one") {
    auto scan = min_height_scan();
    std::set<int> nodes;
    const auto& D = Diagram::get();
    for (const auto& h : scan.hits) {
        CHECK(h.node != 0);
        CHECK(h.height_sq == Sqrt3(1));
        nodes.insert(h.node);
        bool point = D.node(h.node - 1).point;
        // points have <w_P, r> = 0 and come in all six unit multiples,
        // lines appear once with <w_P, r> = theta
        CHECK(h.wp_ip == (point ? Eint(0) : Eint::theta()));
    }
    CHECK(nodes.size() == 26);
    CHECK(scan.hits.size() == 13 * 6 + 13);
    // each line is recovered as a unit multiple of itself
    for (int l : D.lines()) {
        bool found = false;
        for (const auto& h : scan.hits)
            found = found || (h.node == l + 1 && unit_ratio(h.root, D.node(l).root).has_value());
        CHECK(found);
    }
}
