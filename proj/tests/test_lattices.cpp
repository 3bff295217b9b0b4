#include "doctest.h"

#include "eislat/lattices.hpp"

#include <random>

using namespace eislat;

namespace {
EVec unitvec(std::size_t n, std::size_t i, Eint x) {
    EVec v(n, Eint(0));
    v[i] = x;
    return v;
}
}  // namespace

TEST_CASE("Leech membership") {
    EVec zero(12, Eint(0));
    auto w = leech_contains(zero);
    REQUIRE(w);
    CHECK(w->m == 0);
    EVec v = zero;
    v[0] = Eint(3);
    v[1] = Eint(-3);
    REQUIRE(leech_contains(v));
    CHECK(form_leech().norm(v) == Erat(-6));
    CHECK_FALSE(leech_contains(unitvec(12, 0, Eint(3))));
    // witness reconstructs the vector
    auto wit = leech_contains(v);
    for (int i = 0; i < 12; ++i)
        CHECK(Eint(wit->m) + Eint::theta() * Eint(wit->c[i]) + Eint(3) * wit->z[i] == v[i]);
}

TEST_CASE("E8 membership") {
    CHECK(e8_contains(unitvec(4, 0, Eint::theta())));
    CHECK(e8_contains({1, 1, -1, 0}));
    CHECK_FALSE(e8_contains(unitvec(4, 0, Eint(1))));
}

TEST_CASE("E8 shells") {
    CHECK(shell_e8(-3).size() == 240);
    CHECK(shell_e8(-1).empty());
    CHECK(shell_e8(-2).empty());
    for (const auto& r : shell_e8(-3)) CHECK(form_e8().norm(r) == Erat(-3));
}

TEST_CASE("discriminants") {
    CHECK(discriminant(e8_lattice()) == 9);
    CHECK(discriminant(h_lattice()) == 3);
    auto lam = leech_lattice();
    CHECK(lam.basis.size() == 12);
    // real form unimodular over Z means |det| = 3^6 for the Hermitian Gram at this scaling
    CHECK(discriminant(lam) == 729);
    std::vector<EVec> lh;
    for (auto v : lam.basis) {
        v.resize(14, Eint(0));
        lh.push_back(v);
    }
    lh.push_back(unitvec(14, 12, Eint(1)));
    lh.push_back(unitvec(14, 13, Eint(1)));
    CHECK(discriminant(form_lh(), lh) == 2187);
}

TEST_CASE("Leech Z-basis is unimodular for the real form") {
    auto b = leech_z_basis();
    REQUIRE(b.size() == 24);
    RMat g(24, 24);
    Form f = form_leech();
    for (int i = 0; i < 24; ++i) {
        CHECK(leech_contains(b[i]));
        CHECK(f.norm(b[i]) == Erat(-6));
        for (int j = 0; j < 24; ++j) g(i, j) = Erat(real_form(f, b[i], b[j]), Rat(0));
    }
    Erat d = det(g);
    CHECK(abs(d.a) == 1);
}

TEST_CASE("inner products in Lambda are theta divisible and the real form is even") {
    auto b = leech_z_basis();
    Form f = form_lh();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rand_vec = [&] {
        EVec v(14, Eint(0));
        for (const auto& x : b)
            v = v + [&] {
                EVec y = x;
                y.resize(14, Eint(0));
                return scale(Eint(coef(rng)), y);
            }();
        v[12] = Eint(Int(coef(rng)), Int(coef(rng)));
        v[13] = Eint(Int(coef(rng)), Int(coef(rng)));
        return v;
    };
    for (int t = 0; t < 1000; ++t) {
        EVec u = rand_vec(), v = rand_vec();
        CHECK(in_lh(u));
        Erat z = f.ip(u, v);
        REQUIRE(is_integral(z));
        CHECK(divides(Eint::theta(), to_int(z)));
        Rat q = real_form(f, u, u);
        CHECK(q.get_den() == 1);
        CHECK(q.get_num() % 2 == 0);
        if (t < 200 && !is_zero(EVec(u.begin(), u.begin() + 12))) {
            EVec lam(u.begin(), u.begin() + 12);
            CHECK(form_leech().norm(lam).a <= -6);
        }
    }
}

TEST_CASE("affine E8 relation") {
    const Eint t = -Eint::theta() * Eint::w2();
    EVec c{t, 0, 0, 0}, e{0, t, 0, 0}, f{0, 1, 1, 1}, d{1, 1, -1, 0}, b{1, 0, 1, -1};
    CHECK(affine_e8_check(c, d, e, f, b));
    for (const auto& u : units())
        CHECK(affine_e8_check(scale(u, c), scale(u, d), scale(u, e), scale(u, f), scale(u, b)));
    CHECK_FALSE(affine_e8_check(c, d, e, f, scale(Eint(-1), b)));
    CHECK_THROWS(affine_e8_check(EVec(4, Eint(0)), d, e, f, b));
}
