#include "doctest.h"

#include "eislat/form.hpp"
#include "eislat/matrix.hpp"
#include "eislat/ring.hpp"
#include "eislat/textio.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace eislat;

namespace {

std::mt19937_64 rng(20240611);

Eint rand_eint(long r = 50) {
    std::uniform_int_distribution<long> d(-r, r);
    return Eint(Int(d(rng)), Int(d(rng)));
}
Cint rand_cint(long r = 20) {
    std::uniform_int_distribution<long> d(-r, r);
    return Cint(Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng)));
}
Sqrt3 rand_s3(long r) {
    std::uniform_int_distribution<long> d(-r, r);
    return Sqrt3(Rat(d(rng)), Rat(d(rng)));
}

}  // namespace

TEST_CASE("Eisenstein products") {
    const Eint w = Eint::w(), w2 = Eint::w2(), th = Eint::theta();
    CHECK(w * w2 == Eint(1));
    CHECK(w * w == w2);
    CHECK(th * th == Eint(-3));
    CHECK(th.conj() == -th);
    CHECK(th == w - w.conj());
    CHECK((Eint(2) + w).norm() == 3);
    CHECK(units().size() == 6);
    for (const auto& u : units()) CHECK(u.norm() == 1);
}

TEST_CASE("theta divisibility") {
    const Eint th = Eint::theta();
    CHECK(divides(th, Eint(3)));
    CHECK_FALSE(divides(th, Eint(1)));
    CHECK(divides(th, th));
    CHECK_THROWS_AS(divides(Eint(0), Eint(1)), std::invalid_argument);
    CHECK(residue_theta(Eint::w()) == 1);
    CHECK(residue_theta(Eint(-1)) == -1);
    CHECK(residue_theta(th) == 0);
}

TEST_CASE("hermitian inner product examples") {
    const Eint th = Eint::theta();
    EMat g(2, 2);
    g(0, 1) = -th;
    g(1, 0) = th;
    CHECK(hermitian_ip(EVec{1, 0}, EVec{0, 1}, g) == -th);
    // H cell of the form module agrees with the explicit Gram matrix
    Form h = form_h();
    EVec r1{Eint(1), Eint::w2()};
    CHECK(h.raw(r1, r1) == Eint(-3));
    CHECK(hermitian_ip(r1, r1, g) == Eint(-3));
    CHECK(h.raw(r1, EVec{0, 0}) == Eint(0));
    CHECK(to_rat(g) == h.gram());
}

TEST_CASE("form is conjugate linear in the first slot") {
    Form f = form_3e8h();
    for (int t = 0; t < 200; ++t) {
        EVec u(14), v(14);
        for (auto& x : u) x = rand_eint(5);
        for (auto& x : v) x = rand_eint(5);
        Eint s = rand_eint(5);
        CHECK(f.raw(u, v) == f.raw(v, u).conj());
        CHECK(f.raw(scale(s, u), v) == s.conj() * f.raw(u, v));
        CHECK(f.raw(u, scale(s, v)) == s * f.raw(u, v));
        CHECK(f.raw(u, v) == hermitian_ip(u, v, to_int(f.gram()).value()));
    }
}

TEST_CASE("Q(sqrt3) ordering examples") {
    Sqrt3 x = (Sqrt3(Rat(-3), Rat(4))) / Sqrt3(26);
    CHECK(sqrt3_cmp(x, Sqrt3(0)) > 0);
    CHECK(sqrt3_cmp(Sqrt3(2), Sqrt3::root3()) > 0);
    CHECK(sqrt3_cmp(x, x) == 0);
    CHECK(Sqrt3::root3() * Sqrt3::root3() == Sqrt3(3));
}

TEST_CASE("ring axioms on random elements") {
    for (int t = 0; t < 2000; ++t) {
        Eint a = rand_eint(), b = rand_eint(), c = rand_eint();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        CHECK((a * b).norm() == a.norm() * b.norm());

        Cint x = rand_cint(), y = rand_cint(), z = rand_cint();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);

        CHECK(embed(a * b) == embed(a) * embed(b));
        CHECK(embed(a + b) == embed(a) + embed(b));
        CHECK(embed(a.conj()) == embed(a).conj());

        Sqrt3 p = rand_s3(1000), q = rand_s3(1000), r = rand_s3(1000);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        if (q.galois_norm() != 0) CHECK((p / q) * q == p);
    }
}

TEST_CASE("cyclotomic constants") {
    Cint xi = Cint::xi(), z = Cint::zeta();
    CHECK(xi * xi == -embed(Eint::w()));
    CHECK(xi * z == Cint(1));
    Cint p(1);
    for (int i = 0; i < 12; ++i) p = p * xi;
    CHECK(p == Cint(1));
    CHECK(Cint::sqrt3() * Cint::sqrt3() == Cint(3));
    CHECK(Cint::sqrt3() * xi == embed(Eint::w2() * Eint::theta()));
    CHECK(std::abs(xi.to_complex() - std::polar(1.0, -M_PI / 6)) < 1e-12);
    CHECK(Cint::sqrt3().real_value() == Sqrt3::root3());
}

TEST_CASE("sqrt3 comparison matches floating point") {
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        Sqrt3 x = rand_s3(1000000), y = rand_s3(1000000);
        double dx = x.to_double(), dy = y.to_double();
        if (std::abs(dx - dy) <= 1e-6) continue;
        ++checked;
        CHECK((sqrt3_cmp(x, y) < 0) == (dx < dy));
    }
    CHECK(checked > 9000);
    // near ties that floating point cannot separate reliably
    CHECK(Sqrt3(Rat(1351), Rat(-780)).sign() > 0);   // 1351^2 - 3*780^2 = 1
    CHECK(Sqrt3(Rat(-1351), Rat(780)).sign() < 0);
}

TEST_CASE("exact division and nearest") {
    for (int t = 0; t < 1000; ++t) {
        Eint a = rand_eint(), b = rand_eint();
        if (b.is_zero()) continue;
        auto q = exact_div(a * b, b);
        REQUIRE(q);
        CHECK(*q == a);
        Eint n = nearest((a * b).to_complex() / b.to_complex());
        CHECK(n == a);
    }
}

TEST_CASE("linear algebra over Q(w)") {
    for (int t = 0; t < 20; ++t) {
        RMat m(5, 5);
        for (auto& x : m.d) x = to_rat(rand_eint(4));
        Erat d = det(m);
        if (d.is_zero()) continue;
        auto inv = inverse(m);
        REQUIRE(inv);
        CHECK((m * *inv).is_identity());
        CHECK(det(*inv) * d == Erat(1));
        // characteristic polynomial: constant term is (-1)^n det
        auto cp = charpoly(m);
        CHECK(cp[0] == -d);
        CHECK(cp[5] == Erat(1));
    }
    // left kernel and row basis over Z[w]
    EMat m(4, 2);
    m(0, 0) = Eint(1); m(0, 1) = Eint(2);
    m(1, 0) = Eint(2); m(1, 1) = Eint(4);
    m(2, 0) = Eint::theta(); m(2, 1) = Eint(0);
    m(3, 0) = Eint(0); m(3, 1) = Eint(3);
    auto k = left_kernel(m);
    CHECK(k.size() == 2);
    for (const auto& x : k) {
        EMat row(1, 4);
        for (int i = 0; i < 4; ++i) row(0, i) = x[i];
        CHECK(is_zero((row * m).row(0)));
    }
    auto rb = row_basis({{Eint(2), Eint(0)}, {Eint(3), Eint(0)}, {Eint(0), Eint::theta()}});
    REQUIRE(rb.size() == 2);
    CHECK(rb[0][0].norm() == 1);
}

TEST_CASE("text format round trip") {
    std::istringstream in("# comment\n1,0 -2,3\n\n0,-1 4,4\n");
    auto rows = read_rows(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][1] == Eint(Int(-2), Int(3)));
    std::ostringstream out;
    write_rows(out, rows);
    CHECK(out.str() == "1,0 -2,3\n0,-1 4,4\n");
    CHECK_THROWS(parse_eint("1;2"));
    std::istringstream bad("1,0 2,0\n1,0\n");
    CHECK_THROWS(read_rows(bad));
}
