#include "doctest.h"

#include "eislat/diagram.hpp"
#include "eislat/lattices.hpp"
#include "eislat/reflections.hpp"

#include <random>

using namespace eislat;

namespace {

std::mt19937_64 rng(77);

// random Z[w]-combination of the diagram roots, so it lies in L
EVec random_l_vector(int spread = 3) {
    const auto& D = Diagram::get();
    std::uniform_int_distribution<long> d(-spread, spread);
    EVec v(14, Eint(0));
    for (const auto& n : D.nodes()) v = v + scale(Eint(Int(d(rng)), Int(d(rng))), n.root);
    return v;
}

}  // namespace

TEST_CASE("reflection basics") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    const Eint w = Eint::w();
    for (const auto& n : D.nodes()) {
        CHECK(reflect(f, n.root, w, n.root) == scale(w, n.root));
        CHECK(reflect(f, n.root, Eint::w2(), n.root) == scale(Eint::w2(), n.root));
    }
    // fixes the orthogonal complement
    const EVec& c1 = D.root("c1");
    const EVec& c2 = D.root("c2");
    REQUIRE(f.raw(c1, c2).is_zero());
    CHECK(reflect(f, c1, w, c2) == c2);
    CHECK_THROWS_AS(reflect(f, EVec(14, Eint(0)), w, c2), std::invalid_argument);
    CHECK_THROWS_AS(reflect(f, c1, Eint(2), c2), std::invalid_argument);
}

TEST_CASE("reflections invert and preserve the form") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    std::uniform_int_distribution<int> pick(0, 25);
    for (int t = 0; t < 1000; ++t) {
        const EVec& r = D.node(pick(rng)).root;
        EVec u = random_l_vector(), v = random_l_vector();
        EVec ru = reflect(f, r, Eint::w(), u), rv = reflect(f, r, Eint::w(), v);
        CHECK(reflect(f, r, Eint::w2(), ru) == u);
        CHECK(f.raw(ru, rv) == f.raw(u, v));
        CHECK(in_3e8h(ru));
    }
    for (const auto& n : D.nodes()) CHECK(f.preserved_by(reflection_matrix(f, n.root, Eint::w())));
}

TEST_CASE("adjacency examples") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    CHECK(adjacent(f, D.root("a"), D.root("b1")));
    CHECK_FALSE(adjacent(f, D.root("c1"), D.root("e1")));
    CHECK(braid_check(f, D.root("a"), D.root("b1")));
    CHECK(commute_check(f, D.root("c1"), D.root("c2")));
    CHECK_FALSE(commute_check(f, D.root("a"), D.root("b1")));
}

TEST_CASE("braiding and commuting agree with inner products on all pairs") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    for (int i = 0; i < 26; ++i)
        for (int j = 0; j < 26; ++j) {
            if (i == j) continue;
            const EVec &a = D.node(i).root, &b = D.node(j).root;
            Eint x = f.raw(a, b);
            CHECK((x.is_zero() || x.norm() == 3));
            CHECK(adjacent(f, a, b) == braid_check(f, a, b));
            CHECK(x.is_zero() == commute_check(f, a, b));
        }
}

TEST_CASE("conjugating a reflection by an automorphism") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    auto els = pgl3_elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    EVec extra = reflect(f, D.root("b1"), Eint::w(), D.root("a"));
    for (int t = 0; t < 10; ++t) {
        RMat g = g_action(els[pick(rng)]);
        RMat gi = *inverse(g);
        for (const EVec& r : {D.root("a"), D.root("z2"), extra}) {
            auto gr = to_int(g * to_rat(r));
            REQUIRE(gr.size() == 14);
            RMat lhs = g * reflection_matrix(f, r, Eint::w()) * gi;
            CHECK(lhs == reflection_matrix(f, gr, Eint::w()));
        }
    }
}

TEST_CASE("primitivity is relative to the lattice") {
    const auto& D = Diagram::get();
    // c1 = (-theta w^2, 0, ...) is theta times a vector outside L
    CHECK_FALSE(is_primitive(D.root("c1")));
    CHECK(is_primitive_in(D.root("c1"), in_3e8h));
    CHECK(is_primitive(D.root("a")));
    CHECK_FALSE(is_primitive_in(scale(Eint::theta(), D.root("a")), in_3e8h));
    CHECK_FALSE(is_primitive_in(scale(Eint(2), D.root("c1")), in_3e8h));
}

TEST_CASE("canonical representatives") {
    const auto& D = Diagram::get();
    for (const auto& n : D.nodes()) {
        EVec c = canonical(n.root);
        for (const auto& u : units()) {
            CHECK(canonical(scale(u, n.root)) == c);
            auto q = unit_ratio(scale(u, n.root), n.root);
            REQUIRE(q);
            CHECK(*q == u);
        }
    }
    CHECK_FALSE(unit_ratio(D.root("a"), D.root("b1")));
}

TEST_CASE("radical closure") {
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    auto single = radical_closure(f, {D.root("a")}, 3);
    CHECK(single.roots.size() == 1);
    CHECK(single.saturated);

    std::vector<EVec> m666;
    for (const auto& s : D.m666_names()) m666.push_back(D.root(s));
    REQUIRE(m666.size() == 16);
    CHECK(connected(f, m666));
    std::vector<EVec> prev;
    for (int b = 0; b <= 2; ++b) {
        auto res = radical_closure(f, m666, b);
        CHECK(res.roots.size() > prev.size());
        for (const auto& r : prev) CHECK(std::binary_search(res.roots.begin(), res.roots.end(), r, lex_less));
        CHECK(connected(f, res.roots));
        for (const auto& r : res.roots) CHECK(is_root(f, r));
        prev = res.roots;
    }
    auto capped = radical_closure(f, m666, 5, 100);
    CHECK(capped.capped);
    CHECK_FALSE(capped.saturated);
}

TEST_CASE("a 12-gon completion is a word in the M666 reflections") {
    // f1 e1 d1 c1 b1 a b2 c2 d2 e2 applied to f2 gives w^2 a3
    const Form f = form_3e8h();
    const auto& D = Diagram::get();
    EVec v = D.root("f2");
    for (const char* s : {"e2", "d2", "c2", "b2", "a", "b1", "c1", "d1", "e1", "f1"})
        v = reflect(f, D.root(s), Eint::w(), v);
    CHECK(v == scale(Eint::w2(), D.root("a3")));
}
