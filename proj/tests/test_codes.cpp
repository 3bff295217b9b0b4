#include "doctest.h"

#include "eislat/codes.hpp"

#include <stdexcept>

using namespace eislat;

TEST_CASE("tetracode") {
    auto c = tetracode();
    CHECK(c.words.size() == 9);
    CHECK(c.contains({1, 1, -1, 0}));
    CHECK(c.min_weight() == 3);
    CHECK(c.dimension() == 2);
    CHECK_FALSE(c.contains({1, 0, 0, 0}));
}

TEST_CASE("ternary Golay code") {
    auto c = golay12();
    CHECK(c.words.size() == 729);
    CHECK(c.contains({1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
    CHECK(c.weight_enumerator() == std::map<int, long>{{0, 1}, {6, 264}, {9, 440}, {12, 24}});
    CHECK(c.dimension() == 6);
    CHECK(c.self_orthogonal());
    for (const auto& w : c.words) {
        int wt = 0;
        for (int x : w) wt += x != 0;
        CHECK(wt % 3 == 0);
    }
    // closure under addition and negation
    for (std::size_t i = 0; i < c.words.size(); i += 37)
        for (std::size_t j = 0; j < c.words.size(); j += 41) {
            Word s(12), n(12);
            for (int k = 0; k < 12; ++k) {
                s[k] = f3(c.words[i][k] + c.words[j][k]);
                n[k] = f3(-c.words[i][k]);
            }
            CHECK(c.contains(s));
            CHECK(c.contains(n));
        }
}

TEST_CASE("quadratic residue codes") {
    auto t = std::get<TernaryCode>(qr_code(11));
    CHECK(t.length == 12);
    CHECK(t.dimension() == 6);
    CHECK(t.weight_enumerator() == golay12().weight_enumerator());
    auto b = std::get<BinaryCode>(qr_code(23));
    CHECK(b.length == 24);
    CHECK(b.dimension() == 12);
    CHECK(b.min_weight() == 8);
    CHECK(b.weight_enumerator() == std::map<int, long>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
    CHECK_THROWS_AS(qr_code(7), std::invalid_argument);
}
