#include <doctest.h>

#include <set>
#include <tuple>

#include "bott/core.hpp"
#include "bott/error.hpp"
#include "bott/symplectic.hpp"

using namespace bott;

namespace {

std::vector<Rat> K(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }

}  // namespace

TEST_CASE("Hirzebruch counts") {
    CHECK(hirzebruch_compat_count(5, 2) == 3);
    CHECK(hirzebruch_compat_count(1, 1) == 1);
    CHECK(hirzebruch_compat_count(11, 6) == 2);
    CHECK(hirzebruch_compat_count(4, 2) == 2);
    CHECK(hirzebruch_compat_count(Rat(7, 2), 1) == 4);
}

TEST_CASE("stage-3 compatibility cases") {
    CHECK(stage3_compatible(1, 2, 0, K(5, 2, 1)));
    CHECK(stage3_compatible(1, 1, 1, K(5, 2, 1)));
    CHECK(stage3_compatible(0, 0, 0, K(1, 1, 1)));
    CHECK(stage3_compatible(0, 0, 0, K(3, 2, 1)));
    CHECK(!stage3_compatible(1, 2, 1, K(5, 2, 1)));  // b != ac
    CHECK(!stage3_compatible(3, 0, 0, K(5, 2, 1)));  // 5 - 6 <= 0
    CHECK(!stage3_compatible(0, 0, 2, K(5, 2, 1)));  // k2 - 2 k3 = 0
    CHECK(stage3_compatible(10, 50, 5, K(11, 6, 1)));
}

TEST_CASE("compatibility depends on the signs only through absolute values") {
    for (int a = -3; a <= 3; ++a)
        for (int b = -6; b <= 6; ++b)
            for (int c = -3; c <= 3; ++c) {
                auto k = K(9, 4, 1);
                bool v = stage3_compatible(a, b, c, k);
                CHECK(stage3_compatible(-a, -b, c, k) == v);
                CHECK(stage3_compatible(a, -b, -c, k) == v);
                CHECK(stage3_compatible(-a, b, -c, k) == v);
            }
}

TEST_CASE("compatible counts") {
    auto c = count_compatible(11, 6, 1);
    CHECK(c.n_b0 == 16);
    CHECK(c.n_bne0 == 27);
    CHECK(c.n_b == 43);
    auto d = count_compatible(5, 2, 1);
    CHECK(d.n_b0 == 9);
    CHECK(d.n_bne0 == 5);
    CHECK(d.n_b == 14);
    auto e = count_compatible(1, 1, 1);
    CHECK(e.n_b0 == 1);
    CHECK(e.n_bne0 == 0);
    CHECK(e.n_b == 1);
}

TEST_CASE("the (5,2,1) enumeration") {
    auto list = enumerate_compatible(5, 2, 1);
    std::set<std::tuple<long, long, long>> got;
    for (const auto& cl : list) {
        got.insert({2 * cl.a, 2 * cl.b, 2 * cl.c});
        CHECK(cl.tower == BottMatrix::stage3(2 * cl.a, 2 * cl.b, 2 * cl.c));
        CHECK(orbit_contains(equivalence_orbit(cl.tower), cl.canonical));
    }
    std::set<std::tuple<long, long, long>> expect{
        {0, 0, 0}, {0, 2, 0}, {0, 4, 0}, {0, 6, 0}, {0, 8, 0}, {2, 0, 0}, {4, 0, 0},
        {2, 4, 0}, {2, 2, 0}, {0, 0, 2}, {2, 2, 2}, {4, 4, 2}, {6, 6, 2}, {8, 8, 2}};
    CHECK(list.size() == 14);
    CHECK(got == expect);
}

TEST_CASE("small enumerations") {
    auto one = enumerate_compatible(1, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].tower == BottMatrix::identity(3));
    bool found = false;
    for (const auto& cl : enumerate_compatible(11, 6, 1))
        found |= cl.tower == BottMatrix::stage3(20, 100, 10);
    CHECK(found);
}

TEST_CASE("count equals enumeration length") {
    for (int k1 = 1; k1 <= 12; ++k1)
        for (int k2 = 1; k2 <= k1; ++k2)
            for (int k3 = 1; k3 <= k2; ++k3) {
                auto c = count_compatible(k1, k2, k3);
                CHECK(c.n_b == c.n_b0 + c.n_bne0);
                CHECK(Int(enumerate_compatible(k1, k2, k3).size()) == c.n_b);
            }
}

TEST_CASE("growth bounds") {
    for (int k1 = 2; k1 <= 30; ++k1)
        for (int k2 = 2; k2 <= k1; ++k2) {
            auto c = count_compatible(k1, k2, 1);
            auto g = growth_bounds(k1, k2);
            CHECK(g.b0_lower <= Rat(c.n_b0));
            CHECK(Rat(c.n_b0) <= g.b0_upper);
            CHECK(g.bne0_lower <= Rat(c.n_bne0));
            CHECK(Rat(c.n_bne0) <= g.bne0_upper);
        }
}

TEST_CASE("Kahler class of the product form") {
    CHECK(product_class_is_kahler(BottMatrix::identity(3), K(1, 2, 3)));
    CHECK(product_class_is_kahler(BottMatrix::stage3(-2, 0, 0), K(5, 2, 1)));
    for (int m = 1; m <= 4; ++m)
        for (int k1 = 1; k1 <= 9; ++k1)
            for (int k2 = 1; k2 <= 4; ++k2) {
                BottMatrix H(2);
                H.set(1, 0, -2 * m);
                CHECK(product_class_is_kahler(H, {Rat(k1), Rat(k2)}) == (k1 > m * k2));
            }
    CHECK_THROWS_AS(product_class_is_kahler(BottMatrix::stage3(1, 0, 0), K(5, 2, 1)), Error);
    CHECK_THROWS_AS(product_class_is_kahler(BottMatrix::stage3(2, 0, 0), K(5, 2, 1)), Error);
}

TEST_CASE("one-twist compatibility") {
    CHECK(twist1_compatible({-1, -1}, {Rat(2), Rat(2), Rat(1)}));
    CHECK(twist1_compatible({-2, -3, -1}, {Rat(100), Rat(100), Rat(100), Rat(1)}));
    CHECK(!twist1_compatible({-3, 1}, {Rat(2), Rat(1), Rat(1)}));
    CHECK(twist1_compatible({-3, 1}, {Rat(4), Rat(1), Rat(1)}));
}
