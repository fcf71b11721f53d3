#include <doctest.h>

#include <random>

#include "bott/error.hpp"
#include "bott/poly.hpp"
#include "bott/rational.hpp"

using namespace bott;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("3/6") == Rat(1, 2));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("0.2") == Rat(1, 5));
    CHECK(parse_rational("-1.5e-2") == Rat(-3, 200));
    CHECK(parse_rational("2E1") == Rat(20));
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("rounding helpers") {
    CHECK(ceil_of(Rat(7, 2)) == 4);
    CHECK(floor_of(Rat(-7, 2)) == -4);
    CHECK(ceil_of(Rat(4)) == 4);
    CHECK(sign(Rat(-1, 3)) == -1);
    CHECK(abs(Rat(-2, 3)) == Rat(2, 3));
}

TEST_CASE("polynomial arithmetic and calculus") {
    Poly p({1, 2, 3});  // 1 + 2z + 3z^2
    Poly q({-1, 1});
    CHECK((p * q).coeffs() == std::vector<Rat>{-1, -1, -1, 3});
    CHECK(p.derivative() == Poly({2, 6}));
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.integrate(0, 1) == Rat(3));
    CHECK(p(Rat(1, 2)) == Rat(11, 4));
    CHECK(p.compose(q) == Poly({2, -4, 3}));
    CHECK(q.pow(3) == Poly({-1, 3, -3, 1}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
}

TEST_CASE("division, gcd and squarefree part") {
    Poly a = Poly({-1, 1}).pow(2) * Poly({2, 1});
    auto [qt, r] = divmod(a, Poly({-1, 1}));
    CHECK(r.is_zero());
    CHECK(qt == Poly({-1, 1}) * Poly({2, 1}));
    CHECK(monic(gcd(a, a.derivative())) == Poly({-1, 1}));
    CHECK(monic(squarefree(a)) == monic(Poly({-1, 1}) * Poly({2, 1})));
}

TEST_CASE("Sturm counts match known roots") {
    // (z - 1/3)(z + 1/2)(z - 2)
    Poly p = Poly({Rat(-1, 3), 1}) * Poly({Rat(1, 2), 1}) * Poly({-2, 1});
    CHECK(sturm_count(p, -1, 1) == 2);
    CHECK(sturm_count(p, 0, 1) == 1);
    CHECK(sturm_count(p, -10, 10) == 3);
    CHECK(sturm_count(p, Rat(1, 3), 1) == 0);  // left endpoint excluded
    CHECK(sturm_count(p, 0, Rat(1, 3)) == 1);  // right endpoint included
    CHECK(sturm_count(Poly({1, 0, 1}), -5, 5) == 0);

    auto iv = isolate_roots(p, -1, 3);
    REQUIRE(iv.size() == 3);
    Rat tol(1, 1000000);
    std::vector<Rat> expect{Rat(-1, 2), Rat(1, 3), Rat(2)};
    for (size_t i = 0; i < 3; ++i) {
        Rat root = refine_root(p, iv[i].first, iv[i].second, tol);
        CHECK(abs(root - expect[i]) <= tol);
    }
}

TEST_CASE("isolation of clustered and repeated roots") {
    Poly p = Poly({Rat(-1, 1000), 1}) * Poly({Rat(-1, 500), 1}) * Poly({Rat(-1, 1000), 1});
    auto iv = isolate_roots(p, -1, 1);
    CHECK(iv.size() == 2);
    for (auto& [lo, hi] : iv) CHECK(lo < hi);
}

TEST_CASE("interpolation recovers random polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        int deg = trial % 7;
        std::vector<Rat> c(deg + 1);
        for (auto& x : c) x = Rat(d(rng)) / (1 + (d(rng) + 9) % 5);
        if (c.back() == 0) c.back() = 1;
        Poly p(c);
        std::vector<Rat> xs, ys;
        for (int i = 0; i <= deg; ++i) {
            xs.push_back(Rat(i) / 3 - 1);
            ys.push_back(p(xs.back()));
        }
        CHECK(interpolate(xs, ys) == p);
    }
}

TEST_CASE("bivariate polynomials") {
    Poly2 x = Poly2::x(), y = Poly2::y();
    Poly2 p = x * x * y + Rat(3) * y - Rat(2);
    CHECK(p(2, 3) == Rat(19));
    CHECK(p.dx() == Rat(2) * x * y);
    CHECK(p.dy() == x * x + Rat(3));
    CHECK(p.at_x(2) == Poly({-2, 7}));
    CHECK(p.at_y(1) == Poly({1, 0, 1}));
    Poly2 s = p.rescale(1, Rat(1, 2), 0, 2);
    CHECK(s(Rat(2), Rat(3, 2)) == p(2, 3));
    CHECK((p - p).is_zero());
}
