#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "bott/core.hpp"
#include "bott/error.hpp"
#include "bott/topology3.hpp"

using namespace bott;

TEST_CASE("stage-3 invariant records") {
    auto s = stage3_invariants(0, 1, -1);
    CHECK(s.p == -2);
    CHECK(s.w2 == 3);
    CHECK(w2_name(s.w2) == "x1+x2");
    CHECK(!s.q_trivial);

    auto z = stage3_invariants(0, 0, 0);
    CHECK(z.q_trivial);
    REQUIRE(z.q_trivial_type.has_value());
    CHECK(*z.q_trivial_type == QTrivialType::Product3);

    for (int a = -2; a <= 2; ++a)
        for (int c = -2; c <= 2; ++c) {
            auto e = stage3_invariants(2 * a, 2 * a * c, 2 * c);
            REQUIRE(e.q_trivial_type.has_value());
            CHECK(*e.q_trivial_type == QTrivialType::Product3);
        }
}

TEST_CASE("invariant consistency over a box") {
    std::set<QTrivialType> types;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c) {
                auto s = stage3_invariants(a, b, c);
                CHECK(s.q_trivial == (s.p == 0));
                CHECK(s.q_trivial == s.q_trivial_type.has_value());
                if (s.q_trivial_type) {
                    types.insert(*s.q_trivial_type);
                    if (*s.q_trivial_type == QTrivialType::Product3) {
                        CHECK(a % 2 == 0);
                        CHECK(b % 2 == 0);
                        CHECK(c % 2 == 0);
                    }
                }
                int w2 = ((a + b) % 2 != 0 ? 1 : 0) | (c % 2 != 0 ? 2 : 0);
                CHECK(s.w2 == w2);
            }
    CHECK(types.size() == 3);
}

TEST_CASE("diffeomorphism examples") {
    CHECK(stage3_diffeomorphic({0, 24, 1}, {0, 8, 3}));
    CHECK(stage3_diffeomorphic({0, 24, 1}, {0, 24, -1}));
    CHECK(!stage3_diffeomorphic({0, 24, 1}, {0, 12, 2}));
    CHECK(stage3_diffeomorphic({3, 1, 4}, {3, 1, 4}));
    // A Q-trivial tower against one that is not.
    CHECK(!stage3_diffeomorphic({0, 0, 0}, {0, 1, 1}));
}

TEST_CASE("diffeomorphism is an equivalence relation") {
    std::vector<Triple> ts;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c) ts.push_back({a, b, c});
    std::vector<std::string> keys;
    for (const auto& t : ts) keys.push_back(stage3_invariants(t.a, t.b, t.c).diffeo_key);
    // Agreement with a key comparison makes the relation an equivalence.
    size_t mismatches = 0;
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = 0; j < ts.size(); ++j)
            if (stage3_diffeomorphic(ts[i], ts[j]) != (keys[i] == keys[j])) ++mismatches;
    CHECK(mismatches == 0);
    // Shared invariants: |p| and vanishing of w2.
    for (size_t i = 0; i < ts.size(); i += 7)
        for (size_t j = 0; j < ts.size(); ++j) {
            if (keys[i] != keys[j]) continue;
            auto si = stage3_invariants(ts[i].a, ts[i].b, ts[i].c);
            auto sj = stage3_invariants(ts[j].a, ts[j].b, ts[j].c);
            CHECK(abs(Rat(si.p)) == abs(Rat(sj.p)));
            CHECK((si.w2 == 0) == (sj.w2 == 0));
        }
}

TEST_CASE("equivalent towers are diffeomorphic") {
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
                auto o = equivalence_orbit(BottMatrix::stage3(a, b, c));
                for (const auto& B : o.representatives)
                    CHECK(stage3_diffeomorphic({a, b, c}, {B(1, 0), B(2, 0), B(2, 1)}));
            }
}

TEST_CASE("one-twist diffeomorphism") {
    CHECK(twist1_diffeomorphic({1, 2, 3}, {-1, -2, 3}));
    CHECK(twist1_diffeomorphic({1, 2, 3}, {3, -1, 2}));
    CHECK(!twist1_diffeomorphic({1, 2, 3}, {1, 2, 4}));
    CHECK(twist1_diffeomorphic({5, -7, 2, 1}, {5, -7, 2, 1}));
}

TEST_CASE("one-twist class counts") {
    CHECK(twist1_class_count({1, 2, 3}) == 4);
    CHECK(twist1_class_count({1, -2, 3, 5}) == 8);
    try {
        twist1_class_count({1, 1, 2});
        FAIL("expected NonGeneric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonGeneric);
    }
    CHECK(twist1_class_count_bruteforce({1, 1, 2}) == 3);
    CHECK_THROWS_AS(twist1_class_count({1, 2}), Error);
    CHECK_THROWS_AS(twist1_class_count({1, 0, 2}), Error);

    std::mt19937_64 rng(83);
    for (int t = 0; t < 20; ++t) {
        int N = 3 + t % 3;
        std::vector<std::int64_t> k;
        std::set<std::int64_t> used;
        std::uniform_int_distribution<int> d(1, 9), s(0, 1);
        while (static_cast<int>(k.size()) < N) {
            int v = d(rng);
            if (used.insert(v).second) k.push_back(s(rng) ? v : -v);
        }
        CHECK(twist1_class_count_bruteforce(k) == (std::int64_t(1) << (N - 1)));
        CHECK(twist1_class_count(k) == (std::int64_t(1) << (N - 1)));
    }
}

TEST_CASE("sign patterns of a one-twist tower share a diffeomorphism type") {
    for (const auto& base : std::vector<std::vector<std::int64_t>>{{1, 1, 2}, {1, 2, 3}, {2, 3, 5, 7}}) {
        int N = static_cast<int>(base.size());
        for (int mask = 0; mask < (1 << N); ++mask) {
            std::vector<std::int64_t> k = base;
            for (int i = 0; i < N; ++i)
                if ((mask >> i) & 1) k[i] = -k[i];
            CHECK(twist1_diffeomorphic(base, k));
        }
        auto other = base;
        other.back() += 2;
        CHECK(!twist1_diffeomorphic(base, other));
    }
}
