// Acceptance checks. One PASS/FAIL line per criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "bott/admissible.hpp"
#include "bott/almostkahler.hpp"
#include "bott/cohomology.hpp"
#include "bott/core.hpp"
#include "bott/fan.hpp"
#include "bott/symplectic.hpp"

using namespace bott;

namespace {

// Time limits in seconds, and the root tolerance for criterion 8.
constexpr double kLimit1 = 0.1;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 30.0;
constexpr double kLimit4 = 30.0;
constexpr double kLimit5 = 1.0;
constexpr double kLimit6 = 1.0;
constexpr double kLimit11 = 10.0;
const Rat kRootTol(1, 1000000000);

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

int failures = 0;

void report(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit) out.fail("time limit exceeded");
    if (!out.ok) ++failures;
    std::printf("%s %2d %s (%.3fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.ok ? "" : ": ",
                out.note.c_str());
    std::fflush(stdout);
}

Rat random_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(2, 60);
    int q = den(rng);
    std::uniform_int_distribution<int> num(1, q - 1);
    return Rat(num(rng)) / q;
}

AdmissibleData ks_data(const Rat& r1, const Rat& r2) { return AdmissibleData{{{1, Rat(2), r1}, {1, Rat(-2), r2}}}; }

Poly ks_formula(const Rat& r) {
    return Poly({1, 0, -1}) * Poly({2 - r + r * r, 4 * r - 2, r * (r - 1)}) * (Rat(1) / 2);
}

BottMatrix random_tower(std::mt19937_64& rng, int n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    BottMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) A.set(i, j, d(rng));
    return A;
}

std::vector<BottMatrix> all_towers(int n, int b) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) slots.push_back({i, j});
    std::vector<BottMatrix> out;
    std::vector<int> v(slots.size(), -b);
    while (true) {
        BottMatrix A(n);
        for (size_t s = 0; s < slots.size(); ++s) A.set(slots[s].first, slots[s].second, v[s]);
        out.push_back(A);
        size_t s = 0;
        while (s < v.size() && v[s] == b) v[s++] = -b;
        if (s == v.size()) break;
        ++v[s];
    }
    return out;
}

std::vector<Rat> random_vec(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> dn(-6, 6), dd(1, 3);
    std::vector<Rat> v(n);
    for (auto& x : v) x = Rat(dn(rng)) / dd(rng);
    return v;
}

CohomologyClass random_class(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-5, 5);
    CohomologyClass c(n);
    for (std::uint32_t m = 0; m < c.size(); ++m) c[m] = d(rng);
    return c;
}

std::string r_str(const Rat& r) { return r.get_str(); }

}  // namespace

int main() {
    report(1, "symplectic counts for k = (11,6,1)", kLimit1, [](Outcome& o) {
        auto c = count_compatible(11, 6, 1);
        if (c.n_b0 != 16 || c.n_bne0 != 27 || c.n_b != 43)
            o.fail("got (" + c.n_b0.get_str() + "," + c.n_bne0.get_str() + "," + c.n_b.get_str() + ")");
    });

    report(2, "compatible classes for k = (5,2,1)", kLimit2, [](Outcome& o) {
        std::set<std::tuple<long, long, long>> expect{
            {0, 0, 0}, {0, 2, 0}, {0, 4, 0}, {0, 6, 0}, {0, 8, 0}, {2, 0, 0}, {4, 0, 0},
            {2, 4, 0}, {2, 2, 0}, {0, 0, 2}, {2, 2, 2}, {4, 4, 2}, {6, 6, 2}, {8, 8, 2}};
        auto list = enumerate_compatible(5, 2, 1);
        std::set<std::tuple<long, long, long>> got;
        for (const auto& cl : list) {
            got.insert({2 * cl.a, 2 * cl.b, 2 * cl.c});
            if (!orbit_contains(equivalence_orbit(cl.tower), cl.canonical)) o.fail("canonical form outside orbit");
        }
        if (list.size() != 14) o.fail("got " + std::to_string(list.size()) + " classes");
        if (got != expect) o.fail("class list differs");
    });

    report(3, "reductive scan |a|,|b|,|c| <= 5", kLimit3, [](Outcome& o) {
        int bad = 0;
        for (int a = -5; a <= 5; ++a)
            for (int b = -5; b <= 5; ++b)
                for (int c = -5; c <= 5; ++c) {
                    bool expect = (a == 0 && b * c < 0) || (a == 0 && b == 0 && c == 0);
                    if (is_reductive(BottMatrix::stage3(a, b, c)) != expect) ++bad;
                }
        if (bad) o.fail(std::to_string(bad) + " mismatches");
    });

    report(4, "Fano scan |a|,|b|,|c| <= 2", kLimit4, [](Outcome& o) {
        std::set<BottMatrix> closure;
        for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, -1}, {-1, 0, 1}})
            for (const auto& B : equivalence_orbit(BottMatrix::stage3(a, b, c)).representatives) closure.insert(B);
        int bad = 0;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c) {
                    auto A = BottMatrix::stage3(a, b, c);
                    if (is_fano(A) != (closure.count(A) == 1)) ++bad;
                }
        if (bad) o.fail(std::to_string(bad) + " mismatches");
    });

    report(5, "extremal polynomial of the (1,-1) family", kLimit5, [](Outcome& o) {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 20; ++t) {
            Rat r = random_unit(rng);
            if (extremal_polynomial(ks_data(r, r - 1)).F != ks_formula(r)) o.fail("r = " + r_str(r));
        }
    });

    report(6, "c-projective transform F_r -> F_{1-r}", kLimit6, [](Outcome& o) {
        std::mt19937_64 rng(6);
        for (int t = 0; t < 20; ++t) {
            Rat r = random_unit(rng);
            Rat alpha = (2 * r - 1) / (1 - r + r * r);
            auto res = cproj_transform(ks_formula(r), ks_data(r, r - 1), alpha, 1);
            bool ok = res.F == ks_formula(1 - r) && res.data.components.size() == 2 &&
                      res.data.components[0].r == 1 - r && res.data.components[1].r == -r;
            if (!ok) o.fail("r = " + r_str(r));
        }
    });

    report(7, "CSC on both families and off them", 0, [](Outcome& o) {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 20; ++t) {
            Rat r = random_unit(rng);
            if (!is_csc(extremal_polynomial(ks_data(r, -r)))) o.fail("(r,-r) at r = " + r_str(r));
            if (!is_csc(extremal_polynomial(ks_data(r, r - 1)))) o.fail("(r,r-1) at r = " + r_str(r));
            Rat r2;
            do r2 = -random_unit(rng);
            while (r2 == -r || r2 == r - 1);
            if (is_csc(extremal_polynomial(ks_data(r, r2)))) o.fail("off-family (" + r_str(r) + "," + r_str(r2) + ")");
        }
    });

    report(8, "CSC condition and second-family roots", 0, [](Outcome& o) {
        std::mt19937_64 rng(8);
        for (int m = 1; m <= 5; ++m)
            for (int t = 0; t < 20; ++t) {
                Rat r = random_unit(rng);
                if (csc_condition(m, r, -r) != 0) o.fail("condition nonzero on (r,-r), m = " + std::to_string(m));
            }
        std::string missing;
        for (int m = 2; m <= 4; ++m)
            for (const Rat& rp : {Rat(1, 5), Rat(1, 2), Rat(4, 5)}) {
                auto roots = csc_second_family(m, rp, kRootTol);
                bool found = false;
                for (const auto& x : roots) found |= x.lo >= -1 && x.hi <= 0 && x.value > -1 && x.value < 0;
                if (!found) missing += " (m=" + std::to_string(m) + ", r+=" + r_str(rp) + ")";
            }
        if (!missing.empty()) o.fail("no second-family root in (-1,0) at" + missing);
    });

    report(9, "almost-Kahler system", 0, [](Outcome& o) {
        for (int p0 = 1; p0 <= 8; ++p0)
            for (int p1 = -4; p1 <= 4; ++p1)
                for (int p2 = -4; p2 <= 4; ++p2) {
                    SquareFiberData d{Rat(p0), Rat(p1), Rat(p2)};
                    if (ak_determinant(d) != -96 * Rat(2 * p0 + p1 + p2) * ak_quadratic_form(d))
                        o.fail("determinant identity");
                    if (p0 + p1 <= 0 || p0 + p2 <= 0 || p0 + p1 + p2 <= 0) continue;
                    auto s = solve_ak(d);
                    if (p1 == 0 && p2 == 0 && (s.A1 != 0 || s.A2 != 0)) o.fail("flat data has nonzero slopes");
                }
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<int> p0n(1, 9), pn(1, 9), den(1, 3);
        for (int t = 0; t < 20; ++t) {
            SquareFiberData d{Rat(p0n(rng)) / den(rng), Rat(pn(rng)) / den(rng), Rat(pn(rng)) / den(rng)};
            if (check_integrability(d, solve_ak(d))) o.fail("integrable at p > 0");
        }
    });

    report(10, "property suites", 0, [](Outcome& o) {
        std::mt19937_64 rng(10);
        int bad = 0;
        for (int t = 0; t < 1000; ++t) {
            int n = 2 + t % 5;
            auto A = random_tower(rng, n, 3);
            SupportFunction psi{random_vec(rng, n), random_vec(rng, n)};
            auto w = random_vec(rng, n);
            if (eval_support(A, psi, w) != eval_support_bruteforce(A, psi, w)) ++bad;
        }
        if (bad) o.fail(std::to_string(bad) + " support-function mismatches");

        for (int t = 0; t < 100; ++t) {
            int n = 2 + t % 5;
            auto A = random_tower(rng, n, 3);
            for (int k = 1; k <= n; ++k)
                if (!multiply(A, x(A, k), y(A, k)).is_zero()) o.fail("x_k y_k != 0");
            auto u = random_class(rng, n), v = random_class(rng, n), w = random_class(rng, n);
            bool ok = multiply(A, u, v) == multiply(A, v, u) &&
                      multiply(A, multiply(A, u, v), w) == multiply(A, u, multiply(A, v, w)) &&
                      multiply(A, u, v + w) == multiply(A, u, v) + multiply(A, u, w) &&
                      multiply(A, CohomologyClass::one(n), u) == u;
            if (!ok) o.fail("ring axiom");
        }

        auto towers = all_towers(3, 2);
        auto four = all_towers(4, 1);
        towers.insert(towers.end(), four.begin(), four.end());
        for (const auto& A : towers) {
            auto orb = equivalence_orbit(A);
            std::set<BottMatrix> set(orb.representatives.begin(), orb.representatives.end());
            if (!set.count(A) || !set.count(inverse(A))) o.fail("orbit misses A or its inverse");
            for (const auto& B : orb.representatives)
                for (int k = 1; k <= A.n(); ++k)
                    if (!set.count(fiber_inversion(B, k))) o.fail("orbit not closed");
        }

        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b)
                for (int c = -4; c <= 4; ++c)
                    if (pontrjagin(BottMatrix::stage3(a, b, c), 1) !=
                        CohomologyClass::monomial(3, 3, c * (2 * b - a * c)))
                        o.fail("first Pontrjagin class");
    });

    report(11, "growth bounds for k1 <= 30", kLimit11, [](Outcome& o) {
        for (int k1 = 2; k1 <= 30; ++k1)
            for (int k2 = 2; k2 <= k1; ++k2) {
                auto c = count_compatible(k1, k2, 1);
                auto g = growth_bounds(k1, k2);
                if (!(g.b0_lower <= Rat(c.n_b0) && Rat(c.n_b0) <= g.b0_upper && g.bne0_lower <= Rat(c.n_bne0) &&
                      Rat(c.n_bne0) <= g.bne0_upper))
                    o.fail("bound violated at (" + std::to_string(k1) + "," + std::to_string(k2) + ")");
            }
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
