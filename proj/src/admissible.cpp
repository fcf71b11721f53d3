#include "bott/admissible.hpp"

#include "bott/error.hpp"

#include <algorithm>

namespace bott {

int AdmissibleData::total_dimension() const {
    int d = 1;
    for (const auto& c : components) d += c.d;
    return d;
}

Poly AdmissibleData::p_c() const {
    Poly p(1);
    for (const auto& c : components) p *= Poly::linear(1, c.r).pow(c.d);
    return p;
}

void AdmissibleData::validate() const {
    if (components.empty()) throw Error(ErrorCode::InvalidArgument, "no components");
    for (const auto& c : components) {
        if (c.d < 1) throw Error(ErrorCode::InvalidArgument, "component dimension must be positive");
        if (c.r == 0 || !(abs(c.r) < 1)) throw Error(ErrorCode::InvalidArgument, "need 0 < |r| < 1");
    }
}

namespace {

Poly source_term(const AdmissibleData& data) {
    Poly pc = data.p_c();
    Poly G;
    for (const auto& c : data.components) {
        auto [q, rem] = divmod(pc, Poly::linear(1, c.r));
        G += q * Rat(2 * c.d * c.s * c.r);
    }
    return G;
}

// Solves a small dense system exactly; throws SingularSystem.
std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
    size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorCode::SingularSystem, "singular linear system");
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
            b[i] -= f * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

}  // namespace

ExtremalProfile extremal_polynomial(const AdmissibleData& data) {
    data.validate();
    Poly pc = data.p_c();
    // F = I0 - A1 I1 - A3 I2 + C1 z + C0 with I = double antiderivatives.
    Poly I0 = source_term(data).antiderivative().antiderivative();
    Poly I1 = (Poly::monomial(1, 1) * pc).antiderivative().antiderivative();
    Poly I2 = pc.antiderivative().antiderivative();
    Poly D0 = I0.derivative(), D1 = I1.derivative(), D2 = I2.derivative();
    // Unknowns (A1, A3, C1, C0).
    std::vector<std::vector<Rat>> m{
        {-I1(1), -I2(1), 1, 1},
        {-I1(-1), -I2(-1), -1, 1},
        {-D1(1), -D2(1), 1, 0},
        {-D1(-1), -D2(-1), 1, 0},
    };
    std::vector<Rat> b{-I0(1), -I0(-1), -2 * pc(1) - D0(1), 2 * pc(-1) - D0(-1)};
    auto x = solve_dense(m, b);
    ExtremalProfile p;
    p.A1 = x[0];
    p.A3 = x[1];
    p.F = I0 - I1 * x[0] - I2 * x[1] + Poly({x[3], x[2]});
    return p;
}

bool profile_identity_holds(const ExtremalProfile& profile, const AdmissibleData& data) {
    Poly lhs = source_term(data) - profile.F.derivative().derivative();
    Poly rhs = Poly::linear(profile.A3, profile.A1) * data.p_c();
    return lhs == rhs;
}

bool is_positive_on_interval(const Poly& F) {
    if (F(1) != 0 || F(-1) != 0) throw Error(ErrorCode::InvalidArgument, "F must vanish at z = +-1");
    if (F.is_zero()) return false;
    auto [G, rem] = divmod(F, Poly({1, 0, -1}));
    if (G.degree() == 0) return G.lead() > 0;
    int roots = sturm_count(G, -1, 1) - (G(1) == 0 ? 1 : 0);
    return roots == 0 && G(0) > 0;
}

bool is_csc(const ExtremalProfile& profile) { return profile.A1 == 0; }

bool is_ke_ks(const Rat& r1, const Rat& r2) { return r1 == Rat(1, 2) && r2 == Rat(-1, 2); }

Rat csc_condition(int m, const Rat& rp, const Rat& rm) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
    Poly z = Poly::monomial(1, 1);
    Poly base = (Poly::linear(1, rp) * Poly::linear(1, rm));
    Poly w = base.pow(m), wl = base.pow(m - 1);
    Rat a0 = w.integrate(-1, 1);
    Rat a1 = (z * w).integrate(-1, 1);
    Rat plus = w(1), minus = w(-1);
    Rat k = 2 * m * (rp - rm);
    Rat b0 = plus + minus + k * wl.integrate(-1, 1);
    Rat b1 = plus - minus + k * (z * wl).integrate(-1, 1);
    return a0 * b1 - a1 * b0;
}

Poly csc_condition_poly(int m, const Rat& r_plus) {
    std::vector<Rat> xs, ys;
    for (int i = 0; i <= 2 * m + 1; ++i) {
        Rat x = Rat(-i) / (2 * m + 2);
        xs.push_back(x);
        ys.push_back(csc_condition(m, r_plus, x));
    }
    return interpolate(xs, ys);
}

namespace {

std::vector<CscRoot> roots_in_unit_negative(const Poly& f, const Rat& tol) {
    std::vector<CscRoot> out;
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "condition vanishes identically");
    for (auto [lo, hi] : isolate_roots(f, -1, 0)) {
        Rat v = refine_root(f, lo, hi, tol);
        out.push_back({v, lo, hi});
    }
    std::sort(out.begin(), out.end(), [](const CscRoot& a, const CscRoot& b) { return a.value < b.value; });
    return out;
}

}  // namespace

std::vector<CscRoot> csc_family_solve(int m, const Rat& r_plus, const Rat& tolerance) {
    if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    return roots_in_unit_negative(csc_condition_poly(m, r_plus), tolerance);
}

std::vector<CscRoot> csc_second_family(int m, const Rat& r_plus, const Rat& tolerance) {
    if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    auto [q, rem] = divmod(csc_condition_poly(m, r_plus), Poly::linear(r_plus, 1));
    if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "first family is not a root");
    return roots_in_unit_negative(q, tolerance);
}

Rat cproj_r(const Rat& r, const Rat& alpha, const Rat& beta) {
    Rat den = beta - alpha * r;
    if (den == 0) throw Error(ErrorCode::SingularParameters, "beta - alpha r vanishes");
    return (beta * r - alpha) / den;
}

CprojResult cproj_transform(const Poly& F, const AdmissibleData& data, const Rat& alpha, const Rat& beta) {
    data.validate();
    int d = data.total_dimension();
    if (F.degree() > d + 1) throw Error(ErrorCode::DegreeTooHigh, "deg F exceeds d + 1");
    if (beta * beta == alpha * alpha) throw Error(ErrorCode::SingularParameters, "beta^2 = alpha^2");
    Rat scale = beta * beta - alpha * alpha;
    CprojResult out{Poly(), data};
    for (auto& c : out.data.components) {
        Rat den = beta - alpha * c.r;
        if (den == 0) throw Error(ErrorCode::SingularParameters, "beta - alpha r vanishes");
        for (int i = 0; i < c.d; ++i) scale *= den;
        c.r = cproj_r(c.r, alpha, beta);
    }
    // (beta - alpha z)^{d+1} F(N/D) with N = alpha - beta z, D = -(beta - alpha z).
    Poly N = Poly::linear(alpha, -beta), L = Poly::linear(beta, -alpha);
    Poly acc;
    for (int k = 0; k <= F.degree(); ++k) {
        if (F.coeff(k) == 0) continue;
        Rat sgn = k % 2 ? Rat(-1) : Rat(1);
        acc += N.pow(k) * L.pow(d + 1 - k) * Rat(F.coeff(k) * sgn);
    }
    out.F = acc * Rat(1 / scale);
    return out;
}

Rat scalar_profile(const ExtremalProfile& profile, const AdmissibleData& data, const Rat& z) {
    Rat s = 0;
    for (const auto& c : data.components) {
        Rat den = 1 + c.r * z;
        if (den == 0) throw Error(ErrorCode::PoleHit, "1 + r z vanishes");
        s += 2 * c.d * c.s * c.r / den;
    }
    return s - profile.F.derivative().derivative()(z) / data.p_c()(z);
}

}  // namespace bott
