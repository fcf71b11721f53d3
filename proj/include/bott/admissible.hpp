#pragma once

#include "bott/poly.hpp"
#include "bott/rational.hpp"

#include <vector>

namespace bott {

struct AdmissibleComponent {
    int d;  // complex dimension of the base factor
    Rat s;
    Rat r;  // 0 < |r| < 1
};

struct AdmissibleData {
    std::vector<AdmissibleComponent> components;
    int total_dimension() const;  // 1 + sum d_a
    Poly p_c() const;             // prod (1 + r_a z)^{d_a}
    void validate() const;
};

// Scalar curvature A1 z + A3; F(+-1) = 0, F'(+-1) = -+2 p_c(+-1).
struct ExtremalProfile {
    Poly F;
    Rat A1;
    Rat A3;
};

ExtremalProfile extremal_polynomial(const AdmissibleData& data);
// sum 2 d_a s_a r_a p_c / (1 + r_a z) - F'' == (A1 z + A3) p_c as polynomials.
bool profile_identity_holds(const ExtremalProfile& profile, const AdmissibleData& data);

// F > 0 on (-1, 1); F must vanish at +-1.
bool is_positive_on_interval(const Poly& F);

bool is_csc(const ExtremalProfile& profile);
bool is_ke_ks(const Rat& r1, const Rat& r2);

Rat csc_condition(int m, const Rat& r_plus, const Rat& r_minus);
// csc_condition(m, r_plus, .) as a polynomial in r_minus (degree <= 2m).
Poly csc_condition_poly(int m, const Rat& r_plus);

struct CscRoot {
    Rat value;  // within tolerance of the root
    Rat lo, hi; // bracket (lo, hi]
};
// All roots of the condition in (-1, 0).
std::vector<CscRoot> csc_family_solve(int m, const Rat& r_plus, const Rat& tolerance);
// Roots in (-1, 0) after dividing out the first family r_minus = -r_plus.
std::vector<CscRoot> csc_second_family(int m, const Rat& r_plus, const Rat& tolerance);

struct CprojResult {
    Poly F;
    AdmissibleData data;
};
CprojResult cproj_transform(const Poly& F, const AdmissibleData& data, const Rat& alpha, const Rat& beta);
Rat cproj_r(const Rat& r, const Rat& alpha, const Rat& beta);

Rat scalar_profile(const ExtremalProfile& profile, const AdmissibleData& data, const Rat& z);

}  // namespace bott
