#pragma once

#include "bott/poly.hpp"
#include "bott/rational.hpp"

#include <array>
#include <vector>

namespace bott {

struct SquareFiberData {
    Rat p0, p1, p2;
    Poly2 Q() const;  // p0 + p1 z1 + p2 z2
    void validate() const;
};

struct AkSolution {
    Rat a11, a12, a22, A1, A2, A3;
};

struct AkPolys {
    Poly2 P11, P12, P22;
};

// Unknown order (a11, a12, a22, A1, A2, A3).
std::array<std::array<Rat, 6>, 6> ak_matrix(const SquareFiberData& data);
std::array<Rat, 6> ak_rhs(const SquareFiberData& data);
Rat ak_determinant(const SquareFiberData& data);
Rat ak_quadratic_form(const SquareFiberData& data);  // 6p0^2+6p0p1+p1^2+6p0p2+3p1p2+p2^2

AkSolution solve_ak(const SquareFiberData& data);
AkPolys assemble(const SquareFiberData& data, const AkSolution& sol);
// 4 - P11_{,11} - 2 P12_{,12} - P22_{,22} - (A1 z1 + A2 z2 + A3) Q.
Poly2 ak_residual(const SquareFiberData& data, const AkSolution& sol);

// 2Q + a11 z1(1-z1) > 0 and det(P)/(z1(1-z1)z2(1-z2)) > 0 on the open square.
// Throws Inconclusive past max_levels dyadic refinements.
bool check_positivity(const SquareFiberData& data, const AkSolution& sol, int max_levels = 20);
// Lower bound on p over [0,1]^2 by dyadic boxes; false if a box center is <= 0.
bool certify_positive_on_square(const Poly2& p, int max_levels);

// Both integrability identities at the interior points (i/(g+1), j/(g+1)).
bool check_integrability(const SquareFiberData& data, const AkSolution& sol, int grid = 5);

bool boundary_conditions_check(const AkPolys& P, const Poly2& Q);
bool boundary_conditions_check(const SquareFiberData& data, const AkSolution& sol);

}  // namespace bott
