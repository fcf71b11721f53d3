#pragma once

#include "bott/core.hpp"
#include "bott/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bott {

// Normals of the Bott fan in v-coordinates: v_j = e_j, u_j = -(column j of A).
std::vector<Rat> v_normal(const BottMatrix& A, int j);
std::vector<Rat> u_normal(const BottMatrix& A, int j);

// Values of an invariant divisor's support function on the rays:
// s[j] on u_{j+1}, t[j] on v_{j+1}.
struct SupportFunction {
    std::vector<Rat> s;
    std::vector<Rat> t;
};

enum class Ray { U, V };
using BasisChoice = std::vector<Ray>;

// Piecewise-linear extension; w in v-coordinates.
Rat eval_support(const BottMatrix& A, const SupportFunction& psi, const std::vector<Rat>& w);
// Same value, found by trying all 2^n maximal cones.
Rat eval_support_bruteforce(const BottMatrix& A, const SupportFunction& psi, const std::vector<Rat>& w);

// psi(u_j) + psi(v_j) > psi(u_j + v_j) for all j; >= when strict is false (nef).
bool is_ample(const BottMatrix& A, const SupportFunction& psi, bool strict = true);

// coeffs . r > rhs (or >= when not strict).
struct Inequality {
    std::vector<Rat> coeffs;
    Rat rhs;
    bool strict = true;
};

struct KahlerCone {
    BasisChoice basis;
    std::vector<Inequality> inequalities;
    bool first_orthant = false;
};

// D = sum r_j D_{e_j} with e_j fixed by the choice; choice[0] must be U.
KahlerCone kahler_cone(const BottMatrix& A, const BasisChoice& choice);
// The 2^{n-1} choices with first entry U.
std::vector<BasisChoice> generator_bases(int n);
SupportFunction support_of(const BasisChoice& choice, const std::vector<Rat>& r);

struct DemazureRootSet {
    std::vector<std::vector<std::int64_t>> roots;  // sorted, in the basis dual to v
    bool contains(const std::vector<std::int64_t>& chi) const;
};

DemazureRootSet demazure_roots(const BottMatrix& A, int stage_bound = 8);
bool is_reductive(const BottMatrix& A, int stage_bound = 8);

struct CscObstruction {
    bool obstructed = false;
    int witness_row = 0;         // 1-based row with same-signed entries, 0 if none
    bool twisted_block = false;  // leading (n - twist) block is a nontrivial twist-0 tower
};
CscObstruction csc_obstructed(const BottMatrix& A);

bool is_fano(const BottMatrix& A);

enum class KEStatus { KE, NotKE, Unknown };
const char* ke_name(KEStatus s);
KEStatus kahler_einstein_stage34(const BottMatrix& A, int stage_bound = 8);

}  // namespace bott
