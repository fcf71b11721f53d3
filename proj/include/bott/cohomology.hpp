#pragma once

#include "bott/core.hpp"
#include "bott/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bott {

// Integral class on the square-free monomials; bit k-1 of a mask marks x_k.
class CohomologyClass {
public:
    explicit CohomologyClass(int n = 1);
    static CohomologyClass one(int n);
    static CohomologyClass monomial(int n, std::uint32_t mask, const Int& coeff = 1);

    int n() const { return n_; }
    const Int& operator[](std::uint32_t mask) const { return c_[mask]; }
    Int& operator[](std::uint32_t mask) { return c_[mask]; }
    size_t size() const { return c_.size(); }
    bool is_zero() const;
    CohomologyClass degree_part(int k) const;  // monomials with k factors

    CohomologyClass& operator+=(const CohomologyClass& o);
    CohomologyClass& operator-=(const CohomologyClass& o);
    CohomologyClass& operator*=(const Int& s);
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(CohomologyClass a, const Int& s) { return a *= s; }
    friend CohomologyClass operator*(const Int& s, CohomologyClass a) { return a *= s; }
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    int n_;
    std::vector<Int> c_;
};

struct Mod2Class {
    int n = 1;
    std::vector<std::uint8_t> bits;  // indexed by monomial mask
    bool is_zero() const;
    friend bool operator==(const Mod2Class& a, const Mod2Class& b) { return a.n == b.n && a.bits == b.bits; }
};

inline constexpr int kMaxCohomologyStage = 16;

CohomologyClass x(const BottMatrix& A, int k);
CohomologyClass y(const BottMatrix& A, int k);
CohomologyClass alpha(const BottMatrix& A, int k);

CohomologyClass multiply(const BottMatrix& A, const CohomologyClass& u, const CohomologyClass& v);

CohomologyClass chern_total(const BottMatrix& A);
CohomologyClass chern_1(const BottMatrix& A);
CohomologyClass pontrjagin_total(const BottMatrix& A);
CohomologyClass pontrjagin(const BottMatrix& A, int k);
Mod2Class stiefel_whitney_2(const BottMatrix& A);

bool is_q_trivial(const BottMatrix& A);

struct SquareZeroPrimitive {
    int j;  // 1-based stage
    CohomologyClass beta;
};
std::vector<SquareZeroPrimitive> square_zero_primitives(const BottMatrix& A);

int topological_twist(const BottMatrix& A);

}  // namespace bott
