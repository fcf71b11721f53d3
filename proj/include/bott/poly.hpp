#pragma once

#include "bott/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bott {

// Dense univariate polynomial over Q; c[i] is the coefficient of z^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}

    static Poly monomial(const Rat& coeff, int degree);
    static Poly linear(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& z) const;
    double eval_double(double z) const;

    Poly derivative() const;
    Poly antiderivative() const;  // zero constant term
    Rat integrate(const Rat& a, const Rat& b) const;
    Poly compose(const Poly& inner) const;
    Poly pow(unsigned e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    Poly operator-() const { return *this * Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const char* var = "z") const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree(const Poly& p);

// Distinct real roots of p in the half-open interval (a, b]; p must be nonzero.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

// Disjoint rational intervals (lo, hi] each holding exactly one distinct root
// of p inside (a, b).  Endpoints are never roots.
std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Rat& a, const Rat& b);

// Bisects an isolating interval of squarefree p down to width <= tol.
Rat refine_root(const Poly& p, Rat lo, Rat hi, const Rat& tol);

// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Dense bivariate polynomial over Q; c[i][j] multiplies x^i y^j.
class Poly2 {
public:
    Poly2() = default;
    Poly2(const Rat& constant);
    static Poly2 x();
    static Poly2 y();

    Rat coeff(int i, int j) const;
    void set(int i, int j, const Rat& v);
    int deg_x() const { return static_cast<int>(c_.size()) - 1; }
    int deg_y() const;
    bool is_zero() const { return c_.empty(); }

    Rat operator()(const Rat& x, const Rat& y) const;
    Poly2 dx() const;
    Poly2 dy() const;
    Poly at_x(const Rat& x) const;  // polynomial in y
    Poly at_y(const Rat& y) const;  // polynomial in x
    // p(x0 + hx*s, y0 + hy*t) as a polynomial in (s, t).
    Poly2 rescale(const Rat& x0, const Rat& hx, const Rat& y0, const Rat& hy) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Rat& s);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const Rat& s) { return a *= s; }
    friend Poly2 operator*(const Rat& s, Poly2 a) { return a *= s; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

    const std::vector<std::vector<Rat>>& rows() const { return c_; }

private:
    void trim();
    std::vector<std::vector<Rat>> c_;
};

}  // namespace bott
