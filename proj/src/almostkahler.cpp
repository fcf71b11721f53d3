#include "bott/almostkahler.hpp"

#include "bott/error.hpp"

#include <deque>

namespace bott {

namespace {

Poly2 edge(const Poly2& v) { return v * (Rat(1) - v); }  // v(1 - v)

}  // namespace

Poly2 SquareFiberData::Q() const { return Poly2(p0) + Poly2::x() * p1 + Poly2::y() * p2; }

void SquareFiberData::validate() const {
    if (!(p0 > 0 && p0 + p1 > 0 && p0 + p2 > 0 && p0 + p1 + p2 > 0))
        throw Error(ErrorCode::InvalidArgument, "Q must be positive on the square");
}

std::array<std::array<Rat, 6>, 6> ak_matrix(const SquareFiberData& d) {
    const Rat &p0 = d.p0, &p1 = d.p1, &p2 = d.p2;
    return {{
        {-2, -2, -2, 0, 0, -p0},
        {12, 4, 0, -p0, 0, -p1},
        {0, 4, 12, 0, -p0, -p2},
        {-12, 0, 0, -p1, 0, 0},
        {0, -8, 0, -p2, -p1, 0},
        {0, 0, -12, 0, -p2, 0},
    }};
}

std::array<Rat, 6> ak_rhs(const SquareFiberData& d) {
    return {-4 + 4 * d.p1 + 4 * d.p2 - 8 * d.p0, -16 * d.p1, -16 * d.p2, 0, 0, 0};
}

namespace {

// Gauss-Jordan on [M | b]; returns determinant and solution (if regular).
Rat eliminate(std::array<std::array<Rat, 6>, 6> m, std::array<Rat, 6>& b, bool& regular) {
    Rat det = 1;
    regular = true;
    for (int c = 0; c < 6; ++c) {
        int p = c;
        while (p < 6 && m[p][c] == 0) ++p;
        if (p == 6) {
            regular = false;
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            std::swap(b[p], b[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = 0; i < 6; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (int k = c; k < 6; ++k) m[i][k] -= f * m[c][k];
            b[i] -= f * b[c];
        }
    }
    for (int i = 0; i < 6; ++i) b[i] /= m[i][i];
    return det;
}

}  // namespace

Rat ak_determinant(const SquareFiberData& data) {
    std::array<Rat, 6> b{};
    bool regular;
    return eliminate(ak_matrix(data), b, regular);
}

Rat ak_quadratic_form(const SquareFiberData& d) {
    const Rat &p0 = d.p0, &p1 = d.p1, &p2 = d.p2;
    return 6 * p0 * p0 + 6 * p0 * p1 + p1 * p1 + 6 * p0 * p2 + 3 * p1 * p2 + p2 * p2;
}

AkSolution solve_ak(const SquareFiberData& data) {
    data.validate();
    auto b = ak_rhs(data);
    bool regular;
    eliminate(ak_matrix(data), b, regular);
    if (!regular) throw Error(ErrorCode::SingularSystem, "almost-Kahler system is singular");
    return {b[0], b[1], b[2], b[3], b[4], b[5]};
}

AkPolys assemble(const SquareFiberData& data, const AkSolution& s) {
    Poly2 Q = data.Q(), e1 = edge(Poly2::x()), e2 = edge(Poly2::y());
    return {
        e1 * (Q * Rat(2) + e1 * s.a11),
        e1 * e2 * s.a12,
        e2 * (Q * Rat(2) + e2 * s.a22),
    };
}

Poly2 ak_residual(const SquareFiberData& data, const AkSolution& s) {
    AkPolys P = assemble(data, s);
    Poly2 affine = Poly2(s.A3) + Poly2::x() * s.A1 + Poly2::y() * s.A2;
    return Poly2(4) - P.P11.dx().dx() - P.P12.dx().dy() * Rat(2) - P.P22.dy().dy() - affine * data.Q();
}

bool certify_positive_on_square(const Poly2& p, int max_levels) {
    struct Box {
        Rat x0, y0, h;  // center and half-width
        int level;
    };
    std::deque<Box> queue{{Rat(1, 2), Rat(1, 2), Rat(1, 2), 0}};
    while (!queue.empty()) {
        Box b = queue.front();
        queue.pop_front();
        Poly2 local = p.rescale(b.x0, b.h, b.y0, b.h);
        Rat bound = local.coeff(0, 0);
        const auto& rows = local.rows();
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j)
                if (i + j > 0) bound -= abs(rows[i][j]);
        if (bound > 0) continue;
        if (local.coeff(0, 0) <= 0) return false;  // value at the center
        if (b.level >= max_levels)
            throw Error(ErrorCode::Inconclusive, "positivity not certified within refinement cap");
        Rat q = b.h / 2;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1}) queue.push_back({b.x0 + sx * q, b.y0 + sy * q, q, b.level + 1});
    }
    return true;
}

bool check_positivity(const SquareFiberData& data, const AkSolution& s, int max_levels) {
    Poly2 Q = data.Q(), e1 = edge(Poly2::x()), e2 = edge(Poly2::y());
    Poly2 f1 = Q * Rat(2) + e1 * s.a11;
    Poly2 g2 = Q * Rat(2) + e2 * s.a22;
    Poly2 f2 = f1 * g2 - e1 * e2 * Rat(s.a12 * s.a12);
    return certify_positive_on_square(f1, max_levels) && certify_positive_on_square(f2, max_levels);
}

bool check_integrability(const SquareFiberData& data, const AkSolution& s, int grid) {
    if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be positive");
    AkPolys P = assemble(data, s);
    Poly2 Q = data.Q();
    Poly2 D = P.P11 * P.P22 - P.P12 * P.P12;
    // H^{11} = Q P22 / D, H^{12} = -Q P12 / D, H^{22} = Q P11 / D.
    Poly2 N11 = Q * P.P22, N12 = Q * P.P12 * Rat(-1), N22 = Q * P.P11;
    Poly2 Dx = D.dx(), Dy = D.dy();
    auto deriv = [&](const Poly2& N, bool in_x, const Rat& x, const Rat& y, const Rat& d) -> Rat {
        Rat Nd = in_x ? N.dx()(x, y) : N.dy()(x, y);
        Rat Dd = in_x ? Dx(x, y) : Dy(x, y);
        return (Nd * d - N(x, y) * Dd) / (d * d);
    };
    for (int i = 1; i <= grid; ++i)
        for (int j = 1; j <= grid; ++j) {
            Rat x = Rat(i) / (grid + 1), y = Rat(j) / (grid + 1);
            Rat d = D(x, y);
            if (d == 0) throw Error(ErrorCode::SingularSample, "H is singular at a sample point");
            if (deriv(N11, false, x, y, d) != deriv(N12, true, x, y, d)) return false;
            if (deriv(N22, true, x, y, d) != deriv(N12, false, x, y, d)) return false;
        }
    return true;
}

bool boundary_conditions_check(const AkPolys& P, const Poly2& Q) {
    for (int side : {0, 1}) {
        Rat v(side);
        Rat slope = side == 0 ? 2 : -2;
        if (!P.P11.at_x(v).is_zero() || !P.P12.at_x(v).is_zero()) return false;
        if (!(P.P11.dx().at_x(v) == Q.at_x(v) * slope)) return false;
        if (!P.P22.at_y(v).is_zero() || !P.P12.at_y(v).is_zero()) return false;
        if (!(P.P22.dy().at_y(v) == Q.at_y(v) * slope)) return false;
    }
    return true;
}

bool boundary_conditions_check(const SquareFiberData& data, const AkSolution& sol) {
    return boundary_conditions_check(assemble(data, sol), data.Q());
}

}  // namespace bott
