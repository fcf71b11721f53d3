#include "bott/symplectic.hpp"

#include "bott/cohomology.hpp"
#include "bott/error.hpp"

namespace bott {

namespace {

void check_k(const Rat& k1, const Rat& k2, const Rat& k3) {
    if (!(k3 > 0 && k2 >= k3 && k1 >= k2))
        throw Error(ErrorCode::InvalidArgument, "need k1 >= k2 >= k3 > 0");
}

// Largest j >= 0 with x - j*step > 0, for x, step > 0.
Int last_positive(const Rat& x, const Rat& step) { return ceil_of(x / step) - 1; }

std::int64_t to_i64(const Int& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "enumeration too large");
    return z.get_si();
}

}  // namespace

Int hirzebruch_compat_count(const Rat& k1, const Rat& k2) {
    if (!(k2 > 0 && k1 >= k2)) throw Error(ErrorCode::InvalidArgument, "need k1 >= k2 > 0");
    return ceil_of(k1 / k2);
}

bool stage3_compatible(std::int64_t a, std::int64_t b, std::int64_t c, const std::vector<Rat>& k) {
    if (k.size() != 3) throw Error(ErrorCode::InvalidArgument, "need three weights");
    Rat A = abs(Rat(a)), B = abs(Rat(b)), C = abs(Rat(c));
    if (c == 0) return k[0] - A * k[1] - B * k[2] > 0;
    if (Int(b) != Int(a) * Int(c)) return false;
    Rat inner = k[1] - C * k[2];
    return inner > 0 && k[0] - A * inner > 0;
}

CompatCounts count_compatible(const Rat& k1, const Rat& k2, const Rat& k3) {
    check_k(k1, k2, k3);
    CompatCounts r{0, 0, 0};
    Int bmax = last_positive(k1, k3), cmax = last_positive(k2, k3);
    for (Int j = 0; j <= bmax; ++j) r.n_b0 += ceil_of((k1 - Rat(j) * k3) / k2);
    for (Int j = 1; j <= cmax; ++j) r.n_bne0 += ceil_of(k1 / (k2 - Rat(j) * k3));
    r.n_b = r.n_b0 + r.n_bne0;
    return r;
}

std::vector<CompatibleClass> enumerate_compatible(const Rat& k1, const Rat& k2, const Rat& k3) {
    check_k(k1, k2, k3);
    std::vector<CompatibleClass> out;
    auto add = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        BottMatrix t = BottMatrix::stage3(2 * a, 2 * b, 2 * c);
        out.push_back({a, b, c, t, equivalence_orbit(t).canonical});
    };
    std::vector<Rat> k{k1, k2, k3};
    std::int64_t bmax = to_i64(last_positive(k1, k3)), cmax = to_i64(last_positive(k2, k3));
    // c = 0: a, b >= 0.
    for (std::int64_t b = 0; b <= bmax; ++b)
        for (std::int64_t a = 0; stage3_compatible(a, b, 0, k); ++a) add(a, b, 0);
    // c != 0: a >= 0, c > 0, b = ac.
    for (std::int64_t c = 1; c <= cmax; ++c)
        for (std::int64_t a = 0; stage3_compatible(a, a * c, c, k); ++a) add(a, a * c, c);
    return out;
}

GrowthBounds growth_bounds(const Int& k1, const Int& k2) {
    if (!(k2 >= 2 && k1 >= k2)) throw Error(ErrorCode::InvalidArgument, "need k1 >= k2 >= 2");
    Rat H = 0;
    for (Int i = 1; i < k2; ++i) H += Rat(1) / Rat(i);
    GrowthBounds g;
    g.b0_lower = Rat(k1 * (k1 - 1)) / Rat(2 * k2);
    g.b0_upper = g.b0_lower + Rat((k1 - 1) * (k2 + 1)) / Rat(k2);
    g.bne0_lower = Rat(k1) * H;
    g.bne0_upper = g.bne0_lower + Rat(k2 - 1) + H;
    return g;
}

bool product_class_is_kahler(const BottMatrix& A, const std::vector<Rat>& k) {
    int n = A.n();
    if (static_cast<int>(k.size()) != n) throw Error(ErrorCode::InvalidArgument, "weight vector has wrong length");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (A(i, j) > 0 || A(i, j) % 2 != 0)
                throw Error(ErrorCode::InvalidArgument, "entries must be even and non-positive");
    for (int j = 0; j < n; ++j) {
        Rat s = k[j];
        for (int i = j + 1; i < n; ++i) s += k[i] * Rat(A(i, j)) / 2;
        if (!(s > 0)) return false;
    }
    for (int j = 1; j <= n; ++j) {
        CohomologyClass a = alpha(A, j);
        if (!multiply(A, a, a).is_zero()) return false;
    }
    return true;
}

bool twist1_compatible(const std::vector<std::int64_t>& k, const std::vector<Rat>& r) {
    size_t N = k.size();
    if (r.size() != N + 1) throw Error(ErrorCode::InvalidArgument, "need N + 1 Kahler parameters");
    size_t m = 0;
    while (m < N && k[m] < 0) ++m;
    for (size_t i = m; i < N; ++i)
        if (k[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative entries must come first");
    const Rat& last = r[N];
    if (!(last > 0)) return false;
    for (size_t i = 0; i < N; ++i) {
        if (i < m ? !(r[i] > Rat(-k[i]) * last) : !(r[i] > 0)) return false;
    }
    return true;
}

}  // namespace bott
