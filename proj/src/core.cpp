#include "bott/core.hpp"

#include "bott/error.hpp"
#include "bott/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bott {

namespace {

std::int64_t to_int64(const Int& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "matrix entry exceeds 64-bit range");
    return z.get_si();
}

// Bareiss determinant; nullopt on 64-bit overflow.
std::optional<std::int64_t> det_fast(std::vector<std::int64_t> m, int n) {
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(m[i * n + j]) * m[k * n + k] -
                             static_cast<__int128>(m[i * n + k]) * m[k * n + j];
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
                m[i * n + j] = static_cast<std::int64_t>(v);
            }
        prev = m[k * n + k];
    }
    return sign * m[n * n - 1];
}

Int det_exact(const std::vector<std::int64_t>& src, int n) {
    std::vector<Int> m(src.begin(), src.end());
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[n * n - 1];
}

bool is_unit_det(const std::vector<std::int64_t>& m, int n) {
    if (auto d = det_fast(m, n)) return *d == 1 || *d == -1;
    Int d = det_exact(m, n);
    return d == 1 || d == -1;
}

// Solves M X = N exactly; M is unimodular.
std::optional<BottMatrix> solve_unipotent(const std::vector<std::int64_t>& M,
                                          const std::vector<std::int64_t>& N, int n) {
    std::vector<Rat> a(n * 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i * 2 * n + j] = M[i * n + j];
            a[i * 2 * n + n + j] = N[i * n + j];
        }
    int w = 2 * n;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p * w + c] == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (int j = 0; j < w; ++j) std::swap(a[p * w + j], a[c * w + j]);
        Rat inv = 1 / a[c * w + c];
        for (int j = c; j < w; ++j) a[c * w + j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i * w + c] == 0) continue;
            Rat f = a[i * w + c];
            for (int j = c; j < w; ++j) a[i * w + j] -= f * a[c * w + j];
        }
    }
    BottMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = a[i * w + n + j];
            if (j > i && v != 0) return std::nullopt;
            if (j == i && v != 1) return std::nullopt;
            if (v.get_den() != 1) return std::nullopt;
            if (j < i) out.set(i, j, to_int64(v.get_num()));
        }
    return out;
}

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t x, std::int64_t y) {
    std::int64_t p, s;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(acc, p, &s))
        throw Error(ErrorCode::InvalidArgument, "matrix entry exceeds 64-bit range");
    return s;
}

}  // namespace

BottMatrix::BottMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "stage must be at least 1");
    for (int i = 0; i < n; ++i) e_[i * n + i] = 1;
}

BottMatrix BottMatrix::stage3(std::int64_t a, std::int64_t b, std::int64_t c) {
    BottMatrix m(3);
    m.set(1, 0, a);
    m.set(2, 0, b);
    m.set(2, 1, c);
    return m;
}

BottMatrix BottMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    int n = static_cast<int>(rows.size());
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "empty matrix");
    BottMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& r = rows[i];
        // Rows may be given in full or truncated after the diagonal.
        if (static_cast<int>(r.size()) != n && static_cast<int>(r.size()) != i + 1)
            throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < static_cast<int>(r.size()); ++j) {
            if (j > i && r[j] != 0) throw Error(ErrorCode::InvalidArgument, "matrix is not lower triangular");
            if (j == i && r[j] != 1) throw Error(ErrorCode::InvalidArgument, "diagonal entry is not 1");
            if (j < i) m.set(i, j, r[j]);
        }
    }
    return m;
}

std::vector<std::vector<std::int64_t>> BottMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> r(n_);
    for (int i = 0; i < n_; ++i) r[i].assign(e_.begin() + i * n_, e_.begin() + (i + 1) * n_);
    return r;
}

std::string BottMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

int twist(const BottMatrix& A) {
    int t = 0;
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < i; ++j)
            if (A(i, j) != 0) {
                ++t;
                break;
            }
    return t;
}

int cotwist(const BottMatrix& A) {
    int t = 0;
    for (int j = 0; j < A.n(); ++j)
        for (int i = j + 1; i < A.n(); ++i)
            if (A(i, j) != 0) {
                ++t;
                break;
            }
    return t;
}

BottMatrix inverse(const BottMatrix& A) {
    int n = A.n();
    BottMatrix B(n);
    // Forward substitution on A B = I, column by column.
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            std::int64_t s = 0;
            for (int k = j; k < i; ++k) s = checked_mul_add(s, A(i, k), B(k, j));
            B.set(i, j, -s);
        }
    return B;
}

std::optional<BottMatrix> block_action(const BottMatrix& A, const Permutation& sigma,
                                       const std::vector<bool>& flips) {
    int n = A.n();
    // M = P - AQ, N = AP - Q.  Column j of P or Q is e_{sigma(j)}, so column j
    // of AP or AQ is column sigma(j) of A.
    std::vector<std::int64_t> M(n * n, 0), N(n * n, 0);
    for (int j = 0; j < n; ++j) {
        int s = sigma[j];
        for (int i = 0; i < n; ++i) {
            if (flips[j]) {
                M[i * n + j] = -A(i, s);
                N[i * n + j] = i == s ? -1 : 0;
            } else {
                M[i * n + j] = i == s ? 1 : 0;
                N[i * n + j] = A(i, s);
            }
        }
    }
    if (!is_unit_det(M, n)) return std::nullopt;
    return solve_unipotent(M, N, n);
}

BottMatrix fiber_inversion(const BottMatrix& A, int k) {
    if (k < 1 || k > A.n()) throw Error(ErrorCode::InvalidArgument, "fiber index out of range");
    Permutation id(A.n());
    std::iota(id.begin(), id.end(), 0);
    std::vector<bool> flips(A.n(), false);
    flips[k - 1] = true;
    auto r = block_action(A, id, flips);
    if (!r) throw Error(ErrorCode::SingularSystem, "fiber inversion failed");
    return *r;
}

std::optional<BottMatrix> permutation_conjugate(const BottMatrix& A, const Permutation& sigma) {
    int n = A.n();
    if (static_cast<int>(sigma.size()) != n) throw Error(ErrorCode::InvalidArgument, "permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (int s : sigma) {
        if (s < 0 || s >= n || seen[s]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
        seen[s] = true;
    }
    BottMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = A(sigma[i], sigma[j]);
            if (j > i && v != 0) return std::nullopt;
            if (j < i) out.set(i, j, v);
        }
    return out;
}

OrbitReport equivalence_orbit(const BottMatrix& A, int stage_bound) {
    int n = A.n();
    if (n > stage_bound)
        throw Error(ErrorCode::StageTooLarge,
                    "orbit enumeration limited to stage " + std::to_string(stage_bound));
    std::vector<BottMatrix> reps;
    Permutation sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> flips(n);
            for (int j = 0; j < n; ++j) flips[j] = (mask >> j) & 1u;
            if (auto B = block_action(A, sigma, flips)) reps.push_back(*B);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    OrbitReport report;
    report.representatives = reps;
    report.canonical = reps.front();
    std::map<BottMatrix, int> index;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) index[reps[i]] = i;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        for (int k = 1; k <= n; ++k) {
            auto it = index.find(fiber_inversion(reps[i], k));
            if (it != index.end() && it->second != i)
                report.moves.push_back({i, it->second, {EquivalenceMove::Kind::FiberInversion, k, {}}});
        }
        for (int j = 1; j < n; ++j) {
            Permutation t(n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[j - 1], t[j]);
            auto B = permutation_conjugate(reps[i], t);
            if (!B) continue;
            auto it = index.find(*B);
            if (it != index.end() && it->second != i)
                report.moves.push_back({i, it->second, {EquivalenceMove::Kind::PermutationConjugation, 0, t}});
        }
    }
    return report;
}

bool orbit_contains(const OrbitReport& orbit, const BottMatrix& B) {
    return std::binary_search(orbit.representatives.begin(), orbit.representatives.end(), B);
}

BottMatrix normalize_twist(const BottMatrix& A) {
    int n = A.n();
    auto zero_row = [](const BottMatrix& M, int i) {
        for (int j = 0; j < i; ++j)
            if (M(i, j) != 0) return false;
        return true;
    };
    BottMatrix B = A;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 1; j < n; ++j) {
            if (zero_row(B, j) && !zero_row(B, j - 1)) {
                Permutation t(n);
                std::iota(t.begin(), t.end(), 0);
                std::swap(t[j - 1], t[j]);
                B = *permutation_conjugate(B, t);  // B(j, j-1) = 0 so always applicable
                moved = true;
            }
        }
    }
    return B;
}

}  // namespace bott
