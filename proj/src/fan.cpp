#include "bott/fan.hpp"

#include "bott/cohomology.hpp"
#include "bott/error.hpp"

#include <algorithm>
#include <functional>

namespace bott {

namespace {

void check_support(const BottMatrix& A, const SupportFunction& psi) {
    if (static_cast<int>(psi.s.size()) != A.n() || static_cast<int>(psi.t.size()) != A.n())
        throw Error(ErrorCode::InvalidArgument, "support function has wrong length");
}

// Decomposes w over the maximal cone picked index by index; lambda[j] >= 0
// multiplies v_j when use_v[j], else u_j.
void decompose(const BottMatrix& A, std::vector<Rat> w, std::vector<Rat>& lambda, std::vector<bool>& use_v) {
    int n = A.n();
    lambda.assign(n, 0);
    use_v.assign(n, true);
    for (int j = 0; j < n; ++j) {
        if (w[j] >= 0) {
            lambda[j] = w[j];
            continue;
        }
        Rat l = -w[j];
        lambda[j] = l;
        use_v[j] = false;
        // subtract l * u_j = -l * column j
        for (int i = j; i < n; ++i) w[i] += l * A(i, j);
    }
}

}  // namespace

std::vector<Rat> v_normal(const BottMatrix& A, int j) {
    std::vector<Rat> v(A.n());
    v[j - 1] = 1;
    return v;
}

std::vector<Rat> u_normal(const BottMatrix& A, int j) {
    std::vector<Rat> u(A.n());
    for (int i = 0; i < A.n(); ++i) u[i] = -A(i, j - 1);
    return u;
}

Rat eval_support(const BottMatrix& A, const SupportFunction& psi, const std::vector<Rat>& w) {
    check_support(A, psi);
    if (static_cast<int>(w.size()) != A.n()) throw Error(ErrorCode::InvalidArgument, "vector has wrong length");
    std::vector<Rat> lambda;
    std::vector<bool> use_v;
    decompose(A, w, lambda, use_v);
    Rat value = 0;
    for (int j = 0; j < A.n(); ++j) value += lambda[j] * (use_v[j] ? psi.t[j] : psi.s[j]);
    return value;
}

Rat eval_support_bruteforce(const BottMatrix& A, const SupportFunction& psi, const std::vector<Rat>& w) {
    check_support(A, psi);
    int n = A.n();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // Columns: e_j = u_j when bit j set, else v_j.  Gauss-Jordan on [E | w].
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
        for (int j = 0; j < n; ++j) {
            auto e = (mask >> j & 1u) ? u_normal(A, j + 1) : v_normal(A, j + 1);
            for (int i = 0; i < n; ++i) m[i][j] = e[i];
        }
        for (int i = 0; i < n; ++i) m[i][n] = w[i];
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (m[p][c] == 0) ++p;  // always a basis
            std::swap(m[p], m[c]);
            Rat inv = 1 / m[c][c];
            for (auto& v : m[c]) v *= inv;
            for (int i = 0; i < n; ++i) {
                if (i == c || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (int k = c; k <= n; ++k) m[i][k] -= f * m[c][k];
            }
        }
        bool inside = true;
        for (int j = 0; j < n; ++j)
            if (m[j][n] < 0) inside = false;
        if (!inside) continue;
        Rat value = 0;
        for (int j = 0; j < n; ++j) value += m[j][n] * ((mask >> j & 1u) ? psi.s[j] : psi.t[j]);
        return value;
    }
    throw Error(ErrorCode::InvalidArgument, "vector lies in no maximal cone");
}

bool is_ample(const BottMatrix& A, const SupportFunction& psi, bool strict) {
    check_support(A, psi);
    for (int j = 1; j <= A.n(); ++j) {
        auto u = u_normal(A, j), v = v_normal(A, j);
        std::vector<Rat> w(A.n());
        for (int i = 0; i < A.n(); ++i) w[i] = u[i] + v[i];
        Rat lhs = psi.s[j - 1] + psi.t[j - 1];
        Rat rhs = eval_support(A, psi, w);
        if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
    return true;
}

std::vector<BasisChoice> generator_bases(int n) {
    std::vector<BasisChoice> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        BasisChoice c(n, Ray::U);
        for (int j = 1; j < n; ++j) c[j] = (mask >> (j - 1) & 1u) ? Ray::V : Ray::U;
        out.push_back(c);
    }
    return out;
}

SupportFunction support_of(const BasisChoice& choice, const std::vector<Rat>& r) {
    size_t n = choice.size();
    SupportFunction psi{std::vector<Rat>(n), std::vector<Rat>(n)};
    for (size_t j = 0; j < n; ++j) (choice[j] == Ray::U ? psi.s : psi.t)[j] = r[j];
    return psi;
}

KahlerCone kahler_cone(const BottMatrix& A, const BasisChoice& choice) {
    int n = A.n();
    if (static_cast<int>(choice.size()) != n) throw Error(ErrorCode::InvalidArgument, "basis choice has wrong length");
    if (choice[0] != Ray::U) throw Error(ErrorCode::InvalidArgument, "basis choice must start with u_1");
    KahlerCone cone{choice, {}, true};
    for (int j = 0; j < n; ++j) {
        // psi(u_j) + psi(v_j) = r_j; psi(u_j + v_j) is linear in r with the
        // cone decomposition of u_j + v_j = -sum_{i>j} A(i,j) v_i fixed.
        std::vector<Rat> w(n);
        for (int i = j + 1; i < n; ++i) w[i] = -A(i, j);
        std::vector<Rat> lambda;
        std::vector<bool> use_v;
        decompose(A, w, lambda, use_v);
        Inequality ineq{std::vector<Rat>(n), 0, true};
        ineq.coeffs[j] = 1;
        for (int k = 0; k < n; ++k) {
            bool chosen = (choice[k] == Ray::V) == use_v[k];
            if (chosen && lambda[k] != 0) ineq.coeffs[k] -= lambda[k];
        }
        for (int k = 0; k < n; ++k)
            if (k != j && ineq.coeffs[k] != 0) cone.first_orthant = false;
        cone.inequalities.push_back(ineq);
    }
    return cone;
}

bool DemazureRootSet::contains(const std::vector<std::int64_t>& chi) const {
    return std::binary_search(roots.begin(), roots.end(), chi);
}

DemazureRootSet demazure_roots(const BottMatrix& A, int stage_bound) {
    int n = A.n();
    if (n > stage_bound)
        throw Error(ErrorCode::StageTooLarge, "root enumeration limited to stage " + std::to_string(stage_bound));
    DemazureRootSet out;
    std::vector<std::int64_t> chi(n);
    // chi(u_j) + chi(v_j) = -S_j with S_j = sum_{i>j} A(i,j) chi_i.  Off the
    // distinguished pair both values are <= 0, so chi_j lies in [-S_j, 0];
    // this forces chi_j = 0 above the distinguished index k and S_k = 0.
    std::function<void(int)> fill = [&](int j) {
        if (j < 0) {
            out.roots.push_back(chi);
            return;
        }
        std::int64_t S = 0;
        for (int i = j + 1; i < n; ++i) S += A(i, j) * chi[i];
        for (std::int64_t c = -S; c <= 0; ++c) {
            chi[j] = c;
            fill(j - 1);
        }
        chi[j] = 0;
    };
    for (int k = 0; k < n; ++k)
        for (std::int64_t lead : {1, -1}) {  // ray v_k, ray u_k
            std::fill(chi.begin(), chi.end(), 0);
            chi[k] = lead;
            fill(k - 1);
        }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

bool is_reductive(const BottMatrix& A, int stage_bound) {
    auto R = demazure_roots(A, stage_bound);
    for (const auto& chi : R.roots) {
        std::vector<std::int64_t> neg(chi.size());
        for (size_t i = 0; i < chi.size(); ++i) neg[i] = -chi[i];
        if (!R.contains(neg)) return false;
    }
    return true;
}

CscObstruction csc_obstructed(const BottMatrix& A) {
    CscObstruction r;
    int n = A.n();
    for (int i = 1; i < n && !r.witness_row; ++i) {
        bool pos = false, neg = false;
        for (int j = 0; j < i; ++j) {
            pos |= A(i, j) > 0;
            neg |= A(i, j) < 0;
        }
        if (pos != neg) r.witness_row = i + 1;
    }
    int m = n - twist(A);
    if (m >= 2) {
        BottMatrix lead(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j) lead.set(i, j, A(i, j));
        r.twisted_block = !(lead == BottMatrix::identity(m)) && topological_twist(lead) == 0;
    }
    r.obstructed = r.witness_row != 0 || r.twisted_block;
    return r;
}

bool is_fano(const BottMatrix& A) {
    SupportFunction anticanonical{std::vector<Rat>(A.n(), 1), std::vector<Rat>(A.n(), 1)};
    return is_ample(A, anticanonical, true);
}

const char* ke_name(KEStatus s) {
    switch (s) {
    case KEStatus::KE: return "KE";
    case KEStatus::NotKE: return "NotKE";
    case KEStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

KEStatus kahler_einstein_stage34(const BottMatrix& A, int stage_bound) {
    int n = A.n();
    if (n != 3 && n != 4) return KEStatus::Unknown;
    std::vector<BottMatrix> listed{BottMatrix::identity(n)};
    BottMatrix ks(n);
    ks.set(2, 0, 1);
    ks.set(2, 1, -1);
    listed.push_back(ks);  // stage 4: the stage-3 bundle times a line
    auto orbit = equivalence_orbit(A, stage_bound);
    for (const auto& B : listed)
        if (orbit_contains(orbit, B)) return KEStatus::KE;
    return KEStatus::NotKE;
}

}  // namespace bott
