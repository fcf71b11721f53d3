#include "bott/cohomology.hpp"

#include "bott/error.hpp"

#include <unordered_map>
#include <sstream>

namespace bott {

namespace {

void check_stage(int n) {
    if (n > kMaxCohomologyStage)
        throw Error(ErrorCode::StageTooLarge, "cohomology limited to stage " + std::to_string(kMaxCohomologyStage));
}

void check_same(const CohomologyClass& u, const CohomologyClass& v) {
    if (u.n() != v.n()) throw Error(ErrorCode::InvalidArgument, "classes of different stage");
}

// Products x_S * x_k in the quotient ring, memoized per (S, k).
class Multiplier {
public:
    explicit Multiplier(const BottMatrix& A) : A_(A), n_(A.n()) {}

    CohomologyClass times_gen(std::uint32_t S, int k) {
        std::uint64_t key = std::uint64_t{S} * n_ + k;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        CohomologyClass r(n_);
        std::uint32_t bit = 1u << k;
        if (!(S & bit)) {
            r[S | bit] = 1;
        } else {
            // x_k^2 = -alpha_k x_k, so x_S x_k = -sum_j A(k,j) x_S x_j.
            for (int j = 0; j < k; ++j) {
                if (A_(k, j) == 0) continue;
                CohomologyClass t = times_gen(S, j);
                t *= Int(-A_(k, j));
                r += t;
            }
        }
        memo_.emplace(key, r);
        return r;
    }

    CohomologyClass times_gen(const CohomologyClass& u, int k) {
        CohomologyClass r(n_);
        for (std::uint32_t S = 0; S < u.size(); ++S) {
            if (u[S] == 0) continue;
            r += times_gen(S, k) * u[S];
        }
        return r;
    }

private:
    const BottMatrix& A_;
    int n_;
    std::unordered_map<std::uint64_t, CohomologyClass> memo_;
};

}  // namespace

CohomologyClass::CohomologyClass(int n) : n_(n) {
    check_stage(n);
    c_.assign(size_t{1} << n, Int(0));
}

CohomologyClass CohomologyClass::one(int n) { return monomial(n, 0, 1); }

CohomologyClass CohomologyClass::monomial(int n, std::uint32_t mask, const Int& coeff) {
    CohomologyClass c(n);
    c[mask] = coeff;
    return c;
}

bool CohomologyClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CohomologyClass CohomologyClass::degree_part(int k) const {
    CohomologyClass r(n_);
    for (std::uint32_t S = 0; S < c_.size(); ++S)
        if (__builtin_popcount(S) == k) r[S] = c_[S];
    return r;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    check_same(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
    check_same(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CohomologyClass& CohomologyClass::operator*=(const Int& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

std::string CohomologyClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t S = 0; S < c_.size(); ++S) {
        if (c_[S] == 0) continue;
        Int m = c_[S] < 0 ? Int(-c_[S]) : c_[S];
        if (!first) os << (c_[S] < 0 ? " - " : " + ");
        else if (c_[S] < 0) os << "-";
        first = false;
        bool unit = m == 1 && S != 0;
        if (!unit) os << m.get_str();
        bool firstx = true;
        for (int k = 0; k < n_; ++k)
            if (S >> k & 1u) {
                os << (firstx && unit ? "" : "*") << "x" << k + 1;
                firstx = false;
            }
    }
    return first ? "0" : os.str();
}

bool Mod2Class::is_zero() const {
    for (auto b : bits)
        if (b) return false;
    return true;
}

CohomologyClass x(const BottMatrix& A, int k) {
    if (k < 1 || k > A.n()) throw Error(ErrorCode::InvalidArgument, "index out of range");
    return CohomologyClass::monomial(A.n(), 1u << (k - 1));
}

CohomologyClass alpha(const BottMatrix& A, int k) {
    if (k < 1 || k > A.n()) throw Error(ErrorCode::InvalidArgument, "index out of range");
    CohomologyClass r(A.n());
    for (int j = 0; j < k - 1; ++j) r[1u << j] = A(k - 1, j);
    return r;
}

CohomologyClass y(const BottMatrix& A, int k) { return x(A, k) + alpha(A, k); }

CohomologyClass multiply(const BottMatrix& A, const CohomologyClass& u, const CohomologyClass& v) {
    check_same(u, v);
    if (u.n() != A.n()) throw Error(ErrorCode::InvalidArgument, "class and matrix of different stage");
    Multiplier mul(A);
    CohomologyClass r(A.n());
    for (std::uint32_t T = 0; T < v.size(); ++T) {
        if (v[T] == 0) continue;
        CohomologyClass w = u;
        for (int k = 0; k < A.n(); ++k)
            if (T >> k & 1u) w = mul.times_gen(w, k);
        r += w * v[T];
    }
    return r;
}

CohomologyClass chern_total(const BottMatrix& A) {
    CohomologyClass c = CohomologyClass::one(A.n());
    for (int j = 1; j <= A.n(); ++j) {
        CohomologyClass f = CohomologyClass::one(A.n()) + x(A, j) * Int(2) + alpha(A, j);
        c = multiply(A, c, f);
    }
    return c;
}

CohomologyClass chern_1(const BottMatrix& A) { return chern_total(A).degree_part(1); }

CohomologyClass pontrjagin_total(const BottMatrix& A) {
    CohomologyClass p = CohomologyClass::one(A.n());
    for (int j = 1; j <= A.n(); ++j) {
        CohomologyClass a = alpha(A, j);
        p = multiply(A, p, CohomologyClass::one(A.n()) + multiply(A, a, a));
    }
    return p;
}

CohomologyClass pontrjagin(const BottMatrix& A, int k) { return pontrjagin_total(A).degree_part(2 * k); }

Mod2Class stiefel_whitney_2(const BottMatrix& A) {
    CohomologyClass c1 = chern_1(A);
    Mod2Class w{A.n(), std::vector<std::uint8_t>(c1.size(), 0)};
    for (std::uint32_t S = 0; S < c1.size(); ++S) w.bits[S] = mpz_odd_p(c1[S].get_mpz_t()) ? 1 : 0;
    return w;
}

bool is_q_trivial(const BottMatrix& A) {
    for (int k = 1; k <= A.n(); ++k) {
        CohomologyClass a = alpha(A, k);
        if (!multiply(A, a, a).is_zero()) return false;
    }
    return true;
}

namespace {

bool is_even(const CohomologyClass& c) {
    for (std::uint32_t S = 0; S < c.size(); ++S)
        if (mpz_odd_p(c[S].get_mpz_t())) return false;
    return true;
}

}  // namespace

std::vector<SquareZeroPrimitive> square_zero_primitives(const BottMatrix& A) {
    std::vector<SquareZeroPrimitive> out;
    for (int j = 1; j <= A.n(); ++j) {
        CohomologyClass a = alpha(A, j);
        if (!multiply(A, a, a).is_zero()) continue;
        CohomologyClass beta(A.n());
        if (is_even(a)) {
            for (std::uint32_t S = 0; S < a.size(); ++S) a[S] /= 2;
            beta = x(A, j) + a;
        } else {
            beta = x(A, j) * Int(2) + a;
        }
        out.push_back({j, beta});
    }
    return out;
}

int topological_twist(const BottMatrix& A) {
    int t = 0;
    for (int k = 1; k <= A.n(); ++k) {
        CohomologyClass a = alpha(A, k);
        if (!(is_even(a) && multiply(A, a, a).is_zero())) ++t;
    }
    return t;
}

}  // namespace bott
