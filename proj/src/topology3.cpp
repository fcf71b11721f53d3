#include "bott/topology3.hpp"

#include "bott/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bott {

namespace {

bool odd(std::int64_t v) { return v % 2 != 0; }

Int pont(const Triple& t) { return Int(t.c) * (Int(2) * Int(t.b) - Int(t.a) * Int(t.c)); }

}  // namespace

const char* qtype_name(QTrivialType t) {
    switch (t) {
    case QTrivialType::Product3: return "Product3";
    case QTrivialType::M1xM2: return "M1xM2";
    case QTrivialType::M3partition: return "M3partition";
    }
    return "?";
}

std::string w2_name(int w2) {
    switch (w2) {
    case 0: return "zero";
    case 1: return "x1";
    case 2: return "x2";
    default: return "x1+x2";
    }
}

Stage3Invariants stage3_invariants(std::int64_t a, std::int64_t b, std::int64_t c) {
    Stage3Invariants inv;
    inv.p = pont({a, b, c});
    inv.w2 = (odd(a + b) ? 1 : 0) | (odd(c) ? 2 : 0);
    inv.q_trivial = inv.p == 0;
    Int absp = abs(inv.p);
    if (inv.q_trivial) {
        if (!odd(a) && !odd(b) && !odd(c)) inv.q_trivial_type = QTrivialType::Product3;
        else if (odd(a) && odd(b) && !odd(c)) inv.q_trivial_type = QTrivialType::M3partition;
        else inv.q_trivial_type = QTrivialType::M1xM2;
        inv.diffeo_key = std::string("q0:") + qtype_name(*inv.q_trivial_type);
    } else if (!odd(a)) {
        inv.diffeo_key = "p" + absp.get_str() + ":a-even:" + (!odd(b) && !odd(c) ? "bc-even" : "bc-mixed");
    } else {
        // a odd: p is odd exactly when c is odd.
        inv.diffeo_key = "p" + absp.get_str() + ":a-odd:" + (odd(c) ? "c-odd" : (odd(b) ? "b-odd" : "b-even"));
    }
    return inv;
}

bool stage3_diffeomorphic(const Triple& t1, const Triple& t2) {
    Int p1 = pont(t1), p2 = pont(t2);
    bool q1 = p1 == 0, q2 = p2 == 0;
    if (q1 != q2) return false;
    if (q1) return stage3_invariants(t1.a, t1.b, t1.c).q_trivial_type == stage3_invariants(t2.a, t2.b, t2.c).q_trivial_type;
    if (abs(p1) != abs(p2)) return false;
    if (odd(t1.a) != odd(t2.a)) return false;
    if (!odd(t1.a) && !odd(t2.a)) {
        bool e1 = odd((1 + t1.b) * (1 + t1.c)), e2 = odd((1 + t2.b) * (1 + t2.c));
        if (e1 != e2) return false;
    }
    if (!odd(t1.c) && !odd(t2.c) && odd(t1.b) != odd(t2.b)) return false;
    return true;
}

bool twist1_diffeomorphic(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& kp) {
    if (k.size() != kp.size()) throw Error(ErrorCode::InvalidArgument, "vectors of different length");
    size_t N = k.size();
    std::vector<size_t> sigma(N);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < N && ok; ++i) ok = odd(kp[sigma[i]]) == odd(k[i]);
        for (size_t i = 0; i < N && ok; ++i)
            for (size_t j = i + 1; j < N && ok; ++j) {
                Int lhs = Int(kp[sigma[i]]) * Int(kp[sigma[j]]);
                Int rhs = Int(k[i]) * Int(k[j]);
                ok = lhs == rhs || lhs == -rhs;
            }
        if (ok) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

std::int64_t twist1_class_count_bruteforce(const std::vector<std::int64_t>& k) {
    size_t N = k.size();
    if (N > 20) throw Error(ErrorCode::InvalidArgument, "too many entries for brute force");
    std::set<std::vector<std::int64_t>> classes;
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
        std::vector<std::int64_t> v(N), w(N);
        for (size_t i = 0; i < N; ++i) {
            std::int64_t m = k[i] < 0 ? -k[i] : k[i];
            v[i] = (mask >> i & 1u) ? -m : m;
            w[i] = -v[i];
        }
        std::sort(v.begin(), v.end());
        std::sort(w.begin(), w.end());
        classes.insert(std::min(v, w));
    }
    return static_cast<std::int64_t>(classes.size());
}

std::int64_t twist1_class_count(const std::vector<std::int64_t>& k) {
    size_t N = k.size();
    if (N <= 2) throw Error(ErrorCode::InvalidArgument, "class count needs N > 2");
    std::set<std::int64_t> mags;
    for (auto v : k) {
        if (v == 0) throw Error(ErrorCode::InvalidArgument, "class count needs nonzero entries");
        mags.insert(v < 0 ? -v : v);
    }
    if (mags.size() != N)
        throw Error(ErrorCode::NonGeneric, "repeated |k_i|; brute-force count is " +
                                               std::to_string(twist1_class_count_bruteforce(k)));
    return std::int64_t{1} << (N - 1);
}

}  // namespace bott
