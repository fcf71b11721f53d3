#include "bott/rational.hpp"

#include "bott/error.hpp"

#include <cctype>

namespace bott {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::StageTooLarge: return "StageTooLarge";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::SingularParameters: return "SingularParameters";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::SingularSample: return "SingularSample";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) throw Error(ErrorCode::InvalidArgument, "not an integer: " + s);
    Int z(body, 10);
    return neg ? Int(-z) : z;
}

Int pow10(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p = parse_int(s.substr(0, slash));
        Int q = parse_int(s.substr(slash + 1));
        if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: " + s);
        Rat r(p, q);
        r.canonicalize();
        return r;
    }
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = parse_int(s.substr(epos + 1)).get_si();
    }
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        std::string frac = mant.substr(dot + 1);
        if (!frac.empty() && !all_digits(frac))
            throw Error(ErrorCode::InvalidArgument, "not a number: " + s);
        std::string ip = mant.substr(0, dot);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        exp10 -= static_cast<long>(frac.size());
        mant = ip + frac;
    }
    Rat r(parse_int(mant));
    if (exp10 > 0) r *= Rat(pow10(exp10));
    if (exp10 < 0) r /= Rat(pow10(-exp10));
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int floor_of(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_of(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

int sign(const Rat& q) { return sgn(q); }

}  // namespace bott
