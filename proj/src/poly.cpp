#include "bott/poly.hpp"

#include "bott/error.hpp"

#include <algorithm>
#include <sstream>

namespace bott {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly Poly::monomial(const Rat& coeff, int degree) {
    std::vector<Rat> c(degree + 1);
    c[degree] = coeff;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0);
}

Rat Poly::operator()(const Rat& z) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double Poly::eval_double(double z) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rat> d(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / static_cast<long>(i + 1);
    return Poly(std::move(d));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
    Poly F = antiderivative();
    return F(b) - F(a);
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

std::string Poly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat m = abs(a);
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (m != 1 || i == 0) os << to_string(m);
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<Rat> q(dq + 1);
    Rat lb = b.lead();
    for (int k = dq; k >= 0; --k) {
        Rat t = r[k + db] / lb;
        q[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= t * b.coeff(j);
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * Rat(1 / p.lead());
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly squarefree(const Poly& p) {
    if (p.degree() <= 0) return p;
    return divmod(p, gcd(p, p.derivative())).first;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> s{p, p.derivative()};
    while (!s.back().is_zero()) {
        Poly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

// Sign variations with zeros dropped.
int variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "Sturm count of zero polynomial");
    if (p.degree() == 0 || !(a < b)) return 0;
    auto chain = sturm_chain(squarefree(p));
    return variations(chain, a) - variations(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Rat& a, const Rat& b) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "root isolation of zero polynomial");
    if (p.degree() == 0 || !(a < b)) return out;
    Poly q = squarefree(p);
    auto chain = sturm_chain(q);
    bool b_is_root = q(b) == 0;
    std::vector<std::pair<Rat, Rat>> stack{{a, b}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = variations(chain, lo) - variations(chain, hi);
        if (c == 0) continue;
        if (c == 1) {
            if (!(b_is_root && hi == b)) out.push_back({lo, hi});
            continue;
        }
        Rat mid = (lo + hi) / 2;
        stack.push_back({mid, hi});
        stack.push_back({lo, mid});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat refine_root(const Poly& p, Rat lo, Rat hi, const Rat& tol) {
    Poly q = squarefree(p);
    int shi = sgn(q(hi));
    if (shi == 0) return hi;
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(q(mid));
        if (sm == 0) return mid;
        if (sm == shi) hi = mid;
        else lo = mid;
    }
    return (lo + hi) / 2;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    // Newton divided differences.
    size_t n = xs.size();
    std::vector<Rat> dd(ys);
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    Poly result;
    for (size_t k = n; k-- > 0;) {
        result *= Poly::linear(-xs[k], 1);
        result += Poly(dd[k]);
    }
    return result;
}

Poly2::Poly2(const Rat& constant) {
    if (constant != 0) c_ = {{constant}};
}

Poly2 Poly2::x() {
    Poly2 p;
    p.set(1, 0, 1);
    return p;
}

Poly2 Poly2::y() {
    Poly2 p;
    p.set(0, 1, 1);
    return p;
}

Rat Poly2::coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    const auto& row = c_[i];
    return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : Rat(0);
}

void Poly2::set(int i, int j, const Rat& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
    if (j >= static_cast<int>(c_[i].size())) c_[i].resize(j + 1);
    c_[i][j] = v;
    trim();
}

int Poly2::deg_y() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

void Poly2::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Rat Poly2::operator()(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat inner = 0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * y + *jt;
        acc = acc * x + inner;
    }
    return acc;
}

Poly2 Poly2::dx() const {
    Poly2 r;
    for (size_t i = 1; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) r.set(i - 1, j, c_[i][j] * static_cast<long>(i));
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 1; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) r.set(i, j - 1, c_[i][j] * static_cast<long>(j));
    return r;
}

Poly Poly2::at_x(const Rat& x) const {
    std::vector<Rat> out(std::max(deg_y() + 1, 0));
    Rat xp = 1;
    for (const auto& row : c_) {
        for (size_t j = 0; j < row.size(); ++j) out[j] += row[j] * xp;
        xp *= x;
    }
    return Poly(std::move(out));
}

Poly Poly2::at_y(const Rat& y) const {
    std::vector<Rat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = Poly(c_[i])(y);
    return Poly(std::move(out));
}

Poly2 Poly2::rescale(const Rat& x0, const Rat& hx, const Rat& y0, const Rat& hy) const {
    Poly sx = Poly::linear(x0, hx), sy = Poly::linear(y0, hy);
    Poly2 r;
    Poly xp(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        Poly yp(1);
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] != 0) {
                Poly px = xp * c_[i][j];
                for (int a = 0; a <= px.degree(); ++a)
                    for (int b = 0; b <= yp.degree(); ++b)
                        r.set(a, b, r.coeff(a, b) + px.coeff(a) * yp.coeff(b));
            }
            yp *= sy;
        }
        xp *= sx;
    }
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (size_t i = 0; i < o.c_.size(); ++i)
        for (size_t j = 0; j < o.c_[i].size(); ++j)
            if (o.c_[i][j] != 0) set(i, j, coeff(i, j) + o.c_[i][j]);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (size_t i = 0; i < o.c_.size(); ++i)
        for (size_t j = 0; j < o.c_[i].size(); ++j)
            if (o.c_[i][j] != 0) set(i, j, coeff(i, j) - o.c_[i][j]);
    return *this;
}

Poly2& Poly2::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& row : c_)
        for (auto& v : row) v *= s;
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    std::vector<std::vector<Rat>> r(a.c_.size() + b.c_.size() - 1,
                                    std::vector<Rat>(a.deg_y() + b.deg_y() + 1));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < a.c_[i].size(); ++j) {
            if (a.c_[i][j] == 0) continue;
            for (size_t k = 0; k < b.c_.size(); ++k)
                for (size_t l = 0; l < b.c_[k].size(); ++l) r[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
        }
    Poly2 out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

}  // namespace bott
