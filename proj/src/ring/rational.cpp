#include <algorithm>

#include "bv/ring.hpp"

namespace bv {
namespace {

Scalar one_of(std::uint64_t p) { return p ? Scalar::mod(1, p) : Scalar(1); }

}  // namespace

RationalExpr::RationalExpr(const Scalar& c) : num_(c), den_(one_of(c.modulus())) {}

RationalExpr::RationalExpr(const LaurentPoly& p) : num_(p), den_(one_of(p.modulus())) {}

RationalExpr::RationalExpr(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    canonicalize();
}

RationalExpr RationalExpr::variable(Var v, std::uint64_t modulus) {
    return RationalExpr(LaurentPoly::variable(v, modulus));
}

void RationalExpr::canonicalize() {
    if (num_.modulus() != den_.modulus()) throw Error(ErrorKind::MixedRings, "numerator and denominator rings differ");
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
    std::uint64_t p = num_.modulus();
    if (num_.is_zero()) {
        den_ = LaurentPoly(one_of(p));
        return;
    }
    Monomial md = den_.min_monomial();
    if (!md.is_one()) {
        num_ = num_.shift(md.inv());
        den_ = den_.shift(md.inv());
    }
    if (den_.is_constant()) {
        Scalar c = den_.constant_term();
        if (!c.is_one()) num_ = num_.scale(c.inv());
        den_ = LaurentPoly(one_of(p));
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    Scalar lc = den_.leading().second;
    if (!lc.is_one()) {
        Scalar s = lc.inv();
        num_ = num_.scale(s);
        den_ = den_.scale(s);
    }
}

LaurentPoly RationalExpr::as_laurent() const {
    if (!is_laurent()) throw Error(ErrorKind::NotPolynomial, "not a Laurent polynomial: " + str());
    return num_;
}

std::vector<Var> RationalExpr::variables() const {
    auto a = num_.variables();
    auto b = den_.variables();
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(Raw{}, -num_, den_); }

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
    if (modulus() != o.modulus()) throw Error(ErrorKind::MixedRings, "expressions over different coefficient rings");
    if (is_laurent() && o.is_laurent()) return RationalExpr(Raw{}, num_ + o.num_, den_);
    if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
    if (o.is_laurent()) return RationalExpr(num_ + o.num_ * den_, den_);
    if (is_laurent()) return RationalExpr(num_ * o.den_ + o.num_, o.den_);
    LaurentPoly g = gcd(den_, o.den_);
    if (g.is_constant()) return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    LaurentPoly a = *divide_exact(den_, g), b = *divide_exact(o.den_, g);
    return RationalExpr(num_ * b + o.num_ * a, den_ * b);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const { return *this + (-o); }

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
    if (modulus() != o.modulus()) throw Error(ErrorKind::MixedRings, "expressions over different coefficient rings");
    if (is_laurent() && o.is_laurent()) return RationalExpr(Raw{}, num_ * o.num_, den_);
    if (is_zero() || o.is_zero()) return RationalExpr(LaurentPoly::zero(modulus()));
    // cross cancellation keeps the final gcd trivial
    LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_constant()) {
        LaurentPoly g = gcd(n1, d2);
        if (!g.is_constant()) {
            n1 = *divide_exact(n1, g);
            d2 = *divide_exact(d2, g);
        }
    }
    if (!d1.is_constant()) {
        LaurentPoly g = gcd(n2, d1);
        if (!g.is_constant()) {
            n2 = *divide_exact(n2, g);
            d1 = *divide_exact(d1, g);
        }
    }
    RationalExpr r(Raw{}, n1 * n2, d1 * d2);
    Monomial md = r.den_.min_monomial();
    if (!md.is_one()) {
        r.num_ = r.num_.shift(md.inv());
        r.den_ = r.den_.shift(md.inv());
    }
    if (r.den_.is_constant()) {
        r.canonicalize();
        return r;
    }
    Scalar lc = r.den_.leading().second;
    if (!lc.is_one()) {
        r.num_ = r.num_.scale(lc.inv());
        r.den_ = r.den_.scale(lc.inv());
    }
    return r;
}

RationalExpr RationalExpr::inv() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero");
    if (num_.is_monomial()) {
        auto& [m, c] = num_.terms()[0];
        return RationalExpr(Raw{}, den_.shift(m.inv()).scale(c.inv()), LaurentPoly(one_of(modulus())));
    }
    return RationalExpr(den_, num_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const { return *this * o.inv(); }

RationalExpr RationalExpr::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    RationalExpr r(one_of(modulus())), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool RationalExpr::operator<(const RationalExpr& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string RationalExpr::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
RationalExpr lift(long a, const RationalExpr& like) {
    return like.modulus() ? RationalExpr(Scalar::mod(a, like.modulus())) : RationalExpr(Scalar(a));
}
}  // namespace

RationalExpr operator+(long a, const RationalExpr& b) { return lift(a, b) + b; }
RationalExpr operator-(long a, const RationalExpr& b) { return lift(a, b) - b; }
RationalExpr operator*(long a, const RationalExpr& b) { return lift(a, b) * b; }

RationalExpr poly_arith(ArithOp op, const RationalExpr& a, const RationalExpr& b) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    }
    return a;
}

namespace {

RationalExpr subst_poly(const LaurentPoly& p, const Bindings& b, std::map<std::pair<Var, int>, RationalExpr>& cache) {
    RationalExpr acc(LaurentPoly::zero(p.modulus()));
    // split into the part touched by bindings and the untouched remainder
    std::vector<LaurentPoly::Term> untouched;
    for (auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> keep;
        RationalExpr factor(c);
        bool touched = false;
        for (auto& [v, k] : m.entries()) {
            auto it = b.find(v);
            if (it == b.end()) {
                keep.push_back({v, k});
                continue;
            }
            touched = true;
            auto key = std::make_pair(v, k);
            auto ci = cache.find(key);
            if (ci == cache.end()) ci = cache.emplace(key, it->second.pow(k)).first;
            factor = factor * ci->second;
        }
        if (!touched) {
            untouched.push_back({m, c});
            continue;
        }
        acc += factor * RationalExpr(LaurentPoly(Monomial::from_entries(keep), c.same_ring(1)));
    }
    return acc + RationalExpr(LaurentPoly::from_terms(std::move(untouched), p.modulus()));
}

}  // namespace

RationalExpr substitute(const RationalExpr& e, const Bindings& b) {
    if (b.empty()) return e;
    std::map<std::pair<Var, int>, RationalExpr> cache;
    RationalExpr n = subst_poly(e.num(), b, cache);
    if (e.is_laurent()) return n;
    RationalExpr d = subst_poly(e.den(), b, cache);
    if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "substitution makes the denominator vanish");
    return n / d;
}

RationalExpr differentiate(const RationalExpr& e, Var v) {
    if (e.is_laurent()) return RationalExpr(e.num().derivative(v));
    LaurentPoly dn = e.num().derivative(v), dd = e.den().derivative(v);
    if (dd.is_zero()) return RationalExpr(dn, e.den());
    return RationalExpr(dn * e.den() - e.num() * dd, e.den() * e.den());
}

std::optional<std::uint64_t> eval_mod(const RationalExpr& e, const std::map<Var, std::uint64_t>& pt, std::uint64_t p) {
    auto n = eval_mod(e.num(), pt, p);
    auto d = eval_mod(e.den(), pt, p);
    if (!n || !d || *d == 0) return std::nullopt;
    return mulmod(*n, invmod(*d, p), p);
}

}  // namespace bv
