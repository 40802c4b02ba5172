#include <algorithm>

#include "bv/ring.hpp"

namespace bv {
namespace {

using Poly = LaurentPoly;
// univariate view: coefficient of v^k at index k
using Uni = std::vector<Poly>;

Scalar one_of(std::uint64_t p) { return p ? Scalar::mod(1, p) : Scalar(1); }

Poly strip_monomial(const Poly& a) { return a.shift(a.min_monomial().inv()); }

// Scale so that the leading coefficient is 1.
Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a.scale(a.leading().second.inv());
}

Uni to_uni(const Poly& a, Var v) {
    Uni u;
    std::vector<std::vector<Poly::Term>> buckets;
    for (auto& [m, c] : a.terms()) {
        int k = m.exponent(v);
        if (static_cast<int>(buckets.size()) <= k) buckets.resize(static_cast<std::size_t>(k) + 1);
        buckets[static_cast<std::size_t>(k)].push_back({m * Monomial(v, -k), c});
    }
    for (auto& b : buckets) u.push_back(Poly::from_terms(std::move(b), a.modulus()));
    return u;
}

Poly from_uni(const Uni& u, Var v, std::uint64_t p) {
    Poly r = Poly::zero(p);
    for (std::size_t k = 0; k < u.size(); ++k) r += u[k].shift(Monomial(v, static_cast<int>(k)));
    return r;
}

void trim(Uni& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly poly_gcd(const Poly& a, const Poly& b);

Poly content(const Uni& u) {
    Poly g = Poly::zero(u.empty() ? 0 : u[0].modulus());
    bool first = true;
    for (auto& c : u) {
        if (c.is_zero()) continue;
        g = first ? c : poly_gcd(g, c);
        first = false;
        if (g.is_constant()) break;
    }
    return g;
}

Uni divide_uni(const Uni& u, const Poly& c) {
    Uni r;
    for (auto& x : u) {
        auto q = divide_exact(x, c);
        if (!q) throw Error(ErrorKind::EliminationFailed, "content division failed in gcd");
        r.push_back(*q);
    }
    return r;
}

Uni primitive(const Uni& u) {
    Poly c = content(u);
    Uni r = c.is_constant() ? u : divide_uni(u, c);
    std::uint64_t p = r.back().modulus();
    if (p) {
        Scalar s = r.back().leading().second.inv();
        for (auto& x : r) x = x.scale(s);
        return r;
    }
    mpz_class l = 1, g = 0;
    for (auto& x : r)
        for (auto& t : x.terms()) l = lcm(l, mpz_class(t.second.q().get_den()));
    for (auto& x : r)
        for (auto& t : x.terms()) g = gcd(g, mpz_class(t.second.q().get_num() * (l / t.second.q().get_den())));
    Scalar s(mpq_class(l, g));
    for (auto& x : r) x = x.scale(s);
    return r;
}

Uni prem(Uni a, const Uni& b) {
    const Poly& lb = b.back();
    std::size_t db = b.size() - 1;
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        Poly la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& x : a) x = x * lb;
        for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
        trim(a);
    }
    return a;
}

using UniMod = std::vector<std::uint64_t>;

void trim_mod(UniMod& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

UniMod gcd_mod(UniMod a, UniMod b, std::uint64_t P) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        std::uint64_t li = invmod(b.back(), P);
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod(a.back(), li, P);
            std::size_t sh = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[k + sh] = (a[k + sh] + P - mulmod(f, b[k], P)) % P;
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Image of a in F_P[v] with the other variables fixed; nullopt if a
// coefficient cannot be reduced.
std::optional<UniMod> image(const Poly& a, Var v, const std::map<Var, std::uint64_t>& pt, std::uint64_t P) {
    UniMod u;
    for (auto& [m, c] : a.terms()) {
        auto cc = reduce_mod(c, P);
        if (!cc) return std::nullopt;
        std::uint64_t x = *cc;
        int k = 0;
        for (auto& [w, e] : m.entries()) {
            if (w == v) k = e;
            else x = mulmod(x, powmod(pt.at(w), static_cast<std::uint64_t>(e), P), P);
        }
        if (static_cast<int>(u.size()) <= k) u.resize(static_cast<std::size_t>(k) + 1, 0);
        u[static_cast<std::size_t>(k)] = (u[static_cast<std::size_t>(k)] + x) % P;
    }
    return u;
}

// Exact certificate that gcd(a, b) is constant: for each variable, a modular
// univariate image with preserved degrees has a constant gcd.
bool coprime_certificate(const Poly& a, const Poly& b) {
    std::uint64_t P = a.modulus() ? a.modulus() : 2305843009213693951ULL;
    if (a.modulus() && a.modulus() < 1000) return false;
    auto va = a.variables(), vb = b.variables();
    std::vector<Var> all = va;
    all.insert(all.end(), vb.begin(), vb.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (a.size() * 1315423911ULL + b.size());
    auto next = [&]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return 2 + seed % (P - 3);
    };
    for (Var v : all) {
        if (!a.has_variable(v) || !b.has_variable(v)) continue;
        bool ok = false;
        for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
            std::map<Var, std::uint64_t> pt;
            for (Var w : all) pt[w] = next();
            auto ia = image(a, v, pt, P), ib = image(b, v, pt, P);
            if (!ia || !ib) return false;
            trim_mod(*ia);
            trim_mod(*ib);
            if (static_cast<int>(ia->size()) != a.degree_in(v) + 1 || static_cast<int>(ib->size()) != b.degree_in(v) + 1)
                continue;
            if (gcd_mod(*ia, *ib, P).size() != 1) return false;
            ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

// Over Q: scale to coprime integer coefficients.
Poly integral(const Poly& a) {
    if (a.modulus() || a.is_zero()) return a;
    mpz_class l = 1, g = 0;
    for (auto& t : a.terms()) l = lcm(l, mpz_class(t.second.q().get_den()));
    for (auto& t : a.terms()) g = gcd(g, mpz_class(t.second.q().get_num() * (l / t.second.q().get_den())));
    return a.scale(Scalar(mpq_class(l, g)));
}

Var pick_var(const Poly& a, const Poly& b) {
    auto va = a.variables();
    auto vb = b.variables();
    for (Var v : va)
        if (std::binary_search(vb.begin(), vb.end(), v)) return v;
    return va.empty() ? (vb.empty() ? -1 : vb[0]) : va[0];
}

// gcd of true polynomials without monomial content
Poly poly_gcd(const Poly& a0, const Poly& b0) {
    std::uint64_t p = a0.modulus();
    if (a0.is_zero()) return monic(strip_monomial(b0));
    if (b0.is_zero()) return monic(strip_monomial(a0));
    Poly a = strip_monomial(a0), b = strip_monomial(b0);
    if (a.is_constant() || b.is_constant()) return Poly(one_of(p));
    if (a == b) return monic(a);
    if (coprime_certificate(a, b)) return Poly(one_of(p));
    if (auto q = divide_exact(a, b)) return monic(b);
    if (auto q = divide_exact(b, a)) return monic(a);
    a = integral(a);
    b = integral(b);
    Var v = pick_var(a, b);
    if (!a.has_variable(v) || !b.has_variable(v)) {
        // v occurs in only one argument: gcd lies in the content of that one
        const Poly& with = a.has_variable(v) ? a : b;
        const Poly& without = a.has_variable(v) ? b : a;
        Uni u = to_uni(with, v);
        Poly g = without;
        for (auto& c : u) {
            if (c.is_zero()) continue;
            g = poly_gcd(g, c);
            if (g.is_constant()) break;
        }
        return monic(g);
    }
    Uni ua = to_uni(a, v), ub = to_uni(b, v);
    Poly ca = content(ua), cb = content(ub);
    Poly cg = poly_gcd(ca, cb);
    Uni pa = primitive(ua), pb = primitive(ub);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (true) {
        Uni r = prem(pa, pb);
        if (r.empty()) break;
        if (r.size() == 1) {
            pb = Uni{Poly(one_of(p))};
            break;
        }
        pa = std::move(pb);
        pb = primitive(r);
    }
    Poly g = from_uni(primitive(pb), v, p);
    return monic(strip_monomial(g * cg));
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
    if (a.modulus() != b.modulus()) throw Error(ErrorKind::MixedRings, "polynomials over different coefficient rings");
    if (a.is_zero()) return a;
    if (b.is_monomial()) {
        auto& [m, c] = b.terms()[0];
        return a.shift(m.inv()).scale(c.inv());
    }
    Monomial ma = a.min_monomial(), mb = b.min_monomial();
    LaurentPoly r = a.shift(ma.inv());
    LaurentPoly d = b.shift(mb.inv());
    const auto& [lm, lc] = d.leading();
    Scalar lci = lc.inv();
    std::vector<LaurentPoly::Term> q;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        Monomial t = rm / lm;
        if (!t.is_polynomial()) return std::nullopt;
        Scalar c = rc * lci;
        q.push_back({t, c});
        r -= d.shift(t).scale(c);
    }
    return LaurentPoly::from_terms(std::move(q), a.modulus()).shift(ma / mb);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.modulus() != b.modulus()) throw Error(ErrorKind::MixedRings, "polynomials over different coefficient rings");
    return poly_gcd(a, b);
}

}  // namespace bv
