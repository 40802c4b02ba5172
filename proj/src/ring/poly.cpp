#include <algorithm>
#include <sstream>

#include "bv/ring.hpp"

namespace bv {

Monomial::Monomial(Var v, int e) {
    if (e != 0) e_.push_back({v, e});
}

Monomial Monomial::from_entries(std::vector<Entry> e) {
    std::sort(e.begin(), e.end());
    Monomial m;
    for (auto& [v, k] : e) {
        if (!m.e_.empty() && m.e_.back().first == v) m.e_.back().second += k;
        else m.e_.push_back({v, k});
        if (m.e_.back().second == 0) m.e_.pop_back();
    }
    return m;
}

int Monomial::exponent(Var v) const {
    for (auto& [w, k] : e_)
        if (w == v) return k;
    return 0;
}

int Monomial::grade() const {
    int g = 0;
    for (auto& x : e_) g += std::abs(x.second);
    return g;
}

int Monomial::degree() const {
    int g = 0;
    for (auto& x : e_) g += x.second;
    return g;
}

bool Monomial::is_polynomial() const {
    for (auto& x : e_)
        if (x.second < 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            r.e_.push_back(e_[i++]);
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            int k = e_[i].second + o.e_[j].second;
            if (k) r.e_.push_back({e_[i].first, k});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inv() const {
    Monomial r = *this;
    for (auto& x : r.e_) x.second = -x.second;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return Monomial();
    Monomial r = *this;
    for (auto& x : r.e_) x.second *= k;
    return r;
}

Monomial Monomial::meet(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            if (e_[i].second < 0) r.e_.push_back(e_[i]);
            ++i;
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            if (o.e_[j].second < 0) r.e_.push_back(o.e_[j]);
            ++j;
        } else {
            int k = std::min(e_[i].second, o.e_[j].second);
            if (k) r.e_.push_back({e_[i].first, k});
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    return (o / *this).is_polynomial();
}

bool Monomial::operator<(const Monomial& o) const {
    int ga = grade(), gb = o.grade();
    if (ga != gb) return ga < gb;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        Var va = i < e_.size() ? e_[i].first : INT32_MAX;
        Var vb = j < o.e_.size() ? o.e_[j].first : INT32_MAX;
        Var v = std::min(va, vb);
        int ka = va == v ? e_[i].second : 0;
        int kb = vb == v ? o.e_[j].second : 0;
        if (ka != kb) return ka > kb;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (auto& [v, k] : e_) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto& [v, k] : e_) {
        h ^= static_cast<std::size_t>(v) * 1000003u + static_cast<std::size_t>(k + 4096);
        h *= 1099511628211ULL;
    }
    return h;
}

LaurentPoly::LaurentPoly(const Scalar& c) : p_(c.modulus()) {
    if (!c.is_zero()) t_.push_back({Monomial(), c});
}

LaurentPoly::LaurentPoly(const Monomial& m, const Scalar& c) : p_(c.modulus()) {
    if (!c.is_zero()) t_.push_back({m, c});
}

LaurentPoly LaurentPoly::variable(Var v, std::uint64_t modulus) {
    return LaurentPoly(Monomial(v), modulus ? Scalar::mod(1, modulus) : Scalar(1));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms, std::uint64_t modulus) {
    LaurentPoly r = LaurentPoly::zero(modulus);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (t.second.modulus() != modulus) throw Error(ErrorKind::MixedRings, "term from a different ring");
        if (!r.t_.empty() && r.t_.back().first == t.first) {
            r.t_.back().second += t.second;
            if (r.t_.back().second.is_zero()) r.t_.pop_back();
        } else if (!t.second.is_zero()) {
            r.t_.push_back(std::move(t));
        }
    }
    return r;
}

void LaurentPoly::check(const LaurentPoly& o) const {
    if (p_ != o.p_) throw Error(ErrorKind::MixedRings, "polynomials over different coefficient rings");
}

bool LaurentPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

bool LaurentPoly::is_polynomial() const {
    for (auto& t : t_)
        if (!t.first.is_polynomial()) return false;
    return true;
}

Scalar LaurentPoly::constant_term() const { return coefficient(Monomial()); }

Scalar LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& a, const Monomial& b) { return a.first < b; });
    if (it != t_.end() && it->first == m) return it->second;
    return p_ ? Scalar::mod(0, p_) : Scalar(0);
}

std::vector<Var> LaurentPoly::variables() const {
    std::vector<Var> vs;
    for (auto& t : t_)
        for (auto& e : t.first.entries()) vs.push_back(e.first);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool LaurentPoly::has_variable(Var v) const {
    for (auto& t : t_)
        if (t.first.exponent(v) != 0) return true;
    return false;
}

Monomial LaurentPoly::min_monomial() const {
    if (t_.empty()) return Monomial();
    std::vector<Monomial::Entry> acc;
    std::map<Var, int> mn;
    std::map<Var, int> cnt;
    for (auto& t : t_)
        for (auto& [v, k] : t.first.entries()) {
            auto it = mn.find(v);
            if (it == mn.end()) mn[v] = k;
            else it->second = std::min(it->second, k);
            ++cnt[v];
        }
    for (auto& [v, k] : mn) {
        int e = cnt[v] == static_cast<int>(t_.size()) ? k : std::min(k, 0);
        if (e) acc.push_back({v, e});
    }
    return Monomial::from_entries(acc);
}

int LaurentPoly::degree_in(Var v) const {
    int d = INT32_MIN;
    for (auto& t : t_) d = std::max(d, t.first.exponent(v));
    return t_.empty() ? 0 : d;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check(o);
    LaurentPoly r = LaurentPoly::zero(p_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Scalar c = t_[i].second + o.t_[j].second;
            if (!c.is_zero()) r.t_.push_back({t_[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check(o);
    if (t_.empty() || o.t_.empty()) return LaurentPoly::zero(p_);
    if (o.t_.size() == 1) {
        LaurentPoly r = LaurentPoly::zero(p_);
        r.t_.reserve(t_.size());
        for (auto& t : t_) r.t_.push_back({t.first * o.t_[0].first, t.second * o.t_[0].second});
        r.sort_terms();
        return r;
    }
    if (t_.size() == 1) return o * *this;
    std::vector<Term> prod;
    prod.reserve(t_.size() * o.t_.size());
    for (auto& a : t_)
        for (auto& b : o.t_) prod.push_back({a.first * b.first, a.second * b.second});
    return from_terms(std::move(prod), p_);
}

LaurentPoly LaurentPoly::scale(const Scalar& c) const {
    if (c.modulus() != p_) throw Error(ErrorKind::MixedRings, "scalar from a different ring");
    if (c.is_zero()) return LaurentPoly::zero(p_);
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.second = t.second * c;
    return r;
}

LaurentPoly LaurentPoly::shift(const Monomial& m) const {
    if (m.is_one()) return *this;
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.first = t.first * m;
    r.sort_terms();
    return r;
}

// Multiplying by a Laurent monomial can reorder terms but never merges them.
void LaurentPoly::sort_terms() {
    if (!std::is_sorted(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; }))
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) {
        if (!is_monomial()) throw Error(ErrorKind::ZeroDenominator, "negative power of a non-monomial Laurent polynomial");
        return LaurentPoly(t_[0].first.pow(k), t_[0].second.pow(k));
    }
    LaurentPoly r(p_ ? Scalar::mod(1, p_) : Scalar(1)), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(Var v) const {
    std::vector<Term> out;
    for (auto& t : t_) {
        int k = t.first.exponent(v);
        if (k == 0) continue;
        out.push_back({t.first * Monomial(v, -1), t.second * t.second.same_ring(k)});
    }
    return from_terms(std::move(out), p_);
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
    for (std::size_t i = t_.size(); i-- > 0;) {
        if (t_[i].first != o.t_[i].first) return t_[i].first < o.t_[i].first;
        if (t_[i].second != o.t_[i].second) return t_[i].second < o.t_[i].second;
    }
    return false;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : t_) {
        bool neg = !p_ && c.sign() < 0;
        Scalar a = neg ? -c : c;
        std::string body;
        if (m.is_one()) body = a.str();
        else if (a.is_one()) body = m.str();
        else body = a.str() + "*" + m.str();
        if (first) s += (neg ? "-" : "") + body;
        else s += (neg ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

std::optional<std::uint64_t> eval_mod(const LaurentPoly& e, const std::map<Var, std::uint64_t>& pt, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto& [m, c] : e.terms()) {
        auto cc = reduce_mod(c, p);
        if (!cc) return std::nullopt;
        std::uint64_t term = *cc;
        for (auto& [v, k] : m.entries()) {
            auto it = pt.find(v);
            if (it == pt.end()) throw Error(ErrorKind::ParseError, "no value for " + var_name(v));
            std::uint64_t x = it->second % p;
            if (k < 0) {
                if (x == 0) return std::nullopt;
                x = invmod(x, p);
            }
            term = mulmod(term, powmod(x, static_cast<std::uint64_t>(std::abs(k)), p), p);
        }
        acc = (acc + term) % p;
    }
    return acc;
}

}  // namespace bv
