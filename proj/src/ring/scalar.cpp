#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "bv/ring.hpp"

namespace bv {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MixedRings: return "MixedRings";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DlogOfZero: return "DlogOfZero";
        case ErrorKind::NonUnitDeterminant: return "NonUnitDeterminant";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::PatternMismatch: return "PatternMismatch";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::LengthIncreases: return "LengthIncreases";
        case ErrorKind::EliminationFailed: return "EliminationFailed";
        case ErrorKind::NonUnitDiagonal: return "NonUnitDiagonal";
        case ErrorKind::InvalidLabels: return "InvalidLabels";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotTwoStrand: return "NotTwoStrand";
        case ErrorKind::NotPolynomial: return "NotPolynomial";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error(ErrorKind::ZeroDenominator, "inverse of 0 mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}

std::optional<std::uint64_t> reduce_mod(const Scalar& c, std::uint64_t p) {
    if (c.modulus()) {
        if (c.modulus() != p) throw Error(ErrorKind::MixedRings, "residue modulo a different prime");
        return c.residue();
    }
    mpz_class n = c.q().get_num() % p, d = c.q().get_den() % p;
    if (n < 0) n += p;
    std::uint64_t dn = d.get_ui();
    if (dn == 0) return std::nullopt;
    return mulmod(n.get_ui(), invmod(dn, p), p);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::mod(long long v, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    s.r_ = static_cast<std::uint64_t>(r);
    return s;
}

Scalar Scalar::same_ring(long v) const { return p_ ? mod(v, p_) : Scalar(v); }

void Scalar::check(const Scalar& o) const {
    if (p_ != o.p_) throw Error(ErrorKind::MixedRings, "scalars from different coefficient rings");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) s.r_ = r_ ? p_ - r_ : 0;
    else s.q_ = -q_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar s;
    s.p_ = p_;
    if (p_) {
        s.r_ = r_ + o.r_;
        if (s.r_ >= p_) s.r_ -= p_;
    } else {
        s.q_ = q_ + o.q_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = mulmod(r_, o.r_, p_);
    else s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero scalar");
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = invmod(r_, p_);
    else s.q_ = 1 / q_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = same_ring(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return p_ ? r_ < o.r_ : q_ < o.q_;
}

std::string Scalar::str() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

namespace {

const char* kFamilies[] = {"z", "c", "u", "t", "s", "g", "a", "b", "w", "x", "y", "v", "l", "d", "q", "p", "r", "k", "m", "e", "f", "h"};
constexpr int kFixed = sizeof(kFamilies) / sizeof(kFamilies[0]);
constexpr int kShift = 20;

struct Registry {
    std::mutex mu;
    std::vector<std::string> extra;
    std::unordered_map<std::string, int> rank;
    Registry() {
        for (int i = 0; i < kFixed; ++i) rank[kFamilies[i]] = i + 1;
    }
    int family(const std::string& f) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = rank.find(f);
        if (it != rank.end()) return it->second;
        extra.push_back(f);
        int r = 64 + static_cast<int>(extra.size());
        rank[f] = r;
        return r;
    }
    std::string name(int r) {
        if (r >= 1 && r <= kFixed) return kFamilies[r - 1];
        std::lock_guard<std::mutex> lock(mu);
        return extra.at(static_cast<std::size_t>(r - 65));
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Var var(const std::string& family, int index) {
    if (family.empty()) throw Error(ErrorKind::ParseError, "empty variable family");
    int r = registry().family(family);
    if (index < -1 || index >= (1 << kShift) - 2) throw Error(ErrorKind::ParseError, "variable index out of range");
    return (r << kShift) | (index + 1);
}

Var var(const std::string& name) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == 0) throw Error(ErrorKind::ParseError, "bad variable name '" + name + "'");
    std::string fam = name.substr(0, k);
    if (k == name.size()) return var(fam, -1);
    return var(fam, std::stoi(name.substr(k)));
}

int var_index(Var v) { return (v & ((1 << kShift) - 1)) - 1; }
std::string var_family(Var v) { return registry().name(v >> kShift); }

std::string var_name(Var v) {
    int i = var_index(v);
    return var_family(v) + (i >= 0 ? std::to_string(i) : std::string());
}

}  // namespace bv
