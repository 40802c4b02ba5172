#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bv/errors.hpp"

namespace bv {

// Coefficients: exact rationals (modulus 0) or residues mod a prime.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(int v) : q_(v) {}
    explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    static Scalar rational(long num, long den);
    static Scalar mod(long long v, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
    bool is_integer() const { return p_ || q_.get_den() == 1; }
    int sign() const { return p_ ? (r_ != 0) : sgn(q_); }
    const mpq_class& q() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order used only for canonical sorting
    bool operator<(const Scalar& o) const;
    std::string str() const;
    Scalar same_ring(long v) const;

private:
    void check(const Scalar& o) const;
    std::uint64_t p_ = 0;
    std::uint64_t r_ = 0;
    mpq_class q_;
};

using Var = std::int32_t;

Var var(const std::string& name);
Var var(const std::string& family, int index);
std::string var_name(Var v);
int var_index(Var v);
std::string var_family(Var v);

class Monomial {
public:
    using Entry = std::pair<Var, int>;
    Monomial() = default;
    explicit Monomial(Var v, int e = 1);
    static Monomial from_entries(std::vector<Entry> e);

    int exponent(Var v) const;
    int grade() const;
    int degree() const;
    bool is_one() const { return e_.empty(); }
    bool is_polynomial() const;
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial inv() const;
    Monomial pow(int k) const;
    // componentwise min / max of exponents
    Monomial meet(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const { return *this * o.inv(); }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const;
    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Entry> e_;
};

class LaurentPoly {
public:
    using Term = std::pair<Monomial, Scalar>;
    LaurentPoly() = default;
    static LaurentPoly zero(std::uint64_t modulus) {
        LaurentPoly r;
        r.p_ = modulus;
        return r;
    }
    LaurentPoly(const Scalar& c);
    LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}
    LaurentPoly(const Monomial& m, const Scalar& c);
    static LaurentPoly variable(Var v, std::uint64_t modulus = 0);
    static LaurentPoly from_terms(std::vector<Term> terms, std::uint64_t modulus);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t_.size() == 1; }
    bool is_polynomial() const;
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    const Term& leading() const { return t_.back(); }
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;
    std::vector<Var> variables() const;
    bool has_variable(Var v) const;
    // componentwise minimum of exponents over all terms
    Monomial min_monomial() const;
    int degree_in(Var v) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scale(const Scalar& c) const;
    LaurentPoly shift(const Monomial& m) const;
    LaurentPoly pow(int k) const;
    LaurentPoly derivative(Var v) const;
    bool operator==(const LaurentPoly& o) const { return p_ == o.p_ && t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;
    std::string str() const;

private:
    void check(const LaurentPoly& o) const;
    void sort_terms();
    std::uint64_t p_ = 0;
    std::vector<Term> t_;
};

// Exact quotient if b divides a (true polynomials, graded lex division).
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);
// Greatest common divisor of Laurent polynomials, up to units; result is a
// polynomial with no monomial factor, primitive/monic normalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

class RationalExpr {
public:
    RationalExpr() : num_(), den_(1) {}
    RationalExpr(long c) : num_(c), den_(1) {}
    RationalExpr(const Scalar& c);
    RationalExpr(const LaurentPoly& p);
    RationalExpr(const LaurentPoly& num, const LaurentPoly& den);
    static RationalExpr variable(Var v, std::uint64_t modulus = 0);
    static RationalExpr variable(const std::string& name) { return variable(var(name)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::uint64_t modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    bool is_polynomial() const { return is_laurent() && num_.is_polynomial(); }
    bool is_constant() const { return is_laurent() && num_.is_constant(); }
    // nonzero scalar times a Laurent monomial
    bool is_unit() const { return is_laurent() && num_.is_monomial(); }
    LaurentPoly as_laurent() const;
    std::vector<Var> variables() const;

    RationalExpr operator-() const;
    RationalExpr operator+(const RationalExpr& o) const;
    RationalExpr operator-(const RationalExpr& o) const;
    RationalExpr operator*(const RationalExpr& o) const;
    RationalExpr operator/(const RationalExpr& o) const;
    RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
    RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
    RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }
    RationalExpr inv() const;
    RationalExpr pow(int k) const;
    bool operator==(const RationalExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalExpr& o) const { return !(*this == o); }
    bool operator<(const RationalExpr& o) const;
    std::string str() const;

private:
    struct Raw {};
    RationalExpr(Raw, LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {}
    void canonicalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

RationalExpr operator+(long a, const RationalExpr& b);
RationalExpr operator-(long a, const RationalExpr& b);
RationalExpr operator*(long a, const RationalExpr& b);

enum class ArithOp { Add, Sub, Mul };
RationalExpr poly_arith(ArithOp op, const RationalExpr& a, const RationalExpr& b);

using Bindings = std::map<Var, RationalExpr>;
RationalExpr substitute(const RationalExpr& e, const Bindings& b);
RationalExpr differentiate(const RationalExpr& e, Var v);

// Evaluation modulo a prime; nullopt when a denominator vanishes.
std::optional<std::uint64_t> eval_mod(const RationalExpr& e, const std::map<Var, std::uint64_t>& pt,
                                      std::uint64_t p);
std::optional<std::uint64_t> eval_mod(const LaurentPoly& e, const std::map<Var, std::uint64_t>& pt,
                                      std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
// Map a rational coefficient into F_p (nullopt if its denominator is 0 mod p).
std::optional<std::uint64_t> reduce_mod(const Scalar& c, std::uint64_t p);

// Parses expressions like "1 + z1*z2 - z1^-1*z3^2" or "(z1)/(1 + z2)".
RationalExpr parse_expr(const std::string& text);

class MatrixExpr {
public:
    MatrixExpr() = default;
    explicit MatrixExpr(int n) : n_(n), a_(static_cast<std::size_t>(n * n), RationalExpr(0)) {}
    static MatrixExpr identity(int n);
    static MatrixExpr diagonal(const std::vector<RationalExpr>& d);
    static MatrixExpr permutation(const std::vector<int>& image);  // P e_j = e_{w(j)}

    int size() const { return n_; }
    RationalExpr& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const RationalExpr& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    MatrixExpr operator*(const MatrixExpr& o) const;
    MatrixExpr operator+(const MatrixExpr& o) const;
    MatrixExpr operator-(const MatrixExpr& o) const;
    bool operator==(const MatrixExpr& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const MatrixExpr& o) const { return !(*this == o); }
    RationalExpr trace() const;
    RationalExpr det() const;
    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    bool is_identity() const;
    MatrixExpr transform(const Bindings& b) const;
    MatrixExpr derivative(Var v) const;
    std::vector<Var> variables() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<RationalExpr> a_;
};

MatrixExpr mat_mul(const MatrixExpr& a, const MatrixExpr& b);
MatrixExpr mat_inv(const MatrixExpr& a);

using OneForm = std::map<Var, RationalExpr>;
using TwoForm = std::map<std::pair<Var, Var>, RationalExpr>;

OneForm dlog(const RationalExpr& e);
OneForm differential(const RationalExpr& e);
TwoForm wedge(const OneForm& a, const OneForm& b);
TwoForm add(const TwoForm& a, const TwoForm& b);
TwoForm scale(const TwoForm& a, const RationalExpr& c);
void accumulate(TwoForm& acc, Var i, Var j, const RationalExpr& c);
// Tr(F^{-1} dF ^ dG G^{-1}); derivatives in all variables of F and G.
TwoForm wedge_trace(const MatrixExpr& F, const MatrixExpr& G);
TwoForm wedge_trace(const MatrixExpr& F, const MatrixExpr& Finv, const MatrixExpr& G, const MatrixExpr& Ginv);
std::string str(const TwoForm& w);

}  // namespace bv
