#include <algorithm>
#include <functional>

#include "bv/ring.hpp"

namespace bv {

MatrixExpr MatrixExpr::identity(int n) {
    MatrixExpr m(n);
    for (int i = 0; i < n; ++i) m(i, i) = RationalExpr(1);
    return m;
}

MatrixExpr MatrixExpr::diagonal(const std::vector<RationalExpr>& d) {
    MatrixExpr m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

MatrixExpr MatrixExpr::permutation(const std::vector<int>& image) {
    MatrixExpr m(static_cast<int>(image.size()));
    for (int j = 0; j < m.n_; ++j) m(image[static_cast<std::size_t>(j)] - 1, j) = RationalExpr(1);
    return m;
}

MatrixExpr MatrixExpr::operator*(const MatrixExpr& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::IndexOutOfRange, "matrix size mismatch");
    MatrixExpr r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const RationalExpr& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const RationalExpr& b = o(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

MatrixExpr MatrixExpr::operator+(const MatrixExpr& o) const {
    MatrixExpr r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

MatrixExpr MatrixExpr::operator-(const MatrixExpr& o) const {
    MatrixExpr r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RationalExpr MatrixExpr::trace() const {
    RationalExpr t;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

RationalExpr MatrixExpr::det() const {
    if (n_ == 0) return RationalExpr(1);
    // memo over the set of columns already used by earlier rows
    std::vector<std::optional<RationalExpr>> memo(std::size_t{1} << n_);
    std::function<RationalExpr(unsigned)> rec = [&](unsigned used) -> RationalExpr {
        int row = __builtin_popcount(used);
        if (row == n_) return RationalExpr(1);
        auto& slot = memo[used];
        if (slot) return *slot;
        RationalExpr acc;
        int sign = 1;
        for (int j = 0; j < n_; ++j) {
            if (used & (1u << j)) continue;
            const RationalExpr& a = (*this)(row, j);
            if (!a.is_zero()) {
                RationalExpr sub = rec(used | (1u << j));
                if (!sub.is_zero()) acc += sign > 0 ? a * sub : -(a * sub);
            }
            sign = -sign;
        }
        slot = acc;
        return acc;
    };
    return rec(0);
}

bool MatrixExpr::is_upper_triangular() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool MatrixExpr::is_lower_triangular() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool MatrixExpr::is_identity() const { return *this == identity(n_); }

MatrixExpr MatrixExpr::transform(const Bindings& b) const {
    MatrixExpr r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = substitute(a_[k], b);
    return r;
}

MatrixExpr MatrixExpr::derivative(Var v) const {
    MatrixExpr r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = differentiate(a_[k], v);
    return r;
}

std::vector<Var> MatrixExpr::variables() const {
    std::vector<Var> vs;
    for (auto& e : a_) {
        auto w = e.variables();
        vs.insert(vs.end(), w.begin(), w.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string MatrixExpr::str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
        s += "]";
    }
    return s + "]";
}

MatrixExpr mat_mul(const MatrixExpr& a, const MatrixExpr& b) { return a * b; }

MatrixExpr mat_inv(const MatrixExpr& a) {
    int n = a.size();
    RationalExpr d = a.det();
    if (!d.is_unit()) throw Error(ErrorKind::NonUnitDeterminant, "determinant " + d.str() + " is not a unit");
    MatrixExpr m = a, r = MatrixExpr::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            if (piv < 0 || (m(i, c).is_constant() && !m(piv, c).is_constant())) piv = i;
        }
        if (piv < 0) throw Error(ErrorKind::NonUnitDeterminant, "singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(r(piv, j), r(c, j));
            }
        RationalExpr pinv = m(c, c).inv();
        for (int j = 0; j < n; ++j) {
            if (!m(c, j).is_zero()) m(c, j) = m(c, j) * pinv;
            if (!r(c, j).is_zero()) r(c, j) = r(c, j) * pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            RationalExpr f = m(i, c);
            for (int j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
                if (!r(c, j).is_zero()) r(i, j) -= f * r(c, j);
            }
        }
    }
    return r;
}

}  // namespace bv
