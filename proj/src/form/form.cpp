#include <algorithm>
#include <sstream>

#include "bv/chart.hpp"
#include "bv/form.hpp"

namespace bv {

namespace {

MatrixExpr braid_inv(int n, int i, const RationalExpr& z) {
    MatrixExpr m = MatrixExpr::identity(n);
    m(i - 1, i - 1) = -z;
    m(i - 1, i) = RationalExpr(1);
    m(i, i - 1) = RationalExpr(1);
    m(i, i) = RationalExpr(0);
    return m;
}

void check_order(const BraidWord& beta, const std::vector<int>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == beta.length();
    for (std::size_t k = 0; ok && k < sorted.size(); ++k) ok = sorted[k] == static_cast<int>(k + 1);
    if (!ok) throw Error(ErrorKind::IndexOutOfRange, "order must be a permutation of the crossings");
}

std::vector<int> unmarked_strands(const BraidWord& beta) {
    Permutation p = coxeter_image(beta);
    std::vector<bool> seen(static_cast<std::size_t>(p.n() + 1), false);
    std::vector<int> out;
    for (int j = 1; j <= p.n(); ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        seen[static_cast<std::size_t>(j)] = true;
        for (int k = p(j); k != j; k = p(k)) {
            seen[static_cast<std::size_t>(k)] = true;
            out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> slice_from_rows(const std::vector<std::vector<long>>& by_strand,
                                               const BraidWord& beta) {
    std::vector<std::vector<long>> rows;
    for (int x : unmarked_strands(beta)) rows.push_back(by_strand[static_cast<std::size_t>(x - 1)]);
    return integer_kernel(rows, beta.length());
}

std::vector<Var> s_params(const std::vector<int>& order) {
    std::vector<Var> out;
    for (int c : order) out.push_back(var("s", c));
    return out;
}

}  // namespace

std::string TwoFormMatrix::str() const {
    std::ostringstream out;
    out << "params:";
    for (Var v : params) out << " " << var_name(v);
    out << "\n";
    for (const auto& row : m) {
        for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
        out << "\n";
    }
    return out.str();
}

TwoForm omega_word(const BraidWord& w) {
    std::vector<RationalExpr> vals;
    for (int k = 1; k <= w.length(); ++k) vals.push_back(RationalExpr::variable(var("z", k)));
    return omega_word(w.n(), w.letters(), vals);
}

TwoForm omega_word(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values) {
    if (letters.size() != values.size()) throw Error(ErrorKind::IndexOutOfRange, "one value per letter");
    TwoForm acc;
    if (letters.empty()) return acc;
    MatrixExpr f = braid_matrix(n, {letters[0]}, {values[0]});
    MatrixExpr finv = braid_inv(n, letters[0], values[0]);
    for (std::size_t k = 1; k < letters.size(); ++k) {
        MatrixExpr g = braid_matrix(n, {letters[k]}, {values[k]});
        MatrixExpr ginv = braid_inv(n, letters[k], values[k]);
        acc = add(acc, wedge_trace(f, finv, g, ginv));
        f = f * g;
        finv = ginv * finv;
    }
    return acc;
}

std::vector<std::vector<int>> diagonal_characters(const BraidWord& beta, const std::vector<int>& order) {
    check_order(beta, order);
    const int n = beta.n();
    std::vector<int> ids;
    for (int c = 1; c <= beta.length(); ++c) ids.push_back(c);
    std::vector<std::vector<int>> eps;
    for (int c : order) {
        auto p = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), c) - ids.begin());
        int i = beta.letter(c - 1);
        // D_i = diag(-1/s, s) at strands i, i+1
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = -1;
        e[static_cast<std::size_t>(i)] = 1;
        for (std::size_t k = p; k-- > 0;) {
            int j = beta.letter(ids[k] - 1);
            std::swap(e[static_cast<std::size_t>(j - 1)], e[static_cast<std::size_t>(j)]);
        }
        eps.push_back(e);
        ids.erase(ids.begin() + static_cast<long>(p));
    }
    return eps;
}

TwoFormMatrix chart_form_matrix(const BraidWord& beta, const std::vector<int>& order) {
    auto eps = diagonal_characters(beta, order);
    const int n = beta.n();
    TwoFormMatrix out;
    out.params = s_params(order);
    const std::size_t r = order.size();
    out.m.assign(r, std::vector<long>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            long dot = 0;
            for (int x = 0; x < n; ++x) dot += eps[a][static_cast<std::size_t>(x)] * eps[b][static_cast<std::size_t>(x)];
            out.m[a][b] += dot;
            out.m[b][a] -= dot;
        }
    std::vector<std::vector<long>> by_strand(static_cast<std::size_t>(n), std::vector<long>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (int x = 0; x < n; ++x) by_strand[static_cast<std::size_t>(x)][a] = eps[a][static_cast<std::size_t>(x)];
    out.slice = slice_from_rows(by_strand, beta);
    return out;
}

TwoFormMatrix pullback_form_matrix(const BraidWord& beta, const std::vector<int>& order) {
    check_order(beta, order);
    const int n = beta.n();
    ChartMap chart = ldu_chart(beta, order);
    std::vector<int> letters = beta.letters();
    auto delta = half_twist_word(n).letters();
    letters.insert(letters.end(), delta.begin(), delta.end());
    const std::vector<int> top_letters = letters;
    std::vector<RationalExpr> vals = chart.values;
    TwoFormMatrix out;
    for (std::size_t k = 0; k < delta.size(); ++k) {
        Var u = var("u", static_cast<int>(k + 1));
        letters.push_back(delta[k]);
        vals.push_back(RationalExpr::variable(u));
        out.affine.push_back(u);
    }
    TwoForm w = omega_word(n, letters, vals);
    out.params = s_params(order);
    const std::size_t r = order.size();
    out.m.assign(r, std::vector<long>(r, 0));
    auto index = [&](Var v) -> std::size_t {
        auto it = std::find(out.params.begin(), out.params.end(), v);
        if (it == out.params.end()) throw Error(ErrorKind::NotPolynomial, "form has a term in " + var_name(v));
        return static_cast<std::size_t>(it - out.params.begin());
    };
    for (const auto& [key, c] : w) {
        std::size_t a = index(key.first);
        std::size_t b = index(key.second);
        RationalExpr coef = c * RationalExpr::variable(key.first) * RationalExpr::variable(key.second);
        if (!coef.is_constant()) throw Error(ErrorKind::NotPolynomial, "dlog coefficient is not constant: " + coef.str());
        Scalar v = coef.num().constant_term() / coef.den().constant_term();
        if (!v.is_integer()) throw Error(ErrorKind::NotPolynomial, "dlog coefficient is not an integer");
        long x = v.q().get_num().get_si();
        out.m[a][b] += x;
        out.m[b][a] -= x;
    }
    // diagonal of B(beta Delta) w0 on the chart: unit monomials in the parameters
    MatrixExpr top = braid_matrix(n, top_letters, chart.values) *
                     Permutation::longest(n).matrix();
    std::vector<std::vector<long>> by_strand;
    for (int x = 0; x < n; ++x) {
        const RationalExpr& d = top(x, x);
        if (!d.is_unit()) throw Error(ErrorKind::NotPolynomial, "diagonal entry is not a unit monomial: " + d.str());
        std::vector<long> row(r, 0);
        const Monomial mono = d.num().min_monomial();
        for (const auto& [v, e] : mono.entries()) row[index(v)] = e;
        by_strand.push_back(row);
    }
    out.slice = slice_from_rows(by_strand, beta);
    return out;
}

int integer_rank(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<Scalar>> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    int rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < a.size(); ++c) {
        auto r0 = static_cast<std::size_t>(rank);
        std::size_t piv = r0;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r0]);
        for (std::size_t r = r0 + 1; r < a.size(); ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] / a[r0][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] - f * a[r0][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<long>> integer_kernel(const std::vector<std::vector<long>>& rows, int cols) {
    std::vector<std::vector<Scalar>> a;
    for (const auto& row : rows) a.emplace_back(row.begin(), row.end());
    const auto C = static_cast<std::size_t>(cols);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Scalar f = a[r][c].inv();
        for (auto& x : a[r]) x = x * f;
        for (std::size_t q = 0; q < a.size(); ++q) {
            if (q == r || a[q][c].is_zero()) continue;
            Scalar g = a[q][c];
            for (std::size_t k = 0; k < C; ++k) a[q][k] = a[q][k] - g * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<long>> out;
    for (std::size_t f = 0; f < C; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<Scalar> v(C, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t q = 0; q < pivots.size(); ++q) v[pivots[q]] = -a[q][f];
        mpz_class l = 1;
        for (const auto& x : v) l = lcm(l, mpz_class(x.q().get_den()));
        std::vector<long> iv;
        for (const auto& x : v) iv.push_back(mpz_class(mpq_class(x.q() * l)).get_si());
        out.push_back(iv);
    }
    return out;
}

int slice_rank(const TwoFormMatrix& m) {
    const std::size_t k = m.slice.size();
    std::vector<std::vector<long>> r(k, std::vector<long>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t i = 0; i < m.m.size(); ++i)
                for (std::size_t j = 0; j < m.m.size(); ++j) r[a][b] += m.slice[a][i] * m.m[i][j] * m.slice[b][j];
    return integer_rank(r);
}

int expected_form_rank(const BraidWord& beta) { return beta.length() - beta.n() + cycle_count(beta); }

bool quotient_rank_check(const TwoFormMatrix& m, const BraidWord& beta) {
    return slice_rank(m) == expected_form_rank(beta);
}

}  // namespace bv
