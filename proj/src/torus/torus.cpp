#include "bv/torus.hpp"

#include <set>

namespace bv {

Weight basis_difference(int n, int a, int b) {
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(a - 1)] += 1;
    w[static_cast<std::size_t>(b - 1)] -= 1;
    return w;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + ")";
}

WeightAssignment action_weights(const BraidWord& w, Side side) {
    WeightAssignment wa;
    int n = w.n(), l = w.length();
    if (side == Side::Left) {
        Permutation p = Permutation::identity(n);
        for (int k = 0; k < l; ++k) {
            int i = w.letter(k);
            wa[w.variable(k)] = basis_difference(n, p(i + 1), p(i));
            p = p.times_simple(i);
        }
    } else {
        Permutation p = Permutation::identity(n);
        for (int k = l - 1; k >= 0; --k) {
            int i = w.letter(k);
            wa[w.variable(k)] = basis_difference(n, p(i), p(i + 1));
            p = p.times_simple(i);
        }
    }
    return wa;
}

namespace {

std::optional<Weight> poly_weight(const LaurentPoly& p, const WeightAssignment& wa, int n) {
    std::optional<Weight> out;
    for (auto& [m, c] : p.terms()) {
        Weight w(static_cast<std::size_t>(n), 0);
        for (auto& [v, k] : m.entries()) {
            auto it = wa.find(v);
            if (it == wa.end()) continue;
            for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] += k * it->second[static_cast<std::size_t>(j)];
        }
        if (!out) out = w;
        else if (*out != w) return std::nullopt;
    }
    if (!out) out = Weight(static_cast<std::size_t>(n), 0);
    return out;
}

}  // namespace

std::optional<Weight> check_homogeneous(const RationalExpr& e, const WeightAssignment& wa, int n) {
    auto a = poly_weight(e.num(), wa, n);
    auto b = poly_weight(e.den(), wa, n);
    if (!a || !b) return std::nullopt;
    for (int j = 0; j < n; ++j) (*a)[static_cast<std::size_t>(j)] -= (*b)[static_cast<std::size_t>(j)];
    return a;
}

std::vector<TorusRelation> free_subtorus(const BraidWord& w) {
    Permutation p = coxeter_image(w);
    std::vector<int> reps;
    std::vector<bool> seen(static_cast<std::size_t>(p.n() + 1), false);
    for (int j = 1; j <= p.n(); ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        reps.push_back(j);
        for (int k = j; !seen[static_cast<std::size_t>(k)]; k = p(k)) seen[static_cast<std::size_t>(k)] = true;
    }
    std::vector<TorusRelation> rel;
    for (std::size_t k = 1; k < reps.size(); ++k) rel.push_back({reps[0], reps[k]});
    return rel;
}

int free_subtorus_dimension(const BraidWord& w) { return w.n() - cycle_count(w); }

bool is_admissible(const MatrixExpr& m, const Permutation& w, const WeightAssignment& wa) {
    int n = m.size();
    for (int a = 1; a <= n; ++a)
        for (int k = 1; k <= n; ++k) {
            const RationalExpr& e = m(a - 1, k - 1);
            if (e.is_zero()) continue;
            auto h = check_homogeneous(e, wa, n);
            if (!h || *h != basis_difference(n, w(a), w(k))) return false;
        }
    return true;
}

std::optional<WeightAssignment> infer_weights(const std::map<Var, RationalExpr>& coords, const WeightAssignment& top,
                                              int n) {
    // unknowns: weights of the parameters, one linear system per weight coordinate
    std::set<Var> params;
    for (auto& [v, e] : coords)
        for (Var p : e.variables()) params.insert(p);
    std::vector<Var> pv(params.begin(), params.end());
    std::map<Var, std::size_t> idx;
    for (std::size_t k = 0; k < pv.size(); ++k) idx[pv[k]] = k;
    std::size_t m = pv.size();
    std::vector<std::vector<mpq_class>> rows;
    std::vector<std::vector<mpq_class>> rhs;  // one column per weight coordinate
    auto expo = [&](const Monomial& mon) {
        std::vector<mpq_class> r(m, 0);
        for (auto& [v, k] : mon.entries()) r[idx.at(v)] += k;
        return r;
    };
    for (auto& [v, e] : coords) {
        if (e.is_zero()) continue;
        auto it = top.find(v);
        if (it == top.end()) continue;
        const Monomial& ref = e.den().leading().first;
        auto rref = expo(ref);
        for (auto& [mon, c] : e.num().terms()) {
            auto r = expo(mon);
            for (std::size_t k = 0; k < m; ++k) r[k] -= rref[k];
            rows.push_back(r);
            std::vector<mpq_class> b;
            for (long x : it->second) b.push_back(x);
            rhs.push_back(b);
        }
        for (auto& [mon, c] : e.den().terms()) {
            auto r = expo(mon);
            for (std::size_t k = 0; k < m; ++k) r[k] -= rref[k];
            rows.push_back(r);
            rhs.push_back(std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
        }
    }
    // Gauss-Jordan on [rows | rhs]
    std::size_t R = rows.size();
    std::vector<std::size_t> pivcol;
    std::size_t r0 = 0;
    for (std::size_t c = 0; c < m && r0 < R; ++c) {
        std::size_t piv = r0;
        while (piv < R && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == R) continue;
        std::swap(rows[piv], rows[r0]);
        std::swap(rhs[piv], rhs[r0]);
        mpq_class inv = 1 / rows[r0][c];
        for (auto& x : rows[r0]) x *= inv;
        for (auto& x : rhs[r0]) x *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == r0 || sgn(rows[r][c]) == 0) continue;
            mpq_class f = rows[r][c];
            for (std::size_t k = 0; k < m; ++k) rows[r][k] -= f * rows[r0][k];
            for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) rhs[r][k] -= f * rhs[r0][k];
        }
        pivcol.push_back(c);
        ++r0;
    }
    for (std::size_t r = r0; r < R; ++r)
        for (auto& x : rhs[r])
            if (sgn(x) != 0) return std::nullopt;
    WeightAssignment out;
    for (Var p : pv) out[p] = Weight(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < pivcol.size(); ++r) {
        Weight w;
        for (auto& x : rhs[r]) {
            if (x.get_den() != 1) return std::nullopt;
            w.push_back(x.get_num().get_si());
        }
        out[pv[pivcol[r]]] = w;
    }
    // free parameters were set to 0; verify
    for (auto& [v, e] : coords) {
        auto it = top.find(v);
        if (it == top.end() || e.is_zero()) continue;
        auto h = check_homogeneous(e, out, n);
        if (!h || *h != it->second) return std::nullopt;
    }
    return out;
}

}  // namespace bv
