#include "bv/variety.hpp"

namespace bv {

std::string VarietyPresentation::str() const {
    std::string s;
    for (auto& e : equations) s += e.str() + "\n";
    return s;
}

namespace {

VarietyPresentation below_diagonal(const MatrixExpr& m, int n) {
    VarietyPresentation p;
    p.n = n;
    for (int a = n; a >= 2; --a)
        for (int b = 1; b < a; ++b) {
            const RationalExpr& e = m(a - 1, b - 1);
            if (e.is_zero()) {
                p.zero_positions.push_back({a, b});
                continue;
            }
            p.equations.push_back(e.as_laurent());
            p.positions.push_back({a, b});
        }
    return p;
}

}  // namespace

VarietyPresentation variety_equations(const BraidWord& w, const Permutation& pi) {
    if (pi.n() != w.n()) throw Error(ErrorKind::IndexOutOfRange, "permutation size differs from strand count");
    MatrixExpr m = braid_matrix(w) * pi.matrix();
    VarietyPresentation p = below_diagonal(m, w.n());
    p.pi = pi;
    p.vars = w.vars();
    return p;
}

bool is_origin(const VarietyPresentation& p) {
    std::set<Var> seen;
    for (auto& e : p.equations) {
        if (!e.is_monomial() || e.leading().first.grade() != 1 || !e.leading().first.is_polynomial()) return false;
        seen.insert(e.leading().first.entries()[0].first);
    }
    return seen == std::set<Var>(p.vars.begin(), p.vars.end()) && p.inequations.empty();
}

std::optional<int> variety_dimension(const BraidWord& w) {
    int n = w.n();
    if (demazure_product(w) != Permutation::longest(n)) return std::nullopt;
    return w.length() - n * (n - 1) / 2;
}

MatrixExpr lower_from_half_twist(const BraidWord& delta) {
    MatrixExpr l = braid_matrix(delta) * Permutation::longest(delta.n()).matrix();
    if (!l.is_lower_triangular()) throw Error(ErrorKind::EliminationFailed, "B_Delta w0 is not lower triangular");
    return l;
}

MatrixExpr upper_from_half_twist(const BraidWord& delta) {
    MatrixExpr u = Permutation::longest(delta.n()).matrix() * braid_matrix(delta);
    if (!u.is_upper_triangular()) throw Error(ErrorKind::EliminationFailed, "w0 B_Delta is not upper triangular");
    return u;
}

FullTwistSplit split_full_twist(const BraidWord& beta) {
    int n = beta.n(), l = beta.length(), N = n * (n - 1) / 2;
    BraidWord b = beta.renamed("z", 1);
    BraidWord dc = half_twist_word(n, "z", l + 1);
    BraidWord du = half_twist_word(n, "z", l + N + 1);
    BraidWord full = b.concat(dc).concat(du);
    FullTwistSplit out;
    out.full = variety_equations(full, Permutation::identity(n));
    out.reduced = variety_equations(b.concat(dc), Permutation::longest(n));
    out.free_vars = du.vars();

    MatrixExpr L = lower_from_half_twist(dc), U = upper_from_half_twist(du);
    for (int k = 0; k < n; ++k)
        if (L(k, k) != RationalExpr(1) || U(k, k) != RationalExpr(1))
            throw Error(ErrorKind::EliminationFailed, "half twist factors are not unitriangular");
    MatrixExpr M = braid_matrix(b) * L;
    MatrixExpr F = M * U;
    if (F != braid_matrix(full)) throw Error(ErrorKind::EliminationFailed, "B_beta L U differs from B_beta Delta^2");
    // (MU)_ab = M_ab + sum_{k<b} M_ak U_kb: a unitriangular transform of the entries below the diagonal
    for (int a = 2; a <= n; ++a)
        for (int c = 1; c < a; ++c) {
            RationalExpr rest = F(a - 1, c - 1);
            for (int k = 1; k < c; ++k) rest -= M(a - 1, k - 1) * U(k - 1, c - 1);
            if (rest != M(a - 1, c - 1)) throw Error(ErrorKind::EliminationFailed, "residual equation mismatch");
        }
    VarietyPresentation fromM = below_diagonal(M, n);
    if (fromM.equations != out.reduced.equations)
        throw Error(ErrorKind::EliminationFailed, "B_beta L does not present X0(beta Delta; w0)");
    for (auto& e : out.reduced.equations)
        for (Var v : out.free_vars)
            if (e.has_variable(v)) throw Error(ErrorKind::EliminationFailed, "residual equation involves a free variable");
    // the entries of U above the diagonal are a triangular coordinate change of u
    std::vector<RationalExpr> ent;
    for (int a = 1; a <= n; ++a)
        for (int c = a + 1; c <= n; ++c) ent.push_back(U(a - 1, c - 1));
    MatrixExpr J(N);
    for (int r = 0; r < N; ++r)
        for (int k = 0; k < N; ++k)
            J(r, k) = differentiate(ent[static_cast<std::size_t>(r)], out.free_vars[static_cast<std::size_t>(k)]);
    RationalExpr det = J.det();
    if (N > 0 && !(det.is_constant() && !det.is_zero()))
        throw Error(ErrorKind::EliminationFailed, "U coordinates are not an affine coordinate change");
    return out;
}

MatrixExpr free_lower(int n) {
    MatrixExpr L = MatrixExpr::identity(n);
    for (int a = 2; a <= n; ++a)
        for (int b = 1; b < a; ++b) L(a - 1, b - 1) = RationalExpr::variable(var("c", 10 * a + b));
    return L;
}

VarietyPresentation augmentation_equations(const BraidWord& beta, const std::set<int>& marked,
                                           const std::map<int, RationalExpr>& diag) {
    int n = beta.n();
    std::vector<RationalExpr> t;
    std::vector<Var> tvars;
    for (int k = 1; k <= n; ++k) {
        if (marked.count(k)) {
            tvars.push_back(var("t", k));
            t.push_back(RationalExpr::variable(tvars.back()));
        } else {
            t.push_back(RationalExpr(1));
        }
    }
    MatrixExpr m = braid_matrix(beta) * free_lower(n) * MatrixExpr::diagonal(t);
    VarietyPresentation p = below_diagonal(m, n);
    p.pi = Permutation::identity(n);
    p.vars = beta.vars();
    for (int a = 2; a <= n; ++a)
        for (int b = 1; b < a; ++b) p.vars.push_back(var("c", 10 * a + b));
    for (int k = 1; k <= n; ++k) {
        if (marked.count(k)) continue;
        auto it = diag.find(k);
        RationalExpr target = it == diag.end() ? RationalExpr(1) : it->second;
        RationalExpr e = m(k - 1, k - 1) - target;
        if (!e.is_zero()) {
            p.equations.push_back(e.as_laurent());
            p.positions.push_back({k, k});
        }
    }
    for (Var v : tvars) {
        p.vars.push_back(v);
        p.inequations.push_back(LaurentPoly::variable(v));
    }
    return p;
}

BorelResult borel_act(const MatrixExpr& U0, const BraidWord& w, const std::vector<RationalExpr>& values) {
    BorelResult r{U0, values};
    for (int k = w.length() - 1; k >= 0; --k) {
        auto s = slide_left(r.u, w.letter(k), values[static_cast<std::size_t>(k)]);
        r.u = s.u;
        r.values[static_cast<std::size_t>(k)] = s.z;
    }
    return r;
}

}  // namespace bv
