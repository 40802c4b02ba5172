#include "bv/ring.hpp"

namespace bv {

OneForm differential(const RationalExpr& e) {
    OneForm f;
    for (Var v : e.variables()) {
        RationalExpr d = differentiate(e, v);
        if (!d.is_zero()) f.emplace(v, d);
    }
    return f;
}

OneForm dlog(const RationalExpr& e) {
    if (e.is_zero()) throw Error(ErrorKind::DlogOfZero, "dlog of the zero function");
    OneForm f = differential(e);
    RationalExpr ei = e.inv();
    for (auto& [v, c] : f) c = c * ei;
    return f;
}

void accumulate(TwoForm& acc, Var i, Var j, const RationalExpr& c) {
    if (i == j || c.is_zero()) return;
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = acc.find(key);
    RationalExpr v = i < j ? c : -c;
    if (it == acc.end()) {
        acc.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
    TwoForm w;
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) accumulate(w, i, j, x * y);
    return w;
}

TwoForm add(const TwoForm& a, const TwoForm& b) {
    TwoForm w = a;
    for (auto& [k, c] : b) accumulate(w, k.first, k.second, c);
    return w;
}

TwoForm scale(const TwoForm& a, const RationalExpr& c) {
    TwoForm w;
    if (c.is_zero()) return w;
    for (auto& [k, v] : a) w.emplace(k, v * c);
    return w;
}

TwoForm wedge_trace(const MatrixExpr& F, const MatrixExpr& Finv, const MatrixExpr& G, const MatrixExpr& Ginv) {
    int n = F.size();
    std::vector<std::pair<Var, MatrixExpr>> left, right;
    for (Var v : F.variables()) {
        MatrixExpr d = F.derivative(v);
        left.push_back({v, Finv * d});
    }
    for (Var v : G.variables()) {
        MatrixExpr d = G.derivative(v);
        right.push_back({v, d * Ginv});
    }
    TwoForm w;
    for (auto& [i, A] : left)
        for (auto& [j, B] : right) {
            if (i == j) continue;
            RationalExpr tr;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (A(a, b).is_zero() || B(b, a).is_zero()) continue;
                    tr += A(a, b) * B(b, a);
                }
            accumulate(w, i, j, tr);
        }
    return w;
}

TwoForm wedge_trace(const MatrixExpr& F, const MatrixExpr& G) {
    return wedge_trace(F, mat_inv(F), G, mat_inv(G));
}

std::string str(const TwoForm& w) {
    if (w.empty()) return "0";
    std::string s;
    for (auto& [k, c] : w) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*d" + var_name(k.first) + "^d" + var_name(k.second);
    }
    return s;
}

}  // namespace bv
