#include "bv/chart.hpp"

#include <algorithm>
#include <sstream>

#include "bv/slide.hpp"

namespace bv {
namespace {

// [[-1/a, 1], [0, a]] at rows i, i+1
MatrixExpr trivalent_u(int n, int i, const RationalExpr& a) {
    MatrixExpr u = MatrixExpr::identity(n);
    u(i - 1, i - 1) = RationalExpr(-1) / a;
    u(i - 1, i) = RationalExpr(1);
    u(i, i) = a;
    return u;
}

MatrixExpr elementary_upper(int n, int i, const RationalExpr& b) {
    MatrixExpr u = MatrixExpr::identity(n);
    u(i - 1, i) = b;
    return u;
}

// Slides u leftwards through letters[0..p), rewriting their values.
MatrixExpr slide_through(MatrixExpr u, const std::vector<int>& letters, std::vector<RationalExpr>& values, int p,
                         bool units) {
    for (int k = p - 1; k >= 0; --k) {
        auto r = slide_left(u, letters[static_cast<std::size_t>(k)], values[static_cast<std::size_t>(k)], units);
        values[static_cast<std::size_t>(k)] = r.z;
        u = std::move(r.u);
    }
    return u;
}

// Inverse of slide_through for values already slid.
MatrixExpr unslide_through(MatrixExpr u, const std::vector<int>& letters, std::vector<RationalExpr>& values, int p) {
    for (int k = p - 1; k >= 0; --k) {
        int i = letters[static_cast<std::size_t>(k)];
        RationalExpr z = unslide_value(u, i, values[static_cast<std::size_t>(k)]);
        values[static_cast<std::size_t>(k)] = z;
        u = slide_left(u, i, z).u;
    }
    return u;
}

MoveKind six_kind(const WeaveEvent& ev) { return ev.up ? MoveKind::R3Up : MoveKind::R3Down; }

}  // namespace

Propagation propagate_down(const Weave& w) {
    std::vector<RationalExpr> top;
    for (std::size_t k = 0; k < w.top().size(); ++k) top.push_back(RationalExpr::variable(var("z", static_cast<int>(k + 1))));
    return propagate_down(w, top);
}

Propagation propagate_down(const Weave& w, const std::vector<RationalExpr>& top_values) {
    Weave copy = w;
    auto slices = validate(copy);
    if (top_values.size() != w.top().size()) throw Error(ErrorKind::IndexOutOfRange, "one value per top letter required");
    const int n = w.n();
    Propagation out;
    out.u = MatrixExpr::identity(n);
    std::vector<RationalExpr> vals = top_values;
    int fresh = 0;
    for (std::size_t j = 0; j < copy.events().size(); ++j) {
        const auto& ev = copy.events()[j];
        const auto& letters = slices.slices[j];
        const int p = ev.pos;
        const auto P = static_cast<std::size_t>(p);
        switch (ev.kind) {
        case EventKind::Three: {
            RationalExpr a = vals[P], b = vals[P + 1];
            if (a.is_zero()) throw Error(ErrorKind::ZeroDenominator, "trivalent vertex on a zero value");
            out.inverted.push_back(a);
            vals[P] = b + a.inv();
            vals.erase(vals.begin() + p + 1);
            out.u = out.u * slide_through(trivalent_u(n, letters[P], a), letters, vals, p, false);
            break;
        }
        case EventKind::Cup: {
            RationalExpr b = vals[P + 1];
            out.vanishing.push_back(vals[P]);
            vals.erase(vals.begin() + p, vals.begin() + p + 2);
            out.u = out.u * slide_through(elementary_upper(n, letters[P], b), letters, vals, p, false);
            break;
        }
        case EventKind::Cap: {
            Var u = var("u", ++fresh);
            out.cap_vars.push_back(u);
            RationalExpr uv = RationalExpr::variable(u);
            out.u = out.u * slide_through(elementary_upper(n, ev.letter, -uv), letters, vals, p, false);
            vals.insert(vals.begin() + p, {RationalExpr(0), uv});
            break;
        }
        case EventKind::Six: vals = move_values(vals, p, six_kind(ev)); break;
        case EventKind::Four: vals = move_values(vals, p, MoveKind::Comm); break;
        }
    }
    out.bottom = vals;
    return out;
}

Bindings ChartMap::substitution() const {
    Bindings b;
    for (std::size_t k = 0; k < top_vars.size(); ++k) b[top_vars[k]] = values[k];
    return b;
}

std::string ChartMap::str() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < top_vars.size(); ++k) out << var_name(top_vars[k]) << " = " << values[k].str() << "\n";
    for (const auto& e : inverted) out << "invert: " << e.str() << "\n";
    return out.str();
}

ChartMap chart_parametrize(const Weave& w, std::vector<Var> params, bool record) {
    Weave copy = w;
    auto s = validate(copy);
    const int n = w.n();
    if (!s.demazure) throw Error(ErrorKind::PatternMismatch, "chart needs a Demazure weave");
    const auto& bottom = s.bottom();
    if (!is_reduced(n, bottom) || coxeter_image(n, bottom) != Permutation::longest(n))
        throw Error(ErrorKind::NotReduced, "bottom slice is not a reduced word for w0");
    if (params.empty())
        for (int k = 1; k <= s.trivalent; ++k) params.push_back(var("t", k));
    if (static_cast<int>(params.size()) != s.trivalent)
        throw Error(ErrorKind::IndexOutOfRange, "one parameter per trivalent vertex required");

    std::vector<RationalExpr> vals(bottom.size(), RationalExpr(0));
    int next = s.trivalent;
    for (std::size_t j = copy.events().size(); j-- > 0;) {
        const auto& ev = copy.events()[j];
        const auto& letters = s.slices[j];
        const int p = ev.pos;
        switch (ev.kind) {
        case EventKind::Three: {
            RationalExpr t = RationalExpr::variable(params[static_cast<std::size_t>(--next)]);
            RationalExpr c = vals[static_cast<std::size_t>(p)];
            vals[static_cast<std::size_t>(p)] = t;
            vals.insert(vals.begin() + p + 1, c - t.inv());
            unslide_through(trivalent_u(n, letters[static_cast<std::size_t>(p)], t), letters, vals, p);
            break;
        }
        case EventKind::Six:
            vals = move_values(vals, p, ev.up ? MoveKind::R3Down : MoveKind::R3Up);
            break;
        case EventKind::Four: vals = move_values(vals, p, MoveKind::Comm); break;
        default: break;
        }
    }
    ChartMap m;
    m.params = params;
    for (std::size_t k = 0; k < w.top().size(); ++k) m.top_vars.push_back(var("z", static_cast<int>(k + 1)));
    m.values = vals;
    if (record) m.inverted = propagate_down(copy).inverted;
    return m;
}

ChartMap opening_chart(const BraidWord& beta, const std::vector<int>& order, bool record) {
    Weave w = weave_from_opening_order(beta, order);
    std::vector<Var> params;
    for (int c : order) params.push_back(var("s", c));
    return chart_parametrize(w, params, record);
}

Opening open_crossing(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values, int pos) {
    if (pos < 0 || pos >= static_cast<int>(letters.size())) throw Error(ErrorKind::IndexOutOfRange, "crossing position");
    const auto P = static_cast<std::size_t>(pos);
    const int i = letters[P];
    const RationalExpr z = values[P];
    if (z.is_zero()) throw Error(ErrorKind::ZeroDenominator, "opening a crossing with value 0");
    Opening out;
    out.unit = z;
    out.letters = letters;
    out.values = values;
    out.letters.erase(out.letters.begin() + pos);
    out.values.erase(out.values.begin() + pos);
    slide_through(trivalent_u(n, i, z), out.letters, out.values, pos, false);
    MatrixExpr l = MatrixExpr::identity(n);
    l(i, i - 1) = z.inv();
    for (std::size_t k = P; k < out.letters.size(); ++k) {
        int j = out.letters[k];
        RationalExpr wp = out.values[k] + l(j, j - 1);
        left_mul_braid_inv(l, j, wp);
        right_mul_braid(l, j, out.values[k]);
        if (!l.is_lower_triangular()) throw Error(ErrorKind::EliminationFailed, "lower factor lost its shape");
        out.values[k] = wp;
    }
    return out;
}

std::vector<RationalExpr> unopen_crossing(int n, const std::vector<int>& letters,
                                          const std::vector<RationalExpr>& values, int pos, int i,
                                          const RationalExpr& unit) {
    if (pos < 0 || pos > static_cast<int>(letters.size())) throw Error(ErrorKind::IndexOutOfRange, "crossing position");
    std::vector<RationalExpr> vals = values;
    unslide_through(trivalent_u(n, i, unit), letters, vals, pos);
    MatrixExpr l = MatrixExpr::identity(n);
    l(i, i - 1) = unit.inv();
    for (std::size_t k = static_cast<std::size_t>(pos); k < letters.size(); ++k) {
        int j = letters[k];
        RationalExpr wp = vals[k];
        RationalExpr w = wp - l(j, j - 1);
        left_mul_braid_inv(l, j, wp);
        right_mul_braid(l, j, w);
        if (!l.is_lower_triangular()) throw Error(ErrorKind::EliminationFailed, "lower factor lost its shape");
        vals[k] = w;
    }
    vals.insert(vals.begin() + pos, unit);
    return vals;
}

ChartMap ldu_chart(const BraidWord& beta, const std::vector<int>& order) {
    const int n = beta.n();
    const auto delta = half_twist_word(n).letters();
    std::vector<int> remaining = order;
    std::vector<int> ids;
    std::vector<int> letters = delta;
    std::vector<RationalExpr> vals(delta.size(), RationalExpr(0));
    for (std::size_t r = order.size(); r-- > 0;) {
        int c = order[r];
        if (c < 1 || c > beta.length()) throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(c));
        auto it = std::lower_bound(ids.begin(), ids.end(), c);
        int pos = static_cast<int>(it - ids.begin());
        int i = beta.letter(c - 1);
        vals = unopen_crossing(n, letters, vals, pos, i, RationalExpr::variable(var("s", c)));
        ids.insert(it, c);
        letters.insert(letters.begin() + pos, i);
    }
    if (static_cast<int>(ids.size()) != beta.length())
        throw Error(ErrorKind::IndexOutOfRange, "order must open every crossing");
    ChartMap m;
    for (int c : order) m.params.push_back(var("s", c));
    for (std::size_t k = 0; k < letters.size(); ++k) m.top_vars.push_back(var("z", static_cast<int>(k + 1)));
    m.values = vals;
    return m;
}

ChartMap pinch_chart(const BraidWord& beta, const std::vector<int>& order) {
    if (beta.n() != 2) throw Error(ErrorKind::NotTwoStrand, "pinch chart needs n = 2");
    const int len = beta.length();
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < len; ++k)
        if (static_cast<int>(sorted.size()) != len || sorted[static_cast<std::size_t>(k)] != k + 1)
            throw Error(ErrorKind::IndexOutOfRange, "order must be a permutation of 1.." + std::to_string(len));
    auto s = [](int c) { return RationalExpr::variable(var("s", c)); };
    // crossing len+1 is Delta
    std::vector<RationalExpr> vals(static_cast<std::size_t>(len + 2), RationalExpr(0));
    std::vector<bool> present(static_cast<std::size_t>(len + 2), false);
    present[static_cast<std::size_t>(len + 1)] = true;
    for (std::size_t r = order.size(); r-- > 0;) {
        const int c = order[r];
        auto gap = [&](int from, int to) {
            RationalExpr g(1);
            for (int d = from + 1; d < to; ++d) g *= RationalExpr(-1) / s(d).pow(2);
            return g;
        };
        int a = c - 1;
        while (a >= 1 && !present[static_cast<std::size_t>(a)]) --a;
        int b = c + 1;
        while (!present[static_cast<std::size_t>(b)]) ++b;
        if (a >= 1) vals[static_cast<std::size_t>(a)] -= gap(a, c) / s(c);
        vals[static_cast<std::size_t>(b)] -= gap(c, b) / s(c);
        vals[static_cast<std::size_t>(c)] = s(c);
        present[static_cast<std::size_t>(c)] = true;
    }
    ChartMap m;
    for (int c : order) m.params.push_back(var("s", c));
    for (int k = 1; k <= len + 1; ++k) {
        m.top_vars.push_back(var("z", k));
        m.values.push_back(vals[static_cast<std::size_t>(k)]);
    }
    // z_c - s_c involves only crossings opened before c
    Bindings back;
    m.inverted.assign(static_cast<std::size_t>(len), RationalExpr(0));
    for (int c : order) {
        const RationalExpr rest = substitute(vals[static_cast<std::size_t>(c)] - s(c), back);
        const RationalExpr inv = RationalExpr::variable(var("z", c)) - rest;
        back[var("s", c)] = inv;
    }
    for (std::size_t k = 0; k < order.size(); ++k) m.inverted[k] = back.at(var("s", order[k]));
    return m;
}

std::vector<int> mellit_order(const BraidWord& beta) {
    const int n = beta.n();
    const auto delta = half_twist_word(n).letters();
    std::vector<int> ids;
    for (int k = 1; k <= beta.length(); ++k) ids.push_back(k);
    std::vector<int> order;
    while (!ids.empty()) {
        std::vector<int> word;
        for (int c : ids) word.push_back(beta.letter(c - 1));
        word.insert(word.end(), delta.begin(), delta.end());
        Permutation u = Permutation::identity(n);
        std::size_t j = 0;
        while (j < word.size() && !u.right_descent(word[j])) u = u.times_simple(word[j++]);
        if (j == word.size()) throw Error(ErrorKind::EliminationFailed, "walk never stalls");
        std::vector<int> prefix(word.begin(), word.begin() + static_cast<long>(j));
        int k = exchange_index(n, prefix, word[j]);
        if (k > static_cast<int>(ids.size())) throw Error(ErrorKind::EliminationFailed, "exchange lands in Delta");
        order.push_back(ids[static_cast<std::size_t>(k - 1)]);
        ids.erase(ids.begin() + (k - 1));
    }
    return order;
}

int non_unit_count(const ChartMap& a, const ChartMap& b) {
    if (a.inverted.size() != a.params.size()) throw Error(ErrorKind::IndexOutOfRange, "chart has no inverse record");
    if (a.top_vars != b.top_vars) throw Error(ErrorKind::IndexOutOfRange, "charts of different words");
    Bindings sub = b.substitution();
    int count = 0;
    for (const auto& e : a.inverted)
        if (!substitute(e, sub).is_unit()) ++count;
    return count;
}

bool same_image(const ChartMap& a, const ChartMap& b) {
    return a.params.size() == b.params.size() && non_unit_count(a, b) == 0 && non_unit_count(b, a) == 0;
}

namespace {

LaurentPoly strip_unit(const LaurentPoly& p) {
    LaurentPoly q = p.shift(p.min_monomial().inv());
    return q.scale(q.leading().second.inv());
}

bool single_exchange(const ChartMap& a, const ChartMap& b) {
    Bindings sub = b.substitution();
    std::vector<LaurentPoly> parts;
    for (const auto& e : a.inverted) {
        RationalExpr v = substitute(e, sub);
        for (const LaurentPoly* p : {&v.num(), &v.den()})
            if (!p->is_monomial()) parts.push_back(strip_unit(*p));
    }
    if (parts.empty()) return false;
    auto smallest = std::min_element(parts.begin(), parts.end(),
                                     [](const LaurentPoly& x, const LaurentPoly& y) { return x.size() < y.size(); });
    LaurentPoly f = *smallest;
    for (auto p : parts) {
        while (!p.is_constant()) {
            auto q = divide_exact(p, f);
            if (!q) return false;
            p = *q;
        }
    }
    return true;
}

}  // namespace

bool adjacent_charts(const ChartMap& a, const ChartMap& b) {
    if (a.inverted.size() != a.params.size() || b.inverted.size() != b.params.size())
        throw Error(ErrorKind::IndexOutOfRange, "chart has no inverse record");
    return single_exchange(a, b) && single_exchange(b, a);
}

std::vector<RationalExpr> rational_map(const Weave& w) { return propagate_down(w).bottom; }

bool compare_extended(const std::vector<RationalExpr>& a, const std::vector<RationalExpr>& b) {
    return a == b;
}

}  // namespace bv
