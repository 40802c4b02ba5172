#include "bv/cluster.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <gmpxx.h>

namespace bv {

namespace {

struct Edge {
    int src = -1;
    int first = 0;
    int last = 0;
};

RationalExpr zv(int k) { return RationalExpr::variable(var("z", k)); }

std::vector<std::vector<int>> canonical(const Quiver& q) {
    const int m = q.size();
    if (m > 9) throw Error(ErrorKind::BudgetExceeded, "quiver isomorphism limited to 9 vertices");
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> c(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    q.arrows(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        if (best.empty() || c < best) best = std::move(c);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::vector<int> degree_profile(const Quiver& q) {
    std::vector<int> d;
    for (int i = 0; i < q.size(); ++i) {
        int in = 0, out = 0;
        for (int j = 0; j < q.size(); ++j) {
            const int a = q.arrows(i, j);
            (a > 0 ? out : in) += std::abs(a);
        }
        d.push_back(out * 1000 + in);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::string index_pair(int a, int b) {
    if (a < 10 && b < 10) return std::to_string(a) + std::to_string(b);
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string Cycle::str() const { return "I(v" + std::to_string(start + 1) + ", v" + std::to_string(end + 1) + ")"; }

std::vector<TreeVertex> weave_tree(const Weave& w) {
    if (w.n() != 2) throw Error(ErrorKind::NotTwoStrand, "cycle trees need n = 2");
    const WeaveSlices sl = validate(w);
    if (!sl.demazure) throw Error(ErrorKind::PatternMismatch, "cycle trees need a Demazure weave");
    std::vector<Edge> slice;
    for (int k = 1; k <= static_cast<int>(w.top().size()); ++k) slice.push_back({-1, k, k});
    std::vector<TreeVertex> vs;
    for (const auto& ev : w.events()) {
        if (ev.kind != EventKind::Three) throw Error(ErrorKind::PatternMismatch, "two-strand weave event must be trivalent");
        const auto p = static_cast<std::size_t>(ev.pos);
        const Edge l = slice[p];
        const Edge r = slice[p + 1];
        const int id = static_cast<int>(vs.size());
        TreeVertex v;
        v.left = l.src;
        v.right = r.src;
        v.first = l.first;
        v.last = r.last;
        if (l.src >= 0) {
            vs[static_cast<std::size_t>(l.src)].lower = id;
            vs[static_cast<std::size_t>(l.src)].from_left = true;
        }
        if (r.src >= 0) {
            vs[static_cast<std::size_t>(r.src)].lower = id;
            vs[static_cast<std::size_t>(r.src)].from_left = false;
        }
        vs.push_back(v);
        slice.erase(slice.begin() + static_cast<long>(p), slice.begin() + static_cast<long>(p) + 2);
        slice.insert(slice.begin() + static_cast<long>(p), Edge{id, l.first, r.last});
    }
    return vs;
}

WeaveGraph weave_graph(const Weave& w) {
    const WeaveSlices sl = validate(w);
    WeaveGraph g;
    std::vector<int> slice;
    for (std::size_t k = 0; k < w.top().size(); ++k) {
        g.edges.push_back({w.top()[k], -1, -1, static_cast<int>(k + 1)});
        slice.push_back(static_cast<int>(k));
    }
    const auto& evs = w.events();
    for (std::size_t j = 0; j < evs.size(); ++j) {
        const auto p = static_cast<std::size_t>(evs[j].pos);
        std::size_t take = 0;
        switch (evs[j].kind) {
        case EventKind::Three: case EventKind::Four: case EventKind::Cup: take = 2; break;
        case EventKind::Six: take = 3; break;
        case EventKind::Cap: take = 0; break;
        }
        std::vector<int> up(slice.begin() + static_cast<long>(p), slice.begin() + static_cast<long>(p + take));
        for (int e : up) g.edges[static_cast<std::size_t>(e)].lower = static_cast<int>(j);
        const auto& below = sl.slices[j + 1];
        const std::size_t put = below.size() + take - slice.size();
        std::vector<int> down;
        for (std::size_t k = 0; k < put; ++k) {
            down.push_back(static_cast<int>(g.edges.size()));
            g.edges.push_back({below[p + k], static_cast<int>(j), -1, 0});
        }
        slice.erase(slice.begin() + static_cast<long>(p), slice.begin() + static_cast<long>(p + take));
        slice.insert(slice.begin() + static_cast<long>(p), down.begin(), down.end());
        g.upper.push_back(std::move(up));
        g.lower.push_back(std::move(down));
    }
    return g;
}

std::vector<SPath> s_paths(const Weave& w) {
    const WeaveSlices sl = validate(w);
    if (!sl.demazure) throw Error(ErrorKind::PatternMismatch, "s-paths need a Demazure weave");
    const WeaveGraph g = weave_graph(w);
    const auto& evs = w.events();
    std::vector<SPath> out;
    for (std::size_t j = 0; j < evs.size(); ++j) {
        if (evs[j].kind != EventKind::Three) continue;
        SPath s;
        s.vertex = static_cast<int>(out.size());
        s.event = static_cast<int>(j);
        int e = g.upper[j][0];
        for (;;) {
            s.edges.push_back(e);
            const WeaveEdge& edge = g.edges[static_cast<std::size_t>(e)];
            if (edge.upper < 0) {
                s.chord = edge.top_pos;
                break;
            }
            const auto u = static_cast<std::size_t>(edge.upper);
            s.through.push_back(edge.upper);
            const auto& low = g.lower[u];
            const auto slot = static_cast<std::size_t>(std::find(low.begin(), low.end(), e) - low.begin());
            switch (evs[u].kind) {
            case EventKind::Three: e = g.upper[u][1]; break;
            case EventKind::Six: e = g.upper[u][2 - slot]; break;
            case EventKind::Four: e = g.upper[u][1 - slot]; break;
            default: throw Error(ErrorKind::PatternMismatch, "s-path meets a cup or cap");
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> shared_edge_pairing(const std::vector<SPath>& paths, const std::vector<EdgeCycle>& cycles) {
    std::vector<std::vector<int>> out(paths.size(), std::vector<int>(cycles.size(), 0));
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < cycles.size(); ++j)
            for (int e : paths[i].edges) {
                auto it = cycles[j].find(e);
                if (it != cycles[j].end()) out[i][j] += it->second;
            }
    return out;
}

CycleBasis i_cycle_basis(const Weave& w) {
    CycleBasis b;
    b.vertices = weave_tree(w);
    b.s_paths = s_paths(w);
    const auto& vs = b.vertices;
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
        if (vs[static_cast<std::size_t>(v)].lower >= 0) b.cycles.push_back({v, vs[static_cast<std::size_t>(v)].lower});
    const std::size_t m = b.cycles.size();
    b.intersection.assign(m, std::vector<int>(m, 0));
    auto upper_right = [&](const Cycle& c) { return !vs[static_cast<std::size_t>(c.start)].from_left; };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const Cycle& gi = b.cycles[i];
            const Cycle& gj = b.cycles[j];
            int x = 0;
            if (gi.end == gj.end) x = upper_right(gi) ? 1 : -1;
            else if (gi.start == gj.end) x = upper_right(gj) ? 1 : -1;
            else if (gj.start == gi.end) x = upper_right(gi) ? -1 : 1;
            b.intersection[i][j] = x;
        }
    b.pairing.assign(vs.size(), std::vector<int>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        b.pairing[static_cast<std::size_t>(b.cycles[j].start)][j] += 1;
        b.pairing[static_cast<std::size_t>(b.cycles[j].end)][j] -= 1;
    }
    return b;
}

std::vector<std::vector<long>> cycle_monomials(const std::vector<std::vector<int>>& pairing,
                                               const std::vector<int>& s_rows) {
    const std::size_t m = s_rows.size();
    // augmented [Q | I], Q[a][j] = pairing[s_rows[a]][j]
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(2 * m));
    for (std::size_t r = 0; r < m; ++r) {
        const auto row = static_cast<std::size_t>(s_rows[r]);
        if (row >= pairing.size() || pairing[row].size() != m)
            throw Error(ErrorKind::IndexOutOfRange, "pairing block must be square");
        for (std::size_t j = 0; j < m; ++j) a[r][j] = pairing[row][j];
        a[r][m + r] = 1;
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) throw Error(ErrorKind::EliminationFailed, "pairing block is singular");
        std::swap(a[piv], a[c]);
        const mpq_class lead = a[c][c];
        for (auto& x : a[c]) x /= lead;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const mpq_class f = a[r][c];
            for (std::size_t k = 0; k < 2 * m; ++k) a[r][k] -= f * a[c][k];
        }
    }
    // Q^{-1}[j][r]: exponent of s_{s_rows[r]} in cycle j
    const std::size_t rows = pairing.size();
    std::vector<std::vector<long>> out(m, std::vector<long>(rows, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < m; ++r) {
            const mpq_class& x = a[j][m + r];
            if (x.get_den() != 1) throw Error(ErrorKind::EliminationFailed, "pairing block is not unimodular");
            out[j][static_cast<std::size_t>(s_rows[r])] = x.get_num().get_si();
        }
    return out;
}

int cycle_lattice_rank(const CycleBasis& b) {
    std::vector<std::vector<Scalar>> a;
    for (const auto& row : cycle_monomials(b)) a.emplace_back(row.begin(), row.end());
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
            const Scalar f = a[r][c] / a[r0][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] - f * a[r0][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<long>> cycle_monomials(const CycleBasis& b) {
    std::vector<int> rows;
    for (const auto& c : b.cycles) rows.push_back(c.start);
    return cycle_monomials(b.pairing, rows);
}

std::string s_relations(const std::vector<std::vector<int>>& pairing, int rows) {
    std::ostringstream out;
    for (int r = 0; r < rows && r < static_cast<int>(pairing.size()); ++r) {
        out << "s" << r + 1 << " =";
        bool any = false;
        for (std::size_t j = 0; j < pairing[static_cast<std::size_t>(r)].size(); ++j) {
            const int e = pairing[static_cast<std::size_t>(r)][j];
            if (e == 0) continue;
            out << " g" << j + 1;
            if (e != 1) out << "^" << e;
            any = true;
        }
        if (!any) out << " 1";
        out << "\n";
    }
    return out.str();
}

std::string ACoordinate::label() const {
    if (!plucker) return value.str();
    return "P" + index_pair(plucker->first, plucker->second);
}

RationalExpr plucker(int a, int b) {
    if (a < 1 || b < a + 1) throw Error(ErrorKind::IndexOutOfRange, "plucker index needs 1 <= a < b");
    // second row of B(z_a) ... B(z_k), B(z) = [[0, 1], [1, z]]
    RationalExpr e21(0), e22(1);
    for (int k = a; k <= b - 2; ++k) {
        const RationalExpr n22 = e21 + e22 * zv(k);
        e21 = e22;
        e22 = n22;
    }
    return e22;
}

std::vector<ACoordinate> a_coordinates(const CycleBasis& b, const ChartMap& chart) {
    if (chart.inverted.size() != chart.params.size())
        throw Error(ErrorKind::IndexOutOfRange, "chart has no recorded inverse");
    std::map<Var, RationalExpr> inv;
    for (std::size_t k = 0; k < chart.params.size(); ++k) inv.emplace(chart.params[k], chart.inverted[k]);
    const auto mons = cycle_monomials(b);
    const int zs = static_cast<int>(chart.top_vars.size());
    std::vector<ACoordinate> out;
    for (const auto& e : mons) {
        ACoordinate a;
        a.exponents = e;
        RationalExpr v(1), mono(1);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            const Var s = var("s", b.s_paths[k].chord);
            auto it = inv.find(s);
            if (it == inv.end()) throw Error(ErrorKind::IndexOutOfRange, "chart has no parameter " + var_name(s));
            v *= it->second.pow(static_cast<int>(e[k]));
            mono *= RationalExpr::variable(s).pow(static_cast<int>(e[k]));
        }
        a.monomial = mono;
        if (!v.is_polynomial()) throw Error(ErrorKind::NotPolynomial, "cycle monomial is not polynomial: " + v.str());
        a.value = v;
        for (int x = 1; x <= zs && !a.plucker; ++x)
            for (int y = x + 2; y <= zs + 2 && !a.plucker; ++y)
                if (plucker(x, y) == v) a.plucker = std::make_pair(x, y);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<ACoordinate> a_coordinates(const BraidWord& beta, const std::vector<int>& order) {
    return a_coordinates(i_cycle_basis(weave_from_opening_order(beta, order)), pinch_chart(beta, order));
}

std::vector<std::pair<int, int>> triangulation_diagonals(const CycleBasis& b) {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : b.cycles) {
        const auto& v = b.vertices[static_cast<std::size_t>(c.start)];
        out.emplace_back(v.first, v.last + 1);
    }
    return out;
}

std::string Quiver::str() const {
    std::ostringstream out;
    for (const auto& row : b) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
    return out.str();
}

Quiver quiver(const CycleBasis& b) { return quiver_from_matrix(b.intersection); }

Quiver quiver_from_matrix(const std::vector<std::vector<int>>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) throw Error(ErrorKind::IndexOutOfRange, "exchange matrix must be square");
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != -m[j][i]) throw Error(ErrorKind::IndexOutOfRange, "exchange matrix must be skew-symmetric");
    }
    return Quiver{m};
}

Quiver mutate(const Quiver& q, int k) {
    const int m = q.size();
    if (k < 0 || k >= m) throw Error(ErrorKind::IndexOutOfRange, "mutation vertex out of range");
    Quiver r = q;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int& x = r.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == k || j == k) x = -q.arrows(i, j);
            else {
                const int a = q.arrows(i, k), c = q.arrows(k, j);
                x = q.arrows(i, j) + (std::abs(a) * c + a * std::abs(c)) / 2;
            }
        }
    return r;
}

Quiver dynkin_quiver(char type, int rank) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    auto arrow = [&](int i, int j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    };
    if (type == 'A' && rank >= 1) {
        for (int i = 0; i + 1 < rank; ++i) arrow(i, i + 1);
    } else if (type == 'D' && rank >= 4) {
        arrow(0, 2);
        arrow(1, 2);
        for (int i = 2; i + 1 < rank; ++i) arrow(i, i + 1);
    } else if (type == 'E' && rank >= 6 && rank <= 8) {
        // branch at vertex 2 of the chain 0 - 1 - 2 - ... - (rank-2), extra vertex rank-1
        for (int i = 0; i + 1 < rank - 1; ++i) arrow(i, i + 1);
        arrow(rank - 1, 2);
    } else {
        throw Error(ErrorKind::IndexOutOfRange, "unsupported Dynkin type");
    }
    return Quiver{m};
}

bool isomorphic(const Quiver& a, const Quiver& b) {
    if (a.size() != b.size() || degree_profile(a) != degree_profile(b)) return false;
    return canonical(a) == canonical(b);
}

std::optional<std::vector<int>> mutation_path(const Quiver& a, const Quiver& b, int depth) {
    if (a.size() != b.size()) return std::nullopt;
    const auto target = canonical(b);
    std::set<std::vector<std::vector<int>>> seen{canonical(a)};
    std::deque<std::pair<Quiver, std::vector<int>>> queue{{a, {}}};
    if (*seen.begin() == target) return std::vector<int>{};
    while (!queue.empty()) {
        auto [q, path] = queue.front();
        queue.pop_front();
        if (static_cast<int>(path.size()) >= depth) continue;
        for (int k = 0; k < q.size(); ++k) {
            Quiver r = mutate(q, k);
            auto c = canonical(r);
            if (!seen.insert(c).second) continue;
            auto next = path;
            next.push_back(k);
            if (c == target) return next;
            queue.emplace_back(std::move(r), std::move(next));
        }
    }
    return std::nullopt;
}

std::string export_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int i = 0; i < q.size(); ++i) out << "  g" << i + 1 << ";\n";
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            for (int t = 0; t < q.arrows(i, j); ++t) out << "  g" << i + 1 << " -> g" << j + 1 << ";\n";
    out << "}\n";
    return out.str();
}

ExchangeMonomials exchange_monomials(const Quiver& q, const std::vector<RationalExpr>& a, int k) {
    RationalExpr in(1), out(1);
    for (int i = 0; i < q.size(); ++i) {
        const int x = q.arrows(k, i);
        if (x > 0) out *= a[static_cast<std::size_t>(i)].pow(x);
        if (x < 0) in *= a[static_cast<std::size_t>(i)].pow(-x);
    }
    return {in, out};
}

}  // namespace bv
