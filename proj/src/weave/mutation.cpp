#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bv/chart.hpp"
#include "bv/weave.hpp"

namespace bv {

namespace {

std::string chart_key(const ChartMap& m) {
    std::string key;
    for (const auto& v : m.values) key += v.str() + ";";
    return key;
}

std::string order_str(const std::vector<int>& order) {
    std::string s;
    for (std::size_t k = 0; k < order.size(); ++k) s += (k ? " " : "") + std::to_string(order[k]);
    return s;
}

}  // namespace

MutationGraph mutation_graph(const BraidWord& beta) {
    const int n = beta.n();
    const int len = beta.length();
    if ((n == 2 && len > 8) || (n > 2 && len > 5))
        throw Error(ErrorKind::BudgetExceeded, "mutation graph enumeration limited to length 8 (n=2) or 5 (n>2)");
    MutationGraph g;
    g.proxy = n == 2 ? "binary tree shape" : "chart image (unit monomial transition)";
    std::vector<int> order(static_cast<std::size_t>(len));
    std::iota(order.begin(), order.end(), 1);
    std::map<std::vector<int>, int> class_of;
    std::map<std::string, int> index;
    std::vector<ChartMap> reps;
    do {
        int cls = -1;
        if (n == 2) {
            std::string key = tree_shape(len, order);
            auto it = index.find(key);
            if (it != index.end()) cls = it->second;
            else {
                cls = g.vertex_count();
                index.emplace(key, cls);
                g.keys.push_back(key);
                g.orders.push_back(order);
            }
        } else {
            ChartMap m = opening_chart(beta, order, true);
            for (std::size_t r = 0; r < reps.size() && cls < 0; ++r)
                if (same_image(reps[r], m)) cls = static_cast<int>(r);
            if (cls < 0) {
                cls = g.vertex_count();
                g.keys.push_back(chart_key(m));
                g.orders.push_back(order);
                reps.push_back(std::move(m));
            }
        }
        class_of[order] = cls;
    } while (std::next_permutation(order.begin(), order.end()));
    if (n == 2) {
        // Tamari rotations: orders differing by one adjacent swap
        for (const auto& [ord, c] : class_of) {
            for (int k = 0; k + 1 < len; ++k) {
                auto other = ord;
                std::swap(other[static_cast<std::size_t>(k)], other[static_cast<std::size_t>(k + 1)]);
                int d = class_of.at(other);
                if (d != c) g.edges.insert({std::min(c, d), std::max(c, d)});
            }
        }
    } else {
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = a + 1; b < g.vertex_count(); ++b)
                if (adjacent_charts(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))
                    g.edges.insert({a, b});
    }
    return g;
}

std::string export_dot(const MutationGraph& g) {
    std::ostringstream out;
    out << "graph mutations {\n";
    out << "  // proxy: " << g.proxy << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  m" << v << " [label=\"" << order_str(g.orders[static_cast<std::size_t>(v)]) << "\"];\n";
    for (const auto& [a, b] : g.edges) out << "  m" << a << " -- m" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace bv
