#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "bv/chart.hpp"
#include "bv/cluster.hpp"
#include "bv/count.hpp"
#include "bv/form.hpp"
#include "bv/torus.hpp"
#include "bv/variety.hpp"
#include "bv/weave.hpp"

using namespace bv;

namespace {

struct Options {
    std::string braid;
    std::string pi = "w0";
    std::string order;
    std::string weave;
    std::string dot;
    std::string side = "right";
    long q = 0;
    std::uint64_t seed = 0;
    bool strata = false;
    bool brute = false;
    bool pinch = false;
};

std::vector<int> parse_order(const std::string& text, int len) {
    std::vector<int> out;
    std::string t;
    for (char c : text) t += (c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream in(t);
    int x;
    while (in >> x) out.push_back(x);
    if (out.empty()) {
        out.resize(static_cast<std::size_t>(len));
        std::iota(out.begin(), out.end(), 1);
    }
    return out;
}

BraidWord need_braid(const Options& o) {
    if (o.braid.empty()) throw CLI::ValidationError("--braid", "required");
    return parse_braid_spec(o.braid);
}

Permutation parse_pi(const std::string& text, int n) {
    if (text == "id") return Permutation::identity(n);
    if (text == "w0") return Permutation::longest(n);
    Permutation p = Permutation::parse(text);
    if (p.n() != n) throw Error(ErrorKind::IndexOutOfRange, "permutation size differs from n");
    return p;
}

Weave read_weave(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_weave(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

// beta Delta as a braid word
BraidWord with_delta(const BraidWord& b) {
    std::vector<int> l = b.letters();
    const auto d = half_twist_word(b.n()).letters();
    l.insert(l.end(), d.begin(), d.end());
    return BraidWord(b.n(), l);
}

int run_matrix(const Options& o) {
    std::cout << braid_matrix(need_braid(o)).str();
    return 0;
}

int run_variety(const Options& o) {
    const BraidWord b = need_braid(o);
    const VarietyPresentation p = variety_equations(b, parse_pi(o.pi, b.n()));
    std::cout << "equations: " << p.equations.size() << "\n" << p.str();
    return 0;
}

int run_demazure(const Options& o) {
    std::cout << demazure_product(need_braid(o)).str() << "\n";
    return 0;
}

int run_weights(const Options& o) {
    const BraidWord b = need_braid(o);
    const Side side = o.side == "left" ? Side::Left : Side::Right;
    for (const auto& [v, w] : action_weights(b, side)) std::cout << var_name(v) << ": " << weight_str(w) << "\n";
    std::cout << "free subtorus dimension: " << free_subtorus_dimension(b) << "\n";
    return 0;
}

Weave weave_of(const Options& o) {
    if (!o.weave.empty()) return read_weave(o.weave);
    const BraidWord b = need_braid(o);
    return weave_from_opening_order(b, parse_order(o.order, b.length()));
}

int run_weave(const Options& o) {
    Weave w = weave_of(o);
    const WeaveSlices s = validate(w);
    std::cout << serialize(w);
    std::cout << "# trivalent: " << s.trivalent << "\n";
    std::cout << "# demazure: " << (s.demazure ? "yes" : "no") << "\n";
    std::string bottom;
    for (int x : s.bottom()) bottom += (bottom.empty() ? "" : " ") + std::to_string(x);
    std::cout << "# bottom: " << bottom << "\n";
    if (!o.dot.empty()) write_file(o.dot, export_dot(w));
    return 0;
}

int run_chart(const Options& o) {
    if (!o.weave.empty()) {
        std::cout << chart_parametrize(read_weave(o.weave)).str();
        return 0;
    }
    const BraidWord b = need_braid(o);
    const auto order = parse_order(o.order, b.length());
    std::cout << (o.pinch ? pinch_chart(b, order) : opening_chart(b, order)).str();
    return 0;
}

int run_mellit(const Options& o) {
    const BraidWord b = need_braid(o);
    const auto order = mellit_order(b);
    std::cout << "order:";
    for (int c : order) std::cout << " " << c;
    std::cout << "\n" << opening_chart(b, order).str();
    return 0;
}

int run_form(const Options& o) {
    const BraidWord b = need_braid(o);
    const auto order = parse_order(o.order, b.length());
    const TwoFormMatrix m = chart_form_matrix(b, order);
    std::cout << m.str();
    std::cout << "rank: " << integer_rank(m.m) << "\n";
    std::cout << "slice rank: " << slice_rank(m) << "\n";
    std::cout << "expected: " << expected_form_rank(b) << "\n";
    std::cout << "matches pull-back: " << (m == pullback_form_matrix(b, order) ? "yes" : "no") << "\n";
    return 0;
}

int run_count(const Options& o) {
    const BraidWord b = need_braid(o);
    const PointCountPolynomial p = point_count_polynomial(b, o.seed);
    std::cout << "polynomial: " << p.strata_str();
    if (o.q > 0) std::cout << "; q=" << o.q << ": " << p.eval(o.q);
    std::cout << "\n";
    if (o.strata) {
        std::cout << "expanded: " << p.str() << "\n";
        for (const auto& [ab, m] : p.strata)
            std::cout << "C^" << ab.first << " x (C*)^" << ab.second << ": " << m << "\n";
    }
    if (o.brute) {
        if (o.q <= 0) throw CLI::ValidationError("--brute", "needs --q");
        std::cout << "brute: " << brute_count(with_delta(b), Permutation::longest(b.n()), o.q) << "\n";
    }
    return 0;
}

int run_cluster(const Options& o) {
    const BraidWord b = need_braid(o);
    const auto order = parse_order(o.order, b.length());
    const CycleBasis cb = i_cycle_basis(weave_from_opening_order(b, order));
    const auto as = a_coordinates(cb, pinch_chart(b, order));
    for (std::size_t k = 0; k < as.size(); ++k) {
        std::cout << "gamma_" << cb.cycles[k].start + 1 << " = " << as[k].monomial.str() << " = " << as[k].value.str();
        if (as[k].plucker) std::cout << " = " << as[k].label();
        std::cout << "\n";
    }
    const std::string dot = export_dot(quiver(cb));
    if (o.dot.empty()) std::cout << dot;
    else write_file(o.dot, dot);
    return 0;
}

int run_mutation_graph(const Options& o) {
    const MutationGraph g = mutation_graph(need_braid(o));
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    std::cout << "proxy: " << g.proxy << "\n";
    if (!o.dot.empty()) write_file(o.dot, export_dot(g));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid varieties, weaves and their charts"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, int (*)(const Options&)> handlers{
        {"matrix", run_matrix},   {"variety", run_variety}, {"demazure", run_demazure},
        {"weights", run_weights}, {"weave", run_weave},     {"chart", run_chart},
        {"mellit", run_mellit},   {"form", run_form},       {"count", run_count},
        {"cluster", run_cluster}, {"mutation-graph", run_mutation_graph}};
    const std::map<std::string, std::string> about{
        {"matrix", "braid matrix of a word"},
        {"variety", "equations of X0(beta; pi)"},
        {"demazure", "Demazure product"},
        {"weights", "torus weights of the variables"},
        {"weave", "validate or build a weave"},
        {"chart", "toric chart of an opening order or weave"},
        {"mellit", "Mellit order and chart"},
        {"form", "two-form matrix on an opening chart"},
        {"count", "point count polynomial of X0(beta Delta; w0)"},
        {"cluster", "cycle monomials and quiver of a two-strand weave"},
        {"mutation-graph", "mutation graph of opening-order charts"}};
    for (const auto& [name, text] : about) {
        CLI::App* sub = app.add_subcommand(name, text);
        sub->add_option("--braid", o.braid, "braid word, e.g. \"B3: 1 2 1\"");
        if (name == "variety") sub->add_option("--pi", o.pi, "permutation: id, w0 or [2 1 3]");
        if (name == "weave" || name == "chart" || name == "form" || name == "cluster")
            sub->add_option("--order", o.order, "opening order, e.g. \"3 1 2\"");
        if (name == "weave" || name == "chart") sub->add_option("--weave", o.weave, "weave file");
        if (name == "weave" || name == "cluster" || name == "mutation-graph")
            sub->add_option("--dot", o.dot, "write DOT to this file");
        if (name == "weights") sub->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
        if (name == "chart") sub->add_flag("--pinch", o.pinch, "two-strand pinch frame");
        if (name == "count") {
            sub->add_option("--q", o.q, "prime field size");
            sub->add_option("--seed", o.seed, "stratification seed");
            sub->add_flag("--strata", o.strata, "list strata");
            sub->add_flag("--brute", o.brute, "also count by exhaustion");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code == 0) return 0;
        std::cerr << app.help();
        return 2;
    }
    try {
        for (const auto& [name, fn] : handlers)
            if (app.got_subcommand(name)) return fn(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
