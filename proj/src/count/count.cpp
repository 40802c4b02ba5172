#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "bv/count.hpp"

namespace bv {

namespace {

constexpr std::size_t kSearchBudget = 64;

struct Split {
    std::vector<MoveStep> moves;
    int pos = -1;
};

std::vector<int> apply_moves(std::vector<int> w, const std::vector<MoveStep>& moves) {
    for (const auto& m : moves) w = move_letters(w, m.pos, m.kind);
    return w;
}

// the prefix up to the first descent is rewritten to end in the descent letter
Split descent_split(int n, const std::vector<int>& w) {
    Permutation u = Permutation::identity(n);
    std::size_t k = 0;
    while (k < w.size() && !u.right_descent(w[k])) u = u.times_simple(w[k++]);
    if (k == w.size()) throw Error(ErrorKind::EliminationFailed, "reduced word has no doubled letter");
    std::vector<int> prefix(w.begin(), w.begin() + static_cast<long>(k));
    std::vector<int> target = u.times_simple(w[k]).reduced_word();
    target.push_back(w[k]);
    auto path = braid_path(n, prefix, target);
    if (!path) throw Error(ErrorKind::BudgetExceeded, "no braid path to the doubled letter");
    return {*path, static_cast<int>(k) - 1};
}

Split random_split(int n, const std::vector<int>& w, std::mt19937_64& rng) {
    std::map<std::vector<int>, std::vector<MoveStep>> seen{{w, {}}};
    std::deque<std::vector<int>> queue{w};
    std::vector<Split> found;
    while (!queue.empty() && seen.size() <= kSearchBudget) {
        auto cur = queue.front();
        queue.pop_front();
        const auto& path = seen[cur];
        for (std::size_t p = 0; p + 1 < cur.size(); ++p)
            if (cur[p] == cur[p + 1]) found.push_back({path, static_cast<int>(p)});
        for (const auto& m : available_moves(cur)) {
            auto next = move_letters(cur, m.pos, m.kind);
            if (seen.count(next)) continue;
            auto np = seen[cur];
            np.push_back(m);
            seen.emplace(next, np);
            queue.push_back(next);
        }
    }
    if (found.empty()) return descent_split(n, w);
    return found[rng() % found.size()];
}

void grow(StrataTree& t, int id, const Permutation& w0, std::mt19937_64* rng) {
    const int n = t.n;
    auto word = t.nodes[static_cast<std::size_t>(id)].word;
    if (demazure_product(n, word) != w0) {
        t.nodes[static_cast<std::size_t>(id)].dead = true;
        return;
    }
    if (is_reduced(n, word)) return;
    Split s = rng ? random_split(n, word, *rng) : descent_split(n, word);
    auto moved = apply_moves(word, s.moves);
    const auto p = static_cast<std::size_t>(s.pos);
    if (moved[p] != moved[p + 1]) throw Error(ErrorKind::EliminationFailed, "split is not a doubled letter");
    {
        auto& node = t.nodes[static_cast<std::size_t>(id)];
        node.moves = s.moves;
        node.split = s.pos;
    }
    auto inv = moved;
    inv.erase(inv.begin() + static_cast<long>(p) + 1);
    auto van = moved;
    van.erase(van.begin() + static_cast<long>(p), van.begin() + static_cast<long>(p) + 2);
    for (Branch br : {Branch::Invert, Branch::Vanish}) {
        StrataNode child;
        const auto& parent = t.nodes[static_cast<std::size_t>(id)];
        child.word = br == Branch::Invert ? inv : van;
        child.branch = br;
        child.parent = id;
        child.a = parent.a + (br == Branch::Vanish);
        child.b = parent.b + (br == Branch::Invert);
        int cid = static_cast<int>(t.nodes.size());
        t.nodes.push_back(child);
        if (br == Branch::Invert) t.nodes[static_cast<std::size_t>(id)].invert = cid;
        else t.nodes[static_cast<std::size_t>(id)].vanish = cid;
        grow(t, cid, w0, rng);
    }
}

std::string power(const std::string& base, int k) {
    if (k == 0) return "";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

}  // namespace

std::map<std::pair<int, int>, long> StrataTree::strata() const {
    std::map<std::pair<int, int>, long> out;
    for (const auto& node : nodes)
        if (node.leaf() && !node.dead) ++out[{node.a, node.b}];
    return out;
}

StrataTree stratify(const BraidWord& gamma, std::uint64_t seed) {
    StrataTree t;
    t.n = gamma.n();
    StrataNode root;
    root.word = gamma.letters();
    t.nodes.push_back(root);
    std::mt19937_64 rng(seed);
    grow(t, 0, Permutation::longest(t.n), seed ? &rng : nullptr);
    return t;
}

long PointCountPolynomial::eval(long q) const {
    long v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * q + coeffs[k];
    return v;
}

std::string PointCountPolynomial::strata_str() const {
    if (strata.empty()) return "0";
    std::string s;
    for (const auto& [ab, mult] : strata) {
        auto [a, b] = ab;
        std::string term = power("q", a) + power("(q-1)", b);
        if (term.empty()) term = std::to_string(mult);
        else if (mult != 1) term = std::to_string(mult) + term;
        s += (s.empty() ? "" : " + ") + term;
    }
    return s;
}

std::string PointCountPolynomial::str() const {
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        long c = coeffs[k];
        if (c == 0) continue;
        std::string mag = std::to_string(c < 0 ? -c : c);
        std::string mono = power("q", static_cast<int>(k));
        std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + mono);
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

PointCountPolynomial count_polynomial(const StrataTree& t) {
    PointCountPolynomial p;
    p.strata = t.strata();
    for (const auto& [ab, mult] : p.strata) {
        // q^a (q-1)^b
        std::vector<long> term(static_cast<std::size_t>(ab.first), 0);
        term.push_back(1);
        for (int k = 0; k < ab.second; ++k) {
            std::vector<long> next(term.size() + 1, 0);
            for (std::size_t j = 0; j < term.size(); ++j) {
                next[j + 1] += term[j];
                next[j] -= term[j];
            }
            term = next;
        }
        if (p.coeffs.size() < term.size()) p.coeffs.resize(term.size(), 0);
        for (std::size_t j = 0; j < term.size(); ++j) p.coeffs[j] += mult * term[j];
    }
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

PointCountPolynomial point_count_polynomial(const BraidWord& beta, std::uint64_t seed) {
    auto letters = beta.letters();
    auto d = half_twist_word(beta.n()).letters();
    letters.insert(letters.end(), d.begin(), d.end());
    return count_polynomial(stratify(BraidWord(beta.n(), letters), seed));
}

long brute_count(const BraidWord& word, const Permutation& pi, long q) {
    if (q < 2) throw Error(ErrorKind::IndexOutOfRange, "q must be prime");
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw Error(ErrorKind::IndexOutOfRange, "q must be prime");
    const int n = word.n();
    const int len = word.length();
    double total = 1;
    for (int k = 0; k < len; ++k) total *= static_cast<double>(q);
    if (total > 1e8) throw Error(ErrorKind::BudgetExceeded, "q^l exceeds 1e8");
    // depth-first over the letters, keeping the partial product
    std::vector<std::vector<long>> stack(static_cast<std::size_t>(len + 1),
                                         std::vector<long>(static_cast<std::size_t>(n * n), 0));
    for (int a = 0; a < n; ++a) stack[0][static_cast<std::size_t>(a * n + a)] = 1;
    long count = 0;
    std::vector<long> z(static_cast<std::size_t>(len), 0);
    int depth = 0;
    auto push = [&](int k) {
        const auto& m = stack[static_cast<std::size_t>(k)];
        auto& out = stack[static_cast<std::size_t>(k + 1)];
        out = m;
        int i = word.letter(k);
        long zk = z[static_cast<std::size_t>(k)];
        for (int a = 0; a < n; ++a) {
            long x = m[static_cast<std::size_t>(a * n + i - 1)];
            long y = m[static_cast<std::size_t>(a * n + i)];
            out[static_cast<std::size_t>(a * n + i - 1)] = y;
            out[static_cast<std::size_t>(a * n + i)] = (x + zk * y) % q;
        }
    };
    auto accept = [&](const std::vector<long>& m) {
        for (int a = 2; a <= n; ++a)
            for (int b = 1; b < a; ++b)
                if (m[static_cast<std::size_t>((a - 1) * n + pi(b) - 1)] != 0) return false;
        return true;
    };
    if (len == 0) return accept(stack[0]) ? 1 : 0;
    push(0);
    depth = 1;
    while (true) {
        if (depth == len) {
            if (accept(stack[static_cast<std::size_t>(len)])) ++count;
            // advance the deepest coordinate
            while (depth > 0 && z[static_cast<std::size_t>(depth - 1)] == q - 1) {
                z[static_cast<std::size_t>(depth - 1)] = 0;
                --depth;
            }
            if (depth == 0) break;
            ++z[static_cast<std::size_t>(depth - 1)];
            push(depth - 1);
            continue;
        }
        push(depth);
        ++depth;
    }
    return count;
}

}  // namespace bv
