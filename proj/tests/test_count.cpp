#include <functional>

#include "bv/count.hpp"
#include "bv/variety.hpp"
#include "doctest.h"

using namespace bv;

namespace {

BraidWord with_delta(const BraidWord& beta) {
    auto letters = beta.letters();
    auto d = half_twist_word(beta.n()).letters();
    letters.insert(letters.end(), d.begin(), d.end());
    return BraidWord(beta.n(), letters);
}

// every word on n strands of length len
void for_words(int n, int len, const std::function<void(const BraidWord&)>& f) {
    std::vector<int> w(static_cast<std::size_t>(len), 1);
    while (true) {
        f(BraidWord(n, w));
        int k = len - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == n - 1) w[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++w[static_cast<std::size_t>(k)];
    }
}

// counts solutions of the symbolic equations, independent of the matrix loop
long equation_count(const BraidWord& word, const Permutation& pi, std::uint64_t q) {
    auto pres = variety_equations(word, pi);
    std::map<Var, std::uint64_t> pt;
    for (Var v : pres.vars) pt[v] = 0;
    long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : pres.equations) {
            auto x = eval_mod(RationalExpr(e), pt, q);
            if (!x || *x != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        auto it = pt.begin();
        while (it != pt.end() && it->second == q - 1) (it++)->second = 0;
        if (it == pt.end()) break;
        ++it->second;
    }
    return count;
}

}  // namespace

TEST_CASE("brute force fixtures") {
    auto w0 = Permutation::longest(2);
    CHECK(brute_count(parse_braid("1 1 1 1", 2), w0, 2) == 5);
    CHECK(brute_count(parse_braid("1 1 1 1", 2), w0, 3) == 20);
    CHECK(brute_count(parse_braid("1 1 1", 2), w0, 2) == 3);
    CHECK(brute_count(parse_braid("1 1 1", 2), w0, 3) == 7);
    CHECK(brute_count(half_twist_word(3), Permutation::longest(3), 5) == 1);
    CHECK(brute_count(parse_braid("1 2", 3), Permutation::longest(3), 3) == 0);
    CHECK_THROWS_AS(brute_count(parse_braid("1 1", 2), w0, 4), Error);
    CHECK_THROWS_AS(brute_count(BraidWord(2, std::vector<int>(30, 1)), w0, 3), Error);
}

TEST_CASE("brute force agrees with the equations") {
    for (int n = 2; n <= 3; ++n)
        for (int len = 1; len <= 4; ++len)
            for_words(n, len, [&](const BraidWord& w) {
                for (const auto& pi : {Permutation::longest(n), Permutation::identity(n)})
                    CHECK(brute_count(w, pi, 3) == equation_count(w, pi, 3));
            });
}

TEST_CASE("strata fixtures") {
    auto hopf = stratify(parse_braid("1 1 1", 2)).strata();
    CHECK(hopf == std::map<std::pair<int, int>, long>{{{0, 2}, 1}, {{1, 0}, 1}});
    auto delta = stratify(half_twist_word(3));
    CHECK(delta.nodes.size() == 1);
    CHECK(delta.strata().size() == 1);
    auto dead = stratify(parse_braid("1 2", 3));
    CHECK(dead.strata().empty());
    CHECK(dead.nodes[0].dead);
}

TEST_CASE("point count polynomials") {
    auto trefoil = point_count_polynomial(parse_braid("1 1 1", 2));
    CHECK(trefoil.strata_str() == "(q-1)^3 + 2q(q-1)");
    CHECK(trefoil.coeffs == std::vector<long>{-1, 1, -1, 1});
    CHECK(trefoil.str() == "q^3 - q^2 + q - 1");
    CHECK(trefoil.eval(2) == 5);
    CHECK(trefoil.eval(3) == 20);
    auto hopf = point_count_polynomial(parse_braid("1 1", 2));
    CHECK(hopf.strata_str() == "(q-1)^2 + q");
    CHECK(hopf.eval(2) == 3);
    CHECK(hopf.eval(3) == 7);
    auto point = point_count_polynomial(parse_braid("", 3));
    CHECK(point.str() == "1");
    CHECK(point.strata_str() == "1");
}

TEST_CASE("dimension bookkeeping") {
    for (int n = 2; n <= 3; ++n)
        for (int len = 0; len <= 4; ++len)
            for_words(n, len, [&](const BraidWord& beta) {
                auto gamma = with_delta(beta);
                auto t = stratify(gamma);
                for (const auto& node : t.nodes) {
                    if (!node.leaf() || node.dead) continue;
                    CHECK(2 * node.a + node.b == gamma.length() - n * (n - 1) / 2);
                }
            });
}

TEST_CASE("counts agree with brute force") {
    for (int n = 2; n <= 3; ++n) {
        int delta = n * (n - 1) / 2;
        for (int len = 0; len + delta <= 6; ++len)
            for_words(n, len, [&](const BraidWord& beta) {
                auto p = point_count_polynomial(beta);
                auto top = with_delta(beta);
                for (long q : {2L, 3L})
                    CHECK(p.eval(q) == brute_count(top, Permutation::longest(n), q));
            });
    }
}

TEST_CASE("stratification order does not matter") {
    for (int n = 2; n <= 3; ++n)
        for (int len = 0; len <= 4; ++len)
            for_words(n, len, [&](const BraidWord& beta) {
                auto p = point_count_polynomial(beta);
                for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) CHECK(point_count_polynomial(beta, seed) == p);
            });
}
