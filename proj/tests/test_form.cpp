#include <algorithm>
#include <numeric>
#include <random>

#include "bv/form.hpp"
#include "doctest.h"

using namespace bv;

namespace {

std::vector<std::vector<int>> all_orders(int len) {
    std::vector<int> o(static_cast<std::size_t>(len));
    std::iota(o.begin(), o.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(o);
    while (std::next_permutation(o.begin(), o.end()));
    return out;
}

std::vector<int> identity_order(int len) {
    std::vector<int> o(static_cast<std::size_t>(len));
    std::iota(o.begin(), o.end(), 1);
    return o;
}

bool antisymmetric(const std::vector<std::vector<long>>& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (m[a][b] != -m[b][a]) return false;
    return true;
}

std::vector<RationalExpr> vars_of(const std::string& family, int count) {
    std::vector<RationalExpr> out;
    for (int k = 1; k <= count; ++k) out.push_back(RationalExpr::variable(var(family, k)));
    return out;
}

}  // namespace

TEST_CASE("omega of the half twist vanishes") {
    for (int n = 2; n <= 4; ++n) CHECK(omega_word(half_twist_word(n)).empty());
    CHECK(omega_word(parse_braid("1", 2)).empty());
    CHECK(omega_word(parse_braid("", 3)).empty());
    CHECK_FALSE(omega_word(parse_braid("1 1", 2)).empty());
}

TEST_CASE("omega of the full twist is (L|U)") {
    for (int n = 2; n <= 3; ++n) {
        auto d = half_twist_word(n).letters();
        int N = static_cast<int>(d.size());
        auto c = vars_of("c", N);
        auto u = vars_of("u", N);
        std::vector<int> letters = d;
        letters.insert(letters.end(), d.begin(), d.end());
        std::vector<RationalExpr> vals = c;
        vals.insert(vals.end(), u.begin(), u.end());
        MatrixExpr w0 = Permutation::longest(n).matrix();
        MatrixExpr L = braid_matrix(n, d, c) * w0;
        MatrixExpr U = w0 * braid_matrix(n, d, u);
        CHECK(L.is_lower_triangular());
        CHECK(U.is_upper_triangular());
        CHECK(omega_word(n, letters, vals) == wedge_trace(L, U));
    }
}

TEST_CASE("fixture matrices") {
    auto hopf = chart_form_matrix(parse_braid("1 1", 2), {1, 2});
    CHECK(hopf.m == std::vector<std::vector<long>>{{0, 2}, {-2, 0}});
    CHECK(integer_rank(hopf.m) == 2);
    CHECK(quotient_rank_check(hopf, parse_braid("1 1", 2)));

    auto trefoil = parse_braid("1 1 1", 2);
    auto t = chart_form_matrix(trefoil, {1, 2, 3});
    CHECK(t.size() == 3);
    CHECK(integer_rank(t.m) == 2);
    CHECK(slice_rank(t) == 2);
    CHECK(quotient_rank_check(t, trefoil));

    auto b5 = parse_braid("1 1 1 1 1", 2);
    auto f = chart_form_matrix(b5, identity_order(5));
    CHECK(integer_rank(f.m) == 4);
    CHECK(quotient_rank_check(f, b5));
    CHECK(expected_form_rank(b5) == 4);

    auto empty = chart_form_matrix(parse_braid("", 2), {});
    CHECK(empty.size() == 0);
    CHECK(empty.m.empty());
    CHECK_THROWS_AS(chart_form_matrix(trefoil, {1, 2}), Error);
}

TEST_CASE("diagonal characters") {
    auto e = diagonal_characters(parse_braid("1 2", 3), {2, 1});
    CHECK(e[0] == std::vector<int>{-1, 0, 1});
    CHECK(e[1] == std::vector<int>{-1, 1, 0});
    auto f = diagonal_characters(parse_braid("1 2", 3), {1, 2});
    CHECK(f[0] == std::vector<int>{-1, 1, 0});
    CHECK(f[1] == std::vector<int>{0, -1, 1});
}

TEST_CASE("path agreement") {
    for (int n = 2; n <= 3; ++n)
        for (int len = 0; len <= 4; ++len) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(13 * n + len));
            std::vector<int> letters;
            for (int k = 0; k < len; ++k) letters.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)));
            BraidWord beta(n, letters);
            for (const auto& order : all_orders(len)) {
                auto a = chart_form_matrix(beta, order);
                auto b = pullback_form_matrix(beta, order);
                CHECK(a == b);
                CHECK(a.slice == b.slice);
                CHECK(antisymmetric(a.m));
                for (const auto& row : a.m)
                    for (long x : row) CHECK(std::abs(x) <= 2 * n);
            }
        }
    for (const auto& [text, n] : std::vector<std::pair<std::string, int>>{{"1 1 1 1 1", 2}, {"1 2 1 2 1", 3}, {"2 1 1 2 2", 3}}) {
        auto beta = parse_braid(text, n);
        auto o = identity_order(5);
        std::reverse(o.begin(), o.end());
        CHECK(chart_form_matrix(beta, o) == pullback_form_matrix(beta, o));
        CHECK(chart_form_matrix(beta, {2, 4, 1, 5, 3}) == pullback_form_matrix(beta, {2, 4, 1, 5, 3}));
    }
}

TEST_CASE("slice rank is independent of the order") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int len = 1 + static_cast<int>(rng() % 4);
        std::vector<int> letters;
        for (int k = 0; k < len; ++k) letters.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)));
        BraidWord beta(n, letters);
        for (const auto& order : all_orders(len)) {
            auto m = chart_form_matrix(beta, order);
            CHECK(static_cast<int>(m.slice.size()) == len - n + cycle_count(beta));
            CHECK(quotient_rank_check(m, beta));
        }
    }
}

TEST_CASE("full lattice rank exceeds the slice rank for n = 3 knots") {
    auto beta = parse_braid("1 2 1 2", 3);
    auto m = chart_form_matrix(beta, {1, 2, 3, 4});
    CHECK(integer_rank(m.m) == 4);
    CHECK(slice_rank(m) == 2);
}

TEST_CASE("integer kernel") {
    auto k = integer_kernel({{1, 1, 1}}, 3);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
    CHECK(integer_kernel({}, 2).size() == 2);
    CHECK(integer_kernel({{2, 0}, {0, 3}}, 2).empty());
}
