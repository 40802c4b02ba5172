#include <random>

#include "bv/torus.hpp"
#include "bv/variety.hpp"
#include "doctest.h"

using namespace bv;

namespace {
RationalExpr E(const std::string& s) { return parse_expr(s); }
}

TEST_CASE("action weights") {
    auto hopf = parse_braid("1 1 1 1", 2);
    auto wa = action_weights(hopf, Side::Left);
    CHECK(wa[var("z1")] == Weight{-1, 1});
    CHECK(wa[var("z3")] == Weight{-1, 1});
    CHECK(wa[var("z2")] == Weight{1, -1});
    CHECK(wa[var("z4")] == Weight{1, -1});
    CHECK(action_weights(parse_braid("", 3), Side::Left).empty());
    auto w12 = action_weights(parse_braid("1 2", 3), Side::Left);
    CHECK(w12[var("z1")] == Weight{-1, 1, 0});
    // w_2 = s1: e_{s1(3)} - e_{s1(2)} = e3 - e1
    CHECK(w12[var("z2")] == Weight{-1, 0, 1});
    auto r = action_weights(parse_braid("1 1", 2), Side::Right);
    CHECK(r[var("z1")] == Weight{-1, 1});
    CHECK(r[var("z2")] == Weight{1, -1});
}

TEST_CASE("check homogeneous") {
    auto wa = action_weights(parse_braid("1 1 1 1", 2), Side::Left);
    CHECK(check_homogeneous(E("z1*z2"), wa, 2) == Weight{0, 0});
    CHECK(check_homogeneous(E("1+z1*z2"), wa, 2) == Weight{0, 0});
    CHECK(!check_homogeneous(E("z1+z2"), wa, 2));
    CHECK(check_homogeneous(E("z1/(1+z1*z2)"), wa, 2) == Weight{-1, 1});
    // Hopf origin: a T-fixed point on the variety
    auto eqs = variety_equations(parse_braid("1 1 1 1", 2), Permutation::identity(2));
    for (auto& e : eqs.equations) {
        CHECK(e.constant_term().is_zero());
        CHECK(check_homogeneous(RationalExpr(e), wa, 2));
    }
}

TEST_CASE("free subtorus") {
    CHECK(free_subtorus(parse_braid("1 1 1", 2)).empty());
    auto h = free_subtorus(parse_braid("1 1 1 1", 2));
    REQUIRE(h.size() == 1);
    CHECK(h[0].a == 1);
    CHECK(h[0].b == 2);
    CHECK(free_subtorus_dimension(parse_braid("1 1 1 1", 2)) == 0);
    auto e = free_subtorus(parse_braid("", 3));
    CHECK(e.size() == 2);
    CHECK(free_subtorus_dimension(parse_braid("1 1 1", 2)) == 1);
}

TEST_CASE("admissible matrices") {
    auto wa = action_weights(parse_braid("1 2 1", 3), Side::Left);
    for (auto w : {Permutation::identity(3), Permutation::longest(3)}) CHECK(is_admissible(MatrixExpr::identity(3), w, wa));
    auto w = Permutation::parse("[2 3 1]");
    WeightAssignment wz{{var("z0"), basis_difference(3, w(2), w(1))}};
    MatrixExpr U = MatrixExpr::identity(3);
    U(0, 1) = E("z0^-1");
    CHECK(is_admissible(U, w, wz));
    MatrixExpr bad = MatrixExpr::identity(2);
    bad(0, 1) = E("z1");
    CHECK(!is_admissible(bad, Permutation::identity(2), {{var("z1"), Weight{0, 0}}}));
}

TEST_CASE("property: variety equations are homogeneous") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 3;
        std::vector<int> l;
        for (int k = 0; k < 3 + static_cast<int>(rng() % 4); ++k) l.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)));
        BraidWord w(n, l);
        auto wa = action_weights(w, Side::Left);
        for (auto pi : {Permutation::identity(n), Permutation::longest(n)}) {
            auto p = variety_equations(w, pi);
            for (auto& e : p.equations) CHECK(check_homogeneous(RationalExpr(e), wa, n));
        }
    }
}

TEST_CASE("infer weights") {
    auto top = action_weights(parse_braid("1 1", 2), Side::Right);
    std::map<Var, RationalExpr> chart{{var("z1"), E("t1")}, {var("z2"), E("-t1^-1")}};
    auto w = infer_weights(chart, top, 2);
    REQUIRE(w);
    CHECK((*w)[var("t1")] == Weight{-1, 1});
    std::map<Var, RationalExpr> bad{{var("z1"), E("t1")}, {var("z2"), E("t1")}};
    CHECK(!infer_weights(bad, top, 2));
}
