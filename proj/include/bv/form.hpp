#pragma once

#include <string>
#include <vector>

#include "bv/braid.hpp"

namespace bv {

struct TwoFormMatrix {
    std::vector<Var> params;              // unit chart parameters, one row each
    std::vector<std::vector<long>> m;     // m[a][b]: coefficient of dlog p_a ^ dlog p_b
    std::vector<Var> affine;              // affine directions (no row)
    // cocharacters of the slice fixing the diagonal on unmarked strands (one mark
    // per cycle of beta's permutation, at its smallest strand)
    std::vector<std::vector<long>> slice;
    int size() const { return static_cast<int>(params.size()); }
    bool operator==(const TwoFormMatrix& o) const { return params == o.params && m == o.m; }
    std::string str() const;
};

// Telescoping sum of (B_1...B_{k-1} | B_k); variables z1, z2, ... by default.
TwoForm omega_word(const BraidWord& w);
TwoForm omega_word(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values);

// Exponents of the chart parameters in the diagonal factors after they slide left:
// entry [k][x] is the exponent of the k-th opened parameter on strand x+1.
std::vector<std::vector<int>> diagonal_characters(const BraidWord& beta, const std::vector<int>& order);
// Form on the opening chart from the positions of the diagonal factors.
TwoFormMatrix chart_form_matrix(const BraidWord& beta, const std::vector<int>& order);
// Same matrix read off the pull-back of omega_word(beta Delta^2); the second
// Delta carries free variables u1, u2, ... Throws when a coefficient is not constant.
TwoFormMatrix pullback_form_matrix(const BraidWord& beta, const std::vector<int>& order);

int integer_rank(const std::vector<std::vector<long>>& m);
// Integer basis of the rational kernel of the rows.
std::vector<std::vector<long>> integer_kernel(const std::vector<std::vector<long>>& rows, int cols);
// Rank of the form restricted to the slice lattice.
int slice_rank(const TwoFormMatrix& m);
// Expected rank l(beta) - n + c(beta), c the number of cycles of beta's permutation.
int expected_form_rank(const BraidWord& beta);
// slice_rank(m) == expected_form_rank(beta)
bool quotient_rank_check(const TwoFormMatrix& m, const BraidWord& beta);

}  // namespace bv
