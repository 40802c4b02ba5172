#pragma once

#include <string>
#include <vector>

#include "bv/braid.hpp"
#include "bv/weave.hpp"

namespace bv {

struct Propagation {
    std::vector<RationalExpr> bottom;     // values on the bottom slice
    std::vector<RationalExpr> inverted;   // left inputs of trivalent vertices, top-down
    std::vector<RationalExpr> vanishing;  // left inputs of cups
    std::vector<Var> cap_vars;            // fresh variables created at caps
    MatrixExpr u;                         // B(top) = u * B(bottom)
};

// Values flow from the top slice downwards; top values default to z1, z2, ...
Propagation propagate_down(const Weave& w);
Propagation propagate_down(const Weave& w, const std::vector<RationalExpr>& top_values);

struct ChartMap {
    std::vector<Var> params;
    std::vector<Var> top_vars;
    std::vector<RationalExpr> values;    // value of each top variable
    std::vector<RationalExpr> inverted;  // in top variables; these equal the params
    Bindings substitution() const;
    std::string str() const;
};

// Upward parametrization of a Demazure weave ending in a reduced word for w0.
// params: one per trivalent vertex, top-down; defaults t1, t2, ...
// With record set, `inverted` is filled by propagating the top variables down.
ChartMap chart_parametrize(const Weave& w, std::vector<Var> params = {}, bool record = true);
// Chart of the weave built from an opening order; the vertex opening crossing c gets s_c.
ChartMap opening_chart(const BraidWord& beta, const std::vector<int>& order, bool record = true);

struct Opening {
    std::vector<int> letters;
    std::vector<RationalExpr> values;
    RationalExpr unit;
};

// Removes the crossing at pos via B_i(z) = U_i D_i L_i, sliding U_i D_i to the
// left end and L_i to the right end.
Opening open_crossing(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values, int pos);
// Inverse of open_crossing: reinserts letter i at pos with value `unit`.
std::vector<RationalExpr> unopen_crossing(int n, const std::vector<int>& letters,
                                          const std::vector<RationalExpr>& values, int pos, int i,
                                          const RationalExpr& unit);
// The chart of an opening order through the LDU route.
ChartMap ldu_chart(const BraidWord& beta, const std::vector<int>& order);

// Two-strand chart in the frame where the diagonal factors of opened crossings
// stay in their gaps: unopening c shifts each neighbour by -1/s_c times the
// product of -1/s_d^2 over crossings d between them that were opened before c.
ChartMap pinch_chart(const BraidWord& beta, const std::vector<int>& order);

std::vector<int> mellit_order(const BraidWord& beta);

// Two charts of the same variety with recorded inverses have the same image
// when each parameter of one is a unit monomial in the parameters of the other.
bool same_image(const ChartMap& a, const ChartMap& b);
// Number of parameters of `a` that are not unit monomials on the chart `b`.
int non_unit_count(const ChartMap& a, const ChartMap& b);
// Charts whose transition maps, in both directions, involve powers of a single
// non-monomial polynomial besides unit monomials (one exchange).
bool adjacent_charts(const ChartMap& a, const ChartMap& b);

std::vector<RationalExpr> rational_map(const Weave& w);
bool compare_extended(const std::vector<RationalExpr>& a, const std::vector<RationalExpr>& b);

}  // namespace bv
