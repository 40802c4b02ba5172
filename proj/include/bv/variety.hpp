#pragma once

#include <optional>
#include <set>

#include "bv/braid.hpp"
#include "bv/slide.hpp"

namespace bv {

struct VarietyPresentation {
    int n = 1;
    Permutation pi;
    std::vector<Var> vars;
    std::vector<LaurentPoly> equations;
    // matrix position (row, column), 1-indexed, of each equation
    std::vector<std::pair<int, int>> positions;
    // below-diagonal positions whose entry vanished identically
    std::vector<std::pair<int, int>> zero_positions;
    std::vector<LaurentPoly> inequations;

    std::string str() const;
};

// True when the equations are exactly z = 0 for every ambient variable.
bool is_origin(const VarietyPresentation& p);

VarietyPresentation variety_equations(const BraidWord& w, const Permutation& pi);
std::optional<int> variety_dimension(const BraidWord& w);

// L(c) = B_Delta(c) w0 and U(u) = w0 B_Delta(u)
MatrixExpr lower_from_half_twist(const BraidWord& delta);
MatrixExpr upper_from_half_twist(const BraidWord& delta);

struct FullTwistSplit {
    VarietyPresentation full;      // X0(beta Delta^2)
    VarietyPresentation reduced;   // X0(beta Delta; w0)
    std::vector<Var> free_vars;    // coordinates of the affine factor
};

// beta uses z1..zl; the two Delta copies continue the z numbering.
FullTwistSplit split_full_twist(const BraidWord& beta);

// Kalman form: B_beta(z) L(c) diag(t) upper triangular, with prescribed
// diagonal values on strands without a mark (default 1).
VarietyPresentation augmentation_equations(const BraidWord& beta, const std::set<int>& marked,
                                           const std::map<int, RationalExpr>& diag = {});
// the free lower unitriangular matrix with entries c_ab
MatrixExpr free_lower(int n);

struct BorelResult {
    MatrixExpr u;
    std::vector<RationalExpr> values;
};

// Slides U0 leftwards through the word: B_beta(z) U0 = U_l B_beta(z').
BorelResult borel_act(const MatrixExpr& U0, const BraidWord& w, const std::vector<RationalExpr>& values);

}  // namespace bv
