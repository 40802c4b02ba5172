#pragma once

#include "bv/braid.hpp"

namespace bv {

// Character of (C*)^n / C*_diag, stored as a sum-zero integer vector.
using Weight = std::vector<long>;
using WeightAssignment = std::map<Var, Weight>;

enum class Side { Left, Right };

Weight basis_difference(int n, int a, int b);  // e_a - e_b, 1-indexed
std::string weight_str(const Weight& w);

WeightAssignment action_weights(const BraidWord& w, Side side);

// Variables absent from wa have weight 0.
std::optional<Weight> check_homogeneous(const RationalExpr& e, const WeightAssignment& wa, int n);

// t_a = t_b relations cutting out the free subtorus
struct TorusRelation {
    int a;
    int b;
};
std::vector<TorusRelation> free_subtorus(const BraidWord& w);
int free_subtorus_dimension(const BraidWord& w);

bool is_admissible(const MatrixExpr& m, const Permutation& w, const WeightAssignment& wa);

// Solves for weights of the parameters so that each coordinate expression has
// the weight of its top variable; nullopt when no such weights exist.
std::optional<WeightAssignment> infer_weights(const std::map<Var, RationalExpr>& coords, const WeightAssignment& top,
                                              int n);

}  // namespace bv
