#pragma once

#include "bv/ring.hpp"

namespace bv {

// B_i(z) U = Ut B_i(z') with Ut upper triangular and Ut(i, i+1) = 0.
struct SlideResult {
    MatrixExpr u;
    RationalExpr z;
};

// With check_units false the diagonal only needs to be invertible.
SlideResult slide_left(const MatrixExpr& U, int i, const RationalExpr& z, bool check_units = true);
// The z with slide_left(U, i, z).z == zp.
RationalExpr unslide_value(const MatrixExpr& U, int i, const RationalExpr& zp, bool check_units = true);

}  // namespace bv
