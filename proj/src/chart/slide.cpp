#include "bv/slide.hpp"

#include "bv/braid.hpp"

namespace bv {
namespace {

void require_unit_diagonal(const MatrixExpr& U) {
    if (!U.is_upper_triangular()) throw Error(ErrorKind::NonUnitDiagonal, "matrix is not upper triangular");
    for (int k = 0; k < U.size(); ++k)
        if (!U(k, k).is_unit()) throw Error(ErrorKind::NonUnitDiagonal, "diagonal entry " + U(k, k).str() + " is not a unit");
}

}  // namespace

SlideResult slide_left(const MatrixExpr& U, int i, const RationalExpr& z, bool check_units) {
    if (check_units) require_unit_diagonal(U);
    int a = i - 1;
    RationalExpr zp = (U(a + 1, a + 1) * z + U(a, a + 1)) / U(a, a);
    MatrixExpr t = U;
    left_mul_braid(t, i, z);
    right_mul_braid_inv(t, i, zp);
    if (!t.is_upper_triangular() || !t(a, a + 1).is_zero())
        throw Error(ErrorKind::EliminationFailed, "slide did not produce an upper triangular matrix");
    return {t, zp};
}

RationalExpr unslide_value(const MatrixExpr& U, int i, const RationalExpr& zp, bool check_units) {
    if (check_units) require_unit_diagonal(U);
    int a = i - 1;
    return (U(a, a) * zp - U(a, a + 1)) / U(a + 1, a + 1);
}

}  // namespace bv
