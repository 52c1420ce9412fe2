#pragma once

#include "qfam/algebra.hpp"

namespace qfam {

// Number of singular values ≥ rel_cut × largest. Zero matrices have rank 0.
int numeric_rank(const Matrix& m, double rel_cut = kRankCut);

// Orthonormal columns spanning the numeric null space of m.
Matrix null_space(const Matrix& m, double rel_cut = kRankCut);

// Distance from v to the column span of `span` (same rank cut).
double span_residual(const Matrix& span, const Vector& v, double rel_cut = kRankCut);

}  // namespace qfam
