#pragma once

#include <span>
#include <vector>

#include "ghwlab/finite_field.hpp"

// Dense linear algebra over a subfield F_q, on vectors of F_q indices.
namespace ghwlab::fqla {

using Vec = std::vector<FqIndex>;
using Matrix = std::vector<Vec>;

// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
// Returns the pivot column of each remaining row.
std::vector<int> rref_in_place(const Subfield& fq, Matrix& rows);

int rank(const Subfield& fq, Matrix rows);

bool independent(const Subfield& fq, const Matrix& rows);

// Basis of {x in F_q^ncols : row . x = 0 for every row}.
Matrix nullspace(const Subfield& fq, Matrix rows, int ncols);

// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Subfield& fq, const Matrix& m);

// sum_i coeffs[i] * rows[i].
Vec combine(const Subfield& fq, std::span<const FqIndex> coeffs, const Matrix& rows);

// Row-vector times matrix.
Vec row_times(const Subfield& fq, const Vec& row, const Matrix& m);

}  // namespace ghwlab::fqla
