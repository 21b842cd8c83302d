#pragma once

#include <gmpxx.h>

#include <vector>

namespace sga {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // row major

int rank(QMat m);

/// Basis of the right nullspace of an r x c matrix, as c-vectors.
std::vector<QVec> nullspace(const QMat& m);

/// Rank of a small integer matrix by fraction-free elimination over mpz.
int rank_int(std::vector<std::vector<long>> m);

}  // namespace sga
