#pragma once

// Implicit-shift QL for real symmetric tridiagonal matrices, with eigenvector
// accumulation.  Blocks in this project are tiny, so a self-contained
// textbook solver beats a library dependency.

#include <vector>

#include "susyent/matrix.hpp"

namespace susyent {

struct TridiagonalEigen {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column k pairs with values[k]; orthonormal
};

// diag has size n, offdiag size n-1 (empty for n == 1).  Throws
// ConsistencyError if an eigenvalue fails to converge (does not happen for
// finite input within the iteration cap).
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace susyent
