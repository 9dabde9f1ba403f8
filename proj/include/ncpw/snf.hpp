#pragma once

#include <gmpxx.h>

#include <vector>

namespace ncpw {

using ZMat = std::vector<std::vector<mpz_class>>;

// Nonzero invariant factors d1 | d2 | ... | dr of an integer matrix.
// Their count is the rank; the factors greater than one describe the
// torsion of the cokernel.
std::vector<mpz_class> smith_diagonal(ZMat a);

// Whether a x = b has a solution x with integer entries.
bool integer_solvable(ZMat a, std::vector<mpz_class> b);

}  // namespace ncpw
