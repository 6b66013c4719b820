#pragma once

#include "zsf/rational.hpp"

#include <optional>
#include <vector>

namespace zsf {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // list of columns

/**
 * Basis of the integer kernel {z : sum_i z_i * col_i = 0}, computed by exact
 * column elimination over unbounded integers. No modular shortcuts: silent
 * overflow would corrupt the gcds downstream.
 */
struct KernelBasis {
    std::vector<IntVec> vectors;  // each of length = number of columns
};

KernelBasis integer_kernel_basis(const IntMat& columns);

// gcd of entry-sums over the kernel lattice (0 if the kernel is trivial or
// every kernel vector has zero entry-sum). Runs the same elimination with a
// carried all-ones row instead of the full transformation matrix.
BigInt kernel_sum_gcd(const IntMat& columns);

// Some kernel vector with nonzero entry-sum, if one exists.
std::optional<IntVec> kernel_sum_witness(const IntMat& columns);

}  // namespace zsf
