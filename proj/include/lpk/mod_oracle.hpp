#pragma once

#include "lpk/abelian_group.hpp"
#include "lpk/int_matrix.hpp"
#include "lpk/modulus.hpp"

namespace lpk {

struct KernelCokernel {
    FinAbGroup kernel;
    FinAbGroup cokernel;
};

/// Exhaustive reference for kernel_mod / cokernel_mod. Enumerates (Z/m)^cols to find the
/// kernel and image, then classifies each finite group from its p^j-torsion counts
/// alone; no Smith reduction is involved. Requires m^cols <= 10^6 and m^rows <= 10^6,
/// otherwise throws std::length_error.
KernelCokernel brute_force_mod_oracle(const IntMatrix& m, const Modulus& mod);

}  // namespace lpk
