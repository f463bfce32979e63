#pragma once

#include <cstddef>
#include <vector>

#include "lpk/abelian_group.hpp"
#include "lpk/int_matrix.hpp"
#include "lpk/modulus.hpp"

namespace lpk {

/// U * M * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    /// The nonzero diagonal entries d_1 .. d_r.
    std::vector<Integer> invariant_factors() const;
};

/// Smith normal form with transformation certificates. Pivoting picks the nonzero
/// entry of least absolute value in the active block, ties broken by lowest row and
/// then lowest column, so the output is a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Z^rows / image(M)
FinAbGroup cokernel_int(const IntMatrix& m);
/// Rank of the (free) kernel of M : Z^cols -> Z^rows.
std::size_t kernel_rank_int(const IntMatrix& m);

/// Cokernel of the induced map (Z/m)^cols -> (Z/m)^rows.
FinAbGroup cokernel_mod(const IntMatrix& m, const Modulus& mod);
/// Kernel of the induced map (Z/m)^cols -> (Z/m)^rows.
FinAbGroup kernel_mod(const IntMatrix& m, const Modulus& mod);

}  // namespace lpk
