#pragma once

#include <cstddef>
#include <vector>

#include "lpk/int_matrix.hpp"
#include "lpk/leavitt.hpp"
#include "lpk/quiver.hpp"

namespace lpk {

// Length filtration of the degree-zero part L_0 of L_Q. Stage n is spanned by the
// matrix units sigma tau^* with len(sigma) = len(tau) = m and r(sigma) = r(tau) = w,
// where either m = n, or m < n and w is a sink. The units with a fixed label (m, w)
// form a full matrix algebra of size p(m, w) = #paths of length m ending at w.
//
// Block order at stage n: sink labels (m, w) for m = 0..n (level-major, sinks in
// vertex order), then the non-sink labels (n, u).

struct BlockLabel {
    std::size_t level;
    std::size_t vertex;  // index in the sinks-first ordered quiver

    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct Block {
    BlockLabel label;
    Integer size;
};

struct BlockProfile {
    std::size_t level;
    std::vector<Block> blocks;

    /// sum of size^2
    Integer dimension() const;
};

/// Throws QuiverHasSources.
BlockProfile block_profile(const OrderedQuiver& q, std::size_t n);
std::vector<BlockLabel> block_labels(const OrderedQuiver& q, std::size_t n);

/// Dimension of stage n computed symbolically: the rank of the normal forms of its
/// spanning matrix units. Throws std::length_error above `limit` generators.
std::size_t filtration_span_dim(const OrderedQuiver& q, std::size_t n, std::size_t limit = 500'000);

/// K_0 matrix of the inclusion of stage n into stage n + 1, computed symbolically: each
/// block's minimal idempotent sigma sigma^* is measured against every block of stage
/// n + 1 with the trace sum_rho rho^* x rho over that block's paths rho.
IntMatrix inclusion_k0_matrix(const OrderedQuiver& q, std::size_t n);
/// K_0 matrix of phi(x) = t+ x t- from stage n to stage n + 1, computed the same way.
IntMatrix phi_k0_matrix(const OrderedQuiver& q, std::size_t n);

/// diag(id, I_Q^t), of shape ((n+1)v' + v) x ((n+1)v' + v - v').
IntMatrix expected_inclusion_matrix(const OrderedQuiver& q, std::size_t n);
/// (0; id) of the same shape.
IntMatrix expected_phi_matrix(const OrderedQuiver& q, std::size_t n);

/// phi - inclusion between stages n and n + 1, split along (sink levels 0..n | the rest)
/// in both directions:  [[sinks, upper_right], [coupling, leavitt_block]]. The sink block is
/// lower unitriangular up to sign, the upper-right block vanishes and leavitt_block is
/// (0; id) - I_Q^t, so the difference has the kernel and cokernel of the Leavitt matrix.
struct StageDifference {
    IntMatrix sinks;
    IntMatrix upper_right;
    IntMatrix coupling;
    IntMatrix leavitt_block;
};

StageDifference stage_difference(const IntMatrix& inclusion, const IntMatrix& phi, const OrderedQuiver& q, std::size_t n);

}  // namespace lpk
