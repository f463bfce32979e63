#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpk/int_matrix.hpp"

namespace lpk {

/// Finitely generated abelian group Z^r (+) Z/d_1 (+) ... (+) Z/d_k in invariant-factor
/// normal form: every d_i >= 2 and d_1 | d_2 | ... | d_k. Two groups are isomorphic
/// exactly when their normal forms are equal.
class FinAbGroup {
public:
    FinAbGroup() = default;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup free(std::size_t rank);
    static FinAbGroup cyclic(const Integer& order);
    /// Normalizes an arbitrary list of cyclic orders. An order of 0 means a copy of Z,
    /// an order of 1 is dropped, negative orders are taken by absolute value.
    static FinAbGroup from_cyclic_orders(std::vector<Integer> orders, std::size_t free_rank = 0);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_cyclic() const { return free_rank_ + torsion_.size() <= 1; }
    /// Number of cyclic summands in normal form.
    std::size_t num_generators() const { return free_rank_ + torsion_.size(); }

    /// Order of a finite group. Throws std::domain_error for infinite groups.
    Integer order() const;
    /// Exponent of a finite group (1 for the trivial group), 0 when infinite.
    Integer exponent() const;

    /// G (x) Z/m
    FinAbGroup tensor_mod(const Integer& m) const;
    /// {g : m g = 0}
    FinAbGroup torsion_subgroup(const Integer& m) const;

    /// Invariant-factor rendering: "0", "Z", "Z (+) Z/2 (+) Z/4".
    std::string to_string() const;
    /// Compact form for record output: free rank and comma-separated factors.
    std::string torsion_string() const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

FinAbGroup group_direct_sum(const FinAbGroup& a, const FinAbGroup& b);

}  // namespace lpk
