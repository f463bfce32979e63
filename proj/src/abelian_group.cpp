#include "lpk/abelian_group.hpp"

#include <stdexcept>

namespace lpk {

FinAbGroup FinAbGroup::free(std::size_t rank) {
    FinAbGroup g;
    g.free_rank_ = rank;
    return g;
}

FinAbGroup FinAbGroup::cyclic(const Integer& order) { return from_cyclic_orders({order}); }

FinAbGroup FinAbGroup::from_cyclic_orders(std::vector<Integer> orders, std::size_t free_rank) {
    FinAbGroup g;
    g.free_rank_ = free_rank;
    std::vector<Integer> finite;
    for (auto& d : orders) {
        d = abs(d);
        if (d == 0)
            ++g.free_rank_;
        else if (d != 1)
            finite.push_back(d);
    }
    // Pairwise (gcd, lcm) replacement yields the divisibility chain without factoring.
    for (std::size_t i = 0; i < finite.size(); ++i)
        for (std::size_t j = i + 1; j < finite.size(); ++j) {
            Integer g_ij = gcd(finite[i], finite[j]);
            Integer l_ij = finite[i] / g_ij * finite[j];
            finite[i] = g_ij;
            finite[j] = l_ij;
        }
    for (auto& d : finite)
        if (d != 1) g.torsion_.push_back(d);
    return g;
}

Integer FinAbGroup::order() const {
    if (!is_finite()) throw std::domain_error("order of an infinite group");
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

Integer FinAbGroup::exponent() const {
    if (!is_finite()) return 0;
    return torsion_.empty() ? Integer(1) : torsion_.back();
}

FinAbGroup FinAbGroup::tensor_mod(const Integer& m) const {
    std::vector<Integer> orders(free_rank_, m);
    for (const auto& d : torsion_) orders.push_back(gcd(d, m));
    return from_cyclic_orders(std::move(orders));
}

FinAbGroup FinAbGroup::torsion_subgroup(const Integer& m) const {
    // Z[m] = 0 and (Z/d)[m] = Z/gcd(d, m).
    std::vector<Integer> orders;
    for (const auto& d : torsion_) orders.push_back(gcd(d, m));
    return from_cyclic_orders(std::move(orders));
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank_; ++i) {
        if (!s.empty()) s += " (+) ";
        s += "Z";
    }
    for (const auto& d : torsion_) {
        if (!s.empty()) s += " (+) ";
        s += "Z/" + d.get_str();
    }
    return s;
}

std::string FinAbGroup::torsion_string() const {
    if (torsion_.empty()) return "-";
    std::string s;
    for (const auto& d : torsion_) {
        if (!s.empty()) s += ',';
        s += d.get_str();
    }
    return s;
}

FinAbGroup group_direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Integer> orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return FinAbGroup::from_cyclic_orders(std::move(orders), a.free_rank() + b.free_rank());
}

}  // namespace lpk
