#include "lpk/ktheory.hpp"

#include <stdexcept>

#include "lpk/smith.hpp"

namespace lpk {

IntMatrix leavitt_matrix(const OrderedQuiver& q) {
    require_no_sources(q.quiver());
    const std::size_t sinks = q.num_sinks();
    const std::size_t rest = q.num_non_sinks();
    IntMatrix shift = vstack(IntMatrix::zero(sinks, rest), IntMatrix::identity(rest));
    return shift - reduced_incidence(q).transpose();
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Cokernel: return "cokernel";
        case Provenance::Kernel: return "kernel";
        case Provenance::ZeroNegative: return "zero-negative";
    }
    return "?";
}

KGroupTable mod_l_ktheory(const OrderedQuiver& q, const Modulus& m, DegreeWindow window) {
    if (window.first > window.last) throw std::invalid_argument("empty degree window");
    const IntMatrix matrix = leavitt_matrix(q);
    const FinAbGroup even = cokernel_mod(matrix, m);
    const FinAbGroup odd = kernel_mod(matrix, m);

    KGroupTable table{m, {}, !m.is_prime_power()};
    for (int n = window.first; n <= window.last; ++n) {
        if (n < 0)
            table.entries.emplace(n, KGroupEntry{FinAbGroup::trivial(), Provenance::ZeroNegative});
        else if (n % 2 == 0)
            table.entries.emplace(n, KGroupEntry{even, Provenance::Cokernel});
        else
            table.entries.emplace(n, KGroupEntry{odd, Provenance::Kernel});
    }
    return table;
}

FinAbGroup Presentation::group() const {
    if (!modulus) return FinAbGroup::free(rank);
    std::vector<Integer> orders(rank, Integer(static_cast<unsigned long>(modulus->value())));
    return FinAbGroup::from_cyclic_orders(std::move(orders));
}

IntMatrix DegreeMap::les_map() const {
    const bool same_ring = domain.modulus.has_value() == codomain.modulus.has_value() &&
                           (!domain.modulus || *domain.modulus == *codomain.modulus);
    if (!same_ring) throw std::invalid_argument("degree map: domain and codomain use different coefficients");
    if (phi_star.rows() != codomain.rank || phi_star.cols() != domain.rank)
        throw std::invalid_argument("degree map: phi_star is " + std::to_string(phi_star.rows()) + "x" +
                                    std::to_string(phi_star.cols()) + ", presentation expects " +
                                    std::to_string(codomain.rank) + "x" + std::to_string(domain.rank));
    if (!inclusion) {
        if (domain.rank != codomain.rank) throw std::invalid_argument("degree map: endomorphism must be square");
        return IntMatrix::identity(domain.rank) - phi_star;
    }
    if (inclusion->rows() != phi_star.rows() || inclusion->cols() != phi_star.cols())
        throw std::invalid_argument("degree map: inclusion and phi_star shapes differ");
    return *inclusion - phi_star;
}

DegreeMap CoefficientTheory::at(int degree) const {
    if (auto it = degrees.find(degree); it != degrees.end()) return it->second;
    if (two_periodic && degree >= 0)
        if (auto it = degrees.find(degree % 2); it != degrees.end()) return it->second;
    return DegreeMap{Presentation::integral(0), Presentation::integral(0), IntMatrix(0, 0), std::nullopt};
}

namespace {

FinAbGroup les_cokernel(const DegreeMap& d) {
    IntMatrix map = d.les_map();
    return d.codomain.modulus ? cokernel_mod(map, *d.codomain.modulus) : cokernel_int(map);
}

FinAbGroup les_kernel(const DegreeMap& d) {
    IntMatrix map = d.les_map();
    return d.domain.modulus ? kernel_mod(map, *d.domain.modulus) : FinAbGroup::free(kernel_rank_int(map));
}

std::optional<FinAbGroup> forced_extension(const FinAbGroup& sub, const FinAbGroup& quotient) {
    if (sub.is_trivial()) return quotient;
    if (quotient.is_trivial()) return sub;
    if (sub.is_finite() && quotient.is_finite() && sub.is_cyclic() && quotient.is_cyclic() &&
        gcd(sub.order(), quotient.order()) == 1)
        return group_direct_sum(sub, quotient);
    return std::nullopt;
}

}  // namespace

std::vector<LesEntry> corner_les(const CoefficientTheory& theory, DegreeWindow window) {
    if (window.first > window.last) throw std::invalid_argument("empty degree window");
    std::vector<LesEntry> out;
    for (int n = window.first; n <= window.last; ++n) {
        LesEntry e{n, les_cokernel(theory.at(n)), les_kernel(theory.at(n - 1)), std::nullopt};
        e.resolved = forced_extension(e.sub, e.quotient);
        out.push_back(std::move(e));
    }
    return out;
}

CoefficientTheory suslin_coefficients(const OrderedQuiver& q, const Modulus& m) {
    const std::size_t v = q.num_vertices();
    const std::size_t sinks = q.num_sinks();
    require_no_sources(q.quiver());
    IntMatrix inclusion = block_diagonal(IntMatrix::identity(sinks), reduced_incidence(q).transpose());
    IntMatrix phi = vstack(IntMatrix::zero(sinks, v), IntMatrix::identity(v));

    CoefficientTheory theory;
    theory.two_periodic = true;
    theory.degrees.emplace(0, DegreeMap{Presentation::modular(v, m), Presentation::modular(v + sinks, m),
                                        std::move(phi), std::move(inclusion)});
    theory.degrees.emplace(1, DegreeMap{Presentation::modular(0, m), Presentation::modular(0, m), IntMatrix(0, 0),
                                        std::nullopt});
    return theory;
}

CoefficientTheory suslin_rose_coefficients(std::size_t petals, const Modulus& m) {
    CoefficientTheory theory;
    theory.two_periodic = true;
    IntMatrix phi(1, 1);
    phi(0, 0) = static_cast<unsigned long>(petals);
    theory.degrees.emplace(0, DegreeMap{Presentation::modular(1, m), Presentation::modular(1, m), std::move(phi),
                                        std::nullopt});
    theory.degrees.emplace(1, DegreeMap{Presentation::modular(0, m), Presentation::modular(0, m), IntMatrix(0, 0),
                                        std::nullopt});
    return theory;
}

DivisibilityReport divisibility_report(const OrderedQuiver& q, const std::vector<Modulus>& primes) {
    DivisibilityReport report;
    for (const auto& m : primes) {
        if (!m.is_prime_power())
            throw std::invalid_argument("divisibility_report: " + m.to_string() + " is not a prime power");
        KGroupTable table = mod_l_ktheory(q, m, {0, 2});
        PrimeDivisibility p{m, table.at(0), table.at(1), false, {}};
        p.uniquely_divisible = table.at(0).is_trivial() && table.at(1).is_trivial() && table.at(2).is_trivial();
        if (p.uniquely_divisible) {
            p.conclusion = "IK_n(L_Q) uniquely " + m.to_string() + "-divisible for n >= 0";
        } else {
            std::string parities;
            if (!p.even_group.is_trivial()) parities = "even";
            if (!p.odd_group.is_trivial()) parities += parities.empty() ? "odd" : " and every odd";
            p.conclusion = "for every " + parities +
                           " n >= 0, at least one of IK_n(L_Q), IK_{n-1}(L_Q) is nonzero";
        }
        report.per_prime.push_back(std::move(p));
    }

    report.sink_free = q.num_sinks() == 0;
    if (report.sink_free) {
        Integer det = determinant(leavitt_matrix(q));
        report.determinant = det;
        Integer rest = abs(det);
        if (rest != 0) {
            for (unsigned long p = 2; p < 1'000'000 && p * p <= rest; ++p) {
                if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
                report.determinant_primes.emplace_back(p);
                while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) rest /= p;
            }
            if (rest > 1 && mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
                report.determinant_primes.push_back(rest);
                rest = 1;
            }
            report.unfactored = rest;
        }
    }
    return report;
}

bool uct_order_check(const FinAbGroup& kn, const FinAbGroup& kn_minus_1, const Modulus& m, const FinAbGroup& middle) {
    const Integer mz(static_cast<unsigned long>(m.value()));
    const FinAbGroup tensor = kn.tensor_mod(mz);
    const FinAbGroup torsion = kn_minus_1.torsion_subgroup(mz);
    if (!middle.is_finite()) return false;
    if (middle.order() != tensor.order() * torsion.order()) return false;
    const Integer e = middle.exponent();
    // exp(sub) and exp(quotient) divide exp(middle), which divides exp(sub) * exp(quotient).
    return e % tensor.exponent() == 0 && e % torsion.exponent() == 0 &&
           (tensor.exponent() * torsion.exponent()) % e == 0;
}

MooreSplitting moore_splitting_check(std::uint64_t n, const Modulus& m, DegreeWindow window) {
    if (n < 2) throw std::invalid_argument("moore_splitting_check: n must be at least 2");
    MooreSplitting out{true, factorize(n), mod_l_ktheory(OrderedQuiver(quivers::rose(n + 1)), m, window), {}};
    for (int d = window.first; d <= window.last; ++d) out.summed[d] = FinAbGroup::trivial();
    for (const auto& pp : out.factors) {
        KGroupTable part = mod_l_ktheory(OrderedQuiver(quivers::rose(pp.value() + 1)), m, window);
        for (auto& [d, g] : out.summed) g = group_direct_sum(g, part.at(d));
    }
    for (const auto& [d, g] : out.summed)
        if (!(out.whole.at(d) == g)) out.equal = false;
    return out;
}

}  // namespace lpk
