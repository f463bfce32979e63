#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpk/abelian_group.hpp"
#include "lpk/int_matrix.hpp"
#include "lpk/modulus.hpp"
#include "lpk/quiver.hpp"

namespace lpk {

/// Inclusive degree range.
struct DegreeWindow {
    int first = -2;
    int last = 7;
};

/// (0; id) - I_Q^t : Z^(v - v') -> Z^v. Throws QuiverHasSources.
IntMatrix leavitt_matrix(const OrderedQuiver& q);

// ---------------------------------------------------------------------------
// Mod-m K-groups of Leavitt path algebras

enum class Provenance { Cokernel, Kernel, ZeroNegative };
const char* to_string(Provenance p);

struct KGroupEntry {
    FinAbGroup group;
    Provenance provenance;
};

/// K_n(L_Q; Z/m) over a degree window. Even n >= 0 read off the cokernel of the
/// Leavitt matrix mod m, odd n >= 0 its kernel, negative degrees vanish.
struct KGroupTable {
    Modulus modulus;
    std::map<int, KGroupEntry> entries;
    /// Set when m is not a prime power; such tables are a formal CRT extension.
    bool formal_crt = false;

    const FinAbGroup& at(int degree) const { return entries.at(degree).group; }
};

/// Throws QuiverHasSources, or std::invalid_argument when the window is empty.
KGroupTable mod_l_ktheory(const OrderedQuiver& q, const Modulus& m, DegreeWindow window = {});

// ---------------------------------------------------------------------------
// Homotopy-group long exact sequence of the corner-skew triangle

/// A group presented as Z^rank or (Z/m)^rank.
struct Presentation {
    std::size_t rank = 0;
    std::optional<Modulus> modulus;  // empty: integral

    FinAbGroup group() const;
    static Presentation integral(std::size_t rank) { return {rank, std::nullopt}; }
    static Presentation modular(std::size_t rank, const Modulus& m) { return {rank, m}; }
};

/// The map E_n(A) -> E_n(A) induced by id - phi in one degree. Usually an endomorphism
/// (inclusion absent, i.e. the identity). When E_n(A) is a sequential colimit, the map
/// can instead be given at a finite stage as inclusion - phi_star between consecutive
/// stages; kernel and cokernel are then read off that stage.
struct DegreeMap {
    Presentation domain;
    Presentation codomain;
    IntMatrix phi_star;
    std::optional<IntMatrix> inclusion;

    /// inclusion - phi_star (identity when no inclusion). Throws std::invalid_argument
    /// when shapes or coefficient rings disagree.
    IntMatrix les_map() const;
};

struct CoefficientTheory {
    std::map<int, DegreeMap> degrees;
    /// When set, a degree n >= 0 without an explicit entry uses the entry for n mod 2.
    bool two_periodic = false;

    /// The map in degree n; degrees without data carry the zero group.
    DegreeMap at(int degree) const;
};

struct LesEntry {
    int degree;
    FinAbGroup sub;       // cokernel of id - phi_* in degree n
    FinAbGroup quotient;  // kernel of id - phi_* in degree n - 1
    /// Present only when the extension 0 -> sub -> E_n -> quotient -> 0 is forced:
    /// one side trivial, or both finite cyclic of coprime orders.
    std::optional<FinAbGroup> resolved;
};

std::vector<LesEntry> corner_les(const CoefficientTheory& theory, DegreeWindow window);

/// Coefficients K_n(k; Z/m): Z/m in even degrees n >= 0, zero otherwise, with the
/// degree-0 map given at the first two stages of the length filtration of the
/// degree-zero part of L_Q: inclusion diag(id, I_Q^t), phi (0; id).
CoefficientTheory suslin_coefficients(const OrderedQuiver& q, const Modulus& m);
/// Same coefficients for the rose with `petals` loops, presented by the 1x1
/// endomorphism phi_star = [[petals]].
CoefficientTheory suslin_rose_coefficients(std::size_t petals, const Modulus& m);

// ---------------------------------------------------------------------------
// Divisibility and splitting

struct PrimeDivisibility {
    Modulus modulus;
    FinAbGroup even_group;  // K_n(L_Q; Z/l^v), n >= 0 even
    FinAbGroup odd_group;   // K_n(L_Q; Z/l^v), n >= 0 odd
    bool uniquely_divisible;
    std::string conclusion;
};

struct DivisibilityReport {
    std::vector<PrimeDivisibility> per_prime;
    bool sink_free = false;
    /// det((0; id) - I_Q^t) for sink-free quivers.
    std::optional<Integer> determinant;
    /// Primes dividing the determinant (found by trial division below 10^6).
    std::vector<Integer> determinant_primes;
    /// Part of |det| left after trial division; 1 when fully factored.
    Integer unfactored = 1;
};

/// Each modulus must be a prime power (std::invalid_argument otherwise).
DivisibilityReport divisibility_report(const OrderedQuiver& q, const std::vector<Modulus>& primes);

/// Order and exponent consistency of a candidate middle term `middle` in
/// 0 -> K_n (x) Z/m -> middle -> (K_{n-1})[m] -> 0. Cannot distinguish non-isomorphic
/// extensions of equal order.
bool uct_order_check(const FinAbGroup& kn, const FinAbGroup& kn_minus_1, const Modulus& m, const FinAbGroup& middle);

struct MooreSplitting {
    bool equal;
    std::vector<PrimePower> factors;          // prime decomposition of n
    KGroupTable whole;                        // rose with n + 1 petals
    std::map<int, FinAbGroup> summed;          // degreewise sum over roses with l^v + 1 petals
};

/// Compares K(L_n; Z/m) with the sum of K(L_{l_i^v_i}; Z/m) over the prime
/// decomposition of n. Requires n >= 2.
MooreSplitting moore_splitting_check(std::uint64_t n, const Modulus& m, DegreeWindow window = {});

}  // namespace lpk
