#include <doctest.h>

#include <numeric>
#include <random>

#include "lpk/ktheory.hpp"
#include "lpk/mod_oracle.hpp"
#include "lpk/smith.hpp"
#include "support.hpp"

using namespace lpk;

namespace {

OrderedQuiver rose(std::size_t petals) { return order_sinks_first(quivers::rose(petals)); }
OrderedQuiver jacobson(std::size_t n) { return order_sinks_first(quivers::jacobson(n)); }

FinAbGroup zm(std::uint64_t m) { return FinAbGroup::cyclic(static_cast<unsigned long>(m)); }

CoefficientTheory integral_theory(long phi) {
    CoefficientTheory t;
    t.two_periodic = true;
    for (int d : {0, 1})
        t.degrees.emplace(d, DegreeMap{Presentation::integral(1), Presentation::integral(1), IntMatrix{{phi}}, std::nullopt});
    return t;
}

}  // namespace

TEST_CASE("leavitt matrix") {
    for (long n = 0; n <= 4; ++n) {
        CHECK(leavitt_matrix(jacobson(static_cast<std::size_t>(n))) == IntMatrix{{-(n + 1)}, {-n}});
        CHECK(leavitt_matrix(rose(static_cast<std::size_t>(n + 1))) == IntMatrix{{-n}});
    }
    CHECK(leavitt_matrix(rose(1)) == IntMatrix{{0}});
    CHECK_THROWS_AS(leavitt_matrix(order_sinks_first(parse_quiver("vertices s t\narrow x s t\narrow y t t"))),
                    QuiverHasSources);
}

TEST_CASE("mod-m K-groups of the standard families") {
    const auto l1 = mod_l_ktheory(rose(2), Modulus(8), {-2, 5});
    CHECK(l1.entries.size() == 8);
    for (const auto& [n, e] : l1.entries) CHECK(e.group.is_trivial());

    const auto l0 = mod_l_ktheory(rose(1), Modulus(9));
    for (const auto& [n, e] : l0.entries) CHECK(e.group == (n >= 0 ? zm(9) : FinAbGroup::trivial()));

    for (std::uint64_t p : {2, 3, 5, 7})
        for (unsigned nu = 1; nu <= 3; ++nu) {
            const Modulus m = Modulus::prime_power(p, nu);
            const auto t = mod_l_ktheory(rose(m.value() + 1), m);
            for (const auto& [n, e] : t.entries) CHECK(e.group == (n >= 0 ? zm(m.value()) : FinAbGroup::trivial()));
        }

    const auto j = mod_l_ktheory(jacobson(2), Modulus(5));
    for (const auto& [n, e] : j.entries) CHECK(e.group == (n >= 0 && n % 2 == 0 ? zm(5) : FinAbGroup::trivial()));
}

TEST_CASE("provenance and windows") {
    const auto t = mod_l_ktheory(jacobson(1), Modulus(4));
    CHECK(t.entries.begin()->first == -2);
    CHECK(t.entries.rbegin()->first == 7);
    for (const auto& [n, e] : t.entries) {
        const Provenance expected = n < 0 ? Provenance::ZeroNegative : n % 2 == 0 ? Provenance::Cokernel : Provenance::Kernel;
        CHECK(e.provenance == expected);
    }
    CHECK_FALSE(t.formal_crt);
    CHECK(mod_l_ktheory(rose(7), Modulus(6)).formal_crt);
    CHECK(mod_l_ktheory(rose(7), Modulus(6)).at(0) == zm(6));
    CHECK_THROWS_AS(mod_l_ktheory(rose(2), Modulus(2), {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mod_l_ktheory(order_sinks_first(parse_quiver("vertices w")), Modulus(2)), QuiverHasSources);
}

TEST_CASE("jacobson tables collapse to the coefficients") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::uint64_t m = 2; m <= 32; ++m) {
            const Modulus mod(m);
            if (!mod.is_prime_power()) continue;
            const auto t = mod_l_ktheory(jacobson(n), mod);
            for (const auto& [d, e] : t.entries) CHECK(e.group == (d >= 0 && d % 2 == 0 ? zm(m) : FinAbGroup::trivial()));
        }
}

TEST_CASE("tables agree with the oracle, are parity periodic and relabeling invariant") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        const Quiver raw = test::random_sink_free_quiver(rng, 4, 8);
        const OrderedQuiver q = order_sinks_first(raw);
        std::vector<std::size_t> perm(raw.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const OrderedQuiver relabeled = order_sinks_first(raw.reordered(perm));
        for (std::uint64_t mv : {2, 3, 4, 5, 7, 8, 9}) {
            const Modulus m(mv);
            const auto table = mod_l_ktheory(q, m);
            const auto oracle = brute_force_mod_oracle(leavitt_matrix(q), m);
            for (const auto& [n, e] : table.entries) {
                if (n < 0) CHECK(e.group.is_trivial());
                else CHECK(e.group == (n % 2 == 0 ? oracle.cokernel : oracle.kernel));
                if (n >= 2) CHECK(e.group == table.at(n - 2));
            }
            const auto other = mod_l_ktheory(relabeled, m);
            for (const auto& [n, e] : table.entries) CHECK(other.at(n) == e.group);
        }
    }
}

TEST_CASE("corner long exact sequence") {
    const auto unimodular = corner_les(integral_theory(2), {-1, 3});
    for (const auto& e : unimodular) {
        CHECK(e.sub.is_trivial());
        CHECK(e.quotient.is_trivial());
        REQUIRE(e.resolved);
        CHECK(e.resolved->is_trivial());
    }

    const auto zero_map = corner_les(integral_theory(1), {1, 3});
    for (const auto& e : zero_map) {
        CHECK(e.sub == FinAbGroup::free(1));
        CHECK(e.quotient == FinAbGroup::free(1));
        CHECK_FALSE(e.resolved);
    }

    for (std::size_t petals = 1; petals <= 10; ++petals)
        for (std::uint64_t mv : {2, 3, 4, 5, 8, 9}) {
            const Modulus m(mv);
            const auto table = mod_l_ktheory(rose(petals), m);
            for (const auto& e : corner_les(suslin_rose_coefficients(petals, m), {-2, 7})) {
                REQUIRE(e.resolved);
                CHECK(*e.resolved == table.at(e.degree));
                if (e.degree >= 0 && e.degree % 2 == 0) CHECK(e.sub == FinAbGroup::from_cyclic_orders({std::gcd<long>(static_cast<long>(petals) - 1, static_cast<long>(mv))}));
            }
        }
}

TEST_CASE("corner sequence from filtration stage maps") {
    std::vector<OrderedQuiver> qs;
    for (std::size_t n = 0; n <= 3; ++n) qs.push_back(jacobson(n));
    for (std::size_t p = 1; p <= 6; ++p) qs.push_back(rose(p));
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) qs.push_back(order_sinks_first(test::random_sink_free_quiver(rng, 4, 8)));
    for (const auto& q : qs)
        for (std::uint64_t mv : {2, 3, 4, 5, 8, 9}) {
            const Modulus m(mv);
            const auto table = mod_l_ktheory(q, m);
            for (const auto& e : corner_les(suslin_coefficients(q, m), {-2, 7})) {
                REQUIRE(e.resolved);
                CHECK(*e.resolved == table.at(e.degree));
            }
        }
}

TEST_CASE("corner sequence rejects inconsistent shapes") {
    CoefficientTheory bad;
    bad.degrees.emplace(0, DegreeMap{Presentation::integral(2), Presentation::integral(2), IntMatrix{{1}}, std::nullopt});
    CHECK_THROWS_AS(corner_les(bad, {0, 1}), std::invalid_argument);
    CoefficientTheory mixed;
    mixed.degrees.emplace(0, DegreeMap{Presentation::integral(1), Presentation::modular(1, Modulus(2)), IntMatrix{{1}}, std::nullopt});
    CHECK_THROWS_AS(corner_les(mixed, {0, 0}), std::invalid_argument);
    CoefficientTheory rect;
    rect.degrees.emplace(0, DegreeMap{Presentation::integral(1), Presentation::integral(2), IntMatrix{{1}, {1}}, std::nullopt});
    CHECK_THROWS_AS(corner_les(rect, {0, 0}), std::invalid_argument);
}

TEST_CASE("coprime cyclic extensions are forced") {
    CoefficientTheory t;
    t.two_periodic = true;
    t.degrees.emplace(0, DegreeMap{Presentation::modular(1, Modulus(2)), Presentation::modular(1, Modulus(2)), IntMatrix{{1}}, std::nullopt});
    t.degrees.emplace(1, DegreeMap{Presentation::modular(1, Modulus(3)), Presentation::modular(1, Modulus(3)), IntMatrix{{1}}, std::nullopt});
    const auto les = corner_les(t, {1, 2});
    REQUIRE(les[0].resolved);
    CHECK(*les[0].resolved == zm(6));
    CHECK(les[1].resolved == std::optional<FinAbGroup>(zm(6)));
}

TEST_CASE("divisibility report") {
    const auto r3 = divisibility_report(rose(3), {Modulus(5), Modulus(2)});
    CHECK(r3.sink_free);
    CHECK(r3.determinant == Integer(-2));
    CHECK(r3.determinant_primes == std::vector<Integer>{2});
    CHECK(r3.per_prime[0].uniquely_divisible);
    CHECK(r3.per_prime[0].conclusion == "IK_n(L_Q) uniquely 5^1-divisible for n >= 0");
    CHECK_FALSE(r3.per_prime[1].uniquely_divisible);
    CHECK(r3.per_prime[1].even_group == zm(2));
    CHECK(r3.per_prime[1].odd_group == zm(2));
    CHECK(r3.per_prime[1].conclusion ==
          "for every even and every odd n >= 0, at least one of IK_n(L_Q), IK_{n-1}(L_Q) is nonzero");

    const auto r1 = divisibility_report(rose(1), {Modulus(3), Modulus(4)});
    CHECK(r1.determinant == Integer(0));
    for (const auto& p : r1.per_prime) {
        CHECK_FALSE(p.uniquely_divisible);
        CHECK(p.even_group == zm(p.modulus.value()));
        CHECK(p.odd_group == zm(p.modulus.value()));
    }

    const auto rj = divisibility_report(jacobson(1), {Modulus(3)});
    CHECK_FALSE(rj.sink_free);
    CHECK_FALSE(rj.determinant);
    CHECK(rj.per_prime[0].conclusion == "for every even n >= 0, at least one of IK_n(L_Q), IK_{n-1}(L_Q) is nonzero");

    CHECK_THROWS_AS(divisibility_report(rose(3), {Modulus(6)}), std::invalid_argument);

    for (std::size_t n = 1; n <= 20; ++n)
        for (std::uint64_t l : {2, 3, 5, 7, 11, 13}) {
            const auto r = divisibility_report(rose(n + 1), {Modulus(l)});
            CHECK(r.per_prime[0].uniquely_divisible == (n % l != 0));
            CHECK(r.determinant == Integer(-static_cast<long>(n)));
        }
}

TEST_CASE("universal coefficient order check") {
    CHECK(uct_order_check(FinAbGroup::free(1), zm(2), Modulus(2), FinAbGroup::from_cyclic_orders({2, 2})));
    CHECK(uct_order_check(FinAbGroup::free(1), zm(2), Modulus(2), zm(4)));
    CHECK_FALSE(uct_order_check(FinAbGroup::free(1), zm(2), Modulus(2), zm(2)));
    CHECK(uct_order_check(FinAbGroup::trivial(), FinAbGroup::trivial(), Modulus(7), FinAbGroup::trivial()));
    CHECK_FALSE(uct_order_check(FinAbGroup::trivial(), FinAbGroup::trivial(), Modulus(7), zm(7)));
    CHECK(uct_order_check(zm(3), zm(3), Modulus(3), zm(9)));
    CHECK(uct_order_check(zm(3), zm(3), Modulus(3), FinAbGroup::from_cyclic_orders({3, 3})));
    CHECK_FALSE(uct_order_check(zm(3), zm(3), Modulus(3), zm(6) ));
}

TEST_CASE("moore splitting") {
    const auto six = moore_splitting_check(6, Modulus(4));
    CHECK(six.equal);
    CHECK(six.whole.at(0) == zm(2));
    CHECK(six.summed.at(3) == zm(2));
    CHECK(six.factors == std::vector<PrimePower>{{2, 1}, {3, 1}});

    const auto eight = moore_splitting_check(8, Modulus(8));
    CHECK(eight.equal);
    CHECK(eight.whole.at(5) == zm(8));

    const auto fifteen = moore_splitting_check(15, Modulus(8));
    CHECK(fifteen.equal);
    for (const auto& [n, g] : fifteen.summed) CHECK(g.is_trivial());

    CHECK_THROWS_AS(moore_splitting_check(1, Modulus(2)), std::invalid_argument);

    for (std::uint64_t n = 2; n <= 30; ++n)
        for (std::uint64_t m : {2, 3, 4, 5, 8, 9, 16, 25}) CHECK(moore_splitting_check(n, Modulus(m)).equal);
}
