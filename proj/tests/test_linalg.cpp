#include <doctest.h>

#include <numeric>
#include <random>

#include "lpk/abelian_group.hpp"
#include "lpk/mod_oracle.hpp"
#include "lpk/modulus.hpp"
#include "lpk/smith.hpp"
#include "support.hpp"

using namespace lpk;

namespace {

// Cofactor expansion, independent of the library's Bareiss determinant.
Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        const Integer term = m(0, j) * laplace_det(minor);
        sum += (j % 2 == 0) ? term : Integer(-term);
    }
    return sum;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Invariant factors as quotients of determinantal divisors (gcd of all k x k minors).
std::vector<Integer> determinantal_invariants(const IntMatrix& m) {
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(laplace_det(sub)).get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

Integer pow_int(std::uint64_t base, std::size_t e) {
    Integer r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(base);
    return r;
}

const std::vector<std::uint64_t> kModuli{2, 3, 4, 5, 8, 9, 16};

}  // namespace

TEST_CASE("integer matrices") {
    const IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a.to_string() == "[[1,2],[3,4]]");
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(determinant(a) == -2);
    CHECK(matrix_power(a, 0) == IntMatrix::identity(2));
    CHECK(matrix_power(a, 3) == a * a * a);
    CHECK(vstack(IntMatrix{{1}}, IntMatrix{{2}}) == IntMatrix{{1}, {2}});
    CHECK(block_diagonal(IntMatrix{{1}}, IntMatrix{{2}, {3}}) == IntMatrix{{1, 0}, {0, 2}, {0, 3}});

    Integer big = 1;
    for (int i = 0; i < 40; ++i) big *= 1000;
    IntMatrix b(1, 1);
    b(0, 0) = big;
    CHECK((b * b)(0, 0) == big * big);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = test::uniform(rng, 0, 4);
        const IntMatrix m = test::random_matrix(rng, n, n, 9);
        CHECK(determinant(m) == laplace_det(m));
    }
}

TEST_CASE("modulus parsing and factorization") {
    CHECK(Modulus::parse("8").value() == 8);
    CHECK(Modulus::parse("2^3").value() == 8);
    CHECK(Modulus::parse("2^3").is_prime_power());
    CHECK(Modulus::parse("5").to_string() == "5^1");
    CHECK_FALSE(Modulus(12).is_prime_power());
    CHECK(Modulus(12).to_string() == "12");
    CHECK_THROWS_AS(Modulus::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(Modulus::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Modulus::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Modulus::parse("2^"), std::invalid_argument);
    CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
}

TEST_CASE("finitely generated abelian groups") {
    CHECK(FinAbGroup::from_cyclic_orders({2, 3}) == FinAbGroup::cyclic(6));
    CHECK(FinAbGroup::from_cyclic_orders({4, 2, 1}).torsion() == std::vector<Integer>{2, 4});
    CHECK(FinAbGroup::from_cyclic_orders({0, 5}).free_rank() == 1);
    CHECK(FinAbGroup::from_cyclic_orders({-6}) == FinAbGroup::cyclic(6));
    CHECK(FinAbGroup::from_cyclic_orders({12, 18}).torsion() == std::vector<Integer>{6, 36});

    const FinAbGroup g = FinAbGroup::from_cyclic_orders({2, 4}, 1);
    CHECK(g.to_string() == "Z (+) Z/2 (+) Z/4");
    CHECK(FinAbGroup::trivial().to_string() == "0");
    CHECK(FinAbGroup::cyclic(9).order() == 9);
    CHECK(FinAbGroup::from_cyclic_orders({2, 4}).exponent() == 4);
    CHECK(g.exponent() == 0);
    CHECK_THROWS_AS((void)g.order(), std::domain_error);

    CHECK(g.tensor_mod(2) == FinAbGroup::from_cyclic_orders({2, 2, 2}));
    CHECK(g.torsion_subgroup(2) == FinAbGroup::from_cyclic_orders({2, 2}));
    CHECK(FinAbGroup::free(3).torsion_subgroup(5).is_trivial());
    CHECK(FinAbGroup::free(2).tensor_mod(3) == FinAbGroup::from_cyclic_orders({3, 3}));
}

TEST_CASE("direct sums") {
    CHECK(group_direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)) == FinAbGroup::cyclic(6));
    CHECK(group_direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4)).torsion() == std::vector<Integer>{2, 4});
    const FinAbGroup z5 = group_direct_sum(FinAbGroup::free(1), FinAbGroup::cyclic(5));
    CHECK(z5.free_rank() == 1);
    CHECK(z5.torsion() == std::vector<Integer>{5});

    std::mt19937_64 rng(5);
    auto random_group = [&] {
        std::vector<Integer> orders;
        for (std::size_t i = 0, n = test::uniform(rng, 0, 3); i < n; ++i) orders.emplace_back(static_cast<unsigned long>(test::uniform(rng, 0, 12)));
        return FinAbGroup::from_cyclic_orders(orders);
    };
    for (int t = 0; t < 200; ++t) {
        const FinAbGroup a = random_group(), b = random_group(), c = random_group();
        CHECK(group_direct_sum(a, b) == group_direct_sum(b, a));
        CHECK(group_direct_sum(group_direct_sum(a, b), c) == group_direct_sum(a, group_direct_sum(b, c)));
        CHECK(group_direct_sum(a, FinAbGroup::trivial()) == a);
    }
}

TEST_CASE("smith normal form examples") {
    const auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
    CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);

    const auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.D == IntMatrix::identity(3));

    const auto z = smith_normal_form(IntMatrix::zero(2, 3));
    CHECK(z.D == IntMatrix::zero(2, 3));
    CHECK(z.U == IntMatrix::identity(2));
    CHECK(z.V == IntMatrix::identity(3));
    CHECK(z.rank() == 0);

    const auto empty = smith_normal_form(IntMatrix::zero(0, 3));
    CHECK(empty.D.rows() == 0);
    CHECK(empty.V == IntMatrix::identity(3));

    const auto diag = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(diag.invariant_factors() == std::vector<Integer>{1, 6});
}

TEST_CASE("smith normal form certificates and determinantal divisors") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const IntMatrix m = test::random_matrix(rng, test::uniform(rng, 0, 4), test::uniform(rng, 0, 4), 9);
        const auto s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i < s.D.rows(); ++i)
            for (std::size_t j = 0; j < s.D.cols(); ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        const auto f = s.invariant_factors();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i] > 0);
            if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
        }
        CHECK(f == determinantal_invariants(m));
        CHECK(smith_normal_form(m).D == s.D);
    }
}

TEST_CASE("integral kernels and cokernels") {
    CHECK(cokernel_int(IntMatrix{{-1}}).is_trivial());
    CHECK(cokernel_int(IntMatrix{{0}}) == FinAbGroup::free(1));
    CHECK(cokernel_int(IntMatrix{{2, 0}, {0, 3}}) == FinAbGroup::cyclic(6));
    CHECK(kernel_rank_int(IntMatrix::identity(3)) == 0);
    CHECK(kernel_rank_int(IntMatrix::zero(2, 5)) == 5);
    CHECK(kernel_rank_int(IntMatrix{{1, 1}}) == 1);
}

TEST_CASE("kernels and cokernels mod m") {
    for (long n = 0; n <= 3; ++n) {
        const IntMatrix jac{{-(n + 1)}, {-n}};
        for (std::uint64_t m : {2, 3, 4, 5, 8, 9}) {
            CHECK(cokernel_mod(jac, Modulus(m)) == FinAbGroup::cyclic(static_cast<unsigned long>(m)));
            CHECK(kernel_mod(jac, Modulus(m)).is_trivial());
        }
    }
    CHECK(cokernel_mod(IntMatrix{{-1}}, Modulus(8)).is_trivial());
    CHECK(cokernel_mod(IntMatrix{{0}}, Modulus(9)) == FinAbGroup::cyclic(9));
    CHECK(kernel_mod(IntMatrix{{-6}}, Modulus(4)) == FinAbGroup::cyclic(2));
    CHECK(kernel_mod(IntMatrix{{0}}, Modulus(9)) == FinAbGroup::cyclic(9));
}

TEST_CASE("brute force oracle examples") {
    const auto a = brute_force_mod_oracle(IntMatrix{{2}}, Modulus(4));
    CHECK(a.kernel == FinAbGroup::cyclic(2));
    CHECK(a.cokernel == FinAbGroup::cyclic(2));
    const auto b = brute_force_mod_oracle(IntMatrix::identity(2), Modulus(3));
    CHECK(b.kernel.is_trivial());
    CHECK(b.cokernel.is_trivial());
    const auto c = brute_force_mod_oracle(IntMatrix{{0, 0}}, Modulus(2));
    CHECK(c.kernel == FinAbGroup::from_cyclic_orders({2, 2}));
    CHECK(c.cokernel == FinAbGroup::cyclic(2));
    const auto d = brute_force_mod_oracle(IntMatrix{{4, 0}, {0, 0}}, Modulus(8));
    CHECK(d.cokernel == FinAbGroup::from_cyclic_orders({4, 8}));
    CHECK(d.kernel == FinAbGroup::from_cyclic_orders({4, 8}));
    CHECK_THROWS_AS(brute_force_mod_oracle(IntMatrix::zero(1, 7), Modulus(16)), std::length_error);
}

TEST_CASE("modular kernels and cokernels match the oracle") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 400; ++t) {
        const IntMatrix m = test::random_matrix(rng, test::uniform(rng, 0, 3), test::uniform(rng, 0, 3), 5);
        for (std::uint64_t mv : kModuli) {
            const Modulus mod(mv);
            const auto oracle = brute_force_mod_oracle(m, mod);
            INFO(m.to_string(), " mod ", mv);
            CHECK(kernel_mod(m, mod) == oracle.kernel);
            CHECK(cokernel_mod(m, mod) == oracle.cokernel);
        }
    }
}

TEST_CASE("orders multiply along the image") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const IntMatrix m = test::random_matrix(rng, test::uniform(rng, 1, 3), test::uniform(rng, 1, 3), 5);
        for (std::uint64_t mv : kModuli) {
            const Modulus mod(mv);
            const Integer image = pow_int(mv, m.rows()) / brute_force_mod_oracle(m, mod).cokernel.order();
            CHECK(kernel_mod(m, mod).order() * image == pow_int(mv, m.cols()));
            CHECK(cokernel_mod(m, mod).order() * image == pow_int(mv, m.rows()));
        }
    }
}

TEST_CASE("permutation and negation invariance") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
        const std::size_t r = test::uniform(rng, 1, 4), c = test::uniform(rng, 1, 4);
        const IntMatrix m = test::random_matrix(rng, r, c, 9);
        std::vector<std::size_t> rp(r), cp(c);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        IntMatrix p(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) p(i, j) = m(rp[i], cp[j]);
        for (std::uint64_t mv : kModuli) {
            const Modulus mod(mv);
            CHECK(cokernel_mod(p, mod) == cokernel_mod(m, mod));
            CHECK(kernel_mod(p, mod) == kernel_mod(m, mod));
            CHECK(cokernel_mod(m.negated(), mod) == cokernel_mod(m, mod));
            CHECK(kernel_mod(m.negated(), mod) == kernel_mod(m, mod));
        }
    }
}
