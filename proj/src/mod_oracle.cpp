#include "lpk/mod_oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lpk {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1'000'000;

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > kEnumerationLimit)
            throw std::length_error("brute_force_mod_oracle: enumeration exceeds 10^6 elements");
    }
    return v;
}

using Vec = std::vector<std::uint64_t>;

void decode(std::uint64_t index, std::uint64_t m, Vec& out) {
    for (auto& c : out) {
        c = index % m;
        index /= m;
    }
}

std::uint64_t encode(const Vec& v, std::uint64_t m) {
    std::uint64_t index = 0;
    for (std::size_t i = v.size(); i-- > 0;) index = index * m + v[i];
    return index;
}

// Given counts c_j = |G[p^j]| for j = 0..e of a finite abelian p-group G whose exponent
// divides p^e, recover the cyclic factor orders.
void append_p_part(const std::vector<std::uint64_t>& counts, std::uint64_t p, std::vector<Integer>& orders) {
    auto log_p = [p](std::uint64_t n) {
        unsigned s = 0;
        while (n > 1) {
            if (n % p) throw std::logic_error("oracle: torsion count is not a power of p");
            n /= p;
            ++s;
        }
        return s;
    };
    std::vector<unsigned> s(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) s[j] = log_p(counts[j]);
    // at_least[j] = number of cyclic factors of exponent >= j
    const std::size_t e = counts.size() - 1;
    std::vector<unsigned> at_least(e + 2, 0);
    for (std::size_t j = 1; j <= e; ++j) at_least[j] = s[j] - s[j - 1];
    for (std::size_t j = 1; j <= e; ++j) {
        unsigned exactly = at_least[j] - at_least[j + 1];
        Integer order = 1;
        for (std::size_t k = 0; k < j; ++k) order *= static_cast<unsigned long>(p);
        for (unsigned k = 0; k < exactly; ++k) orders.push_back(order);
    }
}

}  // namespace

KernelCokernel brute_force_mod_oracle(const IntMatrix& mat, const Modulus& mod) {
    const std::uint64_t m = mod.value();
    const std::size_t rows = mat.rows();
    const std::size_t cols = mat.cols();
    const std::uint64_t domain_size = checked_power(m, cols);
    const std::uint64_t codomain_size = checked_power(m, rows);

    std::vector<std::uint64_t> entries(rows * cols);
    const Integer mz(static_cast<unsigned long>(m));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), mat(i, j).get_mpz_t(), mz.get_mpz_t());
            entries[i * cols + j] = r.get_ui();
        }

    std::vector<Vec> kernel;
    std::vector<bool> in_image(codomain_size, false);
    Vec x(cols), y(rows);
    for (std::uint64_t idx = 0; idx < domain_size; ++idx) {
        decode(idx, m, x);
        bool zero = true;
        for (std::size_t i = 0; i < rows; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols; ++j) acc = (acc + entries[i * cols + j] * x[j]) % m;
            y[i] = acc;
            if (acc) zero = false;
        }
        if (zero) kernel.push_back(x);
        in_image[encode(y, m)] = true;
    }
    std::uint64_t image_size = 0;
    for (bool b : in_image) image_size += b;

    std::vector<Integer> kernel_orders, cokernel_orders;
    Vec z(rows);
    for (const auto& pp : mod.factorization()) {
        std::vector<std::uint64_t> kernel_counts, cokernel_counts;
        std::uint64_t scale = 1;
        for (unsigned j = 0; j <= pp.exponent; ++j) {
            std::uint64_t kc = 0;
            for (const auto& h : kernel) {
                bool killed = true;
                for (auto c : h)
                    if ((c * scale) % m) {
                        killed = false;
                        break;
                    }
                kc += killed;
            }
            kernel_counts.push_back(kc);

            std::uint64_t cc = 0;
            for (std::uint64_t idx = 0; idx < codomain_size; ++idx) {
                decode(idx, m, z);
                for (auto& c : z) c = (c * scale) % m;
                cc += in_image[encode(z, m)];
            }
            cokernel_counts.push_back(cc / image_size);
            scale *= pp.prime;
        }
        append_p_part(kernel_counts, pp.prime, kernel_orders);
        append_p_part(cokernel_counts, pp.prime, cokernel_orders);
    }
    return {FinAbGroup::from_cyclic_orders(std::move(kernel_orders)),
            FinAbGroup::from_cyclic_orders(std::move(cokernel_orders))};
}

}  // namespace lpk
