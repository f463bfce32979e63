#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpk {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    std::uint64_t value() const;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization of n >= 1, primes strictly increasing.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Coefficient modulus m >= 2 together with its prime factorization.
class Modulus {
public:
    explicit Modulus(std::uint64_t m);
    static Modulus prime_power(std::uint64_t prime, unsigned exponent);
    /// Accepts "8" or "2^3". Throws std::invalid_argument on malformed input or m < 2.
    static Modulus parse(std::string_view text);

    std::uint64_t value() const { return value_; }
    const std::vector<PrimePower>& factorization() const { return factors_; }
    bool is_prime_power() const { return factors_.size() == 1; }
    /// "2^3" for prime powers, plain decimal otherwise.
    std::string to_string() const;

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

private:
    std::uint64_t value_;
    std::vector<PrimePower> factors_;
};

}  // namespace lpk
