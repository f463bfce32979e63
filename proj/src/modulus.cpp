#include "lpk/modulus.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace lpk {

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

Modulus::Modulus(std::uint64_t m) : value_(m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    factors_ = factorize(m);
}

Modulus Modulus::prime_power(std::uint64_t prime, unsigned exponent) {
    if (exponent == 0) throw std::invalid_argument("prime power exponent must be positive");
    auto f = factorize(prime);
    if (f.size() != 1 || f[0].exponent != 1) throw std::invalid_argument("not a prime: " + std::to_string(prime));
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / prime)
            throw std::invalid_argument("modulus overflows 64 bits");
        v *= prime;
    }
    return Modulus(v);
}

namespace {

std::uint64_t parse_unsigned(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed modulus '" + std::string(s) + "'");
    return v;
}

}  // namespace

Modulus Modulus::parse(std::string_view text) {
    auto caret = text.find('^');
    if (caret == std::string_view::npos) return Modulus(parse_unsigned(text));
    std::uint64_t base = parse_unsigned(text.substr(0, caret));
    std::uint64_t exp = parse_unsigned(text.substr(caret + 1));
    if (base < 2 || exp == 0 || exp > 64) throw std::invalid_argument("malformed modulus '" + std::string(text) + "'");
    return prime_power(base, static_cast<unsigned>(exp));
}

std::string Modulus::to_string() const {
    if (is_prime_power())
        return std::to_string(factors_[0].prime) + "^" + std::to_string(factors_[0].exponent);
    return std::to_string(value_);
}

}  // namespace lpk
