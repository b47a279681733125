#include "segrecalc/prime_field.hpp"

#include <string>

#include "segrecalc/errors.hpp"

namespace segrecalc {

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
    if (!is_prime(modulus))
        throw input_error("field modulus " + std::to_string(modulus) + " is not prime");
}

bool PrimeField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw input_error("division by zero in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace segrecalc
