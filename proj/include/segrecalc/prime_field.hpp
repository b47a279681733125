#pragma once

#include <cstdint>

#include "segrecalc/rng.hpp"

namespace segrecalc {

// Arithmetic in GF(p) with canonical residues in [0, p). The default modulus
// 32003 is large enough that random-choice genericity failures are rare at
// the problem sizes this library targets; it can be overridden per ring.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultModulus = 32003;

    explicit PrimeField(std::uint32_t modulus = kDefaultModulus);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Canonical residue of a possibly negative integer.
    std::uint32_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += p_;
        return static_cast<std::uint32_t>(m);
    }

    // Symmetric lift to (-p/2, p/2]; used when printing coefficients.
    long long lift_symmetric(std::uint32_t a) const {
        return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_)
                          : static_cast<long long>(a);
    }

    std::uint32_t random(Rng& rng) const { return static_cast<std::uint32_t>(rng.below(p_)); }
    std::uint32_t random_nonzero(Rng& rng) const {
        return static_cast<std::uint32_t>(rng.below(p_ - 1)) + 1;
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

    static bool is_prime(std::uint32_t n);

private:
    std::uint32_t p_;
};

}  // namespace segrecalc
