#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace segrecalc {

// Rings are dense-exponent and small: homogeneous coordinates of P^n with
// n <= ~8 plus at most two auxiliary variables. A fixed-capacity array keeps
// monomials trivially copyable, which matters a lot inside Buchberger.
inline constexpr int kMaxVars = 12;

class Monomial {
public:
    Monomial() : nvars_(0), degree_(0) { exps_.fill(0); }
    explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)), degree_(0) {
        exps_.fill(0);
    }

    int nvars() const { return nvars_; }
    std::uint32_t total_degree() const { return degree_; }
    std::uint16_t exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }

    void set_exponent(int i, std::uint16_t e) {
        degree_ = degree_ - exps_[static_cast<std::size_t>(i)] + e;
        exps_[static_cast<std::size_t>(i)] = e;
    }

    bool is_constant() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i)
            r.exps_[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(exps_[static_cast<std::size_t>(i)] +
                                           o.exps_[static_cast<std::size_t>(i)]);
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    // True iff this divides o.
    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars_; ++i)
            if (exps_[static_cast<std::size_t>(i)] > o.exps_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    // Exact quotient o = this * result; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& numerator) const {
        Monomial r(nvars_);
        for (int i = 0; i < nvars_; ++i)
            r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                numerator.exps_[static_cast<std::size_t>(i)] - exps_[static_cast<std::size_t>(i)]);
        r.degree_ = numerator.degree_ - degree_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars_);
        std::uint32_t deg = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            std::uint16_t e = a.exps_[static_cast<std::size_t>(i)] >
                                      b.exps_[static_cast<std::size_t>(i)]
                                  ? a.exps_[static_cast<std::size_t>(i)]
                                  : b.exps_[static_cast<std::size_t>(i)];
            r.exps_[static_cast<std::size_t>(i)] = e;
            deg += e;
        }
        r.degree_ = deg;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars_; ++i)
            if (a.exps_[static_cast<std::size_t>(i)] != 0 &&
                b.exps_[static_cast<std::size_t>(i)] != 0)
                return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_) return false;
        for (int i = 0; i < nvars_; ++i)
            if (exps_[static_cast<std::size_t>(i)] != o.exps_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::array<std::uint16_t, kMaxVars> exps_;
    std::uint8_t nvars_;
    std::uint32_t degree_;
};

// Monomial orders. Block elimination with k leading variables is the product
// order (grevlex on the first k exponents, then grevlex on the rest); any
// monomial involving an eliminated variable therefore ranks above every
// monomial that avoids them all.
class TermOrder {
public:
    enum class Kind : std::uint8_t { Grevlex, Lex, Block };

    static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0); }
    static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
    static TermOrder block_elimination(int k) { return TermOrder(Kind::Block, k); }

    Kind kind() const { return kind_; }
    int block() const { return block_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const TermOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator!=(const TermOrder& o) const { return !(*this == o); }
    bool operator<(const TermOrder& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
    }

    const char* name() const;

private:
    TermOrder(Kind k, int b) : kind_(k), block_(b) {}

    // grevlex restricted to exponent positions [lo, hi).
    static int compare_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi);

    Kind kind_;
    int block_;
};

}  // namespace segrecalc
