#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "segrecalc/monomial.hpp"
#include "segrecalc/prime_field.hpp"

namespace segrecalc {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ring metadata: coefficient field and named variables. Rings compare by
// value (modulus + variable names), so independently constructed rings are
// interchangeable.
class PolyRing {
public:
    PolyRing(PrimeField field, std::vector<std::string> vars);

    static RingPtr make(std::uint32_t modulus, std::vector<std::string> vars);

    const PrimeField& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    int var_index(const std::string& name) const;

    bool same_as(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_;
    }

    // Ring with one fresh auxiliary variable prepended (for elimination
    // tricks). The name is chosen to avoid clashes with existing variables.
    RingPtr with_aux_front() const;
    // Ring with the last variable removed.
    RingPtr without_last_var() const;

private:
    PrimeField field_;
    std::vector<std::string> vars_;
};

struct Term {
    Monomial mono;
    std::uint32_t coeff;  // nonzero canonical residue
};

// Homogeneous-friendly sparse polynomial: terms strictly descending under the
// stored order, no zero coefficients, no duplicate monomials.
class Poly {
public:
    Poly() = default;

    static Poly zero(RingPtr ring, TermOrder order = TermOrder::grevlex());
    static Poly constant(RingPtr ring, long long value, TermOrder order = TermOrder::grevlex());
    static Poly variable(RingPtr ring, int index, TermOrder order = TermOrder::grevlex());
    static Poly monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff,
                         TermOrder order = TermOrder::grevlex());
    // Normalizes: sorts, merges duplicates, drops zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms,
                           TermOrder order = TermOrder::grevlex());
    // Trusted variant: caller guarantees terms are strictly descending under
    // order with nonzero canonical coefficients.
    static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms, TermOrder order);

    const RingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    std::uint32_t leading_coeff() const { return terms_.front().coeff; }

    // Maximum total degree over all terms; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Poly reordered(const TermOrder& order) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    Poly scaled(std::uint32_t c) const;        // c * this
    Poly times_term(const Term& t) const;      // t * this, term-by-term
    Poly monic() const;                        // leading coefficient 1

    // Subtracts c * m * g in one merge pass; the workhorse of division.
    Poly minus_scaled_shifted(const Poly& g, std::uint32_t c, const Monomial& m) const;

    Poly partial_derivative(int var) const;

    std::string to_string() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    TermOrder order_ = TermOrder::grevlex();
    std::vector<Term> terms_;
};

void require_same_ring(const Poly& a, const Poly& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// All monomials of total degree d in ring->nvars() variables, descending
// under grevlex (deterministic enumeration used for spanning sets, linear
// algebra oracles and Hilbert staircases).
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Euler relation helper: sum_i x_i * dF/dx_i.
Poly euler_derivative_sum(const Poly& f);

std::uint64_t hash_polys(const std::vector<Poly>& polys);
std::string digest_string(std::uint64_t h);

}  // namespace segrecalc
