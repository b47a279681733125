#pragma once

#include <cstdint>
#include <vector>

#include "segrecalc/poly.hpp"

namespace segrecalc {

// Safety valve for the randomized harness: Buchberger aborts with a
// resource_error instead of hanging once a computation exceeds these limits.
struct Budget {
    std::uint64_t max_pairs = 400000;  // S-pairs processed per basis computation
    std::uint32_t max_degree = 200;    // sugar degree of any selected pair
};

Budget& resource_budget();  // process-wide, set once at startup

// Reduced Groebner basis: monic generators, fully auto-reduced, sorted
// ascending by leading monomial. Uniqueness of this form is what makes
// basis equality (and hence ideal equality) a bitwise comparison.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Poly> gens,
                  std::uint64_t source_hash)
        : ring_(std::move(ring)), order_(order), gens_(std::move(gens)),
          source_hash_(source_hash) {}

    const RingPtr& ring() const { return ring_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Poly>& generators() const { return gens_; }
    std::uint64_t source_hash() const { return source_hash_; }

    bool is_unit() const {
        return gens_.size() == 1 && gens_.front().leading_monomial().is_constant();
    }
    bool is_zero() const { return gens_.empty(); }

    bool operator==(const GroebnerBasis& o) const {
        return order_ == o.order_ && gens_ == o.gens_;
    }

private:
    RingPtr ring_;
    TermOrder order_;
    std::vector<Poly> gens_;
    std::uint64_t source_hash_;
};

// Buchberger's algorithm with sugar-degree selection and both classical pair
// criteria (coprime leading monomials; chain criterion). Deterministic:
// ties break lexicographically on pair indices, so the output is reproducible
// across runs and, being the reduced basis, independent of generator order.
GroebnerBasis buchberger(const std::vector<Poly>& gens, TermOrder order);

// Unique remainder of f under multivariate division by the basis.
Poly normal_form(const Poly& f, const GroebnerBasis& basis);
Poly normal_form(const Poly& f, const std::vector<Poly>& reducers, const TermOrder& order);

// S-polynomial of two monic inputs (exposed for the basis re-check tests).
Poly s_polynomial(const Poly& f, const Poly& g);

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens);

// Exact division: returns q with f = q*g; throws std::logic_error if g does
// not divide f (an internal bug signal for the quotient construction).
Poly divide_exact(const Poly& f, const Poly& g);

}  // namespace segrecalc
