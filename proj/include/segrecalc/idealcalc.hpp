#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "segrecalc/groebner.hpp"
#include "segrecalc/poly.hpp"

namespace segrecalc {

// Immutable ideal with a write-once Groebner cache shared across copies.
// Generators are fixed at construction (zero generators are dropped), so the
// cache can never go stale; each cached basis still carries the source hash
// as a guard.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool has_homogeneous_generators() const;
    // Max total degree over generators, -1 for the zero ideal.
    int max_generator_degree() const;

    const GroebnerBasis& groebner(TermOrder order = TermOrder::grevlex()) const;

    bool contains(const Poly& f) const;
    bool is_zero_ideal() const { return groebner().is_zero(); }
    bool is_unit_ideal() const { return groebner().is_unit(); }
    // Ideal equality via reduced-basis comparison.
    bool equals(const Ideal& o) const;

    std::uint64_t generator_hash() const { return hash_; }
    std::string digest() const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<TermOrder, std::shared_ptr<const GroebnerBasis>> bases;
    };

    RingPtr ring_;
    std::vector<Poly> gens_;
    std::uint64_t hash_;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);

// I ∩ J via the auxiliary-variable construction: eliminate t from
// t·I + (1−t)·J in a ring with one extra variable and block order.
Ideal intersect(const Ideal& a, const Ideal& b);

// Colon ideal I : J = ∩_g (I : g), each I : g computed as (I ∩ (g))/g.
Ideal quotient(const Ideal& a, const Ideal& b);

// I : J^∞ by iterating the quotient until it stabilizes. Returns the stable
// ideal and the number of quotient iterations performed (the final,
// confirming iteration included).
std::pair<Ideal, int> saturate(const Ideal& a, const Ideal& b);

// Generators of I ∩ k[x_k, ..., x_n] (the result stays in the same ring).
Ideal eliminate(const Ideal& a, int k);

// f ∈ √I, decided by 1 ∈ I + (t·f − 1) in an extended ring.
bool radical_member(const Poly& f, const Ideal& ideal);
bool equal_radicals(const Ideal& a, const Ideal& b);

// Hilbert series data of a homogeneous ideal: numerator over (1-t)^{nvars},
// projective dimension of V(I) (-1 for the empty scheme) and the degree of
// the top-dimensional part. Both are read off the Hilbert polynomial, so
// lower-dimensional and irrelevant components do not disturb them.
struct HilbertData {
    std::vector<long long> numerator;  // empty vector encodes the zero series
    int proj_dimension = -1;
    long long degree = 0;
};

HilbertData hilbert(const Ideal& ideal);

// Coefficient of t^s in numerator / (1-t)^nvars (used by the staircase
// cross-checks).
long long hilbert_series_coefficient(const std::vector<long long>& numerator, int nvars, int s);

}  // namespace segrecalc
