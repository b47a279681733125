#include "segrecalc/idealcalc.hpp"

#include <algorithm>
#include <stdexcept>

#include "segrecalc/errors.hpp"

namespace segrecalc {

namespace {

// Move a polynomial into the ring with one auxiliary variable prepended.
Poly lift_front(const Poly& f, const RingPtr& ext, const TermOrder& order) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        Monomial m(ext->nvars());
        for (int i = 0; i < f.ring()->nvars(); ++i) m.set_exponent(i + 1, t.mono.exponent(i));
        terms.push_back(Term{m, t.coeff});
    }
    return Poly::from_terms(ext, std::move(terms), order);
}

// Inverse of lift_front for polynomials free of the auxiliary variable.
Poly drop_front(const Poly& f, const RingPtr& base) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        Monomial m(base->nvars());
        for (int i = 0; i < base->nvars(); ++i) m.set_exponent(i, t.mono.exponent(i + 1));
        terms.push_back(Term{m, t.coeff});
    }
    return Poly::from_terms(base, std::move(terms));
}

bool uses_leading_vars(const Poly& f, int k) {
    for (const Term& t : f.terms())
        for (int i = 0; i < k; ++i)
            if (t.mono.exponent(i) != 0) return true;
    return false;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (Poly& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(g.ring(), ring_);
        gens_.push_back(std::move(g));
    }
    hash_ = hash_polys(gens_);
}

Ideal Ideal::unit(RingPtr ring) {
    Poly one = Poly::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

bool Ideal::has_homogeneous_generators() const {
    for (const Poly& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

int Ideal::max_generator_degree() const {
    int d = -1;
    for (const Poly& g : gens_) d = std::max(d, g.degree());
    return d;
}

const GroebnerBasis& Ideal::groebner(TermOrder order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it == cache_->bases.end()) {
        auto basis = std::make_shared<const GroebnerBasis>(buchberger(gens_, order));
        if (basis->source_hash() != hash_)
            throw std::logic_error("Groebner cache hash mismatch");
        it = cache_->bases.emplace(order, std::move(basis)).first;
    }
    return *it->second;
}

bool Ideal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::equals(const Ideal& o) const {
    require_same_ring(ring_, o.ring_);
    return groebner() == o.groebner();
}

std::string Ideal::digest() const { return digest_string(hash_); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    if (a.is_unit_ideal()) return b;
    if (b.is_unit_ideal()) return a;

    RingPtr ext = a.ring()->with_aux_front();
    TermOrder order = TermOrder::block_elimination(1);
    Poly t = Poly::variable(ext, 0, order);
    Poly one_minus_t = Poly::constant(ext, 1, order) - t;

    std::vector<Poly> gens;
    gens.reserve(a.generator_count() + b.generator_count());
    for (const Poly& f : a.generators()) gens.push_back(t * lift_front(f, ext, order));
    for (const Poly& g : b.generators()) gens.push_back(one_minus_t * lift_front(g, ext, order));

    GroebnerBasis basis = buchberger(gens, order);
    std::vector<Poly> out;
    for (const Poly& g : basis.generators())
        if (!uses_leading_vars(g, 1)) out.push_back(drop_front(g, a.ring()));
    return Ideal(a.ring(), std::move(out));
}

namespace {

Ideal quotient_single(const Ideal& a, const Poly& g) {
    if (g.leading_monomial().is_constant()) return a;  // unit divisor
    Ideal k = intersect(a, Ideal(a.ring(), {g}));
    std::vector<Poly> out;
    out.reserve(k.generator_count());
    for (const Poly& h : k.generators()) out.push_back(divide_exact(h, g));
    return Ideal(a.ring(), std::move(out));
}

}  // namespace

Ideal quotient(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.generator_count() == 0) throw input_error("colon ideal by the zero ideal");
    Ideal result = quotient_single(a, b.generators().front());
    for (std::size_t i = 1; i < b.generator_count(); ++i) {
        if (result.is_zero_ideal()) break;
        result = intersect(result, quotient_single(a, b.generators()[i]));
    }
    return result;
}

std::pair<Ideal, int> saturate(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.generator_count() == 0) throw input_error("saturation by the zero ideal");
    Ideal prev = a;
    for (int step = 1; step <= 64; ++step) {
        Ideal next = quotient(prev, b);
        if (next.equals(prev)) return {next, step};
        prev = std::move(next);
    }
    throw resource_error("saturation did not stabilize within 64 quotient steps");
}

Ideal eliminate(const Ideal& a, int k) {
    if (k < 0 || k >= a.ring()->nvars())
        throw input_error("eliminate: variable count out of range");
    if (k == 0) return a;
    const GroebnerBasis& basis = a.groebner(TermOrder::block_elimination(k));
    std::vector<Poly> out;
    for (const Poly& g : basis.generators())
        if (!uses_leading_vars(g, k)) out.push_back(g.reordered(TermOrder::grevlex()));
    return Ideal(a.ring(), std::move(out));
}

bool radical_member(const Poly& f, const Ideal& ideal) {
    if (f.is_zero()) throw input_error("radical membership of the zero polynomial");
    require_same_ring(f.ring(), ideal.ring());
    if (ideal.contains(f)) return true;  // cheap certificate, skips the trick ring

    RingPtr ext = ideal.ring()->with_aux_front();
    TermOrder order = TermOrder::block_elimination(1);
    std::vector<Poly> gens;
    gens.reserve(ideal.generator_count() + 1);
    for (const Poly& g : ideal.generators()) gens.push_back(lift_front(g, ext, order));
    Poly t = Poly::variable(ext, 0, order);
    gens.push_back(t * lift_front(f, ext, order) - Poly::constant(ext, 1, order));
    return buchberger(gens, order).is_unit();
}

bool equal_radicals(const Ideal& a, const Ideal& b) {
    for (const Poly& g : a.generators())
        if (!radical_member(g, b)) return false;
    for (const Poly& g : b.generators())
        if (!radical_member(g, a)) return false;
    return true;
}

namespace {

using Numerator = std::vector<long long>;  // coefficients, index = power of t

Numerator num_mul(const Numerator& a, const Numerator& b) {
    if (a.empty() || b.empty()) return {};
    Numerator r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Numerator num_add_shifted(Numerator a, const Numerator& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
        return x.total_degree() < y.total_degree();
    });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : out)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

int support_size(const Monomial& m) {
    int s = 0;
    for (int i = 0; i < m.nvars(); ++i)
        if (m.exponent(i) != 0) ++s;
    return s;
}

// Numerator of the Hilbert series of R/I for a monomial ideal, by the
// recursive pivot decomposition N(I) = N(I + (v)) + t * N(I : v).
Numerator monomial_numerator(const std::vector<Monomial>& minimal_gens, int nvars) {
    if (minimal_gens.empty()) return {1};
    for (const Monomial& g : minimal_gens)
        if (g.total_degree() == 0) return {};

    bool pure_powers = true;
    for (const Monomial& g : minimal_gens)
        if (support_size(g) > 1) {
            pure_powers = false;
            break;
        }
    if (pure_powers) {
        // Complete-intersection base case: product of (1 - t^deg).
        Numerator acc{1};
        for (const Monomial& g : minimal_gens) {
            Numerator factor(g.total_degree() + 1, 0);
            factor[0] = 1;
            factor[g.total_degree()] = -1;
            acc = num_mul(acc, factor);
        }
        return acc;
    }

    // Pivot on the most frequent variable among those appearing in a mixed
    // generator (smallest index on ties). Restricting to mixed generators
    // guarantees both recursive branches strictly shrink.
    int best_var = -1, best_count = -1;
    for (int v = 0; v < nvars; ++v) {
        bool in_mixed = false;
        int count = 0;
        for (const Monomial& g : minimal_gens) {
            if (g.exponent(v) == 0) continue;
            ++count;
            if (support_size(g) > 1) in_mixed = true;
        }
        if (in_mixed && count > best_count) {
            best_count = count;
            best_var = v;
        }
    }

    std::vector<Monomial> plus;  // I + (v)
    Monomial pivot(nvars);
    pivot.set_exponent(best_var, 1);
    plus.push_back(pivot);
    for (const Monomial& g : minimal_gens)
        if (g.exponent(best_var) == 0) plus.push_back(g);

    std::vector<Monomial> colon;  // I : v
    colon.reserve(minimal_gens.size());
    for (const Monomial& g : minimal_gens) {
        Monomial h = g;
        if (h.exponent(best_var) > 0)
            h.set_exponent(best_var, static_cast<std::uint16_t>(h.exponent(best_var) - 1));
        colon.push_back(h);
    }

    Numerator n_plus = monomial_numerator(plus, nvars);
    Numerator n_colon = monomial_numerator(minimalize(std::move(colon)), nvars);
    return num_add_shifted(std::move(n_plus), n_colon, 1);
}

}  // namespace

HilbertData hilbert(const Ideal& ideal) {
    if (!ideal.has_homogeneous_generators())
        throw input_error("Hilbert series requires homogeneous generators");
    const int nvars = ideal.ring()->nvars();
    const GroebnerBasis& basis = ideal.groebner();

    std::vector<Monomial> lt;
    lt.reserve(basis.generators().size());
    for (const Poly& g : basis.generators()) lt.push_back(g.leading_monomial());
    // Leading monomials of a reduced basis are already minimal generators.

    HilbertData data;
    data.numerator = monomial_numerator(lt, nvars);

    if (data.numerator.empty()) {  // unit ideal, empty scheme
        data.proj_dimension = -1;
        data.degree = 0;
        return data;
    }

    // Cancel (1-t) factors; the remaining pole order at t=1 is the Krull
    // dimension of R/I.
    Numerator q = data.numerator;
    int cancelled = 0;
    auto value_at_one = [](const Numerator& n) {
        long long s = 0;
        for (long long c : n) s += c;
        return s;
    };
    while (!q.empty() && value_at_one(q) == 0) {
        // synthetic division by (1-t): q_i' accumulates partial sums
        Numerator next(q.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            carry += q[i];
            next[i] = carry;
        }
        q = std::move(next);
        while (!q.empty() && q.back() == 0) q.pop_back();
        ++cancelled;
    }

    int krull = nvars - cancelled;
    data.proj_dimension = krull - 1;
    data.degree = data.proj_dimension >= 0 ? value_at_one(q) : 0;
    return data;
}

long long hilbert_series_coefficient(const std::vector<long long>& numerator, int nvars, int s) {
    // [t^s] N(t) / (1-t)^nvars with 1/(1-t)^n = sum C(n-1+k, k) t^k.
    long long acc = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        int k = s - static_cast<int>(i);
        if (k < 0) continue;
        long long binom = 1;
        for (int j = 1; j <= nvars - 1; ++j) binom = binom * (k + j) / j;
        acc += numerator[i] * binom;
    }
    return acc;
}

}  // namespace segrecalc
