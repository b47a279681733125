#include "segrecalc/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "segrecalc/errors.hpp"

namespace segrecalc {

Budget& resource_budget() {
    static Budget budget;
    return budget;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& reducers, const TermOrder& order) {
    Poly work = f.reordered(order);
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Poly* reducer = nullptr;
        for (const Poly& g : reducers)
            if (g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        if (reducer == nullptr) {
            remainder.push_back(work.leading());
            std::vector<Term> tail(work.terms().begin() + 1, work.terms().end());
            work = Poly::from_sorted_terms(f.ring(), std::move(tail), order);
            continue;
        }
        std::uint32_t c = f.ring()->field().div(work.leading_coeff(), reducer->leading_coeff());
        Monomial shift = reducer->leading_monomial().quotient_of(lm);
        work = work.minus_scaled_shifted(*reducer, c, shift);
    }
    // Remainder terms were collected in strictly descending order.
    return Poly::from_sorted_terms(f.ring(), std::move(remainder), order);
}

Poly normal_form(const Poly& f, const GroebnerBasis& basis) {
    require_same_ring(f.ring(), basis.ring());
    return normal_form(f, basis.generators(), basis.order());
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    require_same_ring(f, g);
    const TermOrder& order = f.order();
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = f.leading_monomial().quotient_of(l);
    Monomial mg = g.leading_monomial().quotient_of(l);
    const PrimeField& F = f.ring()->field();
    Poly a = f.times_term(Term{mf, F.inv(f.leading_coeff())});
    Poly b = g.times_term(Term{mg, F.inv(g.leading_coeff())});
    return a.reordered(order) - b.reordered(order);
}

namespace {

struct PairEntry {
    std::uint32_t sugar;
    Monomial lcm;
    std::uint32_t i, j;  // i < j
};

struct PairLess {
    TermOrder order;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& input, TermOrder order) {
    std::uint64_t source_hash = hash_polys(input);
    if (input.empty()) return GroebnerBasis(nullptr, order, {}, source_hash);
    RingPtr ring = input.front().ring();

    std::vector<Poly> basis;
    std::vector<std::uint32_t> sugar;
    for (const Poly& g : input) {
        require_same_ring(g.ring(), ring);
        if (g.is_zero()) continue;
        Poly h = g.reordered(order).monic();
        if (std::find(basis.begin(), basis.end(), h) != basis.end()) continue;
        basis.push_back(std::move(h));
        sugar.push_back(static_cast<std::uint32_t>(basis.back().degree()));
    }
    if (basis.empty()) return GroebnerBasis(ring, order, {}, source_hash);

    const Budget& budget = resource_budget();
    std::set<PairEntry, PairLess> pending({}, PairLess{order});
    std::set<std::pair<std::uint32_t, std::uint32_t>> pending_idx;

    auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
        Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        std::uint32_t su = std::max(
            sugar[i] + l.total_degree() - basis[i].leading_monomial().total_degree(),
            sugar[j] + l.total_degree() - basis[j].leading_monomial().total_degree());
        pending.insert(PairEntry{su, l, i, j});
        pending_idx.emplace(i, j);
    };

    for (std::uint32_t i = 0; i < basis.size(); ++i)
        for (std::uint32_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::uint64_t processed = 0;
    while (!pending.empty()) {
        PairEntry top = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({top.i, top.j});

        if (++processed > budget.max_pairs)
            throw resource_error("Groebner pair budget exceeded (" +
                                 std::to_string(budget.max_pairs) + ")");
        if (top.sugar > budget.max_degree)
            throw resource_error("Groebner degree budget exceeded (" +
                                 std::to_string(budget.max_degree) + ")");

        const Monomial& li = basis[top.i].leading_monomial();
        const Monomial& lj = basis[top.j].leading_monomial();

        if (Monomial::coprime(li, lj)) continue;  // first Buchberger criterion

        // Chain criterion: skip if some lm(k) divides the lcm and both pairs
        // (i,k), (j,k) were already treated. "Treated" means popped earlier,
        // which keeps the induction well-founded.
        bool skip = false;
        for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == top.i || k == top.j) continue;
            if (!basis[k].leading_monomial().divides(top.lcm)) continue;
            auto key = [](std::uint32_t a, std::uint32_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (pending_idx.count(key(top.i, k)) == 0 && pending_idx.count(key(top.j, k)) == 0)
                skip = true;
        }
        if (skip) continue;

        Poly h = normal_form(s_polynomial(basis[top.i], basis[top.j]), basis, order);
        if (h.is_zero()) continue;
        h = h.monic();
        std::uint32_t t = static_cast<std::uint32_t>(basis.size());
        basis.push_back(std::move(h));
        sugar.push_back(std::max(top.sugar, static_cast<std::uint32_t>(basis.back().degree())));
        for (std::uint32_t i = 0; i < t; ++i) push_pair(i, t);
    }

    // Minimalize: keep only generators whose leading monomial is not divisible
    // by another kept one. Ascending order guarantees divisors come first.
    std::sort(basis.begin(), basis.end(),
              [&order](const Poly& a, const Poly& b) {
                  int c = order.compare(a.leading_monomial(), b.leading_monomial());
                  return c < 0;
              });
    std::vector<Poly> minimal;
    for (const Poly& g : basis) {
        bool redundant = false;
        for (const Poly& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // Full inter-reduction; leading monomials are untouched, tails become
    // irreducible against the (fixed) set of leading monomials.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others, order).monic();
    }

    return GroebnerBasis(ring, order, std::move(minimal), source_hash);
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens) {
    if (f.is_zero()) return true;
    GroebnerBasis basis = buchberger(gens, TermOrder::grevlex());
    return normal_form(f, basis).is_zero();
}

Poly divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::logic_error("exact division by zero");
    const TermOrder order = f.order();
    Poly work = f;
    Poly quotient = Poly::zero(f.ring(), order);
    const Poly gg = g.reordered(order);
    const PrimeField& F = f.ring()->field();
    while (!work.is_zero()) {
        if (!gg.leading_monomial().divides(work.leading_monomial()))
            throw std::logic_error("inexact division in quotient construction");
        std::uint32_t c = F.div(work.leading_coeff(), gg.leading_coeff());
        Monomial m = gg.leading_monomial().quotient_of(work.leading_monomial());
        quotient = quotient + Poly::monomial(f.ring(), m, c, order);
        work = work.minus_scaled_shifted(gg, c, m);
    }
    return quotient;
}

}  // namespace segrecalc
