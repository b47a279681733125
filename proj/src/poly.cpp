#include "segrecalc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "segrecalc/errors.hpp"

namespace segrecalc {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
    if (vars_.empty()) throw input_error("ring needs at least one variable");
    if (static_cast<int>(vars_.size()) > kMaxVars)
        throw input_error("too many variables (limit " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw input_error("duplicate variable '" + vars_[i] + "'");
}

RingPtr PolyRing::make(std::uint32_t modulus, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(PrimeField(modulus), std::move(vars));
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr PolyRing::with_aux_front() const {
    std::string name = "t";
    while (var_index(name) >= 0) name += "_";
    std::vector<std::string> vars;
    vars.reserve(vars_.size() + 1);
    vars.push_back(name);
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    return std::make_shared<const PolyRing>(field_, std::move(vars));
}

RingPtr PolyRing::without_last_var() const {
    if (vars_.size() < 2) throw input_error("cannot drop the only variable of a ring");
    std::vector<std::string> vars(vars_.begin(), vars_.end() - 1);
    return std::make_shared<const PolyRing>(field_, std::move(vars));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || !a->same_as(*b)) throw ring_mismatch("operands live in different rings");
}

void require_same_ring(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
}

Poly Poly::zero(RingPtr ring, TermOrder order) {
    Poly p;
    p.ring_ = std::move(ring);
    p.order_ = order;
    return p;
}

Poly Poly::constant(RingPtr ring, long long value, TermOrder order) {
    std::uint32_t c = ring->field().from_int(value);
    Poly p = zero(std::move(ring), order);
    if (c != 0) p.terms_.push_back(Term{Monomial(p.ring_->nvars()), c});
    return p;
}

Poly Poly::variable(RingPtr ring, int index, TermOrder order) {
    Monomial m(ring->nvars());
    m.set_exponent(index, 1);
    return monomial(std::move(ring), m, 1, order);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff, TermOrder order) {
    Poly p = zero(std::move(ring), order);
    coeff %= p.ring_->field().modulus();
    if (coeff != 0) p.terms_.push_back(Term{m, coeff});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms, TermOrder order) {
    Poly p = zero(std::move(ring), order);
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    const PrimeField& F = p.ring_->field();
    for (const Term& t : terms) {
        std::uint32_t c = t.coeff % F.modulus();
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (c != 0) {
            p.terms_.push_back(Term{t.mono, c});
        }
    }
    return p;
}

Poly Poly::from_sorted_terms(RingPtr ring, std::vector<Term> terms, TermOrder order) {
    Poly p = zero(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.total_degree()));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.front().mono.total_degree();
    for (const Term& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Poly Poly::reordered(const TermOrder& order) const {
    if (order == order_) return *this;
    Poly p = *this;
    p.order_ = order;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&order](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o);
    if (order_ != o.order_) return *this + o.reordered(order_);
    const PrimeField& F = ring_->field();
    Poly r = zero(ring_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back(Term{terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    const PrimeField& F = ring_->field();
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(std::uint32_t c) const {
    const PrimeField& F = ring_->field();
    c %= F.modulus();
    if (c == 0) return zero(ring_, order_);
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
}

Poly Poly::times_term(const Term& t) const {
    const PrimeField& F = ring_->field();
    if (t.coeff % F.modulus() == 0) return zero(ring_, order_);
    Poly r = *this;
    for (Term& u : r.terms_) {
        u.mono = u.mono * t.mono;
        u.coeff = F.mul(u.coeff, t.coeff);
    }
    // Multiplication by a fixed monomial preserves the term order.
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o);
    if (order_ != o.order_) return *this * o.reordered(order_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const PrimeField& F = ring_->field();
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back(Term{a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(acc), order_);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Poly Poly::minus_scaled_shifted(const Poly& g, std::uint32_t c, const Monomial& m) const {
    const PrimeField& F = ring_->field();
    Poly r = zero(ring_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        int cmp = order_.compare(terms_[i].mono, gm);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(Term{gm, F.neg(F.mul(g.terms_[j].coeff, c))});
            ++j;
        } else {
            std::uint32_t s = F.sub(terms_[i].coeff, F.mul(g.terms_[j].coeff, c));
            if (s != 0) r.terms_.push_back(Term{terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        r.terms_.push_back(Term{g.terms_[j].mono * m, F.neg(F.mul(g.terms_[j].coeff, c))});
    return r;
}

Poly Poly::partial_derivative(int var) const {
    const PrimeField& F = ring_->field();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::uint16_t e = t.mono.exponent(var);
        if (e == 0) continue;
        std::uint32_t c = F.mul(t.coeff, F.from_int(e));
        if (c == 0) continue;  // exponent divisible by the characteristic
        Monomial m = t.mono;
        m.set_exponent(var, static_cast<std::uint16_t>(e - 1));
        out.push_back(Term{m, c});
    }
    return from_terms(ring_, std::move(out), order_);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    const PrimeField& F = ring_->field();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        long long c = F.lift_symmetric(t.coeff);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        bool printed_coeff = false;
        if (a != 1 || t.mono.is_constant()) {
            os << a;
            printed_coeff = true;
        }
        bool first_var = true;
        for (int i = 0; i < ring_->nvars(); ++i) {
            std::uint16_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << ring_->var(i);
            if (e > 1) os << "^" << e;
            first_var = false;
            printed_coeff = printed_coeff || true;
        }
        first = false;
    }
    return os.str();
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!ring_->same_as(*o.ring_)) return false;
    if (order_ != o.order_) return *this == o.reordered(order_);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

namespace {

void enumerate_monomials(int nvars, int var, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.set_exponent(var, static_cast<std::uint16_t>(remaining));
        out.push_back(cur);
        cur.set_exponent(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set_exponent(var, static_cast<std::uint16_t>(e));
        enumerate_monomials(nvars, var + 1, remaining - e, cur, out);
    }
    cur.set_exponent(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    enumerate_monomials(nvars, 0, d, cur, out);
    TermOrder grevlex = TermOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&grevlex](const Monomial& a, const Monomial& b) { return grevlex.greater(a, b); });
    return out;
}

Poly euler_derivative_sum(const Poly& f) {
    Poly acc = Poly::zero(f.ring(), f.order());
    for (int i = 0; i < f.ring()->nvars(); ++i) {
        Monomial xi(f.ring()->nvars());
        xi.set_exponent(i, 1);
        acc = acc + f.partial_derivative(i).times_term(Term{xi, 1});
    }
    return acc;
}

std::uint64_t hash_polys(const std::vector<Poly>& polys) {
    // FNV-1a over a canonical textual form.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const Poly& p : polys) {
        if (p.ring()) mix(std::to_string(p.ring()->field().modulus()));
        mix(p.to_string());
        mix(";");
    }
    return h;
}

std::string digest_string(std::uint64_t h) {
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace segrecalc
