#include "segrecalc/segre.hpp"

#include <algorithm>
#include <sstream>

#include "segrecalc/errors.hpp"
#include "segrecalc/rng.hpp"

namespace segrecalc {

long long binomial(long long top, long long k) {
    if (k < 0) return 0;
    long long c = 1;
    for (long long i = 0; i < k; ++i) c = c * (top - i) / (i + 1);
    return c;
}

AmbientClass AmbientClass::operator+(const AmbientClass& o) const {
    AmbientClass r = *this;
    for (std::size_t k = 0; k < degs.size(); ++k) r.degs[k] += o.degs[k];
    return r;
}

std::string AmbientClass::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < degs.size(); ++k) {
        if (k) os << ", ";
        os << degs[k];
    }
    os << "]";
    return os.str();
}

AmbientClass chern_mult(const AmbientClass& a, long long d, long long e) {
    AmbientClass out = AmbientClass::zero(a.ambient);
    for (int k = 0; k <= a.ambient; ++k) {
        long long acc = 0;
        long long dpow = 1;
        for (int j = k; j <= a.ambient; ++j) {
            acc += binomial(e, j - k) * dpow * a.degs[static_cast<std::size_t>(j)];
            dpow *= d;
        }
        out.degs[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

AmbientClass dual(const AmbientClass& a) {
    AmbientClass out = a;
    for (int k = 0; k <= a.ambient; ++k)
        if ((a.ambient - k) % 2 != 0)
            out.degs[static_cast<std::size_t>(k)] = -out.degs[static_cast<std::size_t>(k)];
    return out;
}

AmbientClass tensor(const AmbientClass& a, long long d) {
    AmbientClass out = AmbientClass::zero(a.ambient);
    for (int j = 0; j <= a.ambient; ++j) {
        long long piece = a.degs[static_cast<std::size_t>(j)];
        if (piece == 0) continue;
        long long codim = a.ambient - j;
        // piece / (1+dH)^codim, expanded: H^m picks up (-1)^m C(codim+m-1, m) d^m.
        long long dpow = 1;
        for (int m = 0; j - m >= 0; ++m) {
            long long coeff = (m % 2 == 0 ? 1 : -1) * binomial(codim + m - 1, m) * dpow;
            out.degs[static_cast<std::size_t>(j - m)] += coeff * piece;
            dpow *= d;
        }
    }
    return out;
}

AmbientClass SegreClassVector::to_ambient_class() const {
    AmbientClass out = AmbientClass::zero(ambient);
    for (int k = 0; k <= z_dim; ++k) out.degs[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
    return out;
}

std::string SegreClassVector::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= z_dim; ++k) {
        if (k) os << ", ";
        os << s[static_cast<std::size_t>(k)];
    }
    os << "]";
    return os.str();
}

LinearSystemSample general_elements(const Ideal& ideal, int d, int count, std::uint64_t seed) {
    if (count < 0) throw input_error("negative sample count");
    const int maxdeg = ideal.max_generator_degree();
    if (maxdeg < 0) throw input_error("cannot sample from the zero ideal");
    if (d < maxdeg)
        throw input_error("sampling degree " + std::to_string(d) +
                          " is below the maximum generator degree " + std::to_string(maxdeg));

    // Spanning set of the degree-d graded piece: every generator times every
    // monomial of complementary degree, in a fixed enumeration order.
    std::vector<Poly> spanning;
    for (const Poly& f : ideal.generators()) {
        for (const Monomial& m : monomials_of_degree(ideal.ring()->nvars(), d - f.degree()))
            spanning.push_back(f.times_term(Term{m, 1}));
    }

    LinearSystemSample sample{ideal, d, count, seed, spanning.size(), {}, {}};
    const PrimeField& field = ideal.ring()->field();
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100)
                throw genericity_error("failed to draw a nonzero linear-system element");
            std::vector<std::uint32_t> row(spanning.size());
            Poly elt = Poly::zero(ideal.ring());
            for (std::size_t c = 0; c < spanning.size(); ++c) {
                row[c] = field.random(rng);
                if (row[c] != 0) elt = elt + spanning[c].scaled(row[c]);
            }
            if (!elt.is_zero()) {
                sample.coefficients.push_back(std::move(row));
                sample.elements.push_back(std::move(elt));
                break;
            }
        }
    }
    return sample;
}

namespace {

constexpr int kResidualRetries = 3;  // reseeds after the first failed attempt

int codimension(const Ideal& ideal, const HilbertData& hd) {
    return ideal.ring()->nvars() - 1 - hd.proj_dimension;
}

long long int_pow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

ResidualResult residual_degree(const Ideal& ideal, int p, int d, std::uint64_t seed) {
    const int n = ideal.ring()->nvars() - 1;
    HilbertData hd = hilbert(ideal);
    if (hd.proj_dimension < 0) throw input_error("residual of an empty scheme");
    const int codim = codimension(ideal, hd);
    if (p < codim || p > n)
        throw input_error("residual count requires codim <= p <= n (got p=" + std::to_string(p) +
                          ", codim=" + std::to_string(codim) + ", n=" + std::to_string(n) + ")");

    std::vector<std::uint64_t> seeds_used;
    for (int attempt = 0; attempt <= kResidualRetries; ++attempt) {
        std::uint64_t attempt_seed =
            derive_seed(seed, {0x9e51d0a1ULL, static_cast<std::uint64_t>(attempt)});
        seeds_used.push_back(attempt_seed);
        LinearSystemSample sample = general_elements(ideal, d, p, attempt_seed);
        Ideal cut(ideal.ring(), sample.elements);
        Ideal residual = saturate(cut, ideal).first;
        HilbertData hr = hilbert(residual);
        if (hr.proj_dimension > n - p) continue;  // dimension anomaly: reseed
        long long r = hr.proj_dimension == n - p ? hr.degree : 0;
        return ResidualResult{r, std::move(residual), std::move(seeds_used)};
    }
    throw genericity_error("residual dimension stayed above " + std::to_string(n - p) +
                           " after " + std::to_string(kResidualRetries + 1) + " seeds");
}

SegreClassVector segre_class(const Ideal& ideal, std::optional<int> d_opt, int trials,
                             std::uint64_t seed) {
    if (trials < 1) throw input_error("trials must be >= 1");
    if (ideal.generator_count() == 0 || ideal.is_unit_ideal())
        throw input_error("Segre class requires a proper nonzero ideal");
    if (!ideal.has_homogeneous_generators())
        throw input_error("Segre class requires homogeneous generators");

    const int n = ideal.ring()->nvars() - 1;
    HilbertData hd = hilbert(ideal);

    SegreClassVector out;
    out.ambient = n;
    out.seed = seed;
    out.trials = trials;

    const int maxdeg = ideal.max_generator_degree();
    const int d = d_opt.value_or(maxdeg);
    if (d < maxdeg)
        throw input_error("degree " + std::to_string(d) +
                          " is below the maximum generator degree " + std::to_string(maxdeg));
    out.gen_degree = d;

    if (hd.proj_dimension < 0) return out;  // empty scheme: empty class

    const int z_dim = hd.proj_dimension;
    const int codim = n - z_dim;
    out.z_dim = z_dim;

    std::vector<std::vector<long long>> runs;
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t trial_seed = derive_seed(seed, {0x7a1a15ULL, static_cast<std::uint64_t>(trial)});
        std::vector<long long> s(static_cast<std::size_t>(z_dim) + 1, 0);
        for (int p = codim; p <= n; ++p) {
            const int m = n - p;
            ResidualResult res =
                residual_degree(ideal, p, d, derive_seed(trial_seed, {static_cast<std::uint64_t>(p)}));
            long long value = int_pow(d, p) - res.degree;
            long long dpow = d;
            for (int j = m + 1; j <= z_dim; ++j) {
                value -= binomial(p, j - m) * dpow * s[static_cast<std::size_t>(j)];
                dpow *= d;
            }
            s[static_cast<std::size_t>(m)] = value;
        }
        runs.push_back(std::move(s));
    }

    for (std::size_t t = 1; t < runs.size(); ++t) {
        if (runs[t] != runs[0]) {
            std::ostringstream os;
            os << "Segre class trials disagree:";
            for (std::size_t u = 0; u < runs.size(); ++u) {
                os << " trial" << u << "=[";
                for (std::size_t k = 0; k < runs[u].size(); ++k) {
                    if (k) os << ",";
                    os << runs[u][k];
                }
                os << "]";
            }
            throw genericity_error(os.str());
        }
    }

    out.s = runs.front();
    return out;
}

long long contribution(const SegreClassVector& s, int p, int d) {
    if (s.z_dim < 0) throw input_error("contribution of an empty class");
    const int codim = s.ambient - s.z_dim;
    if (p < codim || p > s.ambient)
        throw input_error("contribution requires codim <= p <= n");
    const int m = s.ambient - p;
    long long acc = 0;
    long long dpow = 1;
    for (int j = m; j <= s.z_dim; ++j) {
        acc += binomial(p, j - m) * dpow * s.at(j);
        dpow *= d;
    }
    return acc;
}

long long hilbert_samuel_sum(const Ideal& ideal, std::uint64_t seed, int trials) {
    HilbertData hd = hilbert(ideal);
    if (hd.proj_dimension != 0)
        throw input_error(hd.proj_dimension < 0
                              ? "multiplicity sum of an empty scheme"
                              : "multiplicity sum requires a 0-dimensional scheme");
    return segre_class(ideal, std::nullopt, trials, seed).s.front();
}

}  // namespace segrecalc
