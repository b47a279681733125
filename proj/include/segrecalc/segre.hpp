#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segrecalc/idealcalc.hpp"

namespace segrecalc {

// Generalized binomial coefficient C(top, k) for integer top of any sign
// (k < 0 gives 0). Exact integer arithmetic.
long long binomial(long long top, long long k);

// Formal rational-equivalence class in P^n: degs[k] is the degree of the
// dimension-k piece. Entries may be negative.
struct AmbientClass {
    int ambient = 0;
    std::vector<long long> degs;  // size ambient+1, index = dimension

    static AmbientClass zero(int ambient_dim) {
        return AmbientClass{ambient_dim,
                            std::vector<long long>(static_cast<std::size_t>(ambient_dim) + 1, 0)};
    }

    AmbientClass operator+(const AmbientClass& o) const;
    bool operator==(const AmbientClass& o) const {
        return ambient == o.ambient && degs == o.degs;
    }
    std::string to_string() const;
};

// Cap with c(O(dH))^e: out[k] = sum_{j>=k} C(e, j-k) d^{j-k} in[j].
// e may be negative (inverse Chern classes) via generalized binomials.
AmbientClass chern_mult(const AmbientClass& a, long long d, long long e);
// Negates the codimension-i piece by (-1)^i.
AmbientClass dual(const AmbientClass& a);
// Divides the codimension-i piece by (1+dH)^i, expanded and truncated.
AmbientClass tensor(const AmbientClass& a, long long d);

// Push-forward Segre class of Z in P^n: s[k] = deg s(Z,P^n)_k for
// k = 0..z_dim. z_dim = -1 encodes the empty scheme (empty vector s).
struct SegreClassVector {
    int ambient = 0;
    int z_dim = -1;
    std::vector<long long> s;
    int gen_degree = 0;
    std::uint64_t seed = 0;
    int trials = 0;

    long long at(int k) const {
        return (k >= 0 && k <= z_dim) ? s[static_cast<std::size_t>(k)] : 0;
    }
    AmbientClass to_ambient_class() const;
    std::string to_string() const;
    bool same_class(const SegreClassVector& o) const {
        return ambient == o.ambient && z_dim == o.z_dim && s == o.s;
    }
};

// p random field-combinations of the spanning set {m * f_i} of the degree-d
// graded piece of the ideal; reproducible from the seed.
struct LinearSystemSample {
    Ideal source;
    int degree;
    int count;
    std::uint64_t seed;
    std::size_t spanning_size;
    std::vector<std::vector<std::uint32_t>> coefficients;  // rows = samples
    std::vector<Poly> elements;
};

LinearSystemSample general_elements(const Ideal& ideal, int d, int count, std::uint64_t seed);

// Residual degree: J = ideal of p general degree-d elements, R = J : I^∞,
// r = degree of the (n-p)-dimensional part of R (0 when dim R < n-p).
// Dimension anomalies trigger reseeds, then a genericity_error.
struct ResidualResult {
    long long degree = 0;
    Ideal residual;
    std::vector<std::uint64_t> seeds_used;
};

ResidualResult residual_degree(const Ideal& ideal, int p, int d, std::uint64_t seed);

// The central computation: solves for s[k], k = z_dim..0, from the residual
// counts via d^p = r_p + sum_j C(p, j-m) d^{j-m} s[j] with m = n-p. The whole
// solve runs `trials` times on derived seeds; disagreement is an error.
SegreClassVector segre_class(const Ideal& ideal, std::optional<int> d = std::nullopt,
                             int trials = 2, std::uint64_t seed = 0);

// Dimension-(n-p) degree of c(O(dH))^p ∩ s.
long long contribution(const SegreClassVector& s, int p, int d);

// Sum over the points of Z of the multiplicity of P^n along Z there;
// requires a 0-dimensional Z.
long long hilbert_samuel_sum(const Ideal& ideal, std::uint64_t seed = 0, int trials = 2);

}  // namespace segrecalc
