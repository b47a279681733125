#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "segrecalc/linalg.hpp"
#include "segrecalc/segre.hpp"

namespace segrecalc {

enum class CheckStatus { pass, fail, vacuous };
const char* to_string(CheckStatus status);

struct CheckRecord {
    std::string name;
    CheckStatus status;
    std::string details;
};

// Structured evidence for one theorem check: reproducible from
// (input, seed); pass is the conjunction of all non-vacuous checks.
struct VerificationReport {
    std::string theorem;
    std::string input_digest;
    std::vector<std::uint64_t> seeds;
    bool pass = false;
    std::vector<CheckRecord> checks;
    std::map<std::string, std::string> data;
    double elapsed_ms = 0;  // reported in text output only

    void add_check(const std::string& name, bool ok, const std::string& details);
    void add_vacuous(const std::string& name, const std::string& details);
    void finalize();

    std::string to_text() const;
};

// Hypersurface V(F) in P^n; construction validates that F is nonzero,
// homogeneous, and that deg F is not divisible by the characteristic
// (otherwise Jacobian ideals silently degenerate).
struct HypersurfaceInput {
    Poly f;
    int degree = 0;
};

HypersurfaceInput make_hypersurface(Poly f);

// n+1 general cuts: equal radicals and equal Segre classes.
VerificationReport verify_main_a(const Ideal& ideal, int d, std::uint64_t seed, int trials = 3);

// n general cuts: the extraneous locus S = sat(J'', I) is disjoint from Z,
// and excising it leaves a scheme with the radical and Segre class of Z.
VerificationReport verify_main_b(const Ideal& ideal, int d, std::uint64_t seed, int trials = 3);

// n-c general cuts: residual dimension <= c, residual meets Z in dimension
// < c, and the Segre classes agree above dimension c.
VerificationReport verify_b_prime(const Ideal& ideal, int d, int c, std::uint64_t seed,
                                  int trials = 3);

// Subscheme cut out by F and all its partial derivatives.
Ideal singular_scheme(const HypersurfaceInput& x);

// Seeded random invertible coordinate change followed by setting the last
// variable to zero; the result lives in a ring with one fewer variable.
Ideal restrict_to_hyperplane(const Ideal& ideal, std::uint64_t seed);
Ideal restrict_with_matrix(const Ideal& ideal, const FieldMatrix& m);
Poly restrict_poly_with_matrix(const Poly& f, const FieldMatrix& m);

// Compares Sing(H ∩ X) with H ∩ Sing(X) inside H ≅ P^{n-1}: equal radicals,
// equal Segre classes, and the hyperplane shift law against s(Sing X, P^n).
VerificationReport verify_segre_bertini(const HypersurfaceInput& x, std::uint64_t seed,
                                        int trials = 3);

// Chern-Schwartz-MacPherson class of the hypersurface, assembled from the
// Segre classes of X and of its singularity subscheme:
//   c_SM(X) = c(T P^n) ∩ ( s(X) + c(O(e))^{-1} ∩ ( dual(s(Sing X)) ⊗ O(e) ) ).
// The dimension-0 degree plays the role of the Euler characteristic; over
// GF(p) this is flagged as heuristic rather than topological.
struct CsmResult {
    AmbientClass csm;
    long long euler = 0;
    bool char_p_caveat = true;
};

CsmResult csm_hypersurface(const HypersurfaceInput& x, std::uint64_t seed = 0, int trials = 2);

}  // namespace segrecalc
