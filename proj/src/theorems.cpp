#include "segrecalc/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "segrecalc/errors.hpp"
#include "segrecalc/rng.hpp"

namespace segrecalc {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string seq_to_string(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
    }
    return "?";
}

void VerificationReport::add_check(const std::string& name, bool ok, const std::string& details) {
    checks.push_back(CheckRecord{name, ok ? CheckStatus::pass : CheckStatus::fail, details});
}

void VerificationReport::add_vacuous(const std::string& name, const std::string& details) {
    checks.push_back(CheckRecord{name, CheckStatus::vacuous, details});
}

void VerificationReport::finalize() {
    pass = true;
    for (const CheckRecord& c : checks)
        if (c.status == CheckStatus::fail) pass = false;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "theorem = " << theorem << "\n";
    os << "input = " << input_digest << "\n";
    os << "seeds =";
    for (std::uint64_t s : seeds) os << " " << s;
    os << "\n";
    for (const CheckRecord& c : checks)
        os << "check " << c.name << " = " << to_string(c.status)
           << (c.details.empty() ? "" : "  # " + c.details) << "\n";
    for (const auto& [k, v] : data) os << "data " << k << " = " << v << "\n";
    os << "elapsed_ms = " << elapsed_ms << "\n";
    os << "pass = " << (pass ? "true" : "false") << "\n";
    return os.str();
}

HypersurfaceInput make_hypersurface(Poly f) {
    if (f.is_zero()) throw input_error("hypersurface polynomial is zero");
    if (!f.is_homogeneous()) throw input_error("hypersurface polynomial is not homogeneous");
    const int e = f.degree();
    const std::uint32_t p = f.ring()->field().modulus();
    if (static_cast<std::uint32_t>(e) % p == 0)
        throw characteristic_error("degree " + std::to_string(e) +
                                   " is divisible by the characteristic " + std::to_string(p) +
                                   "; Jacobian data would be corrupted");
    return HypersurfaceInput{std::move(f), e};
}

Ideal singular_scheme(const HypersurfaceInput& x) {
    std::vector<Poly> gens;
    gens.push_back(x.f);
    for (int i = 0; i < x.f.ring()->nvars(); ++i) gens.push_back(x.f.partial_derivative(i));
    return Ideal(x.f.ring(), std::move(gens));
}

Poly restrict_poly_with_matrix(const Poly& f, const FieldMatrix& m) {
    std::vector<Poly> changed = linear_change({f}, m);
    RingPtr small = f.ring()->without_last_var();
    const int last = f.ring()->nvars() - 1;
    std::vector<Term> keep;
    for (const Term& t : changed.front().terms()) {
        if (t.mono.exponent(last) != 0) continue;
        Monomial mm(small->nvars());
        for (int i = 0; i < small->nvars(); ++i) mm.set_exponent(i, t.mono.exponent(i));
        keep.push_back(Term{mm, t.coeff});
    }
    return Poly::from_terms(small, std::move(keep));
}

Ideal restrict_with_matrix(const Ideal& ideal, const FieldMatrix& m) {
    RingPtr small = ideal.ring()->without_last_var();
    std::vector<Poly> out;
    for (const Poly& g : ideal.generators()) {
        Poly r = restrict_poly_with_matrix(g, m);
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    return Ideal(small, std::move(out));
}

Ideal restrict_to_hyperplane(const Ideal& ideal, std::uint64_t seed) {
    if (ideal.ring()->nvars() < 2)
        throw input_error("hyperplane restriction needs an ambient P^n with n >= 1");
    Rng rng(derive_seed(seed, {0x48f9aULL}));
    FieldMatrix m =
        FieldMatrix::random_invertible(ideal.ring()->field(), ideal.ring()->nvars(), rng);
    return restrict_with_matrix(ideal, m);
}

VerificationReport verify_main_a(const Ideal& ideal, int d, std::uint64_t seed, int trials) {
    Stopwatch clock;
    VerificationReport report;
    report.theorem = "main-a";
    report.input_digest = ideal.digest();
    report.seeds = {seed};

    const int n = ideal.ring()->nvars() - 1;
    LinearSystemSample sample = general_elements(ideal, d, n + 1, derive_seed(seed, {0xa0ULL}));
    Ideal cut(ideal.ring(), sample.elements);
    report.data["cut_count"] = std::to_string(n + 1);
    report.data["d"] = std::to_string(d);

    report.add_check("radical_equality", equal_radicals(cut, ideal),
                     "supports of the cut and input schemes agree");

    SegreClassVector s_input = segre_class(ideal, d, trials, derive_seed(seed, {0xa1ULL}));
    SegreClassVector s_cut = segre_class(cut, d, trials, derive_seed(seed, {0xa2ULL}));
    report.data["segre_input"] = s_input.to_string();
    report.data["segre_cut"] = s_cut.to_string();
    report.add_check("segre_equality", s_input.same_class(s_cut),
                     s_input.to_string() + " vs " + s_cut.to_string());

    report.finalize();
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport verify_main_b(const Ideal& ideal, int d, std::uint64_t seed, int trials) {
    Stopwatch clock;
    VerificationReport report;
    report.theorem = "main-b";
    report.input_digest = ideal.digest();
    report.seeds = {seed};

    const int n = ideal.ring()->nvars() - 1;
    LinearSystemSample sample = general_elements(ideal, d, n, derive_seed(seed, {0xb0ULL}));
    Ideal cut(ideal.ring(), sample.elements);
    report.data["cut_count"] = std::to_string(n);
    report.data["d"] = std::to_string(d);

    Ideal extraneous = saturate(cut, ideal).first;
    HilbertData hd_ex = hilbert(extraneous);
    report.data["excised_projdim"] = std::to_string(hd_ex.proj_dimension);
    report.data["excised_degree"] = std::to_string(hd_ex.degree);

    HilbertData hd_meet = hilbert(ideal_sum(extraneous, ideal));
    report.add_check("excision_disjoint", hd_meet.proj_dimension == -1,
                     "dim(V(S) ∩ V(I)) = " + std::to_string(hd_meet.proj_dimension));

    Ideal excised = extraneous.is_unit_ideal() ? cut : saturate(cut, extraneous).first;
    report.data["excised_equals_input"] = excised.equals(ideal) ? "true" : "false";

    report.add_check("radical_equality", equal_radicals(excised, ideal),
                     "supports of the excised cut and input schemes agree");

    SegreClassVector s_input = segre_class(ideal, d, trials, derive_seed(seed, {0xb1ULL}));
    int d_excised = std::max(d, excised.max_generator_degree());
    SegreClassVector s_excised =
        segre_class(excised, d_excised, trials, derive_seed(seed, {0xb2ULL}));
    report.data["segre_input"] = s_input.to_string();
    report.data["segre_excised"] = s_excised.to_string();
    report.add_check("segre_equality", s_input.same_class(s_excised),
                     s_input.to_string() + " vs " + s_excised.to_string());

    report.finalize();
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport verify_b_prime(const Ideal& ideal, int d, int c, std::uint64_t seed,
                                  int trials) {
    Stopwatch clock;
    const int n = ideal.ring()->nvars() - 1;
    HilbertData hd_input = hilbert(ideal);
    if (hd_input.proj_dimension < 0) throw input_error("b-prime requires a nonempty scheme");
    const int codim = n - hd_input.proj_dimension;
    if (c < 0 || c > n - codim)
        throw input_error("b-prime requires 0 <= c <= n - codim = " + std::to_string(n - codim) +
                          " (got c = " + std::to_string(c) + ")");

    VerificationReport report;
    report.theorem = "b-prime";
    report.input_digest = ideal.digest();
    report.seeds = {seed};
    report.data["c"] = std::to_string(c);
    report.data["cut_count"] = std::to_string(n - c);
    report.data["d"] = std::to_string(d);

    LinearSystemSample sample = general_elements(ideal, d, n - c, derive_seed(seed, {0xc0ULL}));
    Ideal cut(ideal.ring(), sample.elements);

    Ideal residual = saturate(cut, ideal).first;
    HilbertData hd_res = hilbert(residual);
    report.data["residual_projdim"] = std::to_string(hd_res.proj_dimension);
    report.data["residual_degree"] = std::to_string(hd_res.degree);
    report.add_check("residual_dimension", hd_res.proj_dimension <= c,
                     "dim S = " + std::to_string(hd_res.proj_dimension) +
                         " <= c = " + std::to_string(c));

    HilbertData hd_meet = hilbert(ideal_sum(residual, ideal));
    report.add_check("residual_meets_input", hd_meet.proj_dimension < c,
                     "dim(S ∩ Z) = " + std::to_string(hd_meet.proj_dimension) +
                         " < c = " + std::to_string(c));

    HilbertData hd_cut = hilbert(cut);
    const int kmax = std::max(hd_input.proj_dimension, hd_cut.proj_dimension);
    if (kmax <= c) {
        report.add_vacuous("segre_above_c",
                           "no dimensions above c = " + std::to_string(c) + " to compare");
    } else {
        SegreClassVector s_input = segre_class(ideal, d, trials, derive_seed(seed, {0xc1ULL}));
        SegreClassVector s_cut = segre_class(cut, d, trials, derive_seed(seed, {0xc2ULL}));
        report.data["segre_input"] = s_input.to_string();
        report.data["segre_cut"] = s_cut.to_string();
        bool ok = true;
        std::ostringstream os;
        for (int k = c + 1; k <= kmax; ++k) {
            bool eq = s_cut.at(k) == s_input.at(k);
            ok = ok && eq;
            if (k > c + 1) os << ", ";
            os << "k=" << k << ": " << s_cut.at(k) << (eq ? " == " : " != ") << s_input.at(k);
            report.data["segre_k_" + std::to_string(k)] =
                std::to_string(s_cut.at(k)) + (eq ? " == " : " != ") + std::to_string(s_input.at(k));
        }
        report.add_check("segre_above_c", ok, os.str());
    }

    report.finalize();
    report.elapsed_ms = clock.ms();
    return report;
}

VerificationReport verify_segre_bertini(const HypersurfaceInput& x, std::uint64_t seed,
                                        int trials) {
    Stopwatch clock;
    const RingPtr& ring = x.f.ring();
    const int n = ring->nvars() - 1;
    if (n < 2) throw input_error("Segre-Bertini check needs an ambient P^n with n >= 2");

    VerificationReport report;
    report.theorem = "segre-bertini";
    report.input_digest = digest_string(hash_polys({x.f}));
    report.seeds = {seed};
    report.data["hypersurface_degree"] = std::to_string(x.degree);

    Ideal sing = singular_scheme(x);
    HilbertData hd_sing = hilbert(sing);
    report.data["sing_projdim"] = std::to_string(hd_sing.proj_dimension);

    // One hyperplane (one coordinate change) shared by both sides.
    Rng rng(derive_seed(seed, {0xd0ULL}));
    FieldMatrix m = FieldMatrix::random_invertible(ring->field(), ring->nvars(), rng);
    Poly f_bar = restrict_poly_with_matrix(x.f, m);
    for (int attempt = 0; f_bar.is_zero(); ++attempt) {
        if (attempt >= 100) throw genericity_error("hyperplane restriction of F kept vanishing");
        m = FieldMatrix::random_invertible(ring->field(), ring->nvars(), rng);
        f_bar = restrict_poly_with_matrix(x.f, m);
    }

    Ideal cut_sing = restrict_with_matrix(sing, m);            // H ∩ Sing(X)
    Ideal sing_cut = singular_scheme(make_hypersurface(f_bar));  // Sing(H ∩ X)

    report.add_check("radical_equality", equal_radicals(cut_sing, sing_cut),
                     "supports of H ∩ Sing(X) and Sing(H ∩ X) agree");

    HilbertData hd_a = hilbert(cut_sing);
    HilbertData hd_b = hilbert(sing_cut);
    report.data["cut_sing_projdim"] = std::to_string(hd_a.proj_dimension);
    report.data["sing_cut_projdim"] = std::to_string(hd_b.proj_dimension);

    SegreClassVector s_a = segre_class(cut_sing, std::nullopt, trials, derive_seed(seed, {0xd1ULL}));
    SegreClassVector s_b = segre_class(sing_cut, std::nullopt, trials, derive_seed(seed, {0xd2ULL}));
    report.data["segre_cut_sing"] = s_a.to_string();
    report.data["segre_sing_cut"] = s_b.to_string();
    report.add_check("segre_equality", s_a.same_class(s_b),
                     s_a.to_string() + " vs " + s_b.to_string());

    if (hd_sing.proj_dimension >= 1) {
        SegreClassVector s_sing =
            segre_class(sing, std::nullopt, trials, derive_seed(seed, {0xd3ULL}));
        report.data["segre_sing"] = s_sing.to_string();
        bool ok = true;
        std::ostringstream os;
        for (int k = 0; k <= hd_sing.proj_dimension - 1; ++k) {
            bool eq = s_b.at(k) == s_sing.at(k + 1);
            ok = ok && eq;
            if (k) os << ", ";
            os << "k=" << k << ": " << s_b.at(k) << (eq ? " == " : " != ") << s_sing.at(k + 1);
        }
        report.add_check("shift_law", ok, os.str());
    } else {
        report.add_check("shift_law", hd_a.proj_dimension == -1 && hd_b.proj_dimension == -1,
                         "finite singular locus: both hyperplane sections must be empty");
    }

    report.finalize();
    report.elapsed_ms = clock.ms();
    return report;
}

CsmResult csm_hypersurface(const HypersurfaceInput& x, std::uint64_t seed, int trials) {
    const int n = x.f.ring()->nvars() - 1;
    const long long e = x.degree;

    SegreClassVector s_x = segre_class(Ideal(x.f.ring(), {x.f}), std::nullopt, trials,
                                       derive_seed(seed, {0xe0ULL}));
    AmbientClass total = s_x.to_ambient_class();

    Ideal sing = singular_scheme(x);
    if (hilbert(sing).proj_dimension >= 0) {
        SegreClassVector s_z =
            segre_class(sing, std::nullopt, trials, derive_seed(seed, {0xe1ULL}));
        AmbientClass milnor = chern_mult(tensor(dual(s_z.to_ambient_class()), e), e, -1);
        total = total + milnor;
    }

    CsmResult result;
    result.csm = chern_mult(total, 1, n + 1);
    result.euler = result.csm.degs.front();
    result.char_p_caveat = true;
    return result;
}

}  // namespace segrecalc
