// Acceptance runner: executes every acceptance criterion at its stated
// (exact) tolerance and prints one PASS/FAIL line per criterion. The process
// exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "segrecalc/io.hpp"
#include "segrecalc/parse.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"

using namespace segrecalc;
using catalog::make_ideal;

namespace {

int g_failures = 0;
bool g_section_ok = true;
std::vector<std::string> g_notes;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        g_section_ok = false;
        g_notes.push_back(what);
    }
}

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& body) {
    g_section_ok = true;
    g_notes.clear();
    try {
        body();
    } catch (const std::exception& e) {
        g_section_ok = false;
        g_notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d (%s): %s\n", number, label.c_str(),
                g_section_ok ? "PASS" : "FAIL");
    for (const std::string& note : g_notes) std::printf("    - %s\n", note.c_str());
    std::fflush(stdout);
    if (!g_section_ok) ++g_failures;
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

static void paper_worked_example() {
    auto start = std::chrono::steady_clock::now();

    Ideal paper = catalog::paper_ideal();
    SegreClassVector s = segre_class(paper, 3, 2, 0);
    expect(s.z_dim == 1, "dim Z = 1");
    expect(s.at(1) == 3, "s_1 = 3, got " + std::to_string(s.at(1)));
    expect(s.at(0) == -10, "s_0 = -10, got " + std::to_string(s.at(0)));

    long long contrib = contribution(s, 3, 3);
    expect(contrib == 17, "contribution(p=3,d=3) = 17, got " + std::to_string(contrib));

    ResidualResult r = residual_degree(paper, 3, 3, 1);
    expect(r.degree == 10, "residual count at p=3 is 10, got " + std::to_string(r.degree));
    expect(contrib + r.degree == 27, "17 + 10 = 27 (Bezout)");

    // the command-line front end reports the same numbers
    std::string file = run_cli::write_temp_file(
        "acceptance_paper.ideal",
        "ring 32003 [x,y,z,w]\nz^2, y*z, x*z, y^2*w - x^2*(x+w)\n");
    auto cli = run_cli::run(run_cli::cli_path() + " compute --json " + file);
    expect(cli.exit_code == 0, "compute exits 0");
    if (cli.exit_code == 0) {
        nlohmann::json j = nlohmann::json::parse(cli.output);
        expect(j["segre"]["1"] == 3 && j["segre"]["0"] == -10, "CLI segre {1:3, 0:-10}");
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 60.0, "runtime < 60 s (took " + std::to_string(secs) + ")");
}

static void hypersurface_closed_form() {
    struct Entry {
        RingPtr ring;
        const char* f;
    };
    const std::vector<Entry> entries = {
        {catalog::P2(), "x"},
        {catalog::P2(), "x^2"},
        {catalog::P2(), "x*y"},
        {catalog::P2(), "x^2 + y^2 + z^2"},
        {catalog::P2(), "y^2*z - x^3"},
        {catalog::P2(), "x^2*y"},
        {catalog::P3(), "x"},
        {catalog::P3(), "x^2*y"},
        {catalog::P3(), "x*y*z"},
        {catalog::P3(), "x^2*z - y^2*w"},
        {catalog::P3(), "x^3 + y^3 + z^3 + w^3"},
        {catalog::P3(), "x*y - z^2"},
    };
    for (const Entry& entry : entries) {
        Poly f = parse_poly(entry.f, entry.ring);
        const int n = entry.ring->nvars() - 1;
        const long long e = f.degree();
        SegreClassVector s = segre_class(Ideal(entry.ring, {f}), std::nullopt, 2, 11);
        expect(s.z_dim == n - 1, std::string(entry.f) + ": dimension n-1");
        for (int k = 0; k <= n - 1; ++k) {
            long long want = ((n - 1 - k) % 2 == 0 ? 1 : -1) * ipow(e, n - k);
            expect(s.at(k) == want, std::string(entry.f) + ": s[" + std::to_string(k) +
                                        "] = " + std::to_string(want) + ", got " +
                                        std::to_string(s.at(k)));
        }
    }
}

static void linear_subspace_closed_form() {
    for (RingPtr ring : {catalog::P1(), catalog::P2(), catalog::P3(), catalog::P4()}) {
        const int n = ring->nvars() - 1;
        for (int cut = 1; cut <= n; ++cut) {
            const int k = n - cut;
            std::vector<Poly> gens;
            for (int i = 0; i < cut; ++i) gens.push_back(Poly::variable(ring, i));
            SegreClassVector s = segre_class(Ideal(ring, gens), std::nullopt, 2, 19);
            expect(s.z_dim == k, "P^" + std::to_string(k) + " in P^" + std::to_string(n));
            for (int j = 0; j <= k; ++j) {
                long long want =
                    ((k - j) % 2 == 0 ? 1 : -1) * binomial(n - k - 1 + (k - j), k - j);
                expect(s.at(j) == want, "P^" + std::to_string(k) + " in P^" + std::to_string(n) +
                                            ": s[" + std::to_string(j) + "]");
            }
        }
    }
}

static void theorem_a_catalog() {
    const std::vector<std::uint64_t> seeds = {1001, 2002, 3003};
    for (const Ideal& ideal : catalog::verify_catalog()) {
        const int d = ideal.max_generator_degree();
        for (std::uint64_t seed : seeds) {
            VerificationReport r = verify_main_a(ideal, d, seed, 2);
            expect(r.pass, "main-a on " + ideal.digest() + " seed " + std::to_string(seed));
        }
    }
}

static void theorem_b_and_b_prime_catalog() {
    const std::vector<std::uint64_t> seeds = {1001, 2002, 3003};
    for (const Ideal& ideal : catalog::verify_catalog()) {
        const int d = ideal.max_generator_degree();
        for (std::uint64_t seed : seeds) {
            VerificationReport r = verify_main_b(ideal, d, seed, 2);
            expect(r.pass, "main-b on " + ideal.digest() + " seed " + std::to_string(seed));
        }
    }

    // the running example's witness: same support, same class, different scheme
    Ideal paper = catalog::paper_ideal();
    VerificationReport witness = verify_main_b(paper, 3, 404, 2);
    expect(witness.pass, "main-b on the running example");
    expect(witness.data.at("excised_equals_input") == "false",
           "excised scheme differs from the input as an ideal");
    expect(witness.data.at("segre_excised") == witness.data.at("segre_input"),
           "excised scheme has the same class");

    // every admissible c, two seeds each
    for (const Ideal& ideal : catalog::verify_catalog()) {
        const int n = ideal.ring()->nvars() - 1;
        const int d = ideal.max_generator_degree();
        const int z_dim = hilbert(ideal).proj_dimension;
        for (int c = 0; c <= z_dim; ++c) {
            for (std::uint64_t seed : {7007ull, 8008ull}) {
                VerificationReport r = verify_b_prime(ideal, d, c, seed, 2);
                expect(r.pass, "b-prime c=" + std::to_string(c) + " on " + ideal.digest() +
                                   " seed " + std::to_string(seed));
                (void)n;
            }
        }
    }
}

static void segre_bertini_catalog() {
    const std::vector<std::uint64_t> seeds = {111, 222, 333};
    const std::vector<HypersurfaceInput> positive = {
        catalog::surface_sing_line(),     catalog::surface_three_planes(),
        catalog::surface_double_plane(),  catalog::surface_cuspidal_line(),
        catalog::surface_nodal_cone(),
    };
    for (const HypersurfaceInput& x : positive) {
        for (std::uint64_t seed : seeds) {
            VerificationReport r = verify_segre_bertini(x, seed, 2);
            expect(r.pass, x.f.to_string() + " seed " + std::to_string(seed));
            for (const CheckRecord& c : r.checks)
                expect(c.status == CheckStatus::pass,
                       x.f.to_string() + ": check " + c.name + " not pass");
        }
    }

    // finite singular loci: both hyperplane sections must come out empty
    RingPtr P3 = catalog::P3();
    const std::vector<HypersurfaceInput> finite = {
        make_hypersurface(parse_poly("x*y - z^2", P3)),  // cone vertex
        catalog::nodal_cubic(),
        catalog::triangle_of_lines(),
    };
    for (const HypersurfaceInput& x : finite) {
        VerificationReport r = verify_segre_bertini(x, 555, 2);
        expect(r.pass, x.f.to_string() + " (finite singular locus)");
        expect(r.data.at("cut_sing_projdim") == "-1" && r.data.at("sing_cut_projdim") == "-1",
               x.f.to_string() + ": both sections empty");
    }
}

static void csm_euler_spot_checks() {
    expect(csm_hypersurface(catalog::smooth_cubic()).euler == 0, "smooth plane cubic: 0");
    expect(csm_hypersurface(catalog::nodal_cubic()).euler == 1, "nodal plane cubic: 1");
    expect(csm_hypersurface(catalog::cuspidal_cubic()).euler == 2, "cuspidal plane cubic: 2");

    struct Entry {
        HypersurfaceInput x;
        const char* label;
    };
    RingPtr P3 = catalog::P3();
    const std::vector<Entry> entries = {
        {catalog::smooth_conic(), "smooth conic"},
        {catalog::smooth_cubic(), "smooth cubic"},
        {catalog::nodal_cubic(), "nodal cubic"},
        {catalog::cuspidal_cubic(), "cuspidal cubic"},
        {catalog::triangle_of_lines(), "triangle"},
        {make_hypersurface(parse_poly("x*y - z^2", P3)), "quadric cone"},
        {make_hypersurface(parse_poly("x*w - y*z", P3)), "smooth quadric"},
        {catalog::surface_sing_line(), "surface singular along a line"},
    };
    for (const Entry& entry : entries) {
        CsmResult r = csm_hypersurface(entry.x);
        const int n = entry.x.f.ring()->nvars() - 1;
        expect(r.csm.degs[static_cast<std::size_t>(n - 1)] == entry.x.degree,
               std::string(entry.label) + ": top csm entry equals deg F");
    }
}

static void engine_oracles() {
    // membership vs graded linear algebra, probe degrees up to 8
    Rng rng(0xFEED);
    const std::vector<Ideal> ideals = {catalog::paper_ideal(), catalog::twisted_cubic(),
                                       catalog::plane_union_line(), catalog::fat_point_P2(),
                                       catalog::point_P2()};
    for (const Ideal& ideal : ideals) {
        const RingPtr& R = ideal.ring();
        for (int i = 0; i < 2; ++i) {  // members by construction
            Poly f = Poly::zero(R);
            for (const Poly& g : ideal.generators())
                f = f + g * oracles::random_homogeneous(R, rng, 8 - g.degree(), 3);
            expect(ideal_membership(f, ideal.generators()), "constructed member (engine)");
            expect(oracles::membership_bruteforce(f, ideal.generators()),
                   "constructed member (oracle)");
        }
        for (int d = 1; d <= 8; ++d) {  // verdict agreement on random probes
            Poly f = oracles::random_homogeneous(R, rng, d, 4);
            bool engine = ideal_membership(f, ideal.generators());
            bool oracle = oracles::membership_bruteforce(f, ideal.generators());
            expect(engine == oracle,
                   "membership verdict at degree " + std::to_string(d) + " on " + ideal.digest());
        }
    }

    // Hilbert series coefficients vs staircase counting, degrees 0..10
    for (const Ideal& ideal : catalog::verify_catalog()) {
        HilbertData hd = hilbert(ideal);
        for (int s = 0; s <= 10; ++s)
            expect(hilbert_series_coefficient(hd.numerator, ideal.ring()->nvars(), s) ==
                       oracles::staircase_count(ideal.groebner(), ideal.ring()->nvars(), s),
                   "Hilbert coefficient at degree " + std::to_string(s));
    }

    // reduced-basis uniqueness under 50 generator permutations and scalings
    Ideal paper = catalog::paper_ideal();
    const PrimeField& F = paper.ring()->field();
    auto dump = [](const GroebnerBasis& basis) {
        std::ostringstream os;
        for (const Poly& g : basis.generators()) os << g.to_string() << ";";
        return os.str();
    };
    std::string expected = dump(buchberger(paper.generators(), TermOrder::grevlex()));
    std::vector<Poly> gens = paper.generators();
    Rng shuffle_rng(0xABCD);
    for (int round = 0; round < 50; ++round) {
        for (std::size_t i = gens.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(shuffle_rng.below(i));
            std::swap(gens[i - 1], gens[j]);
        }
        std::vector<Poly> scaled;
        for (const Poly& g : gens) scaled.push_back(g.scaled(F.random_nonzero(shuffle_rng)));
        expect(dump(buchberger(scaled, TermOrder::grevlex())) == expected,
               "reduced basis identical under permutation/scaling");
    }
}

int main() {
    criterion(1, "paper worked example, exact", paper_worked_example);
    criterion(2, "hypersurface closed form", hypersurface_closed_form);
    criterion(3, "linear subspace closed form", linear_subspace_closed_form);
    criterion(4, "theorem main (a) on the catalog, 3 seeds", theorem_a_catalog);
    criterion(5, "theorem main (b) and (b') on the catalog", theorem_b_and_b_prime_catalog);
    criterion(6, "Segre-Bertini on singular hypersurfaces, 3 seeds", segre_bertini_catalog);
    criterion(7, "CSM / Euler spot checks", csm_euler_spot_checks);
    criterion(8, "engine oracles", engine_oracles);
    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    return g_failures;
}
