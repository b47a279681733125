#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "segrecalc/idealcalc.hpp"
#include "segrecalc/segre.hpp"
#include "segrecalc/theorems.hpp"

namespace segrecalc {

// Ideal file format:
//   line 1:  ring <prime> [v1,v2,...]
//   then generators separated by commas or newlines; '#' starts a comment.
// Hypersurface commands require exactly one generator.
struct IdealFile {
    std::uint32_t modulus = 0;
    std::vector<std::string> vars;
    RingPtr ring;
    std::vector<Poly> generators;

    Ideal ideal() const { return Ideal(ring, generators); }
    const Poly& single_generator() const;
};

IdealFile parse_ideal_file(const std::string& text,
                           std::optional<std::uint32_t> prime_override = std::nullopt);
IdealFile load_ideal_file(const std::string& path,
                          std::optional<std::uint32_t> prime_override = std::nullopt);

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 0;  // 0 = per-command default (2 for compute-style, 3 for verify-style)
    std::optional<std::uint32_t> prime;
    std::optional<int> degree;
    bool json = false;
    int c = 0;  // b-prime parameter

    int trials_or(int fallback) const { return trials > 0 ? trials : fallback; }
};

// JSON serializations. Wall-clock timings are deliberately excluded so that
// identical (file, config) runs emit byte-identical JSON.
nlohmann::json segre_to_json(const SegreClassVector& s, std::uint32_t modulus);
nlohmann::json report_to_json(const VerificationReport& report, std::uint32_t modulus);
nlohmann::json csm_to_json(const CsmResult& result, int ambient, int degree,
                           std::uint32_t modulus, std::uint64_t seed, int trials);
nlohmann::json error_to_json(int code, const std::string& kind, const std::string& message);

std::string segre_to_text(const SegreClassVector& s, std::uint32_t modulus);

// Schema validation used by the round-trip tests: throws input_error when a
// required field is missing or has the wrong shape.
void validate_report_json(const nlohmann::json& j);
void validate_segre_json(const nlohmann::json& j);

}  // namespace segrecalc
