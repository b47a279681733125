#include "segrecalc/io.hpp"

#include <fstream>
#include <sstream>

#include "segrecalc/errors.hpp"
#include "segrecalc/parse.hpp"

namespace segrecalc {

const Poly& IdealFile::single_generator() const {
    if (generators.size() != 1)
        throw input_error("this command needs exactly one generator, file has " +
                          std::to_string(generators.size()));
    return generators.front();
}

namespace {

std::string strip_comment(const std::string& line) {
    std::size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Header: ring <prime> [v1,v2,...]
void parse_header(const std::string& line, IdealFile& file) {
    std::istringstream is(line);
    std::string keyword;
    is >> keyword;
    if (keyword != "ring") throw input_error("ideal file must start with a 'ring' header line");
    long long prime = 0;
    if (!(is >> prime) || prime <= 1)
        throw input_error("ring header needs a prime modulus");
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
        throw input_error("ring header needs a variable list like [x,y,z]");
    std::string inner = rest.substr(1, rest.size() - 2);
    std::vector<std::string> vars;
    std::istringstream vs(inner);
    std::string name;
    while (std::getline(vs, name, ',')) {
        name = trim(name);
        if (name.empty()) throw input_error("empty variable name in ring header");
        vars.push_back(name);
    }
    if (vars.empty()) throw input_error("ring header declares no variables");
    file.modulus = static_cast<std::uint32_t>(prime);
    file.vars = std::move(vars);
}

}  // namespace

IdealFile parse_ideal_file(const std::string& text, std::optional<std::uint32_t> prime_override) {
    IdealFile file;
    std::istringstream is(text);
    std::string line;
    bool have_header = false;
    std::string body;
    while (std::getline(is, line)) {
        std::string stripped = trim(strip_comment(line));
        if (stripped.empty()) continue;
        if (!have_header) {
            parse_header(stripped, file);
            have_header = true;
        } else {
            body += stripped;
            body += "\n";
        }
    }
    if (!have_header) throw input_error("ideal file has no 'ring' header");
    if (prime_override) file.modulus = *prime_override;
    file.ring = PolyRing::make(file.modulus, file.vars);

    // Generators separated by commas or newlines.
    std::string chunk;
    auto flush = [&file, &chunk]() {
        std::string g = trim(chunk);
        chunk.clear();
        if (g.empty()) return;
        Poly p = parse_poly(g, file.ring);
        if (!p.is_homogeneous())
            throw input_error("generator '" + g + "' is not homogeneous");
        file.generators.push_back(std::move(p));
    };
    for (char ch : body) {
        if (ch == ',' || ch == '\n')
            flush();
        else
            chunk += ch;
    }
    flush();
    if (file.generators.empty()) throw input_error("ideal file declares no generators");
    return file;
}

IdealFile load_ideal_file(const std::string& path, std::optional<std::uint32_t> prime_override) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal_file(buffer.str(), prime_override);
}

nlohmann::json segre_to_json(const SegreClassVector& s, std::uint32_t modulus) {
    nlohmann::json j;
    j["command"] = "compute";
    j["modulus"] = modulus;
    j["ambient"] = s.ambient;
    j["dim"] = s.z_dim;
    j["d"] = s.gen_degree;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    nlohmann::json vec = nlohmann::json::object();
    for (int k = 0; k <= s.z_dim; ++k) vec[std::to_string(k)] = s.s[static_cast<std::size_t>(k)];
    j["segre"] = vec;
    return j;
}

nlohmann::json report_to_json(const VerificationReport& report, std::uint32_t modulus) {
    nlohmann::json j;
    j["command"] = "verify";
    j["kind"] = report.theorem;
    j["modulus"] = modulus;
    j["input_digest"] = report.input_digest;
    j["seeds"] = report.seeds;
    j["pass"] = report.pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["details"] = c.details;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["data"] = report.data;
    return j;
}

nlohmann::json csm_to_json(const CsmResult& result, int ambient, int degree,
                           std::uint32_t modulus, std::uint64_t seed, int trials) {
    nlohmann::json j;
    j["command"] = "csm";
    j["modulus"] = modulus;
    j["ambient"] = ambient;
    j["degree"] = degree;
    j["seed"] = seed;
    j["trials"] = trials;
    nlohmann::json vec = nlohmann::json::object();
    for (int k = 0; k <= ambient; ++k) vec[std::to_string(k)] = result.csm.degs[static_cast<std::size_t>(k)];
    j["csm"] = vec;
    j["euler"] = result.euler;
    j["char_p_caveat"] = result.char_p_caveat;
    return j;
}

nlohmann::json error_to_json(int code, const std::string& kind, const std::string& message) {
    nlohmann::json j;
    j["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
    return j;
}

std::string segre_to_text(const SegreClassVector& s, std::uint32_t modulus) {
    std::ostringstream os;
    os << "modulus = " << modulus << "\n";
    os << "ambient = " << s.ambient << "\n";
    os << "dim = " << s.z_dim << "\n";
    os << "d = " << s.gen_degree << "\n";
    os << "seed = " << s.seed << "\n";
    os << "trials = " << s.trials << "\n";
    os << "segre = " << s.to_string() << "\n";
    return os.str();
}

namespace {

void require_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw input_error(std::string("report JSON is missing '") + key + "'");
}

}  // namespace

void validate_segre_json(const nlohmann::json& j) {
    for (const char* key : {"command", "modulus", "ambient", "dim", "d", "seed", "trials", "segre"})
        require_field(j, key);
    if (!j["segre"].is_object()) throw input_error("'segre' must be a dimension-indexed object");
    int dim = j["dim"].get<int>();
    for (int k = 0; k <= dim; ++k)
        if (!j["segre"].contains(std::to_string(k)))
            throw input_error("'segre' is missing dimension " + std::to_string(k));
}

void validate_report_json(const nlohmann::json& j) {
    for (const char* key : {"command", "kind", "modulus", "input_digest", "seeds", "pass",
                            "checks", "data"})
        require_field(j, key);
    if (!j["checks"].is_array()) throw input_error("'checks' must be an array");
    for (const auto& c : j["checks"])
        for (const char* key : {"name", "status", "details"})
            if (!c.contains(key))
                throw input_error(std::string("check record is missing '") + key + "'");
    if (!j["data"].is_object()) throw input_error("'data' must be an object");
}

}  // namespace segrecalc
