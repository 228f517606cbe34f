// gzhess: volumes of Gelfand-Zetlin faces, Hessenberg varieties and the
// permutohedron cube decomposition, in exact arithmetic.

#include "gzhess/checks.hpp"
#include "gzhess/face.hpp"
#include "gzhess/hessenberg.hpp"
#include "gzhess/kogan.hpp"
#include "gzhess/permutohedron.hpp"
#include "gzhess/pipeline.hpp"
#include "gzhess/schubert.hpp"
#include "gzhess/serialize.hpp"
#include "gzhess/tables.hpp"
#include "gzhess/tableau.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace gzhess;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 0;
    std::string h;
    std::string lambda;
    std::string face;
    std::string basis = "alpha";
    std::string method = "faces";
    std::string format = "text";
    std::string output;
    std::string suite = "all";
    std::uint64_t seed = 1;
    int which = 0;
    unsigned threads = 1;
    bool eval = false;
    bool check = false;
    bool positivity = false;
    bool verify = false;
    bool list_faces = false;
    bool dual = false;
    std::string w;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

void require_n(int n, int lo, int hi) {
    if (n < lo || n > hi) throw UsageError("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi));
}

std::vector<Rational> lambda_of(const RunConfig& cfg) {
    std::vector<Rational> lambda;
    if (cfg.lambda.empty()) {
        for (int i = 0; i < cfg.n; ++i) lambda.emplace_back(cfg.n - 1 - i);
        return lambda;
    }
    try {
        for (const auto& part : split(cfg.lambda, ',')) lambda.push_back(parse_rational(part));
    } catch (const std::exception&) {
        throw UsageError("--lambda must be a comma list of rationals");
    }
    if (static_cast<int>(lambda.size()) != cfg.n) throw UsageError("--lambda needs exactly n entries");
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (!(lambda[i] > lambda[i + 1])) throw UsageError("--lambda must be strictly decreasing");
    return lambda;
}

HessenbergFunction hess_of(const RunConfig& cfg) {
    if (cfg.h.empty()) throw UsageError("--h is required");
    try {
        auto h = HessenbergFunction::parse(cfg.h);
        if (h.size() < 2 || h.size() > 6) throw UsageError("h must have size 2..6");
        return h;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid --h: ") + e.what());
    }
}

Polynomial alpha_to_lambda(const Polynomial& p) {
    const int n = p.n();
    Polynomial out(Basis::Lambda, n);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(Basis::Lambda, n, c);
        for (int k = 0; k < n - 1; ++k) {
            Polynomial diff = Polynomial::variable(Basis::Lambda, n, k + 1) - Polynomial::variable(Basis::Lambda, n, k + 2);
            term = term * pow(diff, e[static_cast<std::size_t>(k)]);
        }
        out += term;
    }
    return out;
}

Polynomial in_basis(const Polynomial& alpha, const std::string& basis) {
    return basis == "lambda" ? alpha_to_lambda(alpha) : alpha;
}

Rational evaluate_alpha(const Polynomial& alpha, const std::vector<Rational>& lambda) {
    return alpha.evaluate(alpha_point(lambda));
}

int cmd_vol_gz(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg.n, 1, 7);
    const auto lambda = lambda_of(cfg);
    const Polynomial tableau_sum = face_volume(FaceDiagram::full(cfg.n));
    const Polynomial closed = gz_volume_closed_form(cfg.n);
    const bool agree = to_alpha_basis(closed) == tableau_sum;
    const Polynomial shown = cfg.basis == "lambda" ? closed : tableau_sum;
    if (cfg.format == "json") {
        Json j = {{"n", cfg.n}, {"volume", to_json(shown)}};
        if (cfg.eval) j["value"] = to_string(evaluate_alpha(tableau_sum, lambda));
        if (cfg.check) j["check"] = agree;
        out << j.dump(2) << "\n";
    } else if (cfg.eval) {
        out << to_string(evaluate_alpha(tableau_sum, lambda)) << "\n";
    } else {
        out << shown.str() << "\n";
    }
    if (cfg.check) {
        if (cfg.format != "json") out << (agree ? "check: closed form equals tableau sum" : "check: MISMATCH") << "\n";
        if (!agree) return kVerifyFailed;
    }
    return kOk;
}

int cmd_vol_face(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg.n, 1, 7);
    FaceDiagram f = FaceDiagram::full(cfg.n);
    try {
        f = FaceDiagram::parse(cfg.n, cfg.face);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid --face: ") + e.what());
    }
    const Polynomial vol = in_basis(face_volume(f), cfg.basis);
    const Integer count = count_tableaux(f);
    if (cfg.format == "json") {
        out << Json{{"face", f.str()}, {"volume", to_json(vol)}, {"tableaux", to_string(count)}, {"dimension", f.true_dimension()}}.dump(2)
            << "\n";
    } else {
        out << vol.str() << "\n" << "tableaux: " << to_string(count) << "\n";
    }
    return kOk;
}

int cmd_vol_hess(const RunConfig& cfg, std::ostream& out) {
    const auto h = hess_of(cfg);
    std::vector<std::pair<std::string, Polynomial>> results;
    if (cfg.method == "faces" || cfg.method == "all") results.emplace_back("faces", hess_volume_faces(h, cfg.threads));
    if (cfg.method == "derivative" || cfg.method == "all") results.emplace_back("derivative", hess_volume_derivative(h));
    if (cfg.method == "schubert" || cfg.method == "all") results.emplace_back("schubert", hess_volume_schubert(h, cfg.threads));
    bool agree = true;
    for (const auto& [name, p] : results) agree = agree && p == results.front().second;
    if (cfg.format == "json") {
        Json j = {{"h", h.values()}, {"dimension", hess_dimension(h)}};
        for (const auto& [name, p] : results) j[name] = to_json(in_basis(p, cfg.basis));
        if (cfg.method == "all") j["agree"] = agree;
        if (cfg.list_faces) {
            Json faces = Json::array();
            for (const auto& f : hess_face_decomposition(h, cfg.threads)) faces.push_back(f.str());
            j["faces"] = faces;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [name, p] : results) {
            if (results.size() > 1) out << name << ": ";
            out << in_basis(p, cfg.basis).str() << "\n";
        }
        if (cfg.method == "all") out << (agree ? "all three paths agree" : "paths DISAGREE") << "\n";
        if (cfg.list_faces)
            for (const auto& f : hess_face_decomposition(h, cfg.threads)) out << "face: " << f.str() << "\n";
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_hess_class(const RunConfig& cfg, std::ostream& out) {
    const auto h = hess_of(cfg);
    const SchubertExpansion cls = hess_class_schubert(h, cfg.threads);
    std::optional<PositivityReport> report;
    if (cfg.positivity) report = positivity_report(h, cfg.threads);
    if (cfg.format == "text") {
        out << cls.str() << "\n";
        if (report) out << "min a_w: " << to_string(report->min_coefficient) << (report->strictly_positive ? " (all >= 1)" : " (NOT all >= 1)") << "\n";
    } else {
        Json j = {{"h", h.values()}, {"class", to_json(cls)}};
        if (report) j["positivity"] = to_json(*report);
        out << j.dump(2) << "\n";
    }
    return kOk;
}

int cmd_decompose_perm(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg.n, 2, 6);
    const auto lambda = lambda_of(cfg);
    const auto entries = decompose_permutohedron(cfg.n, lambda);
    Json j = {{"n", cfg.n}, {"pieces", to_json(entries)}};
    bool ok = true;
    if (cfg.verify) {
        for (const auto& e : entries) ok = ok && e.cube_ok;
        Polynomial total(Basis::Alpha, cfg.n);
        for (const auto& e : entries) total += e.volume;
        const Rational sum = evaluate_alpha(total, lambda);
        j["volume_sum"] = to_string(sum);
        std::vector<long> integral;
        for (const auto& l : lambda)
            if (l.get_den() == 1 && l.get_num().fits_slong_p()) integral.push_back(l.get_num().get_si());
        if (integral.size() == lambda.size() && cfg.n <= 5) {
            const Rational oracle = perm_volume_oracle(integral);
            j["oracle_volume"] = to_string(oracle);
            ok = ok && oracle == sum;
        }
        j["verified"] = ok;
    }
    out << j.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_kogan(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg.n, 1, 6);
    const auto& groups = cfg.dual ? reduced_dual_kogan_faces(cfg.n, cfg.threads) : reduced_kogan_faces(cfg.n, cfg.threads);
    std::optional<Permutation> only;
    if (!cfg.w.empty()) {
        try {
            only = Permutation::parse(cfg.w);
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid --w: ") + e.what());
        }
        if (only->size() != cfg.n) throw UsageError("--w must be a permutation of size n");
    }
    for (const auto& [w, faces] : groups) {
        if (only && w != *only) continue;
        for (const auto& f : faces) {
            const KoganWord k = cfg.dual ? dual_kogan_word(f) : kogan_word(f);
            out << (f.edges().empty() ? "-" : f.str()) << " w=" << k.w.str() << " reduced=" << (k.reduced ? "true" : "false") << "\n";
        }
    }
    return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    if (cfg.which != 1 && cfg.which != 2) throw UsageError("--which must be 1 or 2");
    out << table_csv(cfg.which);
    return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    require_n(cfg.n, 2, 6);
    const std::vector<std::string> known = {"xrelation", "ehrhart", "cubes", "threepath", "richardson", "projection"};
    std::vector<SuiteResult> results;
    for (const auto& s : known) {
        if (cfg.suite != "all" && cfg.suite != s) continue;
        if (s == "xrelation") results.push_back(check_xrelation(cfg.n, cfg.seed));
        if (s == "ehrhart") results.push_back(check_ehrhart(cfg.n, cfg.seed));
        if (s == "cubes") results.push_back(check_cubes(cfg.n, cfg.threads));
        if (s == "threepath") results.push_back(check_threepath(cfg.n, cfg.threads));
        if (s == "richardson") results.push_back(check_richardson(cfg.n, cfg.threads));
        if (s == "projection") results.push_back(check_projection(cfg.n, cfg.seed));
    }
    bool ok = true;
    for (const auto& r : results) {
        out << r.summary() << "\n";
        ok = ok && r.ok();
    }
    return ok ? kOk : kVerifyFailed;
}

unsigned default_threads() {
    if (const char* env = std::getenv("GZHESS_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return static_cast<unsigned>(t);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes of Gelfand-Zetlin faces, Hessenberg varieties and permutohedron cubes"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.threads = default_threads();
    app.add_option("--threads", cfg.threads, "Worker threads (default: GZHESS_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--output,-o", cfg.output, "Write output to a file instead of stdout");

    const auto formats = CLI::IsMember({"text", "json"});
    const auto bases = CLI::IsMember({"alpha", "lambda"});

    auto* vol_gz = app.add_subcommand("vol-gz", "Volume polynomial of GZ(lambda)");
    vol_gz->add_option("--n", cfg.n, "Size")->required();
    vol_gz->add_option("--lambda", cfg.lambda, "Comma list, default n-1,...,0");
    vol_gz->add_option("--basis", cfg.basis, "alpha or lambda")->check(bases);
    vol_gz->add_option("--format", cfg.format)->check(formats);
    vol_gz->add_flag("--eval", cfg.eval, "Evaluate at lambda");
    vol_gz->add_flag("--check", cfg.check, "Compare the closed form with the tableau sum");

    auto* vol_face = app.add_subcommand("vol-face", "Volume polynomial and tableau count of a face");
    vol_face->add_option("--n", cfg.n, "Size")->required();
    vol_face->add_option("--face", cfg.face, "Edges, e.g. \"H(1,1);H(1,2);V(3,4)\"");
    vol_face->add_option("--basis", cfg.basis)->check(bases);
    vol_face->add_option("--format", cfg.format)->check(formats);

    auto* vol_hess = app.add_subcommand("vol-hess", "Volume polynomial of a Hessenberg variety");
    vol_hess->set_help_flag("--help", "Print this help message and exit");
    vol_hess->add_option("--h", cfg.h, "Comma list, e.g. 2,4,4,4")->required();
    vol_hess->add_option("--method", cfg.method)->check(CLI::IsMember({"faces", "derivative", "schubert", "all"}));
    vol_hess->add_option("--basis", cfg.basis)->check(bases);
    vol_hess->add_option("--format", cfg.format)->check(formats);
    vol_hess->add_flag("--list-faces", cfg.list_faces, "Also list the GZ faces of the decomposition");

    auto* hess_class = app.add_subcommand("hess-class", "Schubert expansion of a Hessenberg class");
    hess_class->set_help_flag("--help", "Print this help message and exit");
    hess_class->add_option("--h", cfg.h, "Comma list")->required();
    hess_class->add_flag("--positivity", cfg.positivity, "Report the coefficients a_w");
    std::string class_format = "json";
    hess_class->add_option("--format", class_format)->check(formats);

    auto* decompose = app.add_subcommand("decompose-perm", "Cube decomposition of the permutohedron");
    decompose->add_option("--n", cfg.n, "Size")->required();
    decompose->add_option("--lambda", cfg.lambda, "Comma list, default n-1,...,0");
    decompose->add_flag("--verify", cfg.verify, "Check every cube and the total volume");

    auto* kogan = app.add_subcommand("kogan", "List reduced Kogan or dual Kogan faces");
    kogan->add_option("--n", cfg.n, "Size")->required();
    kogan->add_option("--w", cfg.w, "Only faces with this permutation");
    kogan->add_flag("--dual", cfg.dual, "Dual Kogan faces (vertical edges)");

    auto* table = app.add_subcommand("table", "Reproduce the n = 4 volume tables as CSV");
    table->add_option("--which", cfg.which, "1 or 2")->required();

    auto* check = app.add_subcommand("check", "Run verification suites");
    cfg.n = 4;
    check->add_option("--suite", cfg.suite)
        ->check(CLI::IsMember({"xrelation", "ehrhart", "cubes", "threepath", "richardson", "projection", "all"}));
    check->add_option("--n", cfg.n, "Size (default 4)");
    check->add_option("--seed", cfg.seed, "Seed for random suites (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (hess_class->parsed()) cfg.format = class_format;

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (vol_gz->parsed()) code = cmd_vol_gz(cfg, buffer);
        else if (vol_face->parsed()) code = cmd_vol_face(cfg, buffer);
        else if (vol_hess->parsed()) code = cmd_vol_hess(cfg, buffer);
        else if (hess_class->parsed()) code = cmd_hess_class(cfg, buffer);
        else if (decompose->parsed()) code = cmd_decompose_perm(cfg, buffer);
        else if (kogan->parsed()) code = cmd_kogan(cfg, buffer);
        else if (table->parsed()) code = cmd_table(cfg, buffer);
        else if (check->parsed()) code = cmd_check(cfg, buffer);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (cfg.output.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}
