#include "clext/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clext/fock.hpp"
#include "clext/format.hpp"
#include "clext/pssqm.hpp"
#include "clext/report.hpp"
#include "clext/verifier.hpp"

namespace clext::cli {

namespace {

struct CommandName {
    Command command;
    const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Verify, "verify"},     {Command::Spectrum, "spectrum"}, {Command::PssqmSolve, "pssqm-solve"},
    {Command::PssqmCheck, "pssqm-check"}, {Command::Ssqm, "ssqm"},   {Command::BdScan, "bd-scan"},
    {Command::Classify, "classify"}, {Command::Dump, "dump"},
};

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }
[[noreturn]] void validation_error(const std::string& what) { throw Error(ErrorKind::ValidationError, what); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& text, const std::string& flag) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        parse_error("--" + flag + ": '" + text + "' is not a number");
    }
    if (used != text.size()) parse_error("--" + flag + ": trailing characters in '" + text + "'");
    return v;
}

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_double(item, flag));
    if (out.empty()) parse_error("--" + flag + ": empty list");
    return out;
}

// entries are "re" or "re:im"
std::vector<std::complex<double>> parse_complexes(const std::string& text, const std::string& flag) {
    std::vector<std::complex<double>> out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.emplace_back(parse_double(parts[0], flag), 0.0);
        } else if (parts.size() == 2) {
            out.emplace_back(parse_double(parts[0], flag), parse_double(parts[1], flag));
        } else {
            parse_error("--" + flag + ": '" + item + "' is not of the form re or re:im");
        }
    }
    if (out.empty()) parse_error("--" + flag + ": empty list");
    return out;
}

std::size_t parse_count(const std::string& text, const std::string& flag) {
    const double v = parse_double(text, flag);
    if (v < 0 || v != std::floor(v)) parse_error("--" + flag + ": expected a non-negative integer, got " + text);
    return static_cast<std::size_t>(v);
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "tsv") return OutputFormat::Tsv;
    parse_error("--format must be json, csv or tsv, got '" + text + "'");
}

std::vector<std::complex<double>> json_complexes(const nlohmann::json& v, const std::string& key) {
    if (!v.is_array()) parse_error("config key '" + key + "' must be an array");
    std::vector<std::complex<double>> out;
    for (const auto& e : v) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            out.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            parse_error("config key '" + key + "': entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

Real default_tol(Command command) {
    switch (command) {
    case Command::PssqmCheck:
    case Command::BdScan: return 1e-10L;
    case Command::Ssqm:
    case Command::Spectrum: return 1e-13L;
    default: return 1e-12L;
    }
}

std::vector<Real> to_real(const std::vector<double>& v) { return {v.begin(), v.end()}; }

std::vector<Complex> to_complex(const std::vector<std::complex<double>>& v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z.real(), z.imag());
    return out;
}

AlgebraSpec spec_of(const RunConfig& cfg) {
    const std::size_t lambda = *cfg.lambda;
    if (cfg.kappa) return from_kappa(lambda, to_complex(*cfg.kappa));
    if (cfg.alpha) return from_alpha(lambda, to_real(*cfg.alpha));
    return from_alpha(lambda, std::vector<Real>(lambda, Real{0}));
}

bool is_pssqm(Command c) { return c == Command::PssqmSolve || c == Command::PssqmCheck; }

Json header(const RunConfig& cfg, Real tol) {
    Json spec;
    spec["lambda"] = cfg.lambda ? Json(*cfg.lambda) : Json(nullptr);
    if (cfg.alpha) {
        Json a = Json::array();
        for (double x : *cfg.alpha) a.push_back(json_number(x));
        spec["alpha"] = a;
    }
    if (cfg.kappa) {
        Json k = Json::array();
        for (const auto& z : *cfg.kappa) k.push_back(Json::array({json_number(z.real()), json_number(z.imag())}));
        spec["kappa"] = k;
    }
    return Json{{"command", to_string(cfg.command)},
                {"spec", spec},
                {"dim", cfg.resolved_dim()},
                {"tol", json_number(tol)},
                {"seed", cfg.seed},
                {"version", kVersion}};
}

std::string fmt(Real v) { return format_real(static_cast<double>(v)); }

std::string residual_table(const ResidualReport& report) {
    std::ostringstream os;
    for (const auto& e : report.entries) {
        os << "  " << std::left << std::setw(22) << e.relation << std::setw(4) << e.word_length << std::setw(24)
           << fmt(e.max_residual) << (e.pass ? "pass" : "FAIL") << '\n';
    }
    return os.str();
}

Json run_verify(const RunConfig& cfg, Real tol, std::string& summary) {
    const auto rep = build(spec_of(cfg), cfg.resolved_dim());
    const auto relations = verify_defining_relations(rep, tol);
    const auto projectors = verify_projector_algebra(rep, tol);
    const Real casimir_tol = 1e-13L;
    const Real casimir_residual = casimir(rep).cwiseAbs().maxCoeff();

    std::ostringstream os;
    os << "defining relations (dim " << rep.dim << ", tol " << fmt(tol) << ")\n" << residual_table(relations);
    os << "projector algebra\n" << residual_table(projectors);
    os << "casimir max|entry| " << fmt(casimir_residual) << (casimir_residual <= casimir_tol ? " pass" : " FAIL")
       << '\n';
    summary = os.str();
    return Json{{"defining_relations", to_json(relations)},
                {"projector_algebra", to_json(projectors)},
                {"casimir", Json{{"residual", json_number(casimir_residual)},
                                 {"tolerance", json_number(casimir_tol)},
                                 {"pass", casimir_residual <= casimir_tol}}}};
}

Json run_spectrum(const RunConfig& cfg, Real tol, std::string& summary, SpectrumReport& report) {
    const auto spec = spec_of(cfg);
    const auto rep = build(spec, cfg.resolved_dim());
    const std::size_t lambda = spec.lambda;
    RealVector diag = cfg.r ? shifted_hamiltonian(rep, to_real(*cfg.r)) : hamiltonian_h0(rep);
    report = spectrum_report(diag, lambda, static_cast<Real>(cfg.cluster_tol));

    Real step = 0;
    Real closed = 0;
    for (std::size_t n = 0; n < rep.dim; ++n) {
        step = std::max(step, std::abs(energy_level(spec, n + lambda) - energy_level(spec, n) -
                                       static_cast<Real>(lambda)));
        closed = std::max(closed, std::abs(energy_level(spec, n) -
                                           (structure_function(spec, n) + structure_function(spec, n + 1)) / 2));
    }
    Json checks = Json::array();
    checks.push_back(Json{{"relation", "sector_step_is_lambda"}, {"residual", json_number(step)}, {"pass", step <= tol}});
    checks.push_back(
        Json{{"relation", "h0_matches_structure_function"}, {"residual", json_number(closed)}, {"pass", closed <= tol}});

    std::ostringstream os;
    os << (cfg.r ? "shifted Hamiltonian" : "H0") << " spectrum, dim " << rep.dim << ", cutoff energy "
       << fmt(report.cutoff_energy) << '\n';
    os << "  ground " << fmt(report.ground.energy) << " x" << report.ground.multiplicity << '\n';
    for (const auto& c : report.complete_clusters()) os << "  " << std::setw(24) << std::left << fmt(c.energy) << 'x' << c.multiplicity << '\n';
    summary = os.str();

    Json body{{"hamiltonian", cfg.r ? "shifted" : "H0"}, {"checks", checks}, {"spectrum", to_json(report)}};
    if (cfg.r) {
        Json r = Json::array();
        for (double x : *cfg.r) r.push_back(json_number(x));
        body["r"] = r;
    }
    return body;
}

Json run_pssqm_solve(const RunConfig& cfg, std::string& summary) {
    const auto spec = spec_of(cfg);
    const std::size_t p = *cfg.p;
    const auto eta = cfg.eta ? to_complex(*cfg.eta) : default_eta(p, cfg.mu);
    const auto config = solve_config(spec, cfg.mu, eta);
    const Real chain = chain_residual(spec, cfg.mu, config.r);
    const Real constraint = constraint_residual(spec, cfg.mu, eta, config.r);

    Json checks = Json::array();
    checks.push_back(Json{{"relation", "commutation_chain"}, {"residual", json_number(chain)}, {"pass", chain <= 1e-12L}});
    checks.push_back(Json{{"relation", "multilinear_constraint"},
                          {"residual", json_number(constraint)},
                          {"pass", constraint <= 1e-12L}});
    Json body{{"config", to_json(config)},
              {"ground_energy", json_number(ground_energy(spec, cfg.mu, eta))},
              {"checks", checks}};

    std::ostringstream os;
    os << "p = " << p << ", mu = " << cfg.mu << "\n  r =";
    for (Real x : config.r) os << ' ' << fmt(x);
    os << "\n  ground energy " << fmt(ground_energy(spec, cfg.mu, eta)) << '\n';

    if (cfg.samples > 0) {
        const auto survey = sign_survey(p, cfg.mu, cfg.samples, cfg.seed,
                                        AlphaBox{static_cast<Real>(cfg.box_lo), static_cast<Real>(cfg.box_hi)});
        body["sign_survey"] = to_json(survey);
        os << "  sign survey (" << cfg.samples << " samples, seed " << cfg.seed << "): " << survey.positive
           << " positive, " << survey.negative << " negative, " << survey.zero << " zero\n";
    }
    summary = os.str();
    return body;
}

Json run_pssqm_check(const RunConfig& cfg, Real tol, std::string& summary) {
    const auto spec = spec_of(cfg);
    const std::size_t p = *cfg.p;
    const auto eta = cfg.eta ? to_complex(*cfg.eta) : default_eta(p, cfg.mu);
    check_eta(p, eta);
    PssqmConfig config{p, cfg.mu, eta, cfg.r ? to_real(*cfg.r) : solve_r(spec, cfg.mu, eta)};
    const auto rep = build(spec, cfg.resolved_dim());
    const auto report = khare_check(rep, build_supercharge(rep, cfg.mu, eta), shifted_hamiltonian(rep, config.r),
                                    cfg.mu, tol, static_cast<Real>(cfg.cluster_tol));

    std::ostringstream os;
    os << "PSSQM order " << p << ", mu = " << cfg.mu << ", dim " << rep.dim << ", tol " << fmt(tol) << '\n'
       << "  nilpotency    " << fmt(report.residual_nilpotency) << (report.pass_nilpotency() ? " pass" : " FAIL") << '\n'
       << "  nonvanishing  " << fmt(report.nonvanishing_witness) << (report.pass_nonvanishing() ? " pass" : " FAIL") << '\n'
       << "  commutator    " << fmt(report.residual_commutator) << (report.pass_commutator() ? " pass" : " FAIL") << '\n'
       << "  multilinear   " << fmt(report.residual_multilinear) << (report.pass_multilinear() ? " pass" : " FAIL") << '\n'
       << "  " << (report.breaking.unbroken ? "unbroken" : "broken") << ", ground " << fmt(report.ground_energy) << " x"
       << report.breaking.ground_multiplicity << '\n';
    summary = os.str();
    return Json{{"config", to_json(config)}, {"report", to_json(report)}};
}

Json run_ssqm(const RunConfig& cfg, Real tol, std::string& summary) {
    const auto rep = build(spec_of(cfg), cfg.resolved_dim());
    const auto report = ssqm_check(rep, parse_ssqm_variant(cfg.variant), tol, static_cast<Real>(cfg.cluster_tol));
    std::ostringstream os;
    os << "SSQM " << to_string(report.variant) << ", dim " << rep.dim << '\n'
       << "  Q^2             " << fmt(report.residual_nilpotency) << '\n'
       << "  {Qdag,Q} - H    " << fmt(report.residual_anticommutator) << '\n'
       << "  [H,Q]           " << fmt(report.residual_commutator) << '\n'
       << "  ground " << fmt(report.spectrum.ground.energy) << " x" << report.spectrum.ground.multiplicity << '\n';
    summary = os.str();
    return to_json(report);
}

Json run_bd_scan(const RunConfig& cfg, Real tol, std::string& summary, std::vector<ScanRow>& rows) {
    rows = bd_scan(cfg.mu, static_cast<Real>(cfg.scan_from), static_cast<Real>(cfg.scan_to), cfg.scan_points,
                   cfg.resolved_dim());
    Json compatible = Json::array();
    std::ostringstream os;
    os << "Beckers-Debergh scan of alpha_{mu+2}, mu = " << cfg.mu << '\n';
    for (const auto& row : rows) {
        const bool ok = row.residual && *row.residual <= tol;
        if (ok) compatible.push_back(json_number(row.parameter));
        os << "  " << std::setw(12) << std::left << fmt(row.parameter)
           << (row.residual ? fmt(*row.residual) : std::string("not BFB")) << (ok ? "  compatible" : "") << '\n';
    }
    summary = os.str();
    return Json{{"mu", cfg.mu}, {"rows", to_json(rows, tol)}, {"compatible_parameters", compatible}};
}

Json run_classify(const RunConfig& cfg, std::string& summary) {
    const auto spec = spec_of(cfg);
    Json body{{"spec", to_json(spec)}};
    try {
        const auto cls = classify(spec);
        Json c = to_json(cls);
        c["pass"] = true;
        body["classification"] = c;
        summary = cls.kind == RepKind::FiniteDim ? "FiniteDim(" + std::to_string(*cls.dim) + ")\n"
                                                 : std::string("BoundedFromBelow\n");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonUnitary) throw;
        body["classification"] = Json{{"kind", "NonUnitary"}, {"message", e.what()}, {"pass", false}};
        summary = std::string(e.what()) + '\n';
    }
    return body;
}

}  // namespace

Command parse_command(const std::string& name) {
    for (const auto& c : kCommands) {
        if (name == c.name) return c.command;
    }
    std::string known;
    for (const auto& c : kCommands) known += std::string(known.empty() ? "" : ", ") + c.name;
    parse_error("unknown command '" + name + "' (expected one of " + known + ")");
}

const char* to_string(Command command) noexcept {
    for (const auto& c : kCommands) {
        if (command == c.command) return c.name;
    }
    return "unknown";
}

void apply_json(RunConfig& cfg, const nlohmann::json& doc) {
    if (!doc.is_object()) parse_error("config document must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        try {
            if (key == "command") cfg.command = parse_command(v.get<std::string>());
            else if (key == "lambda") cfg.lambda = v.get<std::size_t>();
            else if (key == "alpha") cfg.alpha = v.get<std::vector<double>>();
            else if (key == "kappa") cfg.kappa = json_complexes(v, key);
            else if (key == "dim") cfg.dim = v.get<std::size_t>();
            else if (key == "tol") cfg.tol = v.get<double>();
            else if (key == "cluster_tol") cfg.cluster_tol = v.get<double>();
            else if (key == "p") cfg.p = v.get<std::size_t>();
            else if (key == "mu") cfg.mu = v.get<std::size_t>();
            else if (key == "eta") cfg.eta = json_complexes(v, key);
            else if (key == "r") cfg.r = v.get<std::vector<double>>();
            else if (key == "scan_from") cfg.scan_from = v.get<double>();
            else if (key == "scan_to") cfg.scan_to = v.get<double>();
            else if (key == "scan_points") cfg.scan_points = v.get<std::size_t>();
            else if (key == "samples") cfg.samples = v.get<std::size_t>();
            else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
            else if (key == "box_lo") cfg.box_lo = v.get<double>();
            else if (key == "box_hi") cfg.box_hi = v.get<double>();
            else if (key == "variant") cfg.variant = v.get<std::string>();
            else if (key == "matrix") cfg.matrix = v.get<std::string>();
            else if (key == "out") cfg.out = v.get<std::string>();
            else if (key == "format") cfg.format = parse_format(v.get<std::string>());
            else parse_error("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            parse_error("config key '" + key + "': " + e.what());
        }
    }
}

void validate(RunConfig& cfg) {
    const bool pssqm = is_pssqm(cfg.command);
    if (cfg.command == Command::BdScan) {
        if (!cfg.p) cfg.p = 2;
        if (*cfg.p != 2) validation_error("bd-scan is defined for p = 2 only; drop --p or set --p 2");
    }
    if (cfg.command == Command::Ssqm && !cfg.lambda) cfg.lambda = 2;
    if (!cfg.lambda && cfg.p) cfg.lambda = *cfg.p + 1;
    if (!cfg.lambda && cfg.alpha) cfg.lambda = cfg.alpha->size();
    if (!cfg.lambda && cfg.kappa) cfg.lambda = cfg.kappa->size() + 1;
    if (!cfg.lambda) validation_error("lambda is not set; pass --lambda (or --p for PSSQM commands)");

    const std::size_t lambda = *cfg.lambda;
    if (lambda < 2 || lambda > kMaxLambda) {
        validation_error("lambda = " + std::to_string(lambda) + " out of range 2.." + std::to_string(kMaxLambda));
    }
    if (pssqm || cfg.command == Command::BdScan) {
        if (!cfg.p) cfg.p = lambda - 1;
        if (*cfg.p + 1 != lambda) {
            validation_error("lambda = " + std::to_string(lambda) + " but PSSQM order p = " + std::to_string(*cfg.p) +
                             " needs lambda = p + 1 = " + std::to_string(*cfg.p + 1) +
                             "; drop --lambda or make them agree");
        }
        if (cfg.mu > *cfg.p) {
            validation_error("mu = " + std::to_string(cfg.mu) + " must lie in 0.." + std::to_string(*cfg.p));
        }
        if (cfg.eta && cfg.eta->size() != *cfg.p) {
            validation_error("--eta needs p = " + std::to_string(*cfg.p) + " entries, got " +
                             std::to_string(cfg.eta->size()));
        }
    }
    if (cfg.command == Command::Ssqm && lambda != 2) {
        validation_error("ssqm needs lambda = 2, got " + std::to_string(lambda));
    }
    if (cfg.alpha && cfg.kappa) validation_error("give either --alpha or --kappa, not both");
    if (cfg.alpha) {
        if (cfg.alpha->size() != lambda) {
            validation_error("--alpha has " + std::to_string(cfg.alpha->size()) + " entries, lambda = " +
                             std::to_string(lambda) + " needs " + std::to_string(lambda));
        }
        double sum = 0;
        for (double a : *cfg.alpha) sum += a;
        if (std::abs(sum) > 1e-12) {
            validation_error("alpha must sum to zero, but the sum is " + format_real(sum) +
                             "; adjust one component by " + format_real(-sum));
        }
    }
    if (cfg.kappa && cfg.kappa->size() + 1 != lambda) {
        validation_error("--kappa needs lambda - 1 = " + std::to_string(lambda - 1) + " entries");
    }
    const bool needs_spec = cfg.command != Command::BdScan && cfg.command != Command::Ssqm;
    if (needs_spec && !cfg.alpha && !cfg.kappa) validation_error("the algebra is not set; pass --alpha or --kappa");
    if (cfg.r && cfg.r->size() != lambda) {
        validation_error("--r needs lambda = " + std::to_string(lambda) + " entries");
    }
    if (cfg.dim && *cfg.dim == 0) validation_error("--dim must be positive");
    if (cfg.scan_points == 0) validation_error("--scan-points must be positive");
    if (cfg.box_lo >= cfg.box_hi) validation_error("sampling box must have box_lo < box_hi");
    if (cfg.format != OutputFormat::Json && cfg.command != Command::Spectrum && cfg.command != Command::BdScan &&
        cfg.command != Command::Dump) {
        validation_error("--format csv/tsv is available for spectrum and bd-scan only");
    }
    if (cfg.tol && !(*cfg.tol > 0)) validation_error("--tol must be positive");
}

RunConfig parse_config(int argc, const char* const* argv) {
    CLI::App app{"C_lambda-extended oscillator algebra toolkit"};
    std::string command;
    std::string config_path;
    std::map<std::string, std::string> flags;
    const std::vector<std::string> names = {"lambda", "alpha",      "kappa",  "dim",    "tol",     "cluster-tol",
                                            "p",      "mu",         "eta",    "r",      "scan-from", "scan-to",
                                            "scan-points", "samples", "seed", "box-lo", "box-hi",  "variant",
                                            "matrix", "out",        "format"};
    app.add_option("command", command, "verify | spectrum | pssqm-solve | pssqm-check | ssqm | bd-scan | classify | dump")
        ->required();
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    for (const auto& name : names) app.add_option("--" + name, flags[name]);

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        parse_error(e.what());
    }

    RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) parse_error("cannot open config file " + config_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            parse_error(config_path + ": " + e.what());
        }
        apply_json(cfg, doc);
    }
    cfg.command = parse_command(command);

    auto given = [&](const std::string& name) { return app.get_option("--" + name)->count() > 0; };
    if (given("lambda")) cfg.lambda = parse_count(flags["lambda"], "lambda");
    if (given("alpha")) cfg.alpha = parse_reals(flags["alpha"], "alpha");
    if (given("kappa")) cfg.kappa = parse_complexes(flags["kappa"], "kappa");
    if (given("dim")) cfg.dim = parse_count(flags["dim"], "dim");
    if (given("tol")) cfg.tol = parse_double(flags["tol"], "tol");
    if (given("cluster-tol")) cfg.cluster_tol = parse_double(flags["cluster-tol"], "cluster-tol");
    if (given("p")) cfg.p = parse_count(flags["p"], "p");
    if (given("mu")) cfg.mu = parse_count(flags["mu"], "mu");
    if (given("eta")) cfg.eta = parse_complexes(flags["eta"], "eta");
    if (given("r")) cfg.r = parse_reals(flags["r"], "r");
    if (given("scan-from")) cfg.scan_from = parse_double(flags["scan-from"], "scan-from");
    if (given("scan-to")) cfg.scan_to = parse_double(flags["scan-to"], "scan-to");
    if (given("scan-points")) cfg.scan_points = parse_count(flags["scan-points"], "scan-points");
    if (given("samples")) cfg.samples = parse_count(flags["samples"], "samples");
    if (given("seed")) cfg.seed = static_cast<std::uint64_t>(parse_count(flags["seed"], "seed"));
    if (given("box-lo")) cfg.box_lo = parse_double(flags["box-lo"], "box-lo");
    if (given("box-hi")) cfg.box_hi = parse_double(flags["box-hi"], "box-hi");
    if (given("variant")) cfg.variant = flags["variant"];
    if (given("matrix")) cfg.matrix = flags["matrix"];
    if (given("out")) cfg.out = flags["out"];
    if (given("format")) cfg.format = parse_format(flags["format"]);

    validate(cfg);
    return cfg;
}

RunResult execute(const RunConfig& cfg) {
    const Real tol = cfg.tol ? static_cast<Real>(*cfg.tol) : default_tol(cfg.command);
    Json doc = header(cfg, tol);
    RunResult result;
    SpectrumReport spectrum;
    std::vector<ScanRow> rows;

    switch (cfg.command) {
    case Command::Verify: doc["body"] = run_verify(cfg, tol, result.summary); break;
    case Command::Spectrum: doc["body"] = run_spectrum(cfg, tol, result.summary, spectrum); break;
    case Command::PssqmSolve: doc["body"] = run_pssqm_solve(cfg, result.summary); break;
    case Command::PssqmCheck: doc["body"] = run_pssqm_check(cfg, tol, result.summary); break;
    case Command::Ssqm: doc["body"] = run_ssqm(cfg, tol, result.summary); break;
    case Command::BdScan: doc["body"] = run_bd_scan(cfg, tol, result.summary, rows); break;
    case Command::Classify: doc["body"] = run_classify(cfg, result.summary); break;
    case Command::Dump: {
        const auto rep = build(spec_of(cfg), cfg.resolved_dim());
        std::ostringstream os;
        dump_matrix(os, cfg.matrix, named_matrix(rep, cfg.matrix));
        result.report = os.str();
        result.summary = "dumped " + cfg.matrix + " (" + std::to_string(rep.dim) + "x" + std::to_string(rep.dim) + ")\n";
        return result;
    }
    }

    result.exit_code = all_pass_flags(doc) ? 0 : 1;
    const char sep = cfg.format == OutputFormat::Tsv ? '\t' : ',';
    if (cfg.format == OutputFormat::Json) {
        result.report = doc.dump(2) + '\n';
    } else if (cfg.command == Command::Spectrum) {
        result.report = levels_table(spectrum, sep);
    } else {
        result.report = scan_table(rows, sep);
    }
    return result;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunResult result;
    try {
        result = execute(cfg);
    } catch (const Error& e) {
        err << "clext: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "clext: " << e.what() << '\n';
        return 2;
    }

    if (!cfg.out) {
        out << result.report;
        return result.exit_code;
    }
    namespace fs = std::filesystem;
    const fs::path target(*cfg.out);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "clext: cannot write " << tmp.string() << '\n';
            return 3;
        }
        file << result.report;
        file.flush();
        if (!file) {
            err << "clext: write to " << tmp.string() << " failed\n";
            return 3;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        err << "clext: cannot move report into place at " << target.string() << ": " << ec.message() << '\n';
        fs::remove(tmp, ec);
        return 3;
    }
    out << result.summary;
    return result.exit_code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_config(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << "usage: clext <command> [--config file.json] [flags]\n"
               "commands: verify spectrum pssqm-solve pssqm-check ssqm bd-scan classify dump\n"
               "flags: --lambda --alpha --kappa --dim --tol --cluster-tol --p --mu --eta --r\n"
               "       --scan-from --scan-to --scan-points --samples --seed --box-lo --box-hi\n"
               "       --variant --matrix --out --format {json,csv,tsv}\n"
               "lists are comma separated; complex entries are re or re:im;\n"
               "use --flag=value for values starting with '-'\n";
        return 0;
    } catch (const Error& e) {
        err << "clext: " << e.what() << '\n';
        return 2;
    }
    return run(cfg, out, err);
}

}  // namespace clext::cli
