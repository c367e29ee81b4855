#include "clext/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clext/format.hpp"

namespace clext {

Json json_number(Real value) {
    const auto v = static_cast<double>(value);
    if (!std::isfinite(v)) return nullptr;
    return round_sig15(v);
}

namespace {

Json complex_pair(const Complex& z) { return Json::array({json_number(z.real()), json_number(z.imag())}); }

Json real_array(const std::vector<Real>& values) {
    Json out = Json::array();
    for (Real v : values) out.push_back(json_number(v));
    return out;
}

Json entry_json(const char* name, Real residual, bool pass) {
    return Json{{"relation", name}, {"residual", json_number(residual)}, {"pass", pass}};
}

}  // namespace

Json to_json(const AlgebraSpec& spec) {
    Json kappa = Json::array();
    for (const auto& k : spec.kappa) kappa.push_back(complex_pair(k));
    return Json{{"lambda", spec.lambda},
                {"alpha", real_array(spec.alpha)},
                {"kappa", kappa},
                {"beta", real_array(spec.beta)},
                {"gamma", real_array(spec.gamma)}};
}

Json to_json(const RepClass& cls) {
    Json out;
    out["kind"] = cls.kind == RepKind::FiniteDim ? "FiniteDim" : "BoundedFromBelow";
    out["dim"] = cls.dim ? Json(*cls.dim) : Json(nullptr);
    out["witnesses"] = real_array(cls.witnesses);
    return out;
}

Json to_json(const ResidualReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(Json{{"relation", e.relation},
                               {"word_length", e.word_length},
                               {"residual", json_number(e.max_residual)},
                               {"pass", e.pass}});
    }
    return Json{{"tolerance", json_number(report.tolerance)},
                {"dim", report.dim},
                {"margin_policy", report.margin_policy},
                {"entries", entries}};
}

Json to_json(const SpectrumReport& report) {
    Json levels = Json::array();
    for (const auto& l : report.levels)
        levels.push_back(Json{{"n", l.n}, {"energy", json_number(l.energy)}, {"sector", l.sector}});
    Json clusters = Json::array();
    for (const auto& c : report.clusters) {
        clusters.push_back(Json{{"energy", json_number(c.energy)},
                                {"multiplicity", c.multiplicity},
                                {"members", c.members},
                                {"complete", std::all_of(c.members.begin(), c.members.end(), [&](std::size_t n) {
                                     return report.levels[n].energy < report.cutoff_energy;
                                 })}});
    }
    return Json{{"levels", levels},
                {"clusters", clusters},
                {"cutoff_states", report.cutoff_states},
                {"cutoff_energy", json_number(report.cutoff_energy)},
                {"ground", Json{{"energy", json_number(report.ground.energy)},
                                {"multiplicity", report.ground.multiplicity}}}};
}

Json to_json(const BreakingReport& report) {
    return Json{{"classification", report.unbroken ? "unbroken" : "broken"},
                {"ground_energy", json_number(report.ground_energy)},
                {"ground_multiplicity", report.ground_multiplicity},
                {"excited_multiplicities", report.excited_multiplicities},
                {"cutoff_energy", json_number(report.cutoff_energy)}};
}

Json to_json(const PssqmConfig& config) {
    Json eta = Json::array();
    for (const auto& e : config.eta) eta.push_back(complex_pair(e));
    return Json{{"p", config.p}, {"mu", config.mu}, {"eta", eta}, {"r", real_array(config.r)}};
}

Json to_json(const PssqmReport& report) {
    Json checks = Json::array();
    checks.push_back(entry_json("nilpotency", report.residual_nilpotency, report.pass_nilpotency()));
    checks.push_back(Json{{"relation", "nonvanishing"},
                          {"witness", json_number(report.nonvanishing_witness)},
                          {"pass", report.pass_nonvanishing()}});
    checks.push_back(entry_json("commutator", report.residual_commutator, report.pass_commutator()));
    checks.push_back(entry_json("multilinear", report.residual_multilinear, report.pass_multilinear()));

    const auto& b = report.breaking;
    bool excited_ok = true;
    for (auto m : b.excited_multiplicities) excited_ok = excited_ok && m == report.p + 1;
    return Json{{"p", report.p},
                {"mu", report.mu},
                {"tolerance", json_number(report.tolerance)},
                {"checks", checks},
                {"breaking", to_json(b)},
                {"ground_energy", json_number(report.ground_energy)},
                {"claims",
                 Json{{"ground_multiplicity_is_mu_plus_1", b.ground_multiplicity == report.mu + 1},
                      {"excited_multiplicity_is_p_plus_1", excited_ok},
                      {"unbroken_iff_mu_zero", b.unbroken == (report.mu == 0)}}}};
}

Json to_json(const SsqmReport& report) {
    Json checks = Json::array();
    checks.push_back(entry_json("nilpotency", report.residual_nilpotency, report.residual_nilpotency <= report.tolerance));
    checks.push_back(entry_json("anticommutator", report.residual_anticommutator,
                                report.residual_anticommutator <= report.tolerance));
    checks.push_back(entry_json("commutator", report.residual_commutator, report.residual_commutator <= report.tolerance));
    checks.push_back(entry_json("closed_form", report.residual_closed_form,
                                report.residual_closed_form <= report.tolerance));
    return Json{{"variant", to_string(report.variant)},
                {"tolerance", json_number(report.tolerance)},
                {"checks", checks},
                {"spectrum", to_json(report.spectrum)}};
}

Json to_json(const BdReport& report) {
    Json checks = Json::array();
    checks.push_back(entry_json("bd_double_commutator", report.residual_bd, report.residual_bd <= report.tolerance));
    checks.push_back(entry_json("nilpotency", report.residual_nilpotency, report.residual_nilpotency <= report.tolerance));
    return Json{{"mu", report.mu},
                {"tolerance", json_number(report.tolerance)},
                {"checks", checks},
                {"verdict", report.compatible() ? "BD-compatible" : "BD-incompatible"}};
}

Json to_json(const std::vector<ScanRow>& rows, Real tol) {
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back(Json{{"parameter", json_number(row.parameter)},
                           {"bfb", row.bfb},
                           {"residual", row.residual ? json_number(*row.residual) : Json(nullptr)},
                           {"compatible", row.residual && *row.residual <= tol}});
    }
    return out;
}

Json to_json(const SignSurvey& survey) {
    Json out{{"p", survey.p},
             {"mu", survey.mu},
             {"seed", survey.seed},
             {"samples", survey.energies.size()},
             {"positive", survey.positive},
             {"negative", survey.negative},
             {"zero", survey.zero},
             {"zero_tol", json_number(survey.zero_tol)},
             {"energies", real_array(survey.energies)}};
    if (survey.constructed_zero_alpha) {
        out["constructed_zero"] = Json{{"alpha", real_array(*survey.constructed_zero_alpha)},
                                       {"ground_energy", json_number(*survey.constructed_zero_energy)}};
    } else {
        out["constructed_zero"] = nullptr;
    }
    return out;
}

std::string levels_table(const SpectrumReport& report, char sep) {
    std::ostringstream os;
    os << "n" << sep << "energy" << sep << "sector\n";
    for (const auto& l : report.levels) {
        os << l.n << sep << format_real(static_cast<double>(l.energy)) << sep << l.sector << '\n';
    }
    return os.str();
}

std::string scan_table(const std::vector<ScanRow>& rows, char sep) {
    std::ostringstream os;
    os << "parameter" << sep << "residual\n";
    for (const auto& row : rows) {
        os << format_real(round_sig15(static_cast<double>(row.parameter))) << sep
           << (row.residual ? format_real(static_cast<double>(*row.residual)) : std::string("nan")) << '\n';
    }
    return os.str();
}

bool all_pass_flags(const Json& doc) {
    if (doc.is_object()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() == "pass" && it.value().is_boolean() && !it.value().get<bool>()) return false;
            if (!all_pass_flags(it.value())) return false;
        }
    } else if (doc.is_array()) {
        for (const auto& v : doc) {
            if (!all_pass_flags(v)) return false;
        }
    }
    return true;
}

}  // namespace clext
