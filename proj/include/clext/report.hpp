#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clext/algebra.hpp"
#include "clext/pssqm.hpp"
#include "clext/spectrum.hpp"
#include "clext/verifier.hpp"

namespace clext {

using Json = nlohmann::ordered_json;

/// Finite values rounded to 15 significant digits; non-finite become null.
Json json_number(Real value);

Json to_json(const AlgebraSpec& spec);
Json to_json(const RepClass& cls);
Json to_json(const ResidualReport& report);
Json to_json(const SpectrumReport& report);
Json to_json(const BreakingReport& report);
Json to_json(const PssqmConfig& config);
Json to_json(const PssqmReport& report);
Json to_json(const SsqmReport& report);
Json to_json(const BdReport& report);
Json to_json(const std::vector<ScanRow>& rows, Real tol);
Json to_json(const SignSurvey& survey);

/// Rows "n,energy,sector" with a header line; sep is ',' or '\t'.
std::string levels_table(const SpectrumReport& report, char sep);

/// Rows "parameter,residual" with a header line. Non-BFB points print "nan".
std::string scan_table(const std::vector<ScanRow>& rows, char sep);

/// True iff every "pass" member anywhere in the document is true.
bool all_pass_flags(const Json& doc);

}  // namespace clext
