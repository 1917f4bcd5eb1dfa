#pragma once

#include <string>

#include "json.hpp"

#include "cslab/positivity.hpp"
#include "cslab/rimhook.hpp"
#include "cslab/symfunc.hpp"
#include "cslab/verify.hpp"

namespace cslab {

using Json = nlohmann::ordered_json;

/// "7", "-2", "3/4".
std::string rational_string(const Rational& q);

Json partition_json(const Partition& p);
Json to_json(const SymFunc& f);
Json to_json(const SchurCoefficientTrace& trace);
Json to_json(const PositivityReport& report);
Json to_json(const SweepResult& sweep);
Json to_json(const ConjectureReport& report);
Json to_json(const SuiteReport& suite);

/// Parses the JSON produced by to_json(const SymFunc&).
SymFunc symfunc_from_json(const Json& j);

/// Aligned table: one "coeff  basis_partition" row per term.
std::string pretty(const SymFunc& f);

/// Header plus one row per instance:
/// params,e_verdict,e_witness_partition,e_witness_coeff,s_verdict,s_witness_partition,s_witness_coeff,screeners_failed
std::string sweep_csv(const SweepResult& sweep);

}  // namespace cslab
