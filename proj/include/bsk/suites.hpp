#pragma once

#include "bsk/report.hpp"

namespace bsk {

/// Known suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Run one suite (or "all") into the report. Returns false for an unknown
/// suite name.
bool run_suite(const VerifyConfig& cfg, Report& out);

void suite_daha_relations(const VerifyConfig&, Report&);
void suite_presentation_iso(const VerifyConfig&, Report&);
void suite_hecke(const VerifyConfig&, Report&);
void suite_theta4(const VerifyConfig&, Report&);
void suite_power_sum_central(const VerifyConfig&, Report&);
void suite_pw_comparison(const VerifyConfig&, Report&);
void suite_hall_transport(const VerifyConfig&, Report&);

}  // namespace bsk
