#pragma once

#include <string>

#include "latkit/classifier.hpp"
#include "latkit/requirements.hpp"
#include "latkit/structure.hpp"
#include "latkit/trace_machine.hpp"

namespace latkit {

enum class ReportFormat { Text, Structured };

std::string report_validate(const FiniteStructure& s, ReportFormat fmt);
std::string report_analyze(const FiniteStructure& s, ReportFormat fmt);
std::string report_classify(const FiniteStructure& s, const Classification& c, ReportFormat fmt);
std::string report_requirements(const FiniteStructure& s, const RequirementTable& t,
                                ReportFormat fmt);
std::string report_enumerate(const std::vector<FiniteStructure>& catalog, ReportFormat fmt);
std::string report_simulation(const MachineConfig& cfg, const EnumerationLog& log,
                              ReportFormat fmt);
std::string report_bound(const MachineConfig& cfg, const FicklenessBound& b, ReportFormat fmt);
std::string report_ordinal(const std::string& expr, const Ordinal& value, ReportFormat fmt);

}  // namespace latkit
