#ifndef DWORK_SUITES_HPP
#define DWORK_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwork/hyperg.hpp"
#include "dwork/laurent.hpp"

namespace dwork {

/// Shared configuration of the verification suites.
struct SuiteConfig {
    std::vector<uint64_t> primes = {3, 5, 7};
    unsigned s_max = 2;
    std::vector<FamilyTag> families = {FamilyTag::Half, FamilyTag::ThirdQ, FamilyTag::ThirdR,
                                       FamilyTag::Fifth41, FamilyTag::Fifth32};
    unsigned samples = 50;
    unsigned jobs = 1;
    uint64_t seed = 20240601;
};

struct SuiteResult {
    std::string name;
    std::vector<CongruenceReport> checks;

    bool all_pass() const;
};

/// The suite identifiers, in canonical order (without "all").
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

/// Runs every suite in canonical order.
std::vector<SuiteResult> run_all(const SuiteConfig& cfg);

/// Deterministic JSON report: stable key order, no timestamps; reruns with
/// the same config are byte-identical.
nlohmann::ordered_json report_json(const std::vector<SuiteResult>& results,
                                   const SuiteConfig& cfg);

/// Human-readable inventory of what a suite checks ("all" lists everything).
std::string describe_suite(const std::string& name);

/// Parses a family name as printed by family_name(); throws on unknown names.
FamilyTag family_from_name(const std::string& name);

}  // namespace dwork

#endif
