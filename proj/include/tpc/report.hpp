#pragma once

// Report documents for the command-line front end. Every command produces a
// JSON tree (keys sorted, so reruns are byte-identical) and a plain-text
// summary.

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"
#include "tpc/algebra.hpp"
#include "tpc/catalog.hpp"
#include "tpc/classifier.hpp"
#include "tpc/module.hpp"

namespace tpc {

struct RunConfig {
    std::size_t max_dim = 4;
    bool assume_complete = false;
    std::size_t end_cap = 16;
    std::size_t pd_cap = 8;
    std::size_t search_budget = std::size_t{1} << 22;

    Limits limits() const;
    CatalogOptions catalog_options() const;
    nlohmann::json to_json(const Field& field) const;
};

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct Report {
    nlohmann::json document;
    std::string summary;
    int exit_code = kExitOk;
};

nlohmann::json algebra_summary(const Algebra& algebra);
nlohmann::json check_json(const Check& check);
nlohmann::json module_json(const RightModule& m, const std::string& name);

/// "P2", "S2=I2" for projectives, simples and injectives, otherwise
/// "X(1,2)" with the dimension vector.
std::string role_name(const RightModule& indecomposable);

Report classify_report(const AlgebraPtr& algebra, const RunConfig& config);
Report catalog_report(const AlgebraPtr& algebra, const RunConfig& config);
Report left_part_report(const AlgebraPtr& algebra, const RunConfig& config);
Report verify_report(const AlgebraPtr& algebra, const RunConfig& config);
/// A random spec from the property-suite generator.
Report generate_report(std::uint64_t seed);

}  // namespace tpc
