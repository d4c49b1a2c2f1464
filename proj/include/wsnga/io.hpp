#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "wsnga/ga.hpp"
#include "wsnga/leach.hpp"
#include "wsnga/lifetime.hpp"
#include "wsnga/network.hpp"

namespace wsnga::io {

using nlohmann::json;

enum class Protocol { GA, Leach };

std::string to_string(Protocol p);
Protocol parse_protocol(const std::string& text);

struct LifetimeSection {
    int total_rounds = 1100;
    int rounds_per_configuration = 5;
    Protocol protocol = Protocol::GA;
    /// GA used for re-clustering during lifetime runs.
    GAParams ga = lifetime_ga_defaults();

    static GAParams lifetime_ga_defaults();
};

/// Everything one experiment needs. Defaults give the reference GA setup for
/// `evolve` and the desk-scale lifetime comparison for `lifetime`/`compare`.
struct RunConfig {
    NetworkConfig deployment;
    RadioModel radio;
    GAParams ga;
    LeachParams leach;
    LifetimeSection lifetime;
    std::string output_dir = "out";

    void validate() const;
    LifetimeConfig lifetime_config() const;
};

json to_json(const RunConfig& config);
/// Strict: unknown keys and wrong types raise ConfigError. Missing keys keep
/// their defaults.
RunConfig run_config_from_json(const json& document);
RunConfig load_run_config(const std::filesystem::path& path);

json deployment_to_json(const Deployment& deployment);
Deployment deployment_from_json(const json& document);
Deployment load_deployment(const std::filesystem::path& path);

/// Fixed-format number rendering used by every CSV writer.
std::string format_number(double value);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

std::string metrics_csv(const std::vector<GenerationMetrics>& trace);
std::string lifetime_csv(const std::vector<RoundRecord>& records);
json summary_to_json(const LifetimeSummary& summary);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header; throws if absent.
    std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);

}  // namespace wsnga::io
