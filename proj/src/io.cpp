#include "wsnga/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "wsnga/error.hpp"

namespace wsnga::io {

namespace {

// Reads one JSON object field by field and rejects keys nobody asked for.
class SectionReader {
public:
    SectionReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
        if (!object_.is_object()) throw ConfigError(path_ + " must be a JSON object");
    }

    bool has(const char* key) {
        known_.insert(key);
        return object_.contains(key);
    }

    const json& raw(const char* key) { return object_.at(key); }
    std::string where(const char* key) const { return path_ + "." + key; }

    void read(const char* key, double& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_number()) throw ConfigError(where(key) + " must be a number");
        out = v.get<double>();
        if (!std::isfinite(out)) throw ConfigError(where(key) + " must be finite");
    }

    void read(const char* key, int& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_number_integer()) throw ConfigError(where(key) + " must be an integer");
        out = v.get<int>();
    }

    void read(const char* key, std::uint64_t& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_number_unsigned()) throw ConfigError(where(key) + " must be a non-negative integer");
        out = v.get<std::uint64_t>();
    }

    void read(const char* key, bool& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_boolean()) throw ConfigError(where(key) + " must be true or false");
        out = v.get<bool>();
    }

    void read(const char* key, std::string& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_string()) throw ConfigError(where(key) + " must be a string");
        out = v.get<std::string>();
    }

    void read(const char* key, Point2d& out) {
        if (!has(key)) return;
        const json& v = object_.at(key);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ConfigError(where(key) + " must be a two-element array [x, y]");
        out = Point2d(v[0].get<double>(), v[1].get<double>());
    }

    void finish() const {
        for (const auto& item : object_.items())
            if (!known_.count(item.key())) throw ConfigError("unknown key " + path_ + "." + item.key());
    }

private:
    const json& object_;
    std::string path_;
    std::set<std::string> known_;
};

json fitness_to_json(const FitnessKind& kind) {
    if (kind.form == FitnessKind::Form::Weighted)
        return json{{"weights", {kind.weights(0), kind.weights(1), kind.weights(2)}}};
    return kind.to_string();
}

FitnessKind fitness_from_json(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return FitnessKind::parse(v.get<std::string>());
        if (v.is_object() && v.size() == 1 && v.contains("weights")) {
            const json& w = v.at("weights");
            if (w.is_array() && w.size() == 3 && w[0].is_number() && w[1].is_number() && w[2].is_number())
                return FitnessKind::weighted(w[0].get<double>(), w[1].get<double>(), w[2].get<double>());
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + " must be \"eq2\", \"eq3\", \"weights wE,wD,wC\" or {\"weights\": [wE, wD, wC]}");
}

json ga_to_json(const GAParams& p) {
    return json{{"population_size", p.population_size},
                {"crossover_rate", p.crossover_rate},
                {"mutation_rate", p.mutation_rate},
                {"generations", p.generations},
                {"elitism_count", p.elitism_count},
                {"initial_head_probability", p.initial_head_probability},
                {"fitness", fitness_to_json(p.fitness)}};
}

GAParams ga_from_json(const json& v, const std::string& path, GAParams p) {
    SectionReader r(v, path);
    r.read("population_size", p.population_size);
    r.read("crossover_rate", p.crossover_rate);
    r.read("mutation_rate", p.mutation_rate);
    r.read("generations", p.generations);
    r.read("elitism_count", p.elitism_count);
    r.read("initial_head_probability", p.initial_head_probability);
    if (r.has("fitness")) p.fitness = fitness_from_json(r.raw("fitness"), r.where("fitness"));
    r.finish();
    return p;
}

template <typename F>
void validate_section(const char* name, F&& check) {
    try {
        check();
    } catch (const InvalidArgument& e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    }
}

}  // namespace

std::string to_string(Protocol p) { return p == Protocol::GA ? "ga" : "leach"; }

Protocol parse_protocol(const std::string& text) {
    if (text == "ga") return Protocol::GA;
    if (text == "leach") return Protocol::Leach;
    throw ConfigError("unknown protocol '" + text + "' (expected ga or leach)");
}

GAParams LifetimeSection::lifetime_ga_defaults() {
    GAParams p;
    p.mutation_rate = 0.005;
    p.elitism_count = 10;
    p.fitness = FitnessKind::eq3();
    return p;
}

void RunConfig::validate() const {
    validate_section("deployment", [&] { deployment.validate(); });
    validate_section("radio", [&] { radio.validate(); });
    validate_section("ga", [&] { ga.validate(); });
    validate_section("leach", [&] { leach.validate(); });
    validate_section("lifetime", [&] { lifetime_config().validate(); });
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

LifetimeConfig RunConfig::lifetime_config() const {
    LifetimeConfig c;
    c.total_rounds = lifetime.total_rounds;
    c.rounds_per_configuration = lifetime.rounds_per_configuration;
    if (lifetime.protocol == Protocol::GA)
        c.protocol = lifetime.ga;
    else
        c.protocol = leach;
    return c;
}

json to_json(const RunConfig& c) {
    return json{
        {"deployment",
         {{"node_count", c.deployment.node_count},
          {"field_width", c.deployment.field_width},
          {"field_height", c.deployment.field_height},
          {"sink", {c.deployment.sink_position.x(), c.deployment.sink_position.y()}},
          {"seed", c.deployment.seed},
          {"packet_bits", c.deployment.packet_bits}}},
        {"radio",
         {{"electronics_energy", c.radio.electronics_energy},
          {"amplifier_energy", c.radio.amplifier_energy},
          {"initial_node_energy", c.radio.initial_node_energy},
          {"aggregation_energy", c.radio.aggregation_energy},
          {"receive_all_members", c.radio.receive_all_members}}},
        {"ga", ga_to_json(c.ga)},
        {"leach", {{"head_probability", c.leach.head_probability}}},
        {"lifetime",
         {{"total_rounds", c.lifetime.total_rounds},
          {"rounds_per_configuration", c.lifetime.rounds_per_configuration},
          {"protocol", to_string(c.lifetime.protocol)},
          {"ga", ga_to_json(c.lifetime.ga)}}},
        {"output_dir", c.output_dir}};
}

RunConfig run_config_from_json(const json& document) {
    RunConfig c;
    SectionReader top(document, "config");
    if (top.has("deployment")) {
        SectionReader r(top.raw("deployment"), "deployment");
        r.read("node_count", c.deployment.node_count);
        r.read("field_width", c.deployment.field_width);
        r.read("field_height", c.deployment.field_height);
        r.read("sink", c.deployment.sink_position);
        r.read("seed", c.deployment.seed);
        r.read("packet_bits", c.deployment.packet_bits);
        r.finish();
    }
    if (top.has("radio")) {
        SectionReader r(top.raw("radio"), "radio");
        r.read("electronics_energy", c.radio.electronics_energy);
        r.read("amplifier_energy", c.radio.amplifier_energy);
        r.read("initial_node_energy", c.radio.initial_node_energy);
        r.read("aggregation_energy", c.radio.aggregation_energy);
        r.read("receive_all_members", c.radio.receive_all_members);
        r.finish();
    }
    if (top.has("ga")) c.ga = ga_from_json(top.raw("ga"), "ga", c.ga);
    if (top.has("leach")) {
        SectionReader r(top.raw("leach"), "leach");
        r.read("head_probability", c.leach.head_probability);
        r.finish();
    }
    if (top.has("lifetime")) {
        SectionReader r(top.raw("lifetime"), "lifetime");
        r.read("total_rounds", c.lifetime.total_rounds);
        r.read("rounds_per_configuration", c.lifetime.rounds_per_configuration);
        std::string protocol = to_string(c.lifetime.protocol);
        r.read("protocol", protocol);
        c.lifetime.protocol = parse_protocol(protocol);
        if (r.has("ga")) c.lifetime.ga = ga_from_json(r.raw("ga"), "lifetime.ga", c.lifetime.ga);
        r.finish();
    }
    top.read("output_dir", c.output_dir);
    top.finish();
    c.validate();
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    return run_config_from_json(doc);
}

json deployment_to_json(const Deployment& d) {
    json nodes = json::array();
    for (const Node& n : d.nodes())
        nodes.push_back({{"id", n.id}, {"x", n.position.x()}, {"y", n.position.y()}, {"energy", n.residual_energy}});
    const NetworkConfig& c = d.config();
    return json{{"seed", c.seed},
                {"field", {{"width", c.field_width}, {"height", c.field_height}}},
                {"sink", {d.sink().x(), d.sink().y()}},
                {"packet_bits", c.packet_bits},
                {"nodes", std::move(nodes)}};
}

Deployment deployment_from_json(const json& document) {
    NetworkConfig c;
    SectionReader top(document, "deployment");
    top.read("seed", c.seed);
    top.read("sink", c.sink_position);
    top.read("packet_bits", c.packet_bits);
    if (top.has("field")) {
        SectionReader f(top.raw("field"), "deployment.field");
        f.read("width", c.field_width);
        f.read("height", c.field_height);
        f.finish();
    }
    if (!top.has("nodes") || !top.raw("nodes").is_array() || top.raw("nodes").empty())
        throw ConfigError("deployment.nodes must be a non-empty array");
    const json& nodes = top.raw("nodes");
    top.finish();

    const auto n = static_cast<Eigen::Index>(nodes.size());
    Positions2d pos(2, n);
    Eigen::ArrayXd energy(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::string path = "deployment.nodes[" + std::to_string(i) + "]";
        SectionReader r(nodes[static_cast<std::size_t>(i)], path);
        int id = -1;
        double x = 0.0, y = 0.0, e = 0.0;
        r.read("id", id);
        r.read("x", x);
        r.read("y", y);
        r.read("energy", e);
        r.finish();
        if (id != i) throw ConfigError(path + ".id must equal its position " + std::to_string(i));
        if (e < 0.0) throw ConfigError(path + ".energy must be non-negative");
        pos.col(i) = Point2d(x, y);
        energy(i) = e;
    }
    c.node_count = static_cast<int>(n);
    try {
        return Deployment(c, std::move(pos), std::move(energy));
    } catch (const InvalidArgument& e) {
        throw ConfigError(std::string("deployment: ") + e.what());
    }
}

Deployment load_deployment(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
    return deployment_from_json(doc);
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string metrics_csv(const std::vector<GenerationMetrics>& trace) {
    std::string out = "generation,best_F,mean_F,best_TCH,best_RCSD,best_E,best_chromosome\n";
    for (const auto& m : trace) {
        out += std::to_string(m.generation) + ',' + format_number(m.best_F) + ',' + format_number(m.mean_F) + ',' +
               std::to_string(m.best_TCH) + ',' + format_number(m.best_RCSD) + ',' + format_number(m.best_E) + ',' +
               m.best_chromosome + '\n';
    }
    return out;
}

std::string lifetime_csv(const std::vector<RoundRecord>& records) {
    std::string out = "round,alive_count,cumulative_energy_J,heads\n";
    for (const auto& r : records)
        out += std::to_string(r.round) + ',' + std::to_string(r.alive_count) + ',' +
               format_number(r.cumulative_energy) + ',' + std::to_string(r.heads_this_round) + '\n';
    return out;
}

json summary_to_json(const LifetimeSummary& s) {
    auto round_or_sentinel = [](const std::optional<int>& r) -> json {
        if (r) return *r;
        return "survived";
    };
    return json{{"first_death_round", round_or_sentinel(s.first_death_round)},
                {"last_death_round", round_or_sentinel(s.last_death_round)},
                {"total_energy_J", s.total_energy}};
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw InvalidArgument("CSV has no column '" + name + "'");
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!s.empty() && s.back() == ',') cells.emplace_back();
        return cells;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (table.header.empty()) {
            table.header = split(line);
            continue;
        }
        auto cells = split(line);
        if (cells.size() != table.header.size())
            throw InvalidArgument("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                  std::to_string(table.header.size()));
        table.rows.push_back(std::move(cells));
    }
    if (table.header.empty()) throw InvalidArgument("CSV is empty");
    return table;
}

}  // namespace wsnga::io
