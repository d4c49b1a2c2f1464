#include "wsnga/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wsnga/error.hpp"
#include "wsnga/io.hpp"
#include "wsnga/oracle.hpp"
#include "wsnga/svg.hpp"

namespace wsnga::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::optional<int> nodes;
    std::vector<std::string> fitness;
    std::optional<int> generations;
    std::optional<int> population;
    std::optional<double> mutation_rate;
    std::optional<int> elitism;
    std::string deployment_file;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "Run configuration JSON");
    cmd->add_option("--seed", o.seed, "Master seed (overrides deployment.seed)");
    cmd->add_option("--out", o.out, "Output directory (overrides output_dir)");
    cmd->add_option("--n", o.nodes, "Node count (overrides deployment.node_count)");
}

void add_ga(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--fitness", o.fitness, "eq2 | eq3 | weights wE,wD,wC")->expected(1, 2);
    cmd->add_option("--generations", o.generations, "GA generations");
    cmd->add_option("--population", o.population, "GA population size");
    cmd->add_option("--mutation-rate", o.mutation_rate, "Per-bit mutation probability");
    cmd->add_option("--elitism", o.elitism, "Individuals copied unchanged each generation");
}

FitnessKind parse_fitness_tokens(const std::vector<std::string>& tokens) {
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    return FitnessKind::parse(joined);
}

void apply_ga(const Overrides& o, GAParams& p) {
    if (!o.fitness.empty()) p.fitness = parse_fitness_tokens(o.fitness);
    if (o.generations) p.generations = *o.generations;
    if (o.population) p.population_size = *o.population;
    if (o.mutation_rate) p.mutation_rate = *o.mutation_rate;
    if (o.elitism) p.elitism_count = *o.elitism;
}

io::RunConfig effective_config(const Overrides& o) {
    io::RunConfig c = o.config.empty() ? io::RunConfig{} : io::load_run_config(o.config);
    if (o.seed) c.deployment.seed = *o.seed;
    if (!o.out.empty()) c.output_dir = o.out;
    if (o.nodes) c.deployment.node_count = *o.nodes;
    return c;
}

Deployment make_deployment(const Overrides& o, const io::RunConfig& c) {
    if (!o.deployment_file.empty()) return io::load_deployment(o.deployment_file);
    return generate_deployment(c.deployment, c.radio.initial_node_energy);
}

std::string survived_or(const std::optional<int>& r) { return r ? std::to_string(*r) : "survived"; }

void print_breakdown(std::ostream& out, const FitnessBreakdown& f) {
    out << "F=" << io::format_number(f.F) << " E=" << io::format_number(f.E) << " TD=" << io::format_number(f.TD)
        << " RCSD=" << io::format_number(f.RCSD) << " TCH=" << f.TCH << " N=" << f.N << '\n';
}

int run_deploy(const Overrides& o, std::ostream& out) {
    const io::RunConfig c = effective_config(o);
    c.validate();
    const Deployment d = make_deployment(o, c);
    const fs::path path = fs::path(c.output_dir) / "deployment.json";
    io::write_text(path, io::deployment_to_json(d).dump(2) + "\n");
    out << "wrote " << path.string() << " (" << d.size() << " nodes)\n";
    return kOk;
}

int run_evolve(const Overrides& o, bool connections, std::ostream& out) {
    io::RunConfig c = effective_config(o);
    apply_ga(o, c.ga);
    c.validate();
    const Deployment d = make_deployment(o, c);
    const EvolutionResult r = evolve(d, c.radio, c.ga, c.deployment.seed);

    const fs::path dir = c.output_dir;
    io::write_text(dir / "metrics.csv", io::metrics_csv(r.trace));
    svg::ClusterPlotOptions plot;
    plot.connections = connections;
    plot.title = "Clusters after " + std::to_string(c.ga.generations) + " generations (" + c.ga.fitness.to_string() + ")";
    io::write_text(dir / "clusters.svg", svg::render_clusters(d, decode(r.best.chromosome, d), plot));

    out << "fitness " << c.ga.fitness.to_string() << ", seed " << c.deployment.seed << '\n';
    out << "best " << r.best.chromosome.to_string() << '\n';
    print_breakdown(out, r.best.fitness);
    out << "wrote " << (dir / "metrics.csv").string() << " and " << (dir / "clusters.svg").string() << '\n';
    return kOk;
}

int run_lifetime_cmd(const Overrides& o, const std::string& protocol, std::optional<int> rounds,
                     std::optional<int> per_config, std::ostream& out) {
    io::RunConfig c = effective_config(o);
    apply_ga(o, c.lifetime.ga);
    if (!protocol.empty()) c.lifetime.protocol = io::parse_protocol(protocol);
    if (rounds) c.lifetime.total_rounds = *rounds;
    if (per_config) c.lifetime.rounds_per_configuration = *per_config;
    c.validate();
    const Deployment d = make_deployment(o, c);
    const LifetimeResult r = run_lifetime(d, c.radio, c.lifetime_config(), c.deployment.seed);
    const LifetimeSummary s = lifetime_summary(r);

    const std::string tag = io::to_string(c.lifetime.protocol);
    const fs::path dir = c.output_dir;
    io::write_text(dir / ("lifetime_" + tag + ".csv"), io::lifetime_csv(r.records));
    io::write_text(dir / ("summary_" + tag + ".json"), io::summary_to_json(s).dump(2) + "\n");
    out << tag << ": rounds " << r.records.size() << ", first death " << survived_or(s.first_death_round)
        << ", last death " << survived_or(s.last_death_round) << ", total energy "
        << io::format_number(s.total_energy) << " J\n";
    return kOk;
}

int run_compare(const Overrides& o, int seeds, std::optional<int> rounds, std::ostream& out) {
    io::RunConfig c = effective_config(o);
    apply_ga(o, c.lifetime.ga);
    if (rounds) c.lifetime.total_rounds = *rounds;
    c.validate();
    if (seeds < 1) throw InvalidArgument("--seeds must be positive");
    const fs::path dir = c.output_dir;
    std::string csv =
        "seed,ga_total_energy_J,leach_total_energy_J,energy_ratio,ga_first_death_round,leach_first_death_round,"
        "ga_last_death_round,leach_last_death_round,ga_alive_at_end,leach_alive_at_end\n";
    const std::uint64_t base = c.deployment.seed;
    for (int k = 0; k < seeds; ++k) {
        io::RunConfig run = c;
        run.deployment.seed = base + static_cast<std::uint64_t>(k);
        const Deployment d = generate_deployment(run.deployment, run.radio.initial_node_energy);
        run.lifetime.protocol = io::Protocol::GA;
        const LifetimeResult ga = run_lifetime(d, run.radio, run.lifetime_config(), run.deployment.seed);
        run.lifetime.protocol = io::Protocol::Leach;
        const LifetimeResult leach = run_lifetime(d, run.radio, run.lifetime_config(), run.deployment.seed);
        const LifetimeSummary sg = lifetime_summary(ga), sl = lifetime_summary(leach);
        const std::string s = std::to_string(run.deployment.seed);
        io::write_text(dir / ("lifetime_ga_seed" + s + ".csv"), io::lifetime_csv(ga.records));
        io::write_text(dir / ("lifetime_leach_seed" + s + ".csv"), io::lifetime_csv(leach.records));
        const double ratio = sl.total_energy > 0.0 ? sg.total_energy / sl.total_energy : 0.0;
        csv += s + ',' + io::format_number(sg.total_energy) + ',' + io::format_number(sl.total_energy) + ',' +
               io::format_number(ratio) + ',' + survived_or(sg.first_death_round) + ',' +
               survived_or(sl.first_death_round) + ',' + survived_or(sg.last_death_round) + ',' +
               survived_or(sl.last_death_round) + ',' + std::to_string(ga.records.back().alive_count) + ',' +
               std::to_string(leach.records.back().alive_count) + '\n';
        out << "seed " << s << ": energy ratio " << io::format_number(ratio) << ", first death GA "
            << survived_or(sg.first_death_round) << " vs LEACH " << survived_or(sl.first_death_round) << '\n';
    }
    io::write_text(dir / "comparison.csv", csv);
    out << "wrote " << (dir / "comparison.csv").string() << '\n';
    return kOk;
}

int run_oracle(const Overrides& o, std::ostream& out) {
    io::RunConfig c = effective_config(o);
    apply_ga(o, c.ga);
    c.validate();
    const Deployment d = make_deployment(o, c);
    const OracleResult r = exhaustive_best(d, c.radio, c.ga.fitness);
    out << "fitness " << c.ga.fitness.to_string() << ", " << r.evaluated << " chromosomes evaluated\n";
    out << "best " << r.best.to_string() << '\n';
    print_breakdown(out, r.fitness);
    return kOk;
}

int run_plot(const std::vector<std::string>& files, const std::vector<std::string>& columns, std::string x_column,
             const std::string& out_dir, std::ostream& out) {
    if (files.empty()) throw InvalidArgument("plot needs at least one CSV file");
    std::vector<io::CsvTable> tables;
    for (const auto& f : files) tables.push_back(io::parse_csv(io::read_text(f)));
    if (x_column.empty()) x_column = tables.front().header.front();

    std::vector<std::string> wanted = columns;
    if (wanted.empty())
        for (const auto& h : tables.front().header)
            if (h != x_column && h != "best_chromosome") wanted.push_back(h);

    auto to_number = [](const std::string& cell) {
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            return used == cell.size() ? v : std::numeric_limits<double>::quiet_NaN();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    for (const auto& col : wanted) {
        std::vector<svg::Series> series;
        for (std::size_t t = 0; t < tables.size(); ++t) {
            const auto& table = tables[t];
            const std::size_t xi = table.column(x_column), yi = table.column(col);
            svg::Series s;
            s.label = fs::path(files[t]).stem().string();
            for (const auto& row : table.rows) {
                s.x.push_back(to_number(row[xi]));
                s.y.push_back(to_number(row[yi]));
            }
            series.push_back(std::move(s));
        }
        svg::ChartOptions opt;
        opt.title = col + " vs " + x_column;
        opt.x_label = x_column;
        opt.y_label = col;
        const fs::path path = fs::path(out_dir) / (col + ".svg");
        io::write_text(path, svg::render_line_chart(series, opt));
        out << "wrote " << path.string() << '\n';
    }
    return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genetic-algorithm clustering for static wireless sensor networks", "wsnga"};
    app.require_subcommand(0, 1);

    bool print_config = false;
    Overrides top;
    app.add_flag("--print-config", print_config, "Print the effective run configuration as JSON and exit");
    app.add_option("--config", top.config, "Run configuration JSON (with --print-config)");

    Overrides deploy_o, evolve_o, life_o, cmp_o, oracle_o;
    auto* deploy = app.add_subcommand("deploy", "Generate a deployment and export it as JSON");
    add_common(deploy, deploy_o);

    auto* evolve_cmd = app.add_subcommand("evolve", "Run the GA; write metrics.csv and clusters.svg");
    add_common(evolve_cmd, evolve_o);
    add_ga(evolve_cmd, evolve_o);
    evolve_cmd->add_option("--deployment", evolve_o.deployment_file, "Use a deployment JSON instead of generating");
    bool connections = false;
    evolve_cmd->add_flag("--connections", connections, "Draw member-to-head lines in clusters.svg");

    auto* life = app.add_subcommand("lifetime", "Simulate network lifetime under GA or LEACH clustering");
    add_common(life, life_o);
    add_ga(life, life_o);
    life->add_option("--deployment", life_o.deployment_file, "Use a deployment JSON instead of generating");
    std::string protocol;
    std::optional<int> rounds, per_config;
    life->add_option("--protocol", protocol, "ga | leach")->check(CLI::IsMember({"ga", "leach"}));
    life->add_option("--rounds", rounds, "Total rounds");
    life->add_option("--rounds-per-config", per_config, "Rounds between GA re-clusterings");

    auto* cmp = app.add_subcommand("compare", "Paired GA/LEACH lifetime runs over consecutive seeds");
    add_common(cmp, cmp_o);
    add_ga(cmp, cmp_o);
    int seeds = 5;
    std::optional<int> cmp_rounds;
    cmp->add_option("--seeds", seeds, "Number of consecutive seeds starting at --seed");
    cmp->add_option("--rounds", cmp_rounds, "Total rounds");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for the best chromosome (N <= 20)");
    add_common(oracle, oracle_o);
    oracle->add_option("--fitness", oracle_o.fitness, "eq2 | eq3 | weights wE,wD,wC")->expected(1, 2);
    oracle->add_option("--deployment", oracle_o.deployment_file, "Use a deployment JSON instead of generating");

    auto* plot = app.add_subcommand("plot", "Render CSV columns as SVG line charts");
    std::vector<std::string> plot_files, plot_columns;
    std::string plot_x, plot_out = "out";
    plot->add_option("csv", plot_files, "CSV files (one series each)")->required();
    plot->add_option("--columns", plot_columns, "Columns to plot (default: all but x)")->delimiter(',');
    plot->add_option("--x", plot_x, "x-axis column (default: first column)");
    plot->add_option("--out", plot_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (print_config) {
            out << io::to_json(effective_config(top)).dump(2) << '\n';
            return kOk;
        }
        if (*deploy) return run_deploy(deploy_o, out);
        if (*evolve_cmd) return run_evolve(evolve_o, connections, out);
        if (*life) return run_lifetime_cmd(life_o, protocol, rounds, per_config, out);
        if (*cmp) return run_compare(cmp_o, seeds, cmp_rounds, out);
        if (*oracle) return run_oracle(oracle_o, out);
        if (*plot) return run_plot(plot_files, plot_columns, plot_x, plot_out, out);
        out << app.help();
        return kUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace wsnga::cli
