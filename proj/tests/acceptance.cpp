// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wsnga/cli.hpp"
#include "wsnga/ga.hpp"
#include "wsnga/io.hpp"
#include "wsnga/leach.hpp"
#include "wsnga/lifetime.hpp"
#include "wsnga/oracle.hpp"

using namespace wsnga;
namespace fs = std::filesystem;

namespace {

constexpr int kSeeds = 5;
constexpr double kRunBudgetSeconds = 120.0;
constexpr int kMaxFinalHeads = 40;
constexpr double kMaxHeadRatio = 0.5;
constexpr int kHeadSeedsNeeded = 4;
constexpr int kOracleSeeds = 20;
constexpr int kOracleHitsNeeded = 18;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr double kOracleFitnessTolerance = 1e-9;  // relative
constexpr double kEnergyRatioLimit = 0.9;
constexpr int kFirstDeathWinsNeeded = 4;
constexpr double kFrequencyTolerance = 0.01;
constexpr int kFrequencyDraws = 100000;
constexpr double kLedgerTolerance = 1e-9;  // relative

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
}

void info(const std::string& text) {
    std::printf("  info: %s\n", text.c_str());
    std::fflush(stdout);
}

Deployment default_deployment(std::uint64_t seed, int n = 200) {
    NetworkConfig cfg;
    cfg.node_count = n;
    cfg.seed = seed;
    return generate_deployment(cfg, RadioModel{}.initial_node_energy);
}

GAParams reference_params(FitnessKind kind) {
    GAParams p;
    p.fitness = kind;
    return p;
}

struct TracedRun {
    std::uint64_t seed;
    std::string fitness;
    EvolutionResult result;
    double seconds;
};

// ---------------------------------------------------------------- 1 and 3
std::vector<TracedRun> reference_runs() {
    std::vector<TracedRun> runs;
    for (const FitnessKind& kind : {FitnessKind::eq2(), FitnessKind::eq3()})
        for (std::uint64_t s = 1; s <= kSeeds; ++s) {
            const auto t0 = Clock::now();
            EvolutionResult r = evolve(default_deployment(s), RadioModel{}, reference_params(kind), s);
            runs.push_back({s, kind.to_string(), std::move(r), seconds_since(t0)});
        }
    return runs;
}

void criterion_monotone(const std::vector<TracedRun>& runs) {
    bool ok = true;
    double slowest = 0.0;
    std::string where;
    for (const TracedRun& r : runs) {
        slowest = std::max(slowest, r.seconds);
        if (r.seconds >= kRunBudgetSeconds) ok = false;
        const auto& t = r.result.trace;
        if (t.size() != 201) ok = false;
        for (std::size_t g = 1; g < t.size(); ++g)
            if (t[g].best_F < t[g - 1].best_F) {
                ok = false;
                where += " " + r.fitness + "/seed" + std::to_string(r.seed) + "@gen" + std::to_string(g);
                break;
            }
    }
    std::ostringstream d;
    d << runs.size() << " runs (eq2, eq3 x " << kSeeds << " seeds), best_F non-decreasing over 200 generations"
      << (where.empty() ? "" : "; drops at" + where) << "; slowest run " << slowest << " s (limit "
      << kRunBudgetSeconds << " s)";
    report(1, ok, "elitist monotonicity", d.str());
}

void criterion_curves(const std::vector<TracedRun>& runs) {
    bool ok = true;
    std::ostringstream d;
    for (const TracedRun& r : runs) {
        const auto& first = r.result.trace.front();
        const auto& last = r.result.trace.back();
        const bool pass = last.best_RCSD < first.best_RCSD && last.best_E < first.best_E;
        ok = ok && pass;
        d << ' ' << r.fitness << "/s" << r.seed << " RCSD " << std::lround(first.best_RCSD) << "->"
          << std::lround(last.best_RCSD) << " E " << first.best_E << "->" << last.best_E << (pass ? "" : " (!)")
          << ';';
    }
    report(3, ok, "distance and energy curves fall", "generation 0 vs 200:" + d.str());
}

// ---------------------------------------------------------------- 2
int seeds_collapsing(const GAParams& params, std::string& detail) {
    int passed = 0;
    std::ostringstream d;
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
        const EvolutionResult r = evolve(default_deployment(s), RadioModel{}, params, s);
        const int first = r.trace.front().best_TCH, last = r.trace.back().best_TCH;
        const bool pass = last <= kMaxFinalHeads && last <= kMaxHeadRatio * first;
        passed += pass;
        d << " s" << s << ' ' << first << "->" << last << (pass ? "" : " (!)") << ';';
    }
    detail = d.str();
    return passed;
}

void criterion_head_collapse() {
    GAParams preset = reference_params(FitnessKind::eq2());
    const GAParams lifetime_ga = io::LifetimeSection::lifetime_ga_defaults();
    preset.mutation_rate = lifetime_ga.mutation_rate;
    preset.elitism_count = lifetime_ga.elitism_count;

    std::string detail;
    const int passed = seeds_collapsing(preset, detail);
    std::ostringstream d;
    d << passed << "/" << kSeeds << " seeds with final best_TCH <= " << kMaxFinalHeads << " and <= "
      << kMaxHeadRatio * 100 << "% of generation 0 (need " << kHeadSeedsNeeded << "); eq2, mutation "
      << preset.mutation_rate << "/bit, elitism " << preset.elitism_count << ":" << detail;
    report(2, passed >= kHeadSeedsNeeded, "head-count collapse", d.str());

    const int literal = seeds_collapsing(reference_params(FitnessKind::eq2()), detail);
    info("same band with mutation 0.3/bit, elitism 1: " + std::to_string(literal) + "/" + std::to_string(kSeeds) +
         ":" + detail);
}

// ---------------------------------------------------------------- 4
void criterion_oracle() {
    GAParams p = reference_params(FitnessKind::eq3());
    p.population_size = 50;
    p.generations = 300;
    int hits = 0;
    bool bounded = true;
    const auto t0 = Clock::now();
    for (std::uint64_t s = 1; s <= kOracleSeeds; ++s) {
        const Deployment d = default_deployment(s, 10);
        const double best = exhaustive_best(d, RadioModel{}, p.fitness).fitness.F;
        const double ga = evolve(d, RadioModel{}, p, s).best.fitness.F;
        if (ga > best) bounded = false;
        if (std::abs(ga - best) <= kOracleFitnessTolerance * std::abs(best)) ++hits;
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "GA reached the exhaustive optimum in " << hits << "/" << kOracleSeeds << " seeds (need "
      << kOracleHitsNeeded << "); GA <= oracle in all: " << (bounded ? "yes" : "no") << "; " << elapsed
      << " s total (limit " << kOracleBudgetSeconds << " s)";
    report(4, hits >= kOracleHitsNeeded && bounded && elapsed < kOracleBudgetSeconds, "oracle equivalence", d.str());
}

// ---------------------------------------------------------------- 5
void criterion_leach() {
    io::RunConfig base;
    int energy_ok = 0, first_death_wins = 0;
    std::ostringstream d;
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
        const Deployment dep = default_deployment(s);
        io::RunConfig run = base;
        run.lifetime.protocol = io::Protocol::GA;
        const LifetimeSummary ga = lifetime_summary(run_lifetime(dep, run.radio, run.lifetime_config(), s));
        run.lifetime.protocol = io::Protocol::Leach;
        const LifetimeSummary leach = lifetime_summary(run_lifetime(dep, run.radio, run.lifetime_config(), s));
        const double ratio = ga.total_energy / leach.total_energy;
        energy_ok += ratio <= kEnergyRatioLimit;
        const int total = base.lifetime.total_rounds + 1;
        const int ga_first = ga.first_death_round.value_or(total);
        const int leach_first = leach.first_death_round.value_or(total);
        first_death_wins += ga_first >= leach_first;
        d << " s" << s << " ratio " << std::round(ratio * 1000) / 1000 << " first death " << ga_first << " vs "
          << leach_first << ';';
    }
    std::ostringstream head;
    head << "energy ratio <= " << kEnergyRatioLimit << " in " << energy_ok << "/" << kSeeds
         << " pairs (need all); GA first death >= LEACH in " << first_death_wins << "/" << kSeeds << " (need "
         << kFirstDeathWinsNeeded << "); " << base.lifetime.total_rounds << " rounds, re-cluster every "
         << base.lifetime.rounds_per_configuration << ":" << d.str();
    report(5, energy_ok == kSeeds && first_death_wins >= kFirstDeathWinsNeeded, "GA vs LEACH lifetime", head.str());
}

// ---------------------------------------------------------------- 6
int cli(std::vector<std::string> args, std::string* printed = nullptr) {
    args.insert(args.begin(), "wsnga");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (printed) *printed = out.str();
    return code;
}

std::string slurp(const fs::path& p) { return io::read_text(p); }

void criterion_determinism() {
    const fs::path root = "acceptance_out";
    fs::remove_all(root);
    const std::vector<std::vector<std::string>> commands{
        {"deploy"},
        {"evolve", "--connections"},
        {"evolve", "--fitness", "eq3"},
        {"lifetime", "--protocol", "leach"},
        {"lifetime", "--protocol", "ga", "--rounds", "150"},
        {"compare", "--seeds", "2", "--rounds", "100"},
    };
    int compared = 0, mismatched = 0, errors = 0;
    for (std::size_t k = 0; k < commands.size(); ++k) {
        std::array<fs::path, 2> dirs{root / ("a" + std::to_string(k)), root / ("b" + std::to_string(k))};
        for (const fs::path& dir : dirs) {
            auto args = commands[k];
            args.insert(args.end(), {"--seed", "3", "--out", dir.string()});
            if (cli(args) != 0) ++errors;
        }
        for (const auto& e : fs::directory_iterator(dirs[0])) {
            ++compared;
            const fs::path twin = dirs[1] / e.path().filename();
            if (!fs::exists(twin) || slurp(e.path()) != slurp(twin)) ++mismatched;
        }
        if (k == 1)
            for (const fs::path& dir : dirs)
                if (cli({"plot", (dir / "metrics.csv").string(), "--out", (dir / "plots").string()}) != 0) ++errors;
    }
    for (const auto& e : fs::directory_iterator(root / "a1" / "plots")) {
        ++compared;
        if (slurp(e.path()) != slurp(root / "b1" / "plots" / e.path().filename())) ++mismatched;
    }
    // oracle writes nothing; its report goes to stdout
    std::array<std::string, 2> oracle_text;
    for (auto& text : oracle_text)
        if (cli({"oracle", "--n", "14", "--seed", "3"}, &text) != 0) ++errors;
    ++compared;
    if (oracle_text[0] != oracle_text[1]) ++mismatched;
    std::ostringstream d;
    d << compared << " outputs from deploy/evolve/lifetime/compare/plot/oracle compared across reruns, " << mismatched
      << " differ, " << errors << " command failures";
    report(6, compared > 0 && mismatched == 0 && errors == 0, "byte-identical reruns", d.str());
}

// ---------------------------------------------------------------- 7
Deployment random_instance(Rng& rng) {
    NetworkConfig cfg;
    cfg.node_count = 2 + static_cast<int>(rng.below(150));
    cfg.field_width = rng.uniform(20.0, 400.0);
    cfg.field_height = rng.uniform(20.0, 400.0);
    cfg.seed = rng.next();
    Deployment d = generate_deployment(cfg, 0.5);
    Eigen::ArrayXd e = d.energies();
    for (int i = 0; i < d.size(); ++i)
        if (rng.bernoulli(0.2)) e(i) = 0.0;
    if (!(e > 0.0).any()) e(0) = 0.5;
    return d.with_energies(e);
}

Chromosome random_bits(int n, double p, Rng& rng) {
    Chromosome c = Chromosome::none(n);
    for (int i = 0; i < n; ++i) c.bits(i) = rng.bernoulli(p);
    return c;
}

bool partition_holds(Rng& rng) {
    for (int t = 0; t < 200; ++t) {
        const Deployment d = random_instance(rng);
        Chromosome c = random_bits(d.size(), rng.uniform01(), rng);
        repair(c, d);
        const ClusterAssignment a = decode(c, d);
        for (int v = 0; v < d.size(); ++v) {
            const int h = a.head_of[static_cast<std::size_t>(v)];
            if (!d.alive(v)) {
                if (h != -1) return false;
                continue;
            }
            if (h < 0 || !d.alive(h) || !c.bits(h)) return false;
            if (h != v && c.bits(v)) return false;
            const double dv = distance(d.position(v), d.position(h));
            for (int o : a.head_ids) {
                const double other = distance(d.position(v), d.position(o));
                if (other < dv || (other == dv && o < h)) return false;
            }
        }
        if (a.head_count() != (c.bits && d.alive_mask()).count()) return false;
    }
    return true;
}

double roulette_worst_gap(Rng& rng) {
    const std::array<double, 5> fitness{3.0, 1.0, 4.0, 1.5, 0.5};
    const RouletteWheel w(fitness);
    std::array<int, 5> hits{};
    for (int i = 0; i < kFrequencyDraws; ++i) ++hits[w.spin(rng)];
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        worst = std::max(worst, std::abs(hits[i] / double(kFrequencyDraws) - fitness[i] / 10.0));
    return worst;
}

bool crossover_conserves(Rng& rng) {
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + static_cast<int>(rng.below(100));
        const Chromosome a = random_bits(n, 0.5, rng), b = random_bits(n, 0.5, rng);
        const auto [x, y] = single_point_crossover(a, b, rng.uniform01(), rng);
        for (int i = 0; i < n; ++i) {
            const bool straight = x.bits(i) == a.bits(i) && y.bits(i) == b.bits(i);
            const bool swapped = x.bits(i) == b.bits(i) && y.bits(i) == a.bits(i);
            if (!straight && !swapped) return false;
        }
    }
    return true;
}

bool mutation_boundaries(Rng& rng) {
    for (int t = 0; t < 300; ++t) {
        const Chromosome c = random_bits(1 + static_cast<int>(rng.below(100)), 0.5, rng);
        if (!(mutate(c, 0.0, rng) == c)) return false;
        if (!(mutate(c, 1.0, rng).bits == !c.bits).all()) return false;
    }
    return true;
}

// Returns {worst relative ledger gap, alive counts monotone}.
std::pair<double, bool> lifetime_invariants(Rng& rng) {
    double worst = 0.0;
    bool monotone = true;
    for (int t = 0; t < 10; ++t) {
        Deployment d = random_instance(rng);
        Eigen::ArrayXd e = d.energies();
        for (int i = 0; i < d.size(); ++i)
            if (e(i) > 0) e(i) = rng.uniform(1e-4, 4e-3);
        d = d.with_energies(e);
        LifetimeConfig c;
        c.total_rounds = 300;
        c.rounds_per_configuration = 1 + static_cast<int>(rng.below(8));
        if (t % 2 == 0) {
            GAParams g;
            g.population_size = 16;
            g.generations = 5;
            g.elitism_count = 2;
            c.protocol = g;
        } else {
            c.protocol = LeachParams{rng.uniform(0.02, 0.5)};
        }
        const LifetimeResult r = run_lifetime(d, RadioModel{}, c, rng.next());
        int previous = r.initial_alive;
        for (const RoundRecord& rec : r.records) {
            if (rec.alive_count > previous) monotone = false;
            previous = rec.alive_count;
        }
        const double drained = (r.initial_energy - r.final_energy).sum();
        const double reported = r.records.back().cumulative_energy;
        if (drained > 0) worst = std::max(worst, std::abs(drained - reported) / drained);
    }
    return {worst, monotone};
}

void criterion_invariants() {
    Rng rng(20240601);
    const bool partition = partition_holds(rng);
    const double gap = roulette_worst_gap(rng);
    const bool conserve = crossover_conserves(rng);
    const bool boundaries = mutation_boundaries(rng);
    const auto [ledger, monotone] = lifetime_invariants(rng);
    std::ostringstream d;
    d << "decode partition " << (partition ? "ok" : "broken") << "; roulette max frequency gap " << gap << " (limit "
      << kFrequencyTolerance << ", " << kFrequencyDraws << " draws); crossover conservation "
      << (conserve ? "ok" : "broken") << "; mutation rate 0/1 " << (boundaries ? "ok" : "broken")
      << "; energy ledger worst relative gap " << ledger << " (limit " << kLedgerTolerance << "); alive counts "
      << (monotone ? "non-increasing" : "increase seen");
    report(7, partition && gap <= kFrequencyTolerance && conserve && boundaries && ledger <= kLedgerTolerance &&
                  monotone,
           "invariant suites", d.str());
}

void guarded(int id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, "exception", e.what());
    }
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    std::vector<TracedRun> runs;
    guarded(1, [&] {
        runs = reference_runs();
        criterion_monotone(runs);
    });
    guarded(2, criterion_head_collapse);
    guarded(3, [&] {
        if (runs.empty()) throw std::runtime_error("no traced runs");
        criterion_curves(runs);
    });
    guarded(4, criterion_oracle);
    guarded(5, criterion_leach);
    guarded(6, criterion_determinism);
    guarded(7, criterion_invariants);
    std::printf("%s: %d criteria failed, %.1f s\n", failures == 0 ? "ALL PASS" : "FAILURES", failures,
                seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
