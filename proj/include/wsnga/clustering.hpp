#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "wsnga/energy.hpp"
#include "wsnga/network.hpp"

namespace wsnga {

using Bits = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// One bit per node; a set bit marks a cluster head.
struct Chromosome {
    Bits bits;
    std::optional<double> cached_fitness;

    Chromosome() = default;
    explicit Chromosome(Bits b) : bits(std::move(b)) {}

    int size() const { return static_cast<int>(bits.size()); }
    int head_bits() const { return static_cast<int>(bits.count()); }

    static Chromosome all_heads(int n) { return Chromosome(Bits::Constant(n, true)); }
    static Chromosome none(int n) { return Chromosome(Bits::Constant(n, false)); }
    static Chromosome from_string(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const Chromosome& a, const Chromosome& b) {
        return a.bits.size() == b.bits.size() && (a.bits == b.bits).all();
    }
};

/// Nearest-head decoding of a chromosome over the alive nodes.
struct ClusterAssignment {
    std::vector<int> head_ids;  // ascending
    /// For each node: itself if a head, its head if a member, -1 if dead.
    std::vector<int> head_of;

    int head_count() const { return static_cast<int>(head_ids.size()); }
    bool is_head(int id) const { return head_of[static_cast<std::size_t>(id)] == id; }
    bool is_member(int id) const {
        const int h = head_of[static_cast<std::size_t>(id)];
        return h >= 0 && h != id;
    }
    /// Member ids of `head`, ascending.
    std::vector<int> members_of(int head) const;
};

struct FitnessBreakdown {
    double F = 0.0;
    double E = 0.0;     // joules
    double TD = 0.0;    // meters
    double RCSD = 0.0;  // meters
    int TCH = 0;
    int N = 0;          // alive nodes
};

/// Which scalar objective turns a breakdown into F.
struct FitnessKind {
    enum class Form { Eq2, Eq3, Weighted };
    Form form = Form::Eq3;
    /// (energy, distance, head-count) weights; only read for Weighted.
    Eigen::Vector3d weights{100.0, 1.0, 1.0};

    static FitnessKind eq2() { return {Form::Eq2, {1.0, 1.0, 1.0}}; }
    static FitnessKind eq3() { return {Form::Eq3, {100.0, 1.0, 1.0}}; }
    static FitnessKind weighted(double energy, double dist, double heads) {
        return {Form::Weighted, {energy, dist, heads}};
    }

    /// "eq2", "eq3" or "weights wE,wD,wC".
    std::string to_string() const;
    static FitnessKind parse(std::string_view text);

    friend bool operator==(const FitnessKind& a, const FitnessKind& b) {
        return a.form == b.form && (a.form != Form::Weighted || a.weights == b.weights);
    }
};

/// Sets the bit of the alive node nearest the sink (lowest id on ties) when
/// no alive node is a head. Returns true if the chromosome changed.
bool repair(Chromosome& chromosome, const Deployment& deployment);

/// Joins every alive non-head node to its nearest alive head, lowest head id
/// on ties. Throws DegenerateChromosome when no alive node is a head.
ClusterAssignment assign_to_nearest_heads(const Bits& heads, const Deployment& deployment);

/// Throws DegenerateChromosome when no alive node is a head.
ClusterAssignment decode(const Chromosome& chromosome, const Deployment& deployment);

/// Member-to-head plus head-to-sink distance sum.
double rcsd(const ClusterAssignment& assignment, const Deployment& deployment);

/// Sum of the per-cluster transfer energy over all clusters (aggregation excluded).
double network_transfer_energy(const ClusterAssignment& assignment, const Deployment& deployment,
                               const RadioModel& radio);

/// F = 1/E + (TD - RCSD) + (N - TCH).
FitnessBreakdown fitness_eq2(const Chromosome& chromosome, const Deployment& deployment,
                             const RadioModel& radio);
/// F = 100/E + (TD - RCSD)/TD + (N - TCH)/N.
FitnessBreakdown fitness_eq3(const Chromosome& chromosome, const Deployment& deployment,
                             const RadioModel& radio);
/// F = wE/E + wD (TD - RCSD)/TD + wC (N - TCH)/N.
FitnessBreakdown generalized_fitness(const Eigen::Vector3d& weights, const Chromosome& chromosome,
                                     const Deployment& deployment, const RadioModel& radio);

/// F for the components of `parts` under `kind`; parts.F is not read.
double combine(const FitnessKind& kind, const FitnessBreakdown& parts);

/// Repeated evaluation against one deployment. Caches the pairwise and sink
/// distances; evaluate() is const and safe to call concurrently.
class FitnessEvaluator {
public:
    FitnessEvaluator(const Deployment& deployment, const RadioModel& radio, FitnessKind kind);

    FitnessBreakdown evaluate(const Chromosome& chromosome) const;
    ClusterAssignment decode(const Chromosome& chromosome) const;

    const Deployment& deployment() const { return deployment_; }
    const RadioModel& radio() const { return radio_; }
    const FitnessKind& kind() const { return kind_; }
    double total_distance() const { return total_distance_; }
    double node_distance(int a, int b) const { return pairwise_(a, b); }
    double sink_distance(int id) const { return sink_(id); }

private:
    Deployment deployment_;
    RadioModel radio_;
    FitnessKind kind_;
    Eigen::MatrixXd pairwise_;
    Eigen::MatrixXi by_distance_;
    Eigen::VectorXd sink_;
    Bits alive_;
    int alive_count_ = 0;
    double total_distance_ = 0.0;
};

}  // namespace wsnga
