#include "wsnga/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <sstream>

#include "wsnga/error.hpp"

namespace wsnga {

using detail::require;

Chromosome Chromosome::from_string(std::string_view text) {
    Bits bits(static_cast<Eigen::Index>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') throw InvalidArgument("chromosome strings may only contain '0' and '1'");
        bits(static_cast<Eigen::Index>(i)) = (c == '1');
    }
    return Chromosome(std::move(bits));
}

std::string Chromosome::to_string() const {
    std::string out(static_cast<std::size_t>(bits.size()), '0');
    for (Eigen::Index i = 0; i < bits.size(); ++i)
        if (bits(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

std::vector<int> ClusterAssignment::members_of(int head) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < head_of.size(); ++v)
        if (head_of[v] == head && static_cast<int>(v) != head) out.push_back(static_cast<int>(v));
    return out;
}

namespace {

double parse_double(std::string_view token) {
    std::string s(token);
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v = 0.0;
    in >> v;
    if (!in || !in.eof() || !std::isfinite(v))
        throw InvalidArgument("invalid fitness weight '" + s + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// w * num / den where a zero weight silences the term entirely.
double weighted_ratio(double w, double num, double den) {
    if (w == 0.0) return 0.0;
    if (den == 0.0) {
        if (num == 0.0) return 0.0;
        return std::copysign(std::numeric_limits<double>::infinity(), w * num);
    }
    return w * num / den;
}

}  // namespace

std::string FitnessKind::to_string() const {
    switch (form) {
        case Form::Eq2: return "eq2";
        case Form::Eq3: return "eq3";
        case Form::Weighted: {
            std::ostringstream out;
            out.imbue(std::locale::classic());
            out.precision(17);
            out << "weights " << weights(0) << ',' << weights(1) << ',' << weights(2);
            return out.str();
        }
    }
    return {};
}

FitnessKind FitnessKind::parse(std::string_view text) {
    text = trim(text);
    if (text == "eq2") return eq2();
    if (text == "eq3") return eq3();
    constexpr std::string_view prefix = "weights";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view rest = text.substr(prefix.size());
        if (!rest.empty() && (rest.front() == '=' || rest.front() == ':')) rest.remove_prefix(1);
        rest = trim(rest);
        Eigen::Vector3d w;
        for (int i = 0; i < 3; ++i) {
            const auto comma = rest.find(',');
            if ((i < 2) == (comma == std::string_view::npos))
                throw InvalidArgument("weights need exactly three comma-separated values");
            w(i) = parse_double(trim(rest.substr(0, comma)));
            rest = i < 2 ? rest.substr(comma + 1) : std::string_view{};
        }
        return weighted(w(0), w(1), w(2));
    }
    throw InvalidArgument("unknown fitness '" + std::string(text) + "' (expected eq2, eq3 or weights wE,wD,wC)");
}

bool repair(Chromosome& chromosome, const Deployment& deployment) {
    require(chromosome.size() == deployment.size(), "chromosome length differs from node count");
    const auto alive = deployment.alive_mask();
    if ((chromosome.bits && alive).any()) return false;
    const Eigen::VectorXd d = deployment.sink_distances();
    int best = -1;
    for (int i = 0; i < deployment.size(); ++i)
        if (alive(i) && (best < 0 || d(i) < d(best))) best = i;
    require(best >= 0, "cannot repair a chromosome when no node is alive");
    chromosome.bits(best) = true;
    chromosome.cached_fitness.reset();
    return true;
}

double combine(const FitnessKind& kind, const FitnessBreakdown& p) {
    const double distance_gain = p.TD - p.RCSD;
    const double head_gain = static_cast<double>(p.N - p.TCH);
    switch (kind.form) {
        case FitnessKind::Form::Eq2:
            return weighted_ratio(1.0, 1.0, p.E) + distance_gain + head_gain;
        case FitnessKind::Form::Eq3:
            return combine(FitnessKind::weighted(100.0, 1.0, 1.0), p);
        case FitnessKind::Form::Weighted:
            return weighted_ratio(kind.weights(0), 1.0, p.E) +
                   weighted_ratio(kind.weights(1), distance_gain, p.TD) +
                   weighted_ratio(kind.weights(2), head_gain, static_cast<double>(p.N));
    }
    return 0.0;
}

FitnessEvaluator::FitnessEvaluator(const Deployment& deployment, const RadioModel& radio, FitnessKind kind)
    : deployment_(deployment),
      radio_(radio),
      kind_(std::move(kind)),
      pairwise_(pairwise_distances(deployment.positions())),
      sink_(deployment.sink_distances()),
      alive_(deployment.alive_mask()) {
    radio_.validate();
    const int n = deployment_.size();
    by_distance_.resize(n, n);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double da = pairwise_(v, a), db = pairwise_(v, b);
            return da < db || (da == db && a < b);
        });
        std::copy(order.begin(), order.end(), by_distance_.col(v).data());
    }
    if (kind_.form == FitnessKind::Form::Weighted)
        require(kind_.weights.allFinite(), "fitness weights must be finite");
    alive_count_ = static_cast<int>(alive_.count());
    for (int i = 0; i < deployment_.size(); ++i)
        if (alive_(i)) total_distance_ += sink_(i);
}

ClusterAssignment FitnessEvaluator::decode(const Chromosome& chromosome) const {
    const int n = deployment_.size();
    require(chromosome.size() == n, "chromosome length differs from node count");
    ClusterAssignment out;
    out.head_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        if (alive_(i) && chromosome.bits(i)) out.head_ids.push_back(i);
    if (out.head_ids.empty()) throw DegenerateChromosome("chromosome has no alive cluster head");

    // Each column of by_distance_ lists nodes by (distance, id), so the first
    // alive head met is the nearest one with the lowest id.
    std::vector<int>& best = out.head_of;
    for (int v = 0; v < n; ++v) {
        const int* order = by_distance_.col(v).data();
        int k = 0;
        while (!(chromosome.bits(order[k]) && alive_(order[k]))) ++k;
        best[static_cast<std::size_t>(v)] = order[k];
    }
    for (int v = 0; v < n; ++v)
        if (!alive_(v)) best[static_cast<std::size_t>(v)] = -1;
    for (int h : out.head_ids) best[static_cast<std::size_t>(h)] = h;
    return out;
}

FitnessBreakdown FitnessEvaluator::evaluate(const Chromosome& chromosome) const {
    const ClusterAssignment a = decode(chromosome);
    const int n = deployment_.size();
    const int bits = deployment_.packet_bits();
    const double b = bits;

    // Per-node accumulators indexed by head id.
    Eigen::VectorXd member_tx = Eigen::VectorXd::Zero(n);
    Eigen::VectorXi member_count = Eigen::VectorXi::Zero(n);
    double member_distance = 0.0;
    for (int v = 0; v < n; ++v) {
        const int h = a.head_of[static_cast<std::size_t>(v)];
        if (h < 0 || h == v) continue;
        const double d = pairwise_(v, h);
        member_distance += d;
        member_tx(h) += b * radio_.electronics_energy + b * radio_.amplifier_energy * d * d;
        member_count(h) += 1;
    }

    FitnessBreakdown out;
    double head_distance = 0.0;
    const double rx = b * radio_.electronics_energy;
    for (int h : a.head_ids) {
        const double ds = sink_(h);
        head_distance += ds;
        const int m = member_count(h);
        const int receptions = radio_.receive_all_members ? m : std::max(m - 1, 0);
        out.E += member_tx(h) + receptions * rx +
                 (b * radio_.electronics_energy + b * radio_.amplifier_energy * ds * ds);
    }
    out.RCSD = member_distance + head_distance;
    out.TD = total_distance_;
    out.TCH = a.head_count();
    out.N = alive_count_;
    out.F = combine(kind_, out);
    return out;
}

ClusterAssignment assign_to_nearest_heads(const Bits& heads, const Deployment& deployment) {
    const int n = deployment.size();
    require(heads.size() == n, "head mask length differs from node count");
    ClusterAssignment out;
    out.head_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        if (heads(i) && deployment.alive(i)) {
            out.head_ids.push_back(i);
            out.head_of[static_cast<std::size_t>(i)] = i;
        }
    if (out.head_ids.empty()) throw DegenerateChromosome("chromosome has no alive cluster head");
    for (int v = 0; v < n; ++v) {
        if (!deployment.alive(v) || heads(v)) continue;
        int best = -1;
        double best_d = 0.0;
        for (int h : out.head_ids) {
            const double d = distance(deployment.position(v), deployment.position(h));
            if (best < 0 || d < best_d) {
                best_d = d;
                best = h;
            }
        }
        out.head_of[static_cast<std::size_t>(v)] = best;
    }
    return out;
}

ClusterAssignment decode(const Chromosome& chromosome, const Deployment& deployment) {
    require(chromosome.size() == deployment.size(), "chromosome length differs from node count");
    return assign_to_nearest_heads(chromosome.bits, deployment);
}

double rcsd(const ClusterAssignment& assignment, const Deployment& deployment) {
    require(assignment.head_of.size() == static_cast<std::size_t>(deployment.size()),
            "assignment size differs from node count");
    double sum = 0.0;
    for (int v = 0; v < deployment.size(); ++v) {
        const int h = assignment.head_of[static_cast<std::size_t>(v)];
        if (h < 0) continue;
        if (h == v)
            sum += distance(deployment.position(v), deployment.sink());
        else
            sum += distance(deployment.position(v), deployment.position(h));
    }
    return sum;
}

double network_transfer_energy(const ClusterAssignment& assignment, const Deployment& deployment,
                               const RadioModel& radio) {
    double total = 0.0;
    const int bits = deployment.packet_bits();
    for (int h : assignment.head_ids) {
        std::vector<double> d;
        for (int v : assignment.members_of(h)) d.push_back(distance(deployment.position(v), deployment.position(h)));
        total += cluster_transfer_energy(radio, d, distance(deployment.position(h), deployment.sink()), bits);
    }
    return total;
}

FitnessBreakdown fitness_eq2(const Chromosome& chromosome, const Deployment& deployment,
                             const RadioModel& radio) {
    return FitnessEvaluator(deployment, radio, FitnessKind::eq2()).evaluate(chromosome);
}

FitnessBreakdown fitness_eq3(const Chromosome& chromosome, const Deployment& deployment,
                             const RadioModel& radio) {
    return FitnessEvaluator(deployment, radio, FitnessKind::eq3()).evaluate(chromosome);
}

FitnessBreakdown generalized_fitness(const Eigen::Vector3d& weights, const Chromosome& chromosome,
                                     const Deployment& deployment, const RadioModel& radio) {
    return FitnessEvaluator(deployment, radio, FitnessKind::weighted(weights(0), weights(1), weights(2)))
        .evaluate(chromosome);
}

}  // namespace wsnga
