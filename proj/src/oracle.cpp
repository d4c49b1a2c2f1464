#include "wsnga/oracle.hpp"

#include <cstdint>

#include "wsnga/error.hpp"

namespace wsnga {

namespace {

// Bit string order with node 0 as the first character.
bool lexicographically_less(const Bits& a, const Bits& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return !a(i);
    return false;
}

}  // namespace

OracleResult exhaustive_best(const Deployment& deployment, const RadioModel& radio, const FitnessKind& kind) {
    const int n = deployment.size();
    detail::require(n <= kOracleMaxNodes, "oracle is limited to " + std::to_string(kOracleMaxNodes) + " nodes");
    detail::require(deployment.alive_count() >= 1, "oracle needs at least one alive node");
    const FitnessEvaluator evaluator(deployment, radio, kind);
    const auto alive = deployment.alive_mask();

    OracleResult out;
    bool have = false;
    Chromosome candidate = Chromosome::none(n);
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        for (int i = 0; i < n; ++i) candidate.bits(i) = ((mask >> i) & 1u) != 0;
        if (!(candidate.bits && alive).any()) continue;
        const FitnessBreakdown f = evaluator.evaluate(candidate);
        ++out.evaluated;
        if (!have || f.F > out.fitness.F ||
            (f.F == out.fitness.F && lexicographically_less(candidate.bits, out.best.bits))) {
            out.best = candidate;
            out.fitness = f;
            have = true;
        }
    }
    out.best.cached_fitness = out.fitness.F;
    return out;
}

}  // namespace wsnga
