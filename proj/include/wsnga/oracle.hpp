#pragma once

#include "wsnga/clustering.hpp"

namespace wsnga {

inline constexpr int kOracleMaxNodes = 20;

struct OracleResult {
    Chromosome best;
    FitnessBreakdown fitness;
    long long evaluated = 0;
};

/// Exhaustive search over every non-zero head vector. Exact fitness ties go
/// to the lexicographically smallest bit string. Vectors whose heads are all
/// dead are skipped. Rejects more than kOracleMaxNodes nodes.
OracleResult exhaustive_best(const Deployment& deployment, const RadioModel& radio, const FitnessKind& kind);

}  // namespace wsnga
