#include "doctest.h"
#include "support.hpp"
#include "wsnga/error.hpp"
#include "wsnga/ga.hpp"
#include "wsnga/oracle.hpp"

using namespace wsnga;

TEST_CASE("single node is its own head") {
    NetworkConfig cfg;
    Positions2d p(2, 1);
    p << 3, 4;
    const Deployment d(cfg, p, Eigen::ArrayXd::Constant(1, 0.5));
    const OracleResult r = exhaustive_best(d, RadioModel{}, FitnessKind::eq3());
    CHECK(r.best.to_string() == "1");
    CHECK(r.evaluated == 1);
    CHECK(r.fitness.TCH == 1);
}

TEST_CASE("two nodes under distance and head-count weights") {
    // TD = 11. "10": RCSD 10, F = 1/11 + 1/2. "01": RCSD 19, F = -8/11 + 1/2. "11": F = 0.
    const Deployment d = testing::make_deployment({{1, 0}, {10, 0}});
    const OracleResult r = exhaustive_best(d, RadioModel{}, FitnessKind::weighted(0, 1, 1));
    CHECK(r.best.to_string() == "10");
    CHECK(r.fitness.F == doctest::Approx(13.0 / 22.0).epsilon(1e-12));
    CHECK(r.evaluated == 3);
}

TEST_CASE("head-count weight alone picks exactly one head") {
    const Deployment d = testing::seeded(10, 21);
    const OracleResult r = exhaustive_best(d, RadioModel{}, FitnessKind::weighted(0, 0, 1));
    CHECK(r.best.head_bits() == 1);
    CHECK(r.evaluated == 1023);
    // ties among all single-head strings resolve to the lexicographically smallest
    CHECK(r.best.to_string() == "0000000001");
}

TEST_CASE("oracle bounds the GA") {
    const Deployment d = testing::seeded(12, 4);
    const RadioModel radio;
    GAParams p;
    p.population_size = 40;
    p.generations = 100;
    p.fitness = FitnessKind::eq3();
    const OracleResult best = exhaustive_best(d, radio, p.fitness);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        CHECK(evolve(d, radio, p, seed).best.fitness.F <= best.fitness.F);
}

TEST_CASE("oracle refuses large instances") {
    CHECK_THROWS_AS(exhaustive_best(testing::seeded(21, 1), RadioModel{}, FitnessKind::eq3()), InvalidArgument);
}
