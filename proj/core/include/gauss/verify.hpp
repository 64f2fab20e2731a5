#ifndef GAUSS_VERIFY_HPP
#define GAUSS_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gauss/moves.hpp"
#include "gauss/random.hpp"
#include "gauss/rewrite.hpp"

namespace gauss {

struct VerifyOptions {
    int trials = 1000;
    int max_arrows = 8;
    std::uint64_t seed = 1;
    bool classical = false;
};

struct VerificationReport {
    std::string suite;
    int trials = 0;
    std::vector<std::string> violations;
    std::map<std::string, long long> stats;

    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

/// suites: roundtrip | prop3 | prop4 | prop5 | thm2
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Host diagram carrying one applicable triangle site of the requested class
/// (signs i,j,k on the top-middle/top-bottom/middle-bottom crossings,
/// m = +1 descending) and direction, with `fillers` extra arrows scattered
/// over the exterior arcs.
std::pair<DiagramState, R3Site> make_r3_instance(Rng& rng, IndexTriple signs, int m, int direction,
                                                 int fillers);

}  // namespace gauss

#endif
