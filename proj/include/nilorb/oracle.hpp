#pragma once

#include <string>
#include <vector>

#include "nilorb/orbit.hpp"

namespace nilorb {
namespace oracle {

struct Failure {
    std::string check;
    std::string witness;
};

struct ConsistencyReport {
    long long checks_run = 0;
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
};

/// Exhaustive codimension-2 children: valid partitions strictly dominated
/// by the orbit's with dimension gap exactly 2. Independent of the
/// constructive path it referees. Throws if g.size > bound.
std::vector<Partition> brute_children2(const Orbit& o, int bound = 16);

/// Dominance maximum over the exhaustively enumerated valid partitions
/// dominated by seq. Throws if the maximum is not unique or out of bound.
Partition brute_collapse(const std::vector<int>& seq, const Algebra& g, int bound = 16);

/// Run every cross-law over all valid partitions of the series up to
/// max_size. Failures are data, not errors. The parallel path fans out
/// per orbit with OpenMP; the serial path is the reference.
ConsistencyReport run_suite(Series series, int max_size, bool parallel = false);

/// All partitions of n (not only the valid ones), descending lex.
std::vector<Partition> all_partitions(int n);

}  // namespace oracle
}  // namespace nilorb
