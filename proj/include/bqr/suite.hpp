#ifndef BQR_SUITE_HPP
#define BQR_SUITE_HPP

// The batch of checks run by `bqr paper-suite`, one per acceptance criterion.

#include <string>
#include <vector>

namespace bqr {

struct SuiteCheck {
    int index = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;  // one line each, deterministic
    double seconds = 0;                // wall time, not part of the verdict
};

std::vector<SuiteCheck> run_paper_suite();

// Number of planar rooted trees with n leaves whose internal vertices have
// exactly two children (binary_only) or at least two children.
long count_planar_trees(int leaves, bool binary_only);

}  // namespace bqr

#endif
