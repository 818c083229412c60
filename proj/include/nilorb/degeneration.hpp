#pragma once

#include <string>
#include <vector>

#include "nilorb/orbit.hpp"

namespace nilorb {

enum class DegCase { a, b, c, d, e };

char deg_case_letter(DegCase c);

/// The reduced pair (alpha', beta') left after erasing the common leading
/// rows and columns of a codimension-2 adjacent pair, with its Kraft-Procesi
/// shape classification.
struct MinimalDegeneration {
    int r = 0;            // erased leading rows
    int s = 0;            // erased leading columns
    int q = 1;            // r + 1, top-most differing row of alpha
    Partition alpha_prime;
    Partition beta_prime;
    DegCase kind = DegCase::a;
    int k = 1;            // shape parameter; 1 for case a
    int d_m = 1;          // k for cases b-e, 1 for case a
    int m = 1;            // the alpha-singular row: q for a,b,c; q+1 for d,e
};

struct ClosureSingularity {
    enum class Kind { KleinianA, KleinianD, UnionTwoKleinianA };
    Kind kind = Kind::KleinianA;
    int index = 1;  // subscript; for the union case, of each A component
    /// in type D the case-(e) union refers to the closure inside the full
    /// orbit space at partition level
    bool non_normal_union() const { return kind == Kind::UnionTwoKleinianA; }

    std::string to_string() const;
    bool operator==(const ClosureSingularity&) const = default;
};

struct Degeneration {
    Orbit child;
    MinimalDegeneration md;
};

/// All codimension-2 orbits in the closure, with their minimal
/// degenerations. Uses the dominance+dimension filter for
/// g.size <= brute_bound and the constructive rule above it.
std::vector<Degeneration> codim2_children(const Orbit& o, int brute_bound = 40);

/// Constructive fast path: move one box down from row m and collapse.
/// Throws std::invalid_argument if m is not alpha-singular.
Partition degeneration_at(const Partition& alpha, int m, const Algebra& g);

/// Classify a codim-2 adjacent pair. Throws std::domain_error if the
/// reduced pair matches none of the five shapes.
MinimalDegeneration minimal_degeneration(const Partition& alpha, const Partition& beta);

/// Kraft-Procesi slice singularity of the pair; D_3 is normalized to A_3.
ClosureSingularity closure_singularity(const MinimalDegeneration& md);

}  // namespace nilorb
