#pragma once

#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

/// A nilpotent orbit at the partition (O_N-orbit) level. Very even
/// partitions in type D label one O_N-orbit splitting into two adjoint
/// orbits; we record the flag without distinguishing the two labels.
struct Orbit {
    Algebra algebra;
    Partition partition;
    bool very_even = false;

    bool operator==(const Orbit&) const = default;
};

/// (Z/2Z)^exponent.
struct Pi1Group {
    int exponent = 0;
    bool operator==(const Pi1Group&) const = default;
};

/// Throws std::domain_error (with the explain_invalid message) if the
/// partition is not valid for the algebra.
Orbit make_orbit(const Algebra& g, const Partition& p);

/// All valid partitions of g.size, descending lexicographic (graded
/// reverse-lex, compatible with dominance).
std::vector<Orbit> enumerate_orbits(const Algebra& g);

/// dim g - dim Z(e) via the transposed-partition centralizer formula.
long long dim_orbit(const Orbit& o);

/// Equivariant fundamental group of the adjoint orbit.
Pi1Group pi1_adjoint(const Orbit& o);

/// dim H^2(O, C): 1 iff the partition is special at some k.
int h2_orbit(const Orbit& o);

/// dim H^2 of the universal equivariant cover: the number of distinct
/// values v > 0 with multiplicity exactly 2 and parity opposite to the
/// algebra (odd v for so, even v for sp). Derived from proof-level
/// statements; cross-checked by the consistency suite.
int h2_universal_cover(const Orbit& o);

}  // namespace nilorb
