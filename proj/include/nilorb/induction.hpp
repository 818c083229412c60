#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilorb/orbit.hpp"

namespace nilorb {

/// A Levi subalgebra gl_{t_1} x ... x gl_{t_p} x g_{n - 2 sum t_i},
/// with gl blocks stored as a multiset {block size -> count}.
struct LeviShape {
    std::map<int, int> gl_blocks;
    Algebra residual;

    int block_count() const;           // with multiplicity
    int block_weight() const;          // sum of size * count
    std::vector<int> blocks_descending() const;
    std::string to_string() const;     // "gl1 × gl2^2 × gl5 × sp10"

    bool operator==(const LeviShape&) const = default;
};

/// dim P = dim_smooth + sum of leaf dimensions, one leaf per
/// alpha-singular row.
struct NamikawaReport {
    int dim_total = 0;
    int dim_smooth = 0;          // P_0 = H^2
    std::map<int, int> leaves;   // singular row m -> leaf dimension
};

/// Left fold of add_two_then_collapse over blocks, starting from p0 in the
/// residual algebra determined by g_target and the blocks. Throws on a
/// size/parity mismatch or an invalid source partition.
Partition induce(const Partition& p0, const std::vector<int>& blocks, const Algebra& g_target);

/// Whether one induction step gl_m x g -> g_target is birational:
/// alpha^m valid, or (type so, collapse occurred, all parts of p0 even).
bool is_birational_step(const Partition& p0, int m, const Algebra& g_target);

struct RigidInduction {
    LeviShape levi;
    Partition source;  // birationally rigid orbit in levi.residual
};

/// The unique Levi with a birationally rigid orbit from which the orbit is
/// birationally induced: gl_m^{d_m} per singular row, plus one gl_k block
/// when the stripped partition is special at k.
RigidInduction rigid_levi_orbit(const Orbit& o);

/// Empty singular set and not special at any k (equivalently dim P = 0).
bool is_birationally_rigid_orbit(const Orbit& o);

/// Namikawa space of Spec C[O]: leaves[m] = d_m, smooth part = h2_orbit.
NamikawaReport namikawa_orbit(const Orbit& o);

}  // namespace nilorb
