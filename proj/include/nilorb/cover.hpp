#pragma once

#include <string>
#include <vector>

#include "nilorb/degeneration.hpp"
#include "nilorb/induction.hpp"

namespace nilorb {

/// Singularity of a codimension-2 locus in the affinization of the
/// universal equivariant cover. Always connected.
struct CoverSingularity {
    enum class Kind { Smooth, KleinianA, KleinianD };
    Kind kind = Kind::Smooth;
    int index = 0;       // subscript for the Kleinian kinds
    int components = 1;  // always 1

    std::string to_string() const;
    bool operator==(const CoverSingularity&) const = default;
};

/// True iff the positive values of alpha with odd multiplicity are exactly
/// {alpha_q, alpha_{q+1}} with zero rows excluded.
bool odd_multiplicity_condition(const Partition& alpha, int q);

/// |H_m|: 1 for cases c, d, e; for a, b it is 1 exactly when the
/// odd-multiplicity condition holds at q, else 2.
int hm_order(const MinimalDegeneration& md, const Partition& alpha);

/// Singularity of the leaf over this child in Spec C[O~]:
///   a: condition -> A_1, else smooth;
///   b: condition -> D_{k+1} (D_3 normalized to A_3), else A_{2k-3};
///   c, d, e: A_{2k-1}.
CoverSingularity cover_singularity(const MinimalDegeneration& md, const Partition& alpha);

/// d_m when H_m = 1, d_m - 1 when H_m = Z/2.
int dim_leaf_cover(const MinimalDegeneration& md, const Partition& alpha);

/// Cover projects with no ramification over this child iff its case is
/// c or d, or the odd-multiplicity condition holds at its q.
bool is_etale_over(const MinimalDegeneration& md, const Partition& alpha);

struct CoverLeaf {
    Orbit child;
    MinimalDegeneration md;
    ClosureSingularity closure;
    CoverSingularity cover;
    int hm = 1;
    int dim_leaf_orbit = 0;  // d_m
    int dim_leaf = 0;        // leaf dimension for the cover
    bool etale = false;
    /// case e: the value reported is the normalization-slice type, not the
    /// non-normal closure union
    bool case_e_normalization = false;
};

struct CoverReport {
    NamikawaReport namikawa;      // for Spec C[O~]
    std::vector<CoverLeaf> leaves;
};

std::vector<std::pair<Degeneration, bool>> etale_locus(const Orbit& o, int brute_bound = 40);

CoverReport cover_report(const Orbit& o, int brute_bound = 40);

}  // namespace nilorb
