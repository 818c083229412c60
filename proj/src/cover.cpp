#include "nilorb/cover.hpp"

#include <map>
#include <set>

namespace nilorb {

std::string CoverSingularity::to_string() const {
    switch (kind) {
        case Kind::Smooth: return "smooth";
        case Kind::KleinianA: return "A" + std::to_string(index);
        case Kind::KleinianD: return "D" + std::to_string(index);
    }
    return "?";
}

bool odd_multiplicity_condition(const Partition& alpha, int q) {
    if (q < 1) return false;
    std::set<int> odd_mult;
    std::map<int, int> counts;
    for (int v : alpha.parts()) ++counts[v];
    for (auto [v, mult] : counts)
        if (mult % 2 != 0) odd_mult.insert(v);

    std::set<int> target;  // zero rows excluded
    if (alpha.at(q) > 0) target.insert(alpha.at(q));
    if (alpha.at(q + 1) > 0) target.insert(alpha.at(q + 1));
    return !target.empty() && odd_mult == target;
}

int hm_order(const MinimalDegeneration& md, const Partition& alpha) {
    if (md.kind == DegCase::c || md.kind == DegCase::d || md.kind == DegCase::e) return 1;
    return odd_multiplicity_condition(alpha, md.q) ? 1 : 2;
}

CoverSingularity cover_singularity(const MinimalDegeneration& md, const Partition& alpha) {
    switch (md.kind) {
        case DegCase::a:
            if (odd_multiplicity_condition(alpha, md.q))
                return {CoverSingularity::Kind::KleinianA, 1};
            return {CoverSingularity::Kind::Smooth, 0};
        case DegCase::b:
            if (odd_multiplicity_condition(alpha, md.q)) {
                if (md.k == 2)  // D_3 = A_3
                    return {CoverSingularity::Kind::KleinianA, 3};
                return {CoverSingularity::Kind::KleinianD, md.k + 1};
            }
            return {CoverSingularity::Kind::KleinianA, 2 * md.k - 3};
        case DegCase::c:
        case DegCase::d:
        case DegCase::e:
            return {CoverSingularity::Kind::KleinianA, 2 * md.k - 1};
    }
    throw std::logic_error("unreachable");
}

int dim_leaf_cover(const MinimalDegeneration& md, const Partition& alpha) {
    return hm_order(md, alpha) == 1 ? md.d_m : md.d_m - 1;
}

bool is_etale_over(const MinimalDegeneration& md, const Partition& alpha) {
    if (md.kind == DegCase::c || md.kind == DegCase::d) return true;
    return odd_multiplicity_condition(alpha, md.q);
}

std::vector<std::pair<Degeneration, bool>> etale_locus(const Orbit& o, int brute_bound) {
    std::vector<std::pair<Degeneration, bool>> out;
    for (Degeneration& deg : codim2_children(o, brute_bound)) {
        bool flag = is_etale_over(deg.md, o.partition);
        out.emplace_back(std::move(deg), flag);
    }
    return out;
}

CoverReport cover_report(const Orbit& o, int brute_bound) {
    CoverReport rep;
    rep.namikawa.dim_smooth = h2_universal_cover(o);
    rep.namikawa.dim_total = rep.namikawa.dim_smooth;
    for (Degeneration& deg : codim2_children(o, brute_bound)) {
        CoverLeaf leaf;
        leaf.md = deg.md;
        leaf.closure = closure_singularity(deg.md);
        leaf.cover = cover_singularity(deg.md, o.partition);
        leaf.hm = hm_order(deg.md, o.partition);
        leaf.dim_leaf_orbit = deg.md.d_m;
        leaf.dim_leaf = dim_leaf_cover(deg.md, o.partition);
        leaf.etale = is_etale_over(deg.md, o.partition);
        leaf.case_e_normalization = deg.md.kind == DegCase::e;
        leaf.child = std::move(deg.child);
        rep.namikawa.leaves[leaf.md.m] = leaf.dim_leaf;
        rep.namikawa.dim_total += leaf.dim_leaf;
        rep.leaves.push_back(std::move(leaf));
    }
    return rep;
}

}  // namespace nilorb
