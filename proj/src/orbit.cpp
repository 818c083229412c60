#include "nilorb/orbit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nilorb {

Orbit make_orbit(const Algebra& g, const Partition& p) {
    if (auto why = explain_invalid(p, g))
        throw std::domain_error("invalid partition for " + g.name() + ": " + *why);
    return Orbit{g, p, is_very_even(p, g)};
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    const Algebra& g, std::vector<Orbit>& out) {
    if (remaining == 0) {
        Partition p(acc);
        if (is_valid(p, g)) out.push_back(Orbit{g, p, is_very_even(p, g)});
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        acc.push_back(next);
        gen_partitions(remaining - next, next, acc, g, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Orbit> enumerate_orbits(const Algebra& g) {
    std::vector<Orbit> out;
    std::vector<int> acc;
    gen_partitions(g.size, g.size, acc, g, out);
    // descending-first recursion already yields descending lex order
    return out;
}

long long dim_orbit(const Orbit& o) {
    Partition t = transpose(o.partition);
    long long sq = 0;
    for (int s : t.parts()) sq += static_cast<long long>(s) * s;
    long long odd_rows = 0;
    for (int v : o.partition.parts())
        if (v % 2 != 0) ++odd_rows;
    long long dim_z = (sq + (o.algebra.series == Series::SP ? odd_rows : -odd_rows)) / 2;
    return o.algebra.dim() - dim_z;
}

namespace {

// a = distinct odd values, b = distinct even values; also whether every
// part of the given parity class has even multiplicity
struct ParityProfile {
    int distinct_odd = 0;
    int distinct_even = 0;
    bool even_mults_even = true;
    bool odd_mults_even = true;
};

ParityProfile profile(const Partition& p) {
    ParityProfile pr;
    std::map<int, int> counts;
    for (int v : p.parts()) ++counts[v];
    for (auto [v, mult] : counts) {
        if (v % 2 == 0) {
            ++pr.distinct_even;
            if (mult % 2 != 0) pr.even_mults_even = false;
        } else {
            ++pr.distinct_odd;
            if (mult % 2 != 0) pr.odd_mults_even = false;
        }
    }
    return pr;
}

}  // namespace

Pi1Group pi1_adjoint(const Orbit& o) {
    ParityProfile pr = profile(o.partition);
    int a = pr.distinct_odd, b = pr.distinct_even;
    if (o.algebra.series == Series::SP)
        return Pi1Group{pr.even_mults_even ? b : b - 1};
    if (o.algebra.size % 2 != 0)
        return Pi1Group{a - 1};  // type B: at least one odd part always exists
    return Pi1Group{std::max(0, pr.odd_mults_even ? a - 1 : a - 2)};
}

int h2_orbit(const Orbit& o) {
    return special_row(o.partition, o.algebra).has_value() ? 1 : 0;
}

int h2_universal_cover(const Orbit& o) {
    // so_2 summands of the centralizer's center: values of multiplicity
    // exactly 2 with parity opposite to the algebra
    int want_rem = o.algebra.series == Series::SO ? 1 : 0;
    int count = 0;
    std::set<int> seen;
    for (int v : o.partition.parts()) {
        if (v % 2 != want_rem || !seen.insert(v).second) continue;
        if (o.partition.multiplicity(v) == 2) ++count;
    }
    return count;
}

}  // namespace nilorb
