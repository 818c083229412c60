#include "nilorb/induction.hpp"

#include <algorithm>
#include <numeric>

namespace nilorb {

int LeviShape::block_count() const {
    int n = 0;
    for (auto [_, mult] : gl_blocks) n += mult;
    return n;
}

int LeviShape::block_weight() const {
    int n = 0;
    for (auto [size, mult] : gl_blocks) n += size * mult;
    return n;
}

std::vector<int> LeviShape::blocks_descending() const {
    std::vector<int> out;
    for (auto it = gl_blocks.rbegin(); it != gl_blocks.rend(); ++it)
        out.insert(out.end(), it->second, it->first);
    return out;
}

std::string LeviShape::to_string() const {
    std::string out;
    for (auto [size, mult] : gl_blocks) {
        if (!out.empty()) out += " × ";
        out += "gl" + std::to_string(size);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    if (!out.empty()) out += " × ";
    out += residual.name();
    return out;
}

Partition induce(const Partition& p0, const std::vector<int>& blocks, const Algebra& g_target) {
    int weight = std::accumulate(blocks.begin(), blocks.end(), 0);
    int start = g_target.size - 2 * weight;
    if (start < 0)
        throw std::invalid_argument("blocks exceed the target algebra size");
    Algebra g = Algebra::make(g_target.series, start);
    if (auto why = explain_invalid(p0, g))
        throw std::invalid_argument("source partition invalid for " + g.name() + ": " + *why);
    Partition p = p0;
    for (int m : blocks) {
        g = Algebra::make(g.series, g.size + 2 * m);
        p = add_two_then_collapse(p, m, g);
    }
    return p;
}

bool is_birational_step(const Partition& p0, int m, const Algebra& g_target) {
    std::vector<int> lifted = add_two_rows(p0, m);
    try {
        if (is_valid(Partition(lifted), g_target)) return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (g_target.series != Series::SO) return false;
    for (int v : p0.parts())
        if (v % 2 != 0) return false;
    return true;
}

RigidInduction rigid_levi_orbit(const Orbit& o) {
    const Partition& alpha = o.partition;
    auto sing = singular_set(alpha);

    LeviShape levi;
    for (const SingularData& sd : sing) levi.gl_blocks[sd.m] += sd.d;

    // beta_k = alpha_k - 2 * sum of d_i over singular i >= k
    std::vector<int> beta;
    for (int k = 1; k <= alpha.rows(); ++k) {
        int drop = 0;
        for (const SingularData& sd : sing)
            if (sd.m >= k) drop += sd.d;
        beta.push_back(alpha.at(k) - 2 * drop);
    }
    Partition source(std::move(beta));

    Algebra residual = Algebra::make(o.algebra.series, o.algebra.size - 2 * levi.block_weight());
    // speciality is tested on alpha: the stripped partition can present a
    // formally special pair (e.g. (1,1) in so_2) that alpha does not have
    if (auto k = special_row(alpha, o.algebra)) {
        // invert the collapse: the special pair came from one gl_k step
        levi.gl_blocks[*k] += 1;
        std::vector<int> g;
        for (int i = 1; i <= source.rows(); ++i) {
            if (i < *k)
                g.push_back(source.at(i) - 2);
            else if (i == *k || i == *k + 1)
                g.push_back(source.at(i) - 1);
            else
                g.push_back(source.at(i));
        }
        source = Partition(std::move(g));
        residual = Algebra::make(residual.series, residual.size - 2 * *k);
    }
    levi.residual = residual;
    return {levi, source};
}

bool is_birationally_rigid_orbit(const Orbit& o) {
    return singular_set(o.partition).empty() &&
           !special_row(o.partition, o.algebra).has_value();
}

NamikawaReport namikawa_orbit(const Orbit& o) {
    NamikawaReport rep;
    rep.dim_smooth = h2_orbit(o);
    for (const SingularData& sd : singular_set(o.partition)) rep.leaves[sd.m] = sd.d;
    rep.dim_total = rep.dim_smooth;
    for (auto [_, d] : rep.leaves) rep.dim_total += d;
    return rep;
}

}  // namespace nilorb
