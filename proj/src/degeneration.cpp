#include "nilorb/degeneration.hpp"

#include <algorithm>

namespace nilorb {

char deg_case_letter(DegCase c) {
    switch (c) {
        case DegCase::a: return 'a';
        case DegCase::b: return 'b';
        case DegCase::c: return 'c';
        case DegCase::d: return 'd';
        case DegCase::e: return 'e';
    }
    return '?';
}

std::string ClosureSingularity::to_string() const {
    switch (kind) {
        case Kind::KleinianA: return "A" + std::to_string(index);
        case Kind::KleinianD: return "D" + std::to_string(index);
        case Kind::UnionTwoKleinianA:
            return "A" + std::to_string(index) + " ∪ A" + std::to_string(index);
    }
    return "?";
}

Partition degeneration_at(const Partition& alpha, int m, const Algebra& g) {
    if (gap_half(alpha, m) < 1)
        throw std::invalid_argument("row " + std::to_string(m) + " is not singular in " +
                                    alpha.to_string());
    std::vector<int> seq = alpha.parts();
    if (static_cast<int>(seq.size()) < m + 1) seq.resize(m + 1, 0);
    --seq[m - 1];
    ++seq[m];
    std::sort(seq.begin(), seq.end(), std::greater<int>());
    return collapse_down(seq, g);
}

MinimalDegeneration minimal_degeneration(const Partition& alpha, const Partition& beta) {
    int n = std::max(alpha.rows(), beta.rows());
    int i0 = 0, i1 = 0;
    for (int i = 1; i <= n; ++i) {
        if (alpha.at(i) != beta.at(i)) {
            if (i0 == 0) i0 = i;
            i1 = i;
        }
    }
    if (i0 == 0) throw std::domain_error("partitions coincide");

    MinimalDegeneration md;
    md.r = i0 - 1;
    md.q = i0;
    md.s = alpha.at(i1);  // the lower partition exceeds the upper one at the last differing row
    auto no_match = [&] {
        return std::domain_error("pair (" + alpha.to_string() + "), (" + beta.to_string() +
                                 ") matches no Kraft-Procesi shape");
    };
    std::vector<int> ap, bp;
    for (int i = i0; i <= i1; ++i) {
        ap.push_back(alpha.at(i) - md.s);
        bp.push_back(beta.at(i) - md.s);
    }
    try {
        md.alpha_prime = Partition(std::move(ap));
        md.beta_prime = Partition(std::move(bp));
    } catch (const std::invalid_argument&) {
        throw no_match();
    }

    const auto& a = md.alpha_prime.parts();
    const auto& b = md.beta_prime.parts();
    if (a.size() == 1 && a[0] == 2 && b == std::vector<int>{1, 1}) {
        md.kind = DegCase::a;
        md.k = 1;
        md.d_m = 1;
        md.m = md.q;
    } else if (a.size() == 1 && a[0] % 2 == 0 && a[0] > 2 &&
               b == std::vector<int>{a[0] - 2, 2}) {
        md.kind = DegCase::b;
        md.k = a[0] / 2;
        md.d_m = md.k;
        md.m = md.q;
    } else if (a.size() == 1 && a[0] % 2 == 1 && a[0] >= 3 &&
               b == std::vector<int>{a[0] - 2, 1, 1}) {
        md.kind = DegCase::c;
        md.k = (a[0] - 1) / 2;
        md.d_m = md.k;
        md.m = md.q;
    } else if (a.size() == 2 && a[0] == a[1] && a[0] % 2 == 1 && a[0] >= 3 &&
               b == std::vector<int>{a[0] - 1, a[0] - 1, 2}) {
        md.kind = DegCase::d;
        md.k = (a[0] - 1) / 2;
        md.d_m = md.k;
        md.m = md.q + 1;
    } else if (a.size() == 2 && a[0] == a[1] && a[0] % 2 == 0 &&
               b == std::vector<int>{a[0] - 1, a[0] - 1, 1, 1}) {
        md.kind = DegCase::e;
        md.k = a[0] / 2;
        md.d_m = md.k;
        md.m = md.q + 1;
    } else {
        throw no_match();
    }
    return md;
}

ClosureSingularity closure_singularity(const MinimalDegeneration& md) {
    switch (md.kind) {
        case DegCase::a:
            return {ClosureSingularity::Kind::KleinianA, 1};
        case DegCase::b:
            if (md.k == 2)  // D_3 = A_3
                return {ClosureSingularity::Kind::KleinianA, 3};
            return {ClosureSingularity::Kind::KleinianD, md.k + 1};
        case DegCase::c:
        case DegCase::d:
            return {ClosureSingularity::Kind::KleinianA, 2 * md.k - 1};
        case DegCase::e:
            return {ClosureSingularity::Kind::UnionTwoKleinianA, 2 * md.k - 1};
    }
    throw std::logic_error("unreachable");
}

std::vector<Degeneration> codim2_children(const Orbit& o, int brute_bound) {
    std::vector<Partition> children;
    if (o.algebra.size <= brute_bound) {
        long long dim = dim_orbit(o);
        for (const Orbit& cand : enumerate_orbits(o.algebra)) {
            if (cand.partition == o.partition) continue;
            if (!dominates(o.partition, cand.partition)) continue;
            if (dim - dim_orbit(cand) == 2) children.push_back(cand.partition);
        }
    } else {
        for (const SingularData& sd : singular_set(o.partition))
            children.push_back(degeneration_at(o.partition, sd.m, o.algebra));
        std::sort(children.begin(), children.end(), std::greater<Partition>());
        children.erase(std::unique(children.begin(), children.end()), children.end());
    }
    std::vector<Degeneration> out;
    out.reserve(children.size());
    for (const Partition& beta : children)
        out.push_back({make_orbit(o.algebra, beta), minimal_degeneration(o.partition, beta)});
    return out;
}

}  // namespace nilorb
