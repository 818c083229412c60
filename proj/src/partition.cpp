#include "nilorb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace nilorb {

Algebra Algebra::so(int n) { return make(Series::SO, n); }
Algebra Algebra::sp(int n) { return make(Series::SP, n); }

Algebra Algebra::make(Series s, int n) {
    if (n < 0)
        throw std::invalid_argument("algebra size must be nonnegative");
    if (s == Series::SP && n % 2 != 0)
        throw std::invalid_argument("sp_N requires even N, got N=" + std::to_string(n));
    return Algebra{s, n};
}

long long Algebra::dim() const {
    long long n = size;
    return series == Series::SO ? n * (n - 1) / 2 : n * (n + 1) / 2;
}

std::string Algebra::name() const {
    return (series == Series::SO ? "so" : "sp") + std::to_string(size);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    int n = std::max(rows(), o.rows());
    for (int i = 1; i <= n; ++i)
        if (auto c = at(i) <=> o.at(i); c != 0) return c;
    return std::strong_ordering::equal;
}

Algebra parse_algebra(const std::string& text) {
    if (text.size() < 3)
        throw std::invalid_argument("expected so<N> or sp<N>, got '" + text + "'");
    std::string head = text.substr(0, 2);
    Series s;
    if (head == "so")
        s = Series::SO;
    else if (head == "sp")
        s = Series::SP;
    else
        throw std::invalid_argument("expected so<N> or sp<N>, got '" + text + "'");
    int n = 0;
    for (size_t i = 2; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad algebra size in '" + text + "'");
        n = n * 10 + (text[i] - '0');
        if (n > 1'000'000) throw std::invalid_argument("algebra size too large");
    }
    return Algebra::make(s, n);
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("bad partition part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

namespace {

// value -> multiplicity, positive parts only
std::map<int, int> value_counts(const Partition& p) {
    std::map<int, int> counts;
    for (int v : p.parts()) ++counts[v];
    return counts;
}

}  // namespace

bool is_valid(const Partition& p, const Algebra& g) {
    return !explain_invalid(p, g).has_value();
}

std::optional<std::string> explain_invalid(const Partition& p, const Algebra& g) {
    if (p.sum() != g.size)
        return "partition sums to " + std::to_string(p.sum()) + ", expected " +
               std::to_string(g.size);
    int bad_rem = g.series == Series::SO ? 0 : 1;  // parity class constrained to even mult
    auto counts = value_counts(p);
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        auto [v, mult] = *it;
        if (v % 2 == bad_rem && mult % 2 != 0) {
            std::string kind = bad_rem == 0 ? "even" : "odd";
            std::string times = mult == 1 ? "once" : std::to_string(mult) + " times";
            return kind + " part " + std::to_string(v) + " occurs " + times;
        }
    }
    return std::nullopt;
}

Partition transpose(const Partition& p) {
    std::vector<int> cols(p.empty() ? 0 : p.at(1), 0);
    for (int v : p.parts())
        for (int j = 0; j < v; ++j) ++cols[j];
    return Partition(std::move(cols));
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum())
        throw std::invalid_argument("dominance requires equal sums");
    int n = std::max(p.rows(), q.rows());
    long long sp = 0, sq = 0;
    for (int i = 1; i <= n; ++i) {
        sp += p.at(i);
        sq += q.at(i);
        if (sp < sq) return false;
    }
    return true;
}

bool strictly_dominates(const Partition& p, const Partition& q) {
    return p != q && dominates(p, q);
}

bool is_very_even(const Partition& p, const Algebra& g) {
    if (g.series != Series::SO || g.size % 2 != 0) return false;
    for (int v : p.parts())
        if (v % 2 != 0) return false;
    return true;
}

std::vector<SingularData> singular_set(const Partition& p) {
    std::vector<SingularData> out;
    for (int m = 1; m <= p.rows(); ++m) {
        int gap = p.at(m) - p.at(m + 1);
        if (gap >= 2) out.push_back({m, gap / 2});
    }
    return out;
}

int gap_half(const Partition& p, int m) {
    int gap = p.at(m) - p.at(m + 1);
    return gap >= 2 ? gap / 2 : 0;
}

bool is_special_at(const Partition& p, int k, const Algebra& g) {
    if (g.series != Series::SO || g.size % 2 != 0) return false;
    // the zero orbit (all parts 1) is a point: H^2 = 0, never special
    if (p.at(1) < 2) return false;
    int v = p.at(k);
    if (v % 2 == 0 || p.at(k + 1) != v) return false;
    // v at rows k, k+1 must be the only odd parts
    for (int i = 1; i <= p.rows(); ++i) {
        if (p.at(i) % 2 == 0) continue;
        if (i != k && i != k + 1) return false;
    }
    return true;
}

std::optional<int> special_row(const Partition& p, const Algebra& g) {
    for (int k = 1; k < p.rows(); ++k)
        if (is_special_at(p, k, g)) return k;
    return std::nullopt;
}

std::vector<int> add_two_rows(const Partition& p, int m) {
    std::vector<int> seq = p.parts();
    if (static_cast<int>(seq.size()) < m) seq.resize(m, 0);
    for (int i = 0; i < m; ++i) seq[i] += 2;
    return seq;
}

Partition add_two_then_collapse(const Partition& p, int m, const Algebra& g_target) {
    if (m < 1) throw std::invalid_argument("block size must be positive");
    Algebra g_source = Algebra::make(g_target.series, g_target.size - 2 * m);
    if (auto why = explain_invalid(p, g_source))
        throw std::invalid_argument("source partition invalid for " + g_source.name() + ": " + *why);

    std::vector<int> lifted = add_two_rows(p, m);
    Partition candidate(lifted);
    if (is_valid(candidate, g_target)) return candidate;

    // Collapse branch: alpha_m = alpha_{m+1} with the parity of g.
    int am = p.at(m), am1 = p.at(m + 1);
    bool even_required = g_target.series == Series::SO;
    if (am != am1 || (am % 2 == 0) != even_required)
        throw std::logic_error("collapse branch precondition violated for " + p.to_string() +
                               ", m=" + std::to_string(m));
    std::vector<int> out = p.parts();
    if (static_cast<int>(out.size()) < m + 1) out.resize(m + 1, 0);
    for (int i = 0; i < m - 1; ++i) out[i] += 2;
    out[m - 1] += 1;
    out[m] += 1;
    Partition result(out);
    if (!is_valid(result, g_target))
        throw std::logic_error("collapse produced an invalid partition");
    return result;
}

Partition collapse_down(const std::vector<int>& raw, const Algebra& g) {
    std::vector<int> seq = raw;
    while (!seq.empty() && seq.back() == 0) seq.pop_back();
    int total = std::accumulate(seq.begin(), seq.end(), 0);
    if (total != g.size)
        throw std::invalid_argument("sequence sums to " + std::to_string(total) + ", expected " +
                                    std::to_string(g.size));
    int bad_rem = g.series == Series::SO ? 0 : 1;

    // Move one box down at a time: take the last row of the largest value
    // with bad parity and odd multiplicity, and drop its box onto the first
    // later row that keeps the sequence weakly decreasing.
    for (;;) {
        int bad_value = -1;
        for (size_t i = 0; i < seq.size(); ++i) {
            int v = seq[i];
            if (v % 2 != bad_rem) continue;
            int mult = 0;
            for (int w : seq)
                if (w == v) ++mult;
            if (mult % 2 != 0) {
                bad_value = std::max(bad_value, v);
            }
        }
        if (bad_value < 0) break;

        size_t i = seq.size();
        while (i > 0 && seq[i - 1] != bad_value) --i;
        --i;  // last row with the bad value
        --seq[i];
        size_t j = i + 1;
        while (j < seq.size() && seq[j] + 1 > seq[j - 1]) ++j;
        if (j < seq.size())
            ++seq[j];
        else
            seq.push_back(1);
    }
    return Partition(std::move(seq));
}

}  // namespace nilorb
