#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

enum class Series { SO, SP };

/// A classical Lie algebra of type B, C or D, presented as so_N or sp_N.
/// Small non-simple cases (so_1..so_4, sp_0, sp_2) are allowed: every
/// formula here is purely combinatorial, and they appear as residual
/// algebras of Levi subalgebras.
struct Algebra {
    Series series;
    int size;  // the ambient N

    static Algebra so(int n);
    static Algebra sp(int n);
    static Algebra make(Series s, int n);

    /// +1 for so_N, -1 for sp_N.
    int parity() const { return series == Series::SO ? +1 : -1; }

    long long dim() const;  // N(N-1)/2 for so, N(N+1)/2 for sp
    int rank() const { return size / 2; }

    std::string name() const;

    bool operator==(const Algebra&) const = default;
};

/// A weakly decreasing sequence of positive integers. Indexing is 1-based
/// and reads 0 beyond the stored length, so gaps against implicit zero
/// rows (e.g. alpha_m - alpha_{m+1} at the last row) need no special case.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// 1-based; returns 0 for i > rows().
    int at(int i) const {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int rows() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    int multiplicity(int value) const;

    std::string to_string() const;  // "10,8,4,3,3,1,1"; "" for the empty partition

    bool operator==(const Partition&) const = default;
    /// Lexicographic on rows (with implicit zeros); graded inputs make this
    /// dominance-compatible.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
};

struct SingularData {
    int m;    // row index with alpha_m - alpha_{m+1} >= 2
    int d;    // floor((alpha_m - alpha_{m+1}) / 2), >= 1
    bool operator==(const SingularData&) const = default;
};

/// Parse "so15" / "sp30". Throws std::invalid_argument on bad input.
Algebra parse_algebra(const std::string& text);

/// Parse "10,8,4,3,3,1,1". Empty string or "0" denotes the empty partition.
Partition parse_partition(const std::string& text);

bool is_valid(const Partition& p, const Algebra& g);

/// Why p fails the parity/size condition for g, or nullopt if valid.
/// Names the violating part, e.g. "even part 4 occurs once".
std::optional<std::string> explain_invalid(const Partition& p, const Algebra& g);

Partition transpose(const Partition& p);

/// Prefix-sum dominance. Throws on size mismatch.
bool dominates(const Partition& p, const Partition& q);
bool strictly_dominates(const Partition& p, const Partition& q);

bool is_very_even(const Partition& p, const Algebra& g);

std::vector<SingularData> singular_set(const Partition& p);

/// d_m for an arbitrary row (0 when the gap is < 2).
int gap_half(const Partition& p, int m);

bool is_special_at(const Partition& p, int k, const Algebra& g);
/// The k at which p is special, if any (it is unique when it exists).
std::optional<int> special_row(const Partition& p, const Algebra& g);

/// alpha^m: add 2 to each of the first m rows, padding with zero rows.
std::vector<int> add_two_rows(const Partition& p, int m);

/// The Lusztig-Spaltenstein induced partition: alpha^m if valid for g_target,
/// otherwise the one-step collapse (..., alpha_m + 1, alpha_{m+1} + 1, ...).
/// Throws std::logic_error if the collapse branch preconditions fail.
Partition add_two_then_collapse(const Partition& p, int m, const Algebra& g_target);

/// The dominance-maximal valid partition below a weakly decreasing sequence.
Partition collapse_down(const std::vector<int>& seq, const Algebra& g);

}  // namespace nilorb
