#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jackal/rational.hpp"

namespace jackal {

// Integer partition: weakly decreasing positive parts. Rows and columns of
// the Young diagram are 1-based throughout.
class Partition {
  public:
    Partition() = default;
    // Zeros are stripped; throws std::invalid_argument if parts increase or
    // are negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    // 1-based, 0 beyond the last row
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;  // componentwise

    friend bool operator==(const Partition&, const Partition&) = default;

    // "3,1"; the empty partition renders as "-"
    std::string str() const;
    // accepts "3,1", "" and "-"
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Reverse-lexicographic enumeration order: (n), ..., (1^n). True when a
// precedes b, i.e. a is lexicographically larger.
bool revlex_less(const Partition& a, const Partition& b);

struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return revlex_less(a, b); }
};

struct Box {
    int row = 0, col = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

// lambda/mu with mu contained in lambda (checked).
struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    int size() const { return outer.size() - inner.size(); }
    bool contains(const Box& s) const {
        return s.col <= outer.part(s.row) && s.col > inner.part(s.row);
    }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        return a.outer.parts() != b.outer.parts() ? a.outer.parts() < b.outer.parts()
                                                  : a.inner.parts() < b.inner.parts();
    }
    std::string str() const;
    static SkewShape parse(const std::string& text);  // "3,1/1", "3,1"
};

// Chain of partitions mu = steps[0] < ... < steps[r] = lambda where every
// consecutive difference is a nonempty horizontal strip; encodes a standard
// tableau of shape lambda/mu whose label-i boxes are steps[i]/steps[i-1].
struct Chain {
    std::vector<Partition> steps;
    int labels() const { return static_cast<int>(steps.size()) - 1; }
    std::vector<int> weight() const;  // sizes of the strips
};

std::vector<Partition> enumerate_partitions(int n);  // reverse-lex order
// All partitions contained in lambda (any size), reverse-lex within each size,
// sizes ascending.
std::vector<Partition> subpartitions(const Partition& lambda);

// True when lam dominates mu; requires |lam| == |mu| (throws otherwise).
bool dominates(const Partition& lam, const Partition& mu);

// Arm and leg of a box of lambda (throws when the box is outside).
std::pair<int, int> arm_leg(const Partition& lam, const Box& s);

enum class CombineMode { set_union, row_sum };
// set_union: multiset union of the parts; row_sum: componentwise sum.
Partition combine(const Partition& a, const Partition& b, CombineMode mode);

struct PartitionStats {
    int length;    // number of parts
    Int u;         // product of the factorials of the part multiplicities
    Int zee;       // z_lambda = prod i^{k_i} k_i!
};
PartitionStats stats(const Partition& lam);

bool is_horizontal_strip(const SkewShape& shape);  // at most one box per column

// Complement of pi rotated by 180 degrees inside the b x h rectangle
// (h rows of length b); throws when pi does not fit.
Partition rotated_complement(const Partition& pi, int b, int h);

struct Translation {
    SkewShape shape;       // minimal representative
    int rows_removed = 0;  // leading full rows dropped
    int cols_removed = 0;  // leading full columns dropped
};
// Removes every leading row with mu_i = lambda_i and every leading column
// with mu'_j = lambda'_j; the result has the same diagram translated to the
// origin and is a fixed point of the operation.
Translation translate_minimal(const SkewShape& shape);

// Applies the row/column removal of a translation to any partition lying
// between the inner and outer shape of the original pair.
Partition translate_partition(const Partition& pi, int rows_removed, int cols_removed);

// All chains from shape.inner to shape.outer whose i-th strip has exactly
// weight[i-1] boxes. Every entry of weight must be positive.
std::vector<Chain> standard_chains(const SkewShape& shape, std::span<const int> weight);
inline std::vector<Chain> standard_chains(const SkewShape& shape, const Partition& nu) {
    return standard_chains(shape, std::span<const int>(nu.parts()));
}

struct MaxFilling {
    Partition nu0;       // weight of the maximal filling; dominates the weight
                         // of every other standard filling of the shape
    std::vector<int> r;  // r[i-1]: rightmost label in row i of lambda, 0 if none
    std::vector<int> c;  // c[j-1]: number of skew boxes in column j of lambda
};
// Maximal filling: the boxes of column j are labelled 1..c_j from top to
// bottom.
MaxFilling max_filling_weight(const SkewShape& shape);

// Finite set of boxes in the quadrant; stored sorted.
struct Configuration {
    std::vector<Box> boxes;
    explicit Configuration(std::vector<Box> b = {});
    static Configuration from_partition(const Partition& pi);
    int count() const { return static_cast<int>(boxes.size()); }
    Partition rho() const;    // sorted row counts
    Partition gamma() const;  // sorted column counts
    bool fits(const Partition& bound) const;
    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend bool operator<(const Configuration& a, const Configuration& b) {
        return a.boxes < b.boxes;
    }
    std::string str() const;  // "(1,1)(2,2)"
};

// All placements inside the diagram of bound whose configuration class is
// reachable from the diagram of mu under: moving a box along its row when the
// column profile strictly drops in dominance, moving a box along its column
// when the row profile strictly drops, and arbitrary permutations of rows or
// columns. The moves act in the free quadrant; only the final placement has
// to fit in bound. Returns the placements sorted.
std::vector<Configuration> admissible_configs(const Partition& mu, const Partition& bound);

// Canonical representative under row and column permutations: over all
// orderings of the occupied rows, the columns (read as bit strings) are
// sorted in decreasing order and the row-major-smallest 0/1 matrix wins.
Configuration config_canonical(const Configuration& conf);

}  // namespace jackal
