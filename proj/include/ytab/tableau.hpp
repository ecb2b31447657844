#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ytab/numeric.hpp"

// Shapes, fillings, orders, standardization and the column-permutation
// action. Everything here is an immutable value; all operations are pure.
//
// Conventions: rows and columns are 0-based in code. Cell values live in
// [1..n]. A filling is stored column-major; columns are the unit of
// permutation action.

namespace ytab {

// Weakly decreasing sequence of positive integers, identified with its
// Young diagram. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }              // lambda_{i+1}
    int num_cols() const { return parts_.empty() ? 0 : parts_[0]; }
    const std::vector<int>& parts() const { return parts_; }

    // Column lengths zeta_c = #{i : lambda_i > c} (0-based c).
    Partition conjugate() const;
    int col_height(int c) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Occurrence counts z = (z_1,...,z_n) over the alphabet [1..n]. The
// alphabet size is explicit: it is the length of the count vector.
class Content {
public:
    Content() = default;
    explicit Content(std::vector<int> counts);

    int alphabet() const { return static_cast<int>(counts_.size()); }
    int total() const { return total_; }
    int count(int value) const;                      // value in [1..n]
    const std::vector<int>& counts() const { return counts_; }

    bool operator==(const Content&) const = default;
    // Equality as multisets of values, ignoring trailing zero counts.
    bool same_values(const Content& other) const;

private:
    std::vector<int> counts_;
    int total_ = 0;
};

// An assignment of a value in [1..n] to every cell of a Young diagram.
class Filling {
public:
    Filling() = default;                             // empty shape
    Filling(Partition shape, std::vector<int> cells_column_major);

    static Filling from_rows(const std::vector<std::vector<int>>& rows);
    static Filling from_columns(const std::vector<std::vector<int>>& cols);

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int num_rows() const { return shape_.length() == 0 ? 0 : conj_.part(0); }
    int num_cols() const { return shape_.num_cols(); }
    int row_length(int r) const { return shape_.part(r); }
    int col_height(int c) const { return conj_.part(c); }

    int at(int r, int c) const { return cells_[col_off_[c] + r]; }
    std::span<const int> column(int c) const;
    std::vector<int> row(int r) const;
    const std::vector<int>& cells() const { return cells_; }  // column-major

    bool is_cardinal() const;       // no value repeats within a column
    bool is_tableau() const;        // columns strictly increase downward
    bool is_semistandard() const;   // tableau + weakly increasing rows

    // Concatenation of the rows, top row first.
    std::vector<int> row_word() const;
    int max_value() const;

    bool operator==(const Filling& other) const {
        return shape_ == other.shape_ && cells_ == other.cells_;
    }

private:
    Partition shape_;
    Partition conj_;
    std::vector<int> cells_;        // column-major
    std::vector<int> col_off_;
};

// One permutation per column, pi_c acting on the rows {0..zeta_c-1} of
// column c. One-line notation; sign is the product of the component signs.
class MultiPermutation {
public:
    MultiPermutation() = default;
    explicit MultiPermutation(std::vector<std::vector<int>> perms);

    static MultiPermutation identity(const Partition& shape);

    int num_columns() const { return static_cast<int>(perms_.size()); }
    const std::vector<int>& column_perm(int c) const { return perms_[c]; }

    int sign() const;
    MultiPermutation inverse() const;
    // Componentwise composition (this . other): column c maps r to
    // this[c][other[c][r]].
    MultiPermutation compose(const MultiPermutation& other) const;

    bool operator==(const MultiPermutation&) const = default;

private:
    std::vector<std::vector<int>> perms_;
};

Partition conjugate(const Partition& shape);

// z_i = number of cells holding value i. With alphabet = 0 the alphabet is
// the maximum value occurring in f (or 1 for the empty filling).
Content content_of(const Filling& f, int alphabet = 0);

bool same_shape_content(const Filling& e, const Filling& f);

// Total order on fillings of one shape and content: lexicographic
// comparison of row words as integer sequences. Mismatched shape or
// content is an error.
std::strong_ordering row_word_compare(const Filling& e, const Filling& f);

// F_pi(r,c) = F(pi_c(r), c). Column count and heights must match.
Filling apply(const Filling& f, const MultiPermutation& pi);

// Multiset equality of E(r,-) and F(r,-) for every row r.
bool same_row_content(const Filling& e, const Filling& f);

// Sorts every column strictly increasing; second component is the sign of
// the sorting multipermutation. Input must be cardinal.
std::pair<Filling, int> sort_columns(const Filling& f);

// Sort each column increasing, then each row weakly increasing. For
// cardinal input the result is a semistandard tableau.
Filling standardize(const Filling& f);

// Text format: one row per line, base-10 cells separated by single spaces,
// rows top to bottom. Shape is inferred from the (weakly decreasing) line
// lengths.
Filling parse_filling(std::string_view text);
std::string to_text(const Filling& f);

} // namespace ytab
