#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "ytab/enumerate.hpp"
#include "ytab/tableau.hpp"

namespace ytab {

// All fillings of one shape and content, indexed by rank in ascending row
// word order. Enumeration refuses (CapExceeded) when the count exceeds the
// cap; the count itself is exact.
class FillingSpace {
public:
    static constexpr std::size_t kDefaultCap = 200000;

    static Int count(const Partition& shape, const Content& z);

    FillingSpace(Partition shape, Content z, std::size_t cap = kDefaultCap);

    std::size_t size() const { return all_.size(); }
    const Filling& at(std::size_t idx) const { return all_[idx]; }
    std::size_t index_of(const Filling& f) const;     // throws if absent

    const Partition& shape() const { return shape_; }
    const Content& content() const { return content_; }

private:
    Partition shape_;
    Content content_;
    std::vector<Filling> all_;
    std::map<std::vector<int>, std::size_t> index_;   // row word -> rank
};

enum class RelationKind { Grassmann, Pluecker, SimplePluecker };

// A generating relation, stored as a term list with the leading filling
// first. Grassmann: E + F with F one in-column transposition away from E.
// Pluecker(j,m): E - sum of the fillings obtained by swapping the m top
// elements of column j+1 with each m-subset of column j's positions, both
// sides keeping their vertical order. Simple Pluecker is m = 1.
struct RelationGenerator {
    RelationKind kind;
    int col = 0;
    int m = 0;
    std::vector<std::pair<Filling, int>> terms;
};

RelationGenerator pluecker_expand(const Filling& f, int col, int m);
RelationGenerator grassmann_generator(const Filling& f, int col, int row_a, int row_b);

// Streams over every filling of the space, in rank order. Grassmann
// generators use adjacent in-column transpositions (arbitrary
// transpositions are integer combinations of those). Return false from the
// callback to stop.
void for_each_grassmann(const FillingSpace& space,
                        const std::function<bool(const RelationGenerator&)>& fn);
void for_each_simple_pluecker(const FillingSpace& space,
                              const std::function<bool(const RelationGenerator&)>& fn);

// Exact-rational vector over a FillingSpace, sparse by rank.
using SparseVec = std::map<std::size_t, Rat>;

// Membership and reduction in the relation subspace, by incremental exact
// Gaussian elimination over the generator stream. Pivots land on non-SSYT
// coordinates; construction stops once all of them are covered.
class RelationOracle {
public:
    explicit RelationOracle(const Partition& shape, const Content& z,
                            std::size_t cap = FillingSpace::kDefaultCap);

    const FillingSpace& space() const { return space_; }
    const SsytBasis& basis() const { return basis_; }

    SparseVec vec(const Filling& f, const Rat& coeff = Rat(1)) const;

    // True iff v lies in the span of the Grassmann and simple Pluecker
    // generators of this space.
    bool membership_verify(const SparseVec& v) const;

    // The unique SSYT-supported representative of v's coset.
    SparseVec reduce(const SparseVec& v) const;

    // reduce(v) as coefficients over S_1..S_K (index 0 holds S_1).
    std::vector<Rat> reduce_to_ssyt(const SparseVec& v) const;

private:
    using Row = std::vector<std::pair<std::size_t, Rat>>;   // sorted by position

    void insert(Row row);
    Row reduce_row(Row row, bool stop_at_ssyt_block) const;

    FillingSpace space_;
    SsytBasis basis_;
    std::vector<std::size_t> position_;     // rank -> elimination position
    std::vector<std::size_t> rank_at_;      // elimination position -> rank
    std::size_t non_ssyt_count_ = 0;
    std::vector<Row> rows_;
    std::vector<std::ptrdiff_t> pivot_;     // position -> row id, or -1
    std::size_t pivots_filled_ = 0;
};

} // namespace ytab
