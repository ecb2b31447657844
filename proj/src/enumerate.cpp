#include "ytab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytab {

SsytBasis::SsytBasis(Partition shape, Content content, std::vector<Filling> descending)
    : shape_(std::move(shape)), content_(std::move(content)), tableaux_(std::move(descending)) {
    for (std::size_t i = 0; i < tableaux_.size(); ++i)
        index_.emplace(tableaux_[i].row_word(), static_cast<int>(i) + 1);
}

const Filling& SsytBasis::tableau(int label) const {
    if (label < 1 || label > kostka())
        throw std::invalid_argument("tableau label out of range");
    return tableaux_[label - 1];
}

std::optional<int> SsytBasis::label_of(const Filling& f) const {
    if (f.shape() != shape_)
        return std::nullopt;
    auto it = index_.find(f.row_word());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

namespace {

// Cell-wise backtracking in row-major order. Constraints at (r,c): value
// weakly above the left neighbour, strictly above the upper neighbour, and
// small enough that the rest of the column can still be filled strictly
// increasing within [1..n]. Visiting candidate values in increasing order
// produces row words in ascending lexicographic order.
struct SsytGen {
    const Partition& shape;
    const Partition conj;
    int n;
    std::vector<int> budget;                 // remaining count per value
    std::vector<std::vector<int>> rows;
    std::vector<Filling>& out;

    SsytGen(const Partition& shp, const Content& z, std::vector<Filling>& sink)
        : shape(shp), conj(shp.conjugate()), n(z.alphabet()), budget(z.counts()), out(sink) {
        rows.resize(shape.length());
        for (int r = 0; r < shape.length(); ++r)
            rows[r].resize(shape.part(r));
    }

    void run() {
        if (shape.length() == 0) {
            out.push_back(Filling());
            return;
        }
        fill(0, 0);
    }

    void fill(int r, int c) {
        if (c == shape.part(r)) {
            ++r;
            c = 0;
            if (r == shape.length()) {
                out.push_back(Filling::from_rows(rows));
                return;
            }
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, rows[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, rows[r - 1][c] + 1);
        int below = conj.part(c) - r - 1;    // cells under (r,c) in this column
        int hi = n - below;
        for (int v = lo; v <= hi; ++v) {
            if (budget[v - 1] == 0)
                continue;
            --budget[v - 1];
            rows[r][c] = v;
            fill(r, c + 1);
            ++budget[v - 1];
        }
    }
};

} // namespace

SsytBasis enumerate_ssyt(const Partition& shape, const Content& z) {
    if (shape.size() != z.total())
        throw std::invalid_argument("content size does not match shape size");
    std::vector<Filling> ascending;
    SsytGen gen(shape, z, ascending);
    gen.run();
    std::reverse(ascending.begin(), ascending.end());    // S_1 is row-word largest
    return SsytBasis(shape, z, std::move(ascending));
}

long long kostka(const Partition& shape, const Content& z) {
    return enumerate_ssyt(shape, z).kostka();
}

} // namespace ytab
