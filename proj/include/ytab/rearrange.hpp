#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ytab/enumerate.hpp"
#include "ytab/tableau.hpp"

namespace ytab {

// R[F,S]: the sum of sign(pi) over all multipermutations pi such that
// F_pi has the same row content as S. F and S must share shape and
// content. Zero whenever F repeats a value within a column.
Int rcoeff(const Filling& f, const Filling& s);

// M[i][j] = R[S_i, S_j] over an SSYT basis. Lower triangular with unit
// diagonal under the descending row-word labeling: M[i][j] = 0 for j > i.
class RearrangementMatrix {
public:
    RearrangementMatrix(SsytBasis basis, std::vector<Int> row_major);

    const SsytBasis& basis() const { return basis_; }
    int size() const { return basis_.kostka(); }
    const Int& at(int i, int j) const {                     // 1-based labels
        return entries_[static_cast<std::size_t>(i - 1) * size() + (j - 1)];
    }

private:
    SsytBasis basis_;
    std::vector<Int> entries_;
};

// Entries with j <= i are computed by backtracking; j > i is zero by
// triangularity. Rows are independent and evaluated in parallel (capped by
// the STRAIGHT_THREADS environment variable).
RearrangementMatrix rcoeff_matrix(const SsytBasis& basis);

// Two-column chain structures on once-occurring values. A chain step pairs
// the value with its row partner in the other column; the partner is absent
// when the chain runs off the shorter column.
struct SChainLink {
    int value = 0;
    std::optional<int> partner;
    bool operator==(const SChainLink&) const = default;
};

struct SChainData {
    Filling source;
    std::set<int> once;                           // the set of once-occurring values
    std::map<int, std::vector<SChainLink>> chains;
    std::map<int, int> opposite;                  // S_op, where defined
    std::set<std::pair<int, int>> pairs;          // (column-1 value, column-2 value)
    std::set<int> left;                           // column-1 values with no opposite
};

// Requires a two-column cardinal filling.
SChainData schain_data(const Filling& s);

// False guarantees R[F,S] = 0: some pair shares a column of F, or some
// left value sits outside F's first column.
bool prune_admissible(const Filling& f, const SChainData& data);

// Four-property hypothesis check for the two-column exchange argument:
// when it holds, an even rearrangement of f matches the row content of
// data's source. Test support; the witnessing permutation is never
// constructed here.
bool exchange_criterion(const Filling& f, const SChainData& data);

// (F^(j), F^(j-hat)): the two-column filling made of columns col, col+1 and
// the filling made of the remaining columns. col is 0-based with
// 0 <= col < lambda_1 - 1.
std::pair<Filling, Filling> split(const Filling& f, int col);

// All two-column fillings N whose per-row content, added to that of
// (fhat)_gamma, gives the row content of s. All members share row content.
struct RowCompletionSet {
    std::vector<Filling> completions;
    std::vector<std::vector<int>> row_content;    // shared per-row target, sorted
};

RowCompletionSet row_completions(const Filling& fhat, const Filling& s,
                                 const MultiPermutation& gamma);

} // namespace ytab
