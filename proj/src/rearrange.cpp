#include "ytab/rearrange.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "parallel.hpp"

namespace ytab {

namespace {

// Row-by-row signed backtracking. For each row r, one unused cell is taken
// from every column of length > r so that the chosen values match S's row-r
// content. A full assignment fixes one permutation per column; its sign is
// tracked incrementally as an inversion parity: picking cell idx of a column
// after the cells in `used` contributes the parity of the used cells above
// idx.
struct RcoeffSearch {
    const Filling& f;
    int nrows, ncols, nvalues;
    std::vector<std::uint64_t> used;            // per-column bitmask of taken cells
    std::vector<std::vector<int>> residual;     // per-row value counts of S
    std::vector<std::span<const int>> cols;
    long long acc = 0;
    int parity = 0;

    RcoeffSearch(const Filling& f_, const Filling& s) : f(f_) {
        nrows = f.num_rows();
        ncols = f.num_cols();
        nvalues = std::max(f.max_value(), s.max_value());
        used.assign(ncols, 0);
        cols.resize(ncols);
        for (int c = 0; c < ncols; ++c) {
            cols[c] = f.column(c);
            if (cols[c].size() > 64)
                throw std::invalid_argument("columns taller than 64 are not supported");
        }
        residual.assign(nrows, std::vector<int>(nvalues + 1, 0));
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < s.row_length(r); ++c)
                ++residual[r][s.at(r, c)];
    }

    void row(int r) {
        if (r == nrows) {
            acc += parity ? -1 : 1;
            return;
        }
        col(r, 0);
    }

    void col(int r, int c) {
        if (c == f.row_length(r)) {
            row(r + 1);
            return;
        }
        auto& res = residual[r];
        std::uint64_t mask = used[c];
        int height = static_cast<int>(cols[c].size());
        for (int idx = 0; idx < height; ++idx) {
            std::uint64_t bit = std::uint64_t(1) << idx;
            if (mask & bit)
                continue;
            int v = cols[c][idx];
            if (res[v] == 0)
                continue;
            --res[v];
            int flip = std::popcount(mask >> (idx + 1)) & 1;
            parity ^= flip;
            used[c] = mask | bit;
            col(r, c + 1);
            used[c] = mask;
            parity ^= flip;
            ++res[v];
        }
    }
};

} // namespace

Int rcoeff(const Filling& f, const Filling& s) {
    if (!same_shape_content(f, s))
        throw std::invalid_argument("rcoeff requires equal shape and content");
    if (!f.is_cardinal())
        return 0;
    if (f.num_cols() == 2 && s.is_cardinal()) {
        if (!prune_admissible(f, schain_data(s)))
            return 0;
    }
    if (f.size() == 0)
        return 1;
    RcoeffSearch search(f, s);
    search.row(0);
    return Int(search.acc);
}

RearrangementMatrix::RearrangementMatrix(SsytBasis basis, std::vector<Int> row_major)
    : basis_(std::move(basis)), entries_(std::move(row_major)) {
    if (entries_.size() != static_cast<std::size_t>(basis_.kostka()) * basis_.kostka())
        throw std::invalid_argument("matrix size does not match basis");
}

RearrangementMatrix rcoeff_matrix(const SsytBasis& basis) {
    int k = basis.kostka();
    std::vector<Int> entries(static_cast<std::size_t>(k) * k, Int(0));
    detail::parallel_for(static_cast<std::size_t>(k), [&](std::size_t row) {
        int i = static_cast<int>(row) + 1;
        for (int j = 1; j <= i; ++j)
            entries[row * k + (j - 1)] = rcoeff(basis.tableau(i), basis.tableau(j));
    });
    return RearrangementMatrix(basis, std::move(entries));
}

namespace {

// Row index of a value within one column, or -1.
int find_row(std::span<const int> col, int value) {
    for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r] == value)
            return static_cast<int>(r);
    return -1;
}

} // namespace

SChainData schain_data(const Filling& s) {
    if (s.num_cols() != 2)
        throw std::invalid_argument("schain_data requires a two-column shape");
    if (!s.is_cardinal())
        throw std::invalid_argument("schain_data requires a cardinal filling");
    auto col1 = s.column(0);
    auto col2 = s.column(1);
    int p = static_cast<int>(col1.size());
    int q = static_cast<int>(col2.size());

    SChainData data;
    data.source = s;
    for (int v : s.cells()) {
        int occurrences = (find_row(col1, v) >= 0 ? 1 : 0) + (find_row(col2, v) >= 0 ? 1 : 0);
        if (occurrences == 1)
            data.once.insert(v);
    }

    int guard = p + q + 1;

    // Chains of once-occurring column-2 values: pairs (col2, col1) along
    // rows, stepping to the row of column 2 holding the current partner.
    for (int b = 0; b < q; ++b) {
        int start = col2[b];
        if (!data.once.count(start))
            continue;
        std::vector<SChainLink> links;
        int r = b;
        for (int step = 0; step <= guard; ++step) {
            int partner = col1[r];
            links.push_back({col2[r], partner});
            if (data.once.count(partner)) {
                data.opposite[start] = partner;
                break;
            }
            r = find_row(col2, partner);
            if (r < 0)
                throw std::logic_error("broken chain: duplicated value missing from column 2");
        }
        data.chains.emplace(start, std::move(links));
    }

    // Chains of once-occurring column-1 values: pairs (col1, col2); the
    // chain runs off when the partner's column-1 row has no column-2 cell.
    for (int a = 0; a < p; ++a) {
        int start = col1[a];
        if (!data.once.count(start))
            continue;
        std::vector<SChainLink> links;
        int r = a;
        for (int step = 0; step <= guard; ++step) {
            if (r >= q) {
                links.push_back({col1[r], std::nullopt});
                data.left.insert(start);
                break;
            }
            int partner = col2[r];
            links.push_back({col1[r], partner});
            if (data.once.count(partner)) {
                data.opposite[start] = partner;
                break;
            }
            r = find_row(col1, partner);
            if (r < 0)
                throw std::logic_error("broken chain: duplicated value missing from column 1");
        }
        data.chains.emplace(start, std::move(links));
    }

    for (int b = 0; b < q; ++b) {
        int jb = col2[b];
        if (data.once.count(jb))
            data.pairs.emplace(data.opposite.at(jb), jb);
    }
    return data;
}

bool prune_admissible(const Filling& f, const SChainData& data) {
    if (f.shape() != data.source.shape())
        throw std::invalid_argument("prune_admissible requires the shape of the chain source");
    if (!content_of(f).same_values(content_of(data.source)))
        throw std::invalid_argument("prune_admissible requires the content of the chain source");
    auto col1 = f.column(0);
    auto col2 = f.column(1);
    for (const auto& [a, b] : data.pairs) {
        bool a1 = find_row(col1, a) >= 0;
        bool b1 = find_row(col1, b) >= 0;
        if (a1 == b1)
            return false;   // the pair shares a column of F
    }
    for (int c : data.left)
        if (find_row(col1, c) < 0)
            return false;
    return true;
}

bool exchange_criterion(const Filling& f, const SChainData& data) {
    const Filling& s = data.source;
    if (f.shape() != s.shape())
        throw std::invalid_argument("exchange_criterion requires equal shapes");
    if (!content_of(f).same_values(content_of(s)))
        throw std::invalid_argument("exchange_criterion requires equal content");
    if (!f.is_cardinal())
        return false;

    int q = s.col_height(1);
    std::vector<int> differing;
    for (int r = 0; r < s.num_rows(); ++r) {
        std::vector<int> fr = f.row(r), sr = s.row(r);
        std::sort(fr.begin(), fr.end());
        std::sort(sr.begin(), sr.end());
        if (fr != sr)
            differing.push_back(r);
    }
    if (differing.size() != 2)
        return false;

    auto fcol1 = f.column(0);
    auto fcol2 = f.column(1);
    auto check = [&](int m, int n) {
        if (m >= q || n >= q)
            return false;
        int jm = s.at(m, 1), in = s.at(n, 0);
        int jn = s.at(n, 1), im = s.at(m, 0);
        if (!data.pairs.count({in, jm}) && !data.pairs.count({jm, in}))
            return false;
        if (data.once.count(jn) || data.once.count(im))
            return false;   // j_n and i_m must be duplicated in S
        bool jm_in_col1 = find_row(fcol1, jm) >= 0;
        bool in_in_col1 = find_row(fcol1, in) >= 0;
        if (jm_in_col1 == in_in_col1)
            return false;   // j_m and i_n must sit in different columns of F
        std::vector<int> frow_n = f.row(n), frow_m = f.row(m);
        if (std::find(frow_n.begin(), frow_n.end(), jn) == frow_n.end())
            return false;
        if (std::find(frow_m.begin(), frow_m.end(), im) == frow_m.end())
            return false;
        return true;
    };
    return check(differing[0], differing[1]) || check(differing[1], differing[0]);
}

std::pair<Filling, Filling> split(const Filling& f, int col) {
    if (col < 0 || col + 1 >= f.num_cols())
        throw std::invalid_argument("split column out of range");
    std::vector<std::vector<int>> pair_cols, rest_cols;
    for (int c = 0; c < f.num_cols(); ++c) {
        auto column = f.column(c);
        std::vector<int> values(column.begin(), column.end());
        if (c == col || c == col + 1)
            pair_cols.push_back(std::move(values));
        else
            rest_cols.push_back(std::move(values));
    }
    return {Filling::from_columns(pair_cols), Filling::from_columns(rest_cols)};
}

RowCompletionSet row_completions(const Filling& fhat, const Filling& s,
                                 const MultiPermutation& gamma) {
    // The completion shape is the two-column complement of fhat inside s:
    // remove fhat's column heights from s's, as multisets.
    std::vector<int> s_heights = s.shape().conjugate().parts();
    std::vector<int> h_heights = fhat.shape().conjugate().parts();
    std::vector<int> remaining = s_heights;
    for (int h : h_heights) {
        auto it = std::find(remaining.begin(), remaining.end(), h);
        if (it == remaining.end())
            throw std::invalid_argument("fhat does not embed into the shape of s");
        remaining.erase(it);
    }
    if (remaining.size() != 2)
        throw std::invalid_argument("row completion requires a two-column complement");
    int h1 = std::max(remaining[0], remaining[1]);
    int h2 = std::min(remaining[0], remaining[1]);

    Filling fg = apply(fhat, gamma);

    RowCompletionSet out;
    std::vector<std::vector<int>> targets(h1);
    for (int r = 0; r < s.num_rows(); ++r) {
        std::vector<int> need = s.row(r);
        std::sort(need.begin(), need.end());
        if (r < fg.num_rows()) {
            for (int c = 0; c < fg.row_length(r); ++c) {
                auto it = std::find(need.begin(), need.end(), fg.at(r, c));
                if (it == need.end())
                    return out;   // gamma overspends this row: no completions
                need.erase(it);
            }
        }
        int expected = (r < h2) ? 2 : (r < h1 ? 1 : 0);
        if (static_cast<int>(need.size()) != expected)
            return out;
        if (r < h1)
            targets[r] = std::move(need);
    }

    // Per two-cell row with distinct values, both column arrangements occur.
    std::vector<std::vector<int>> rows(h1);
    std::vector<Filling> built;
    auto emit = [&](auto&& self, int r) -> void {
        if (r == h1) {
            built.push_back(Filling::from_rows(rows));
            return;
        }
        if (static_cast<int>(targets[r].size()) == 1) {
            rows[r] = targets[r];
            self(self, r + 1);
            return;
        }
        int a = targets[r][0], b = targets[r][1];
        rows[r] = {a, b};
        self(self, r + 1);
        if (a != b) {
            rows[r] = {b, a};
            self(self, r + 1);
        }
    };
    if (h1 > 0)
        emit(emit, 0);
    else
        built.push_back(Filling());
    out.completions = std::move(built);
    out.row_content = std::move(targets);
    return out;
}

} // namespace ytab
