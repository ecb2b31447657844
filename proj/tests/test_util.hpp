#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles only use definitions (full multipermutation enumeration,
// exhaustive filling generation); they never call the backtracking or
// elimination paths they are checking.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ytab/enumerate.hpp"
#include "ytab/rearrange.hpp"
#include "ytab/tableau.hpp"

namespace testutil {

using ytab::Content;
using ytab::Filling;
using ytab::Int;
using ytab::MultiPermutation;
using ytab::Partition;

inline Filling rows(const std::vector<std::vector<int>>& r) { return Filling::from_rows(r); }
inline Filling cols(const std::vector<std::vector<int>>& c) { return Filling::from_columns(c); }

// Every multipermutation of the shape, by per-column permutation products.
inline std::vector<MultiPermutation> enumerate_ycs(const Partition& shape) {
    Partition conj = shape.conjugate();
    std::vector<std::vector<std::vector<int>>> per_column(shape.num_cols());
    for (int c = 0; c < shape.num_cols(); ++c) {
        std::vector<int> p(conj.part(c));
        for (int i = 0; i < conj.part(c); ++i)
            p[i] = i;
        do {
            per_column[c].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<MultiPermutation> out;
    std::vector<std::vector<int>> pick(shape.num_cols());
    auto rec = [&](auto&& self, int c) -> void {
        if (c == shape.num_cols()) {
            out.push_back(MultiPermutation(pick));
            return;
        }
        for (const auto& p : per_column[c]) {
            pick[c] = p;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// The rearrangement coefficient straight from its definition.
inline Int rcoeff_brute(const Filling& f, const Filling& s) {
    Int total = 0;
    for (const MultiPermutation& pi : enumerate_ycs(f.shape()))
        if (ytab::same_row_content(ytab::apply(f, pi), s))
            total += pi.sign();
    return total;
}

// All partitions of n, largest part first within each, in lex order.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All contents of the given total over an alphabet of size n.
inline std::vector<Content> all_contents(int total, int n) {
    std::vector<Content> out;
    std::vector<int> counts(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            counts[pos] = remaining;
            out.push_back(Content(counts));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[pos] = c;
            self(self, pos + 1, remaining - c);
        }
    };
    if (n >= 1)
        rec(rec, 0, total);
    return out;
}

// Every filling of the shape over [1..n], one independent value per cell.
inline std::vector<Filling> brute_all_fillings(const Partition& shape, int n) {
    std::vector<Filling> out;
    std::vector<std::vector<int>> grid(shape.length());
    for (int r = 0; r < shape.length(); ++r)
        grid[r].resize(shape.part(r));
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            out.push_back(Filling::from_rows(grid));
            return;
        }
        int nr = (c + 1 == shape.part(r)) ? r + 1 : r;
        int nc = (c + 1 == shape.part(r)) ? 0 : c + 1;
        for (int v = 1; v <= n; ++v) {
            grid[r][c] = v;
            self(self, nr, nc);
        }
    };
    if (shape.length() == 0)
        out.push_back(Filling());
    else
        rec(rec, 0, 0);
    return out;
}

// Seeded cardinal filling of one shape and content (Fisher-Yates over the
// content multiset, row-major placement, rejection on column duplicates).
inline Filling random_cardinal_filling(const Partition& shape, const Content& z,
                                       std::mt19937_64& gen) {
    std::vector<int> pool;
    for (int v = 1; v <= z.alphabet(); ++v)
        pool.insert(pool.end(), z.count(v), v);
    for (;;) {
        std::vector<int> cells = pool;
        for (std::size_t i = cells.size(); i > 1; --i)
            std::swap(cells[i - 1], cells[gen() % i]);
        std::vector<std::vector<int>> grid(shape.length());
        std::size_t pos = 0;
        for (int r = 0; r < shape.length(); ++r) {
            grid[r].assign(cells.begin() + pos, cells.begin() + pos + shape.part(r));
            pos += shape.part(r);
        }
        Filling f = Filling::from_rows(grid);
        if (f.is_cardinal())
            return f;
    }
}

// Fixtures.

// Shape (4,3,2), content (2,2,3,2); the six-tableau basis, its D-basis and
// the worked straightening.
struct DBasisExample {
    Partition shape{std::vector<int>{4, 3, 2}};
    Content content{std::vector<int>{2, 2, 3, 2}};
    Filling f = rows({{2, 1, 1, 3}, {3, 3, 2}, {4, 4}});
    std::vector<Filling> s{
        rows({{1, 1, 3, 4}, {2, 2, 4}, {3, 3}}),
        rows({{1, 1, 3, 3}, {2, 2, 4}, {3, 4}}),
        rows({{1, 1, 2, 4}, {2, 3, 3}, {3, 4}}),
        rows({{1, 1, 2, 3}, {2, 3, 4}, {3, 4}}),
        rows({{1, 1, 2, 3}, {2, 3, 3}, {4, 4}}),
        rows({{1, 1, 2, 2}, {3, 3, 3}, {4, 4}}),
    };
};

// Shape (3,3,2), content (1,2,1,2,2); the graph example and its closing
// straightening.
struct GraphExample {
    Partition shape{std::vector<int>{3, 3, 2}};
    Content content{std::vector<int>{1, 2, 1, 2, 2}};
    Filling f = rows({{2, 2, 1}, {4, 3, 5}, {5, 4}});
    std::vector<Filling> s{
        rows({{1, 2, 4}, {2, 4, 5}, {3, 5}}),
        rows({{1, 2, 4}, {2, 3, 5}, {4, 5}}),
        rows({{1, 2, 3}, {2, 4, 5}, {4, 5}}),
        rows({{1, 2, 3}, {2, 4, 4}, {5, 5}}),
        rows({{1, 2, 2}, {3, 4, 5}, {4, 5}}),
        rows({{1, 2, 2}, {3, 4, 4}, {5, 5}}),
    };
};

// Shape (4,2,2), content (2,2,2,2); the first worked rearrangement pair.
struct RcoeffExample {
    Filling f = rows({{2, 1, 4, 1}, {3, 2}, {4, 3}});
    Filling s = rows({{1, 1, 4, 4}, {2, 2}, {3, 3}});
};

// Shape (2,2,2,2,1); the chain/opposite example and the exchange pair.
struct ChainExample {
    Filling s = cols({{1, 3, 6, 4, 5}, {2, 1, 5, 3}});
    Filling f = cols({{1, 3, 6, 2, 5}, {4, 1, 5, 3}});
};

} // namespace testutil
