#include "ytab/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytab {

Int FillingSpace::count(const Partition& shape, const Content& z) {
    if (shape.size() != z.total())
        throw std::invalid_argument("content size does not match shape size");
    Int total = 1;
    for (int i = 2; i <= shape.size(); ++i)
        total *= i;
    for (int zi : z.counts()) {
        Int fact = 1;
        for (int i = 2; i <= zi; ++i)
            fact *= i;
        total /= fact;
    }
    return total;
}

namespace {

// Multiset arrangements of the content over the cells in row-major order,
// values ascending: produces row words in ascending lexicographic order.
struct SpaceGen {
    const Partition& shape;
    std::vector<int> budget;
    std::vector<std::vector<int>> rows;
    std::vector<Filling>& out;

    SpaceGen(const Partition& shp, const Content& z, std::vector<Filling>& sink)
        : shape(shp), budget(z.counts()), out(sink) {
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
        for (int v = 1; v <= static_cast<int>(budget.size()); ++v) {
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

FillingSpace::FillingSpace(Partition shape, Content z, std::size_t cap)
    : shape_(std::move(shape)), content_(std::move(z)) {
    Int n = count(shape_, content_);
    if (n > Int(cap))
        throw CapExceeded("filling space larger than the configured cap (" +
                          n.str() + " > " + std::to_string(cap) + ")");
    all_.reserve(static_cast<std::size_t>(n));
    SpaceGen gen(shape_, content_, all_);
    gen.run();
    for (std::size_t i = 0; i < all_.size(); ++i)
        index_.emplace(all_[i].row_word(), i);
}

std::size_t FillingSpace::index_of(const Filling& f) const {
    auto it = index_.find(f.row_word());
    if (it == index_.end() || !(all_[it->second] == f))
        throw std::invalid_argument("filling is not a member of this space");
    return it->second;
}

RelationGenerator pluecker_expand(const Filling& f, int col, int m) {
    if (col < 0 || col + 1 >= f.num_cols())
        throw std::invalid_argument("pluecker column out of range");
    int hj = f.col_height(col);
    int hj1 = f.col_height(col + 1);
    if (m < 1 || m > std::min(hj, hj1))
        throw std::invalid_argument("pluecker block size out of range");

    RelationGenerator gen;
    gen.kind = (m == 1) ? RelationKind::SimplePluecker : RelationKind::Pluecker;
    gen.col = col;
    gen.m = m;
    gen.terms.emplace_back(f, 1);

    auto colj = f.column(col);
    auto colj1 = f.column(col + 1);
    std::vector<int> subset(m);
    auto swap_term = [&](const std::vector<int>& positions) {
        std::vector<std::vector<int>> cols(f.num_cols());
        for (int c = 0; c < f.num_cols(); ++c) {
            auto span = f.column(c);
            cols[c].assign(span.begin(), span.end());
        }
        // Top m of column col+1 enter the chosen positions of column col;
        // the displaced values fill the top of column col+1. Both blocks
        // keep their vertical order.
        for (int t = 0; t < m; ++t) {
            cols[col][positions[t]] = colj1[t];
            cols[col + 1][t] = colj[positions[t]];
        }
        gen.terms.emplace_back(Filling::from_columns(cols), -1);
    };
    auto choose = [&](auto&& self, int next, int depth) -> void {
        if (depth == m) {
            swap_term(subset);
            return;
        }
        for (int pos = next; pos <= hj - (m - depth); ++pos) {
            subset[depth] = pos;
            self(self, pos + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
    return gen;
}

RelationGenerator grassmann_generator(const Filling& f, int col, int row_a, int row_b) {
    if (col < 0 || col >= f.num_cols())
        throw std::invalid_argument("grassmann column out of range");
    int h = f.col_height(col);
    if (row_a < 0 || row_b < 0 || row_a >= h || row_b >= h || row_a == row_b)
        throw std::invalid_argument("grassmann rows out of range");
    std::vector<std::vector<int>> cols(f.num_cols());
    for (int c = 0; c < f.num_cols(); ++c) {
        auto span = f.column(c);
        cols[c].assign(span.begin(), span.end());
    }
    std::swap(cols[col][row_a], cols[col][row_b]);
    RelationGenerator gen;
    gen.kind = RelationKind::Grassmann;
    gen.col = col;
    gen.terms.emplace_back(f, 1);
    gen.terms.emplace_back(Filling::from_columns(cols), 1);
    return gen;
}

void for_each_grassmann(const FillingSpace& space,
                        const std::function<bool(const RelationGenerator&)>& fn) {
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const Filling& f = space.at(idx);
        for (int c = 0; c < f.num_cols(); ++c)
            for (int r = 0; r + 1 < f.col_height(c); ++r)
                if (!fn(grassmann_generator(f, c, r, r + 1)))
                    return;
    }
}

void for_each_simple_pluecker(const FillingSpace& space,
                              const std::function<bool(const RelationGenerator&)>& fn) {
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
        const Filling& f = space.at(idx);
        for (int c = 0; c + 1 < f.num_cols(); ++c)
            if (!fn(pluecker_expand(f, c, 1)))
                return;
    }
}

RelationOracle::RelationOracle(const Partition& shape, const Content& z, std::size_t cap)
    : space_(shape, z, cap), basis_(enumerate_ssyt(shape, z)) {
    std::size_t n = space_.size();
    position_.resize(n);
    rank_at_.resize(n);
    std::vector<std::size_t> ssyt_ranks;
    std::size_t pos = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (space_.at(idx).is_semistandard()) {
            ssyt_ranks.push_back(idx);
        } else {
            position_[idx] = pos;
            rank_at_[pos] = idx;
            ++pos;
        }
    }
    non_ssyt_count_ = pos;
    for (std::size_t idx : ssyt_ranks) {
        position_[idx] = pos;
        rank_at_[pos] = idx;
        ++pos;
    }
    pivot_.assign(n, -1);

    auto to_row = [&](const RelationGenerator& gen) {
        std::map<std::size_t, Rat> acc;
        for (const auto& [filling, coeff] : gen.terms)
            acc[position_[space_.index_of(filling)]] += coeff;
        Row row;
        row.reserve(acc.size());
        for (auto& [p, v] : acc)
            if (v != 0)
                row.emplace_back(p, std::move(v));
        return row;
    };
    bool done = false;
    auto feed = [&](const RelationGenerator& gen) {
        insert(to_row(gen));
        done = pivots_filled_ == non_ssyt_count_;
        return !done;
    };
    for (std::size_t idx = 0; idx < n && !done; ++idx) {
        const Filling& f = space_.at(idx);
        for (int c = 0; c < f.num_cols() && !done; ++c)
            for (int r = 0; r + 1 < f.col_height(c) && !done; ++r)
                feed(grassmann_generator(f, c, r, r + 1));
        for (int c = 0; c + 1 < f.num_cols() && !done; ++c)
            feed(pluecker_expand(f, c, 1));
    }
    if (pivots_filled_ != non_ssyt_count_)
        throw std::logic_error("relation generators failed to span the non-SSYT block");
}

RelationOracle::Row RelationOracle::reduce_row(Row row, bool stop_at_ssyt_block) const {
    while (!row.empty()) {
        std::size_t lead = row.front().first;
        if (stop_at_ssyt_block && lead >= non_ssyt_count_)
            break;
        std::ptrdiff_t pr = pivot_[lead];
        if (pr < 0)
            break;
        const Row& pivot_row = rows_[pr];
        Rat factor = row.front().second;    // pivot rows have leading 1
        Row merged;
        merged.reserve(row.size() + pivot_row.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < pivot_row.size()) {
            if (b == pivot_row.size() || (a < row.size() && row[a].first < pivot_row[b].first)) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || pivot_row[b].first < row[a].first) {
                merged.emplace_back(pivot_row[b].first, -factor * pivot_row[b].second);
                ++b;
            } else {
                Rat v = row[a].second - factor * pivot_row[b].second;
                if (v != 0)
                    merged.emplace_back(row[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    return row;
}

void RelationOracle::insert(Row row) {
    row = reduce_row(std::move(row), false);
    if (row.empty())
        return;
    std::size_t lead = row.front().first;
    if (lead >= non_ssyt_count_)
        throw std::logic_error("nonzero relation supported on SSYT only");
    Rat inv = Rat(1) / row.front().second;
    for (auto& [p, v] : row)
        v *= inv;
    pivot_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(row));
    ++pivots_filled_;
}

SparseVec RelationOracle::vec(const Filling& f, const Rat& coeff) const {
    SparseVec v;
    if (coeff != 0)
        v[space_.index_of(f)] = coeff;
    return v;
}

bool RelationOracle::membership_verify(const SparseVec& v) const {
    return reduce(v).empty();
}

SparseVec RelationOracle::reduce(const SparseVec& v) const {
    std::map<std::size_t, Rat> by_pos;
    for (const auto& [rank, coeff] : v) {
        if (rank >= space_.size())
            throw std::invalid_argument("vector index outside the filling space");
        if (coeff != 0)
            by_pos[position_[rank]] += coeff;
    }
    Row row;
    row.reserve(by_pos.size());
    for (auto& [p, c] : by_pos)
        if (c != 0)
            row.emplace_back(p, std::move(c));
    row = reduce_row(std::move(row), true);
    SparseVec out;
    for (auto& [p, c] : row)
        out[rank_at_[p]] = std::move(c);
    return out;
}

std::vector<Rat> RelationOracle::reduce_to_ssyt(const SparseVec& v) const {
    SparseVec reduced = reduce(v);
    std::vector<Rat> coeffs(basis_.kostka(), Rat(0));
    for (const auto& [rank, coeff] : reduced) {
        auto label = basis_.label_of(space_.at(rank));
        if (!label)
            throw std::logic_error("reduced vector is not SSYT-supported");
        coeffs[*label - 1] = coeff;
    }
    return coeffs;
}

} // namespace ytab
