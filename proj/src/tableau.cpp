#include "ytab/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ytab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> conj(num_cols(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c)
            ++conj[c];
    return Partition(std::move(conj));
}

int Partition::col_height(int c) const {
    int h = 0;
    for (int p : parts_)
        if (p > c)
            ++h;
    return h;
}

Partition conjugate(const Partition& shape) { return shape.conjugate(); }

Content::Content(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int z : counts_) {
        if (z < 0)
            throw std::invalid_argument("content counts must be nonnegative");
        total_ += z;
    }
}

int Content::count(int value) const {
    if (value < 1 || value > alphabet())
        return 0;
    return counts_[value - 1];
}

bool Content::same_values(const Content& other) const {
    int n = std::max(alphabet(), other.alphabet());
    for (int v = 1; v <= n; ++v)
        if (count(v) != other.count(v))
            return false;
    return true;
}

Filling::Filling(Partition shape, std::vector<int> cells_column_major)
    : shape_(std::move(shape)), conj_(shape_.conjugate()), cells_(std::move(cells_column_major)) {
    if (static_cast<int>(cells_.size()) != shape_.size())
        throw std::invalid_argument("cell count does not match shape");
    col_off_.resize(shape_.num_cols() + 1, 0);
    for (int c = 0; c < shape_.num_cols(); ++c)
        col_off_[c + 1] = col_off_[c] + conj_.part(c);
    for (int v : cells_)
        if (v < 1)
            throw std::invalid_argument("cell values must be positive");
}

Filling Filling::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    Partition shape(std::move(parts));
    Partition conj = shape.conjugate();
    std::vector<int> cells(shape.size());
    int off = 0;
    for (int c = 0; c < shape.num_cols(); ++c) {
        for (int r = 0; r < conj.part(c); ++r)
            cells[off + r] = rows[r][c];
        off += conj.part(c);
    }
    return Filling(std::move(shape), std::move(cells));
}

Filling Filling::from_columns(const std::vector<std::vector<int>>& cols) {
    std::vector<int> heights;
    heights.reserve(cols.size());
    for (const auto& col : cols)
        heights.push_back(static_cast<int>(col.size()));
    Partition col_shape(heights);   // validates weakly decreasing
    std::vector<int> cells;
    cells.reserve(col_shape.size());
    for (const auto& col : cols)
        cells.insert(cells.end(), col.begin(), col.end());
    return Filling(col_shape.conjugate(), std::move(cells));
}

std::span<const int> Filling::column(int c) const {
    return {cells_.data() + col_off_[c], static_cast<std::size_t>(conj_.part(c))};
}

std::vector<int> Filling::row(int r) const {
    std::vector<int> out(row_length(r));
    for (int c = 0; c < row_length(r); ++c)
        out[c] = at(r, c);
    return out;
}

bool Filling::is_cardinal() const {
    for (int c = 0; c < num_cols(); ++c) {
        auto col = column(c);
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b)
                if (col[a] == col[b])
                    return false;
    }
    return true;
}

bool Filling::is_tableau() const {
    for (int c = 0; c < num_cols(); ++c) {
        auto col = column(c);
        for (std::size_t r = 1; r < col.size(); ++r)
            if (col[r] <= col[r - 1])
                return false;
    }
    return true;
}

bool Filling::is_semistandard() const {
    if (!is_tableau())
        return false;
    for (int r = 0; r < num_rows(); ++r)
        for (int c = 1; c < row_length(r); ++c)
            if (at(r, c) < at(r, c - 1))
                return false;
    return true;
}

std::vector<int> Filling::row_word() const {
    std::vector<int> word;
    word.reserve(cells_.size());
    for (int r = 0; r < num_rows(); ++r)
        for (int c = 0; c < row_length(r); ++c)
            word.push_back(at(r, c));
    return word;
}

int Filling::max_value() const {
    int m = 0;
    for (int v : cells_)
        m = std::max(m, v);
    return m;
}

MultiPermutation::MultiPermutation(std::vector<std::vector<int>> perms) : perms_(std::move(perms)) {
    for (const auto& p : perms_) {
        std::vector<char> seen(p.size(), 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
                throw std::invalid_argument("not a permutation in one-line notation");
            seen[v] = 1;
        }
    }
}

MultiPermutation MultiPermutation::identity(const Partition& shape) {
    Partition conj = shape.conjugate();
    std::vector<std::vector<int>> perms(shape.num_cols());
    for (int c = 0; c < shape.num_cols(); ++c) {
        perms[c].resize(conj.part(c));
        std::iota(perms[c].begin(), perms[c].end(), 0);
    }
    return MultiPermutation(std::move(perms));
}

namespace {

// Parity via cycle decomposition: sign = (-1)^(n - #cycles).
int perm_sign(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p[j])
            seen[j] = 1;
    }
    return ((p.size() - cycles) % 2 == 0) ? 1 : -1;
}

} // namespace

int MultiPermutation::sign() const {
    int s = 1;
    for (const auto& p : perms_)
        s *= perm_sign(p);
    return s;
}

MultiPermutation MultiPermutation::inverse() const {
    std::vector<std::vector<int>> inv(perms_.size());
    for (std::size_t c = 0; c < perms_.size(); ++c) {
        inv[c].resize(perms_[c].size());
        for (std::size_t r = 0; r < perms_[c].size(); ++r)
            inv[c][perms_[c][r]] = static_cast<int>(r);
    }
    return MultiPermutation(std::move(inv));
}

MultiPermutation MultiPermutation::compose(const MultiPermutation& other) const {
    if (perms_.size() != other.perms_.size())
        throw std::invalid_argument("multipermutation column count mismatch");
    std::vector<std::vector<int>> out(perms_.size());
    for (std::size_t c = 0; c < perms_.size(); ++c) {
        if (perms_[c].size() != other.perms_[c].size())
            throw std::invalid_argument("multipermutation column length mismatch");
        out[c].resize(perms_[c].size());
        for (std::size_t r = 0; r < perms_[c].size(); ++r)
            out[c][r] = perms_[c][other.perms_[c][r]];
    }
    return MultiPermutation(std::move(out));
}

Content content_of(const Filling& f, int alphabet) {
    int n = alphabet == 0 ? std::max(1, f.max_value()) : alphabet;
    if (n < f.max_value())
        throw std::invalid_argument("alphabet smaller than maximum cell value");
    std::vector<int> counts(n, 0);
    for (int v : f.cells())
        ++counts[v - 1];
    return Content(std::move(counts));
}

bool same_shape_content(const Filling& e, const Filling& f) {
    return e.shape() == f.shape() && content_of(e).same_values(content_of(f));
}

std::strong_ordering row_word_compare(const Filling& e, const Filling& f) {
    if (!same_shape_content(e, f))
        throw std::invalid_argument("row word order requires equal shape and content");
    std::vector<int> we = e.row_word(), wf = f.row_word();
    return std::lexicographical_compare_three_way(we.begin(), we.end(), wf.begin(), wf.end());
}

Filling apply(const Filling& f, const MultiPermutation& pi) {
    if (pi.num_columns() != f.num_cols())
        throw std::invalid_argument("multipermutation column count mismatch");
    std::vector<int> cells(f.cells().size());
    int off = 0;
    for (int c = 0; c < f.num_cols(); ++c) {
        const auto& p = pi.column_perm(c);
        auto col = f.column(c);
        if (static_cast<int>(p.size()) != static_cast<int>(col.size()))
            throw std::invalid_argument("multipermutation column length mismatch");
        for (std::size_t r = 0; r < col.size(); ++r)
            cells[off + r] = col[p[r]];
        off += static_cast<int>(col.size());
    }
    return Filling(f.shape(), std::move(cells));
}

bool same_row_content(const Filling& e, const Filling& f) {
    if (e.shape() != f.shape())
        throw std::invalid_argument("row content comparison requires equal shapes");
    for (int r = 0; r < e.num_rows(); ++r) {
        std::vector<int> re = e.row(r), rf = f.row(r);
        std::sort(re.begin(), re.end());
        std::sort(rf.begin(), rf.end());
        if (re != rf)
            return false;
    }
    return true;
}

std::pair<Filling, int> sort_columns(const Filling& f) {
    if (!f.is_cardinal())
        throw std::invalid_argument("sort_columns requires a cardinal filling");
    std::vector<int> cells(f.cells());
    int off = 0;
    int sign = 1;
    for (int c = 0; c < f.num_cols(); ++c) {
        int h = f.col_height(c);
        // Parity of the sorting permutation = parity of the inversion count.
        long long inv = 0;
        for (int a = 0; a < h; ++a)
            for (int b = a + 1; b < h; ++b)
                if (cells[off + a] > cells[off + b])
                    ++inv;
        if (inv % 2 != 0)
            sign = -sign;
        std::sort(cells.begin() + off, cells.begin() + off + h);
        off += h;
    }
    return {Filling(f.shape(), std::move(cells)), sign};
}

Filling standardize(const Filling& f) {
    std::vector<int> cells(f.cells());
    int off = 0;
    for (int c = 0; c < f.num_cols(); ++c) {
        std::sort(cells.begin() + off, cells.begin() + off + f.col_height(c));
        off += f.col_height(c);
    }
    Filling colsorted(f.shape(), std::move(cells));
    std::vector<std::vector<int>> rows(colsorted.num_rows());
    for (int r = 0; r < colsorted.num_rows(); ++r) {
        rows[r] = colsorted.row(r);
        std::sort(rows[r].begin(), rows[r].end());
    }
    if (rows.empty())
        return Filling();
    return Filling::from_rows(rows);
}

Filling parse_filling(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() && in.eof())
            break;
        std::istringstream ls(line);
        std::vector<int> row;
        long long v;
        while (ls >> v) {
            if (v < 1)
                throw std::invalid_argument("cell values must be positive integers");
            row.push_back(static_cast<int>(v));
        }
        if (!ls.eof())
            throw std::invalid_argument("malformed cell in filling text");
        if (row.empty())
            throw std::invalid_argument("empty row in filling text");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("empty filling text");
    return Filling::from_rows(rows);   // validates weakly decreasing lengths
}

std::string to_text(const Filling& f) {
    std::string out;
    for (int r = 0; r < f.num_rows(); ++r) {
        for (int c = 0; c < f.row_length(r); ++c) {
            if (c > 0)
                out += ' ';
            out += std::to_string(f.at(r, c));
        }
        out += '\n';
    }
    return out;
}

} // namespace ytab
