#include "ytab/straighten.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel.hpp"

namespace ytab {

DBasis::DBasis(RearrangementMatrix m) : m_(std::move(m)) {
    int k = m_.size();
    rows_.assign(k, std::vector<Int>());
    for (int i = 1; i <= k; ++i) {
        std::vector<Int> row(k, Int(0));
        row[i - 1] = 1;
        for (int j = 1; j < i; ++j) {
            const Int& c = m_.at(i, j);
            if (c == 0)
                continue;
            const std::vector<Int>& sub = rows_[j - 1];
            for (int t = 0; t < k; ++t)
                if (sub[t] != 0)
                    row[t] -= c * sub[t];
        }
        rows_[i - 1] = std::move(row);
    }
    depths_.assign(k, 0);
    for (int j = 1; j <= k; ++j) {
        int d = -1;
        for (int t = 1; t < j; ++t)
            if (m_.at(j, t) != 0)
                d = std::max(d, depths_[t - 1]);
        depths_[j - 1] = d + 1;   // -1 + 1 = 0 when no nonzero entry below the diagonal
    }
}

DBasis build_dbasis(RearrangementMatrix m) { return DBasis(std::move(m)); }

namespace {

void chain_sum(int current, int floor, Int acc, const RearrangementMatrix& m, Int& total) {
    if (current == floor) {
        total += acc * m.at(floor, floor);   // the final factor R[S_{b_0}, S_i]
        return;
    }
    for (int b = floor; b < current; ++b) {
        const Int& link = m.at(current, b);
        if (link != 0)
            chain_sum(b, floor, -acc * link, m, total);
    }
}

} // namespace

Int dbasis_coeff_closed(int i, int j, const RearrangementMatrix& m) {
    if (i < 1 || i > m.size() || j < 1 || j > m.size())
        throw std::invalid_argument("basis label out of range");
    Int total = 0;
    chain_sum(j, i, Int(1), m, total);
    return total;
}

int depth_of(int label, const RearrangementMatrix& m) {
    if (label < 1 || label > m.size())
        throw std::invalid_argument("basis label out of range");
    int d = -1;
    for (int t = 1; t < label; ++t)
        if (m.at(label, t) != 0)
            d = std::max(d, depth_of(t, m));
    return d + 1;
}

std::string method_name(Method method) {
    switch (method) {
    case Method::Closed: return "closed";
    case Method::Classical: return "classical";
    case Method::Chain: return "chain";
    case Method::Paths: return "paths";
    case Method::Oracle: return "oracle";
    }
    return "unknown";
}

namespace {

void require_member(const Filling& f, const SsytBasis& basis, const char* who) {
    if (f.shape() != basis.shape() || !content_of(f).same_values(basis.content()))
        throw std::invalid_argument(std::string(who) + ": filling does not match the basis shape and content");
}

} // namespace

Straightening straighten_closed(const Filling& f, const DBasis& d) {
    const SsytBasis& basis = d.basis();
    require_member(f, basis, "straighten_closed");
    int k_total = basis.kostka();
    Straightening out{f, std::vector<Int>(k_total, Int(0)), Method::Closed};
    if (!f.is_cardinal())
        return out;
    int k = basis.label_of(standardize(f)).value();
    std::vector<Int> rf(k + 1, Int(0));
    detail::parallel_for(static_cast<std::size_t>(k), [&](std::size_t idx) {
        int j = static_cast<int>(idx) + 1;
        rf[j] = rcoeff(f, basis.tableau(j));
    });
    for (int j = 1; j <= k; ++j) {
        if (rf[j] == 0)
            continue;
        const std::vector<Int>& row = d.expansion(j);
        for (int t = 0; t < k_total; ++t)
            if (row[t] != 0)
                out.coeffs[t] += rf[j] * row[t];
    }
    return out;
}

Int coefficient_chain(const Filling& f, int i, const RearrangementMatrix& m) {
    const SsytBasis& basis = m.basis();
    require_member(f, basis, "coefficient_chain");
    if (!f.is_cardinal())
        throw std::invalid_argument("coefficient_chain requires a cardinal filling");
    if (i < 1 || i > m.size())
        throw std::invalid_argument("basis label out of range");
    int k = basis.label_of(standardize(f)).value();
    Int total = 0;
    for (int top = i; top <= k; ++top) {
        Int rf = rcoeff(f, basis.tableau(top));
        if (rf != 0)
            total += rf * dbasis_coeff_closed(i, top, m);
    }
    return total;
}

Straightening straighten_classical(const Filling& f, const SsytBasis& basis,
                                   long long max_substitutions, ClassicalStats* stats) {
    require_member(f, basis, "straighten_classical");
    int k_total = basis.kostka();
    Straightening out{f, std::vector<Int>(k_total, Int(0)), Method::Classical};
    if (stats)
        stats->substitutions = 0;
    if (!f.is_cardinal())
        return out;

    const Partition& shape = f.shape();
    auto from_word = [&](const std::vector<int>& word) {
        std::vector<std::vector<int>> rows(shape.length());
        std::size_t pos = 0;
        for (int r = 0; r < shape.length(); ++r) {
            rows[r].assign(word.begin() + pos, word.begin() + pos + shape.part(r));
            pos += shape.part(r);
        }
        return Filling::from_rows(rows);
    };

    // Support over column-strict tableaux, keyed by row word (the shape is
    // fixed, so the row word determines the filling). Violating keys are
    // tracked separately so the next rewrite target is the set minimum.
    std::map<std::vector<int>, Int> support;
    std::set<std::vector<int>> violators;
    {
        auto [t0, s0] = sort_columns(f);
        std::vector<int> w0 = t0.row_word();
        if (!t0.is_semistandard())
            violators.insert(w0);
        support[std::move(w0)] = s0;
    }

    struct ExpansionTerm {
        std::vector<int> word;
        int sign;
        bool ssyt;
    };
    std::map<std::vector<int>, std::vector<ExpansionTerm>> memo;
    long long substitutions = 0;

    while (!violators.empty()) {
        if (++substitutions > max_substitutions)
            throw CapExceeded("classical straightening exceeded the substitution cap");

        std::vector<int> word = *violators.begin();
        violators.erase(violators.begin());
        auto sit = support.find(word);
        Int coeff = std::move(sit->second);
        support.erase(sit);

        auto memo_it = memo.find(word);
        if (memo_it == memo.end()) {
            Filling tab = from_word(word);
            // Leftmost violating column pair, topmost violating row.
            int vc = -1, vr = -1;
            for (int c = 0; c + 1 < tab.num_cols() && vc < 0; ++c)
                for (int r = 0; r < tab.col_height(c + 1); ++r)
                    if (tab.at(r, c) > tab.at(r, c + 1)) {
                        vc = c;
                        vr = r;
                        break;
                    }
            if (vc < 0)
                throw std::logic_error("no violation found in a non-semistandard tableau");
            RelationGenerator gen = pluecker_expand(tab, vc, vr + 1);
            std::vector<ExpansionTerm> expansion;
            for (std::size_t t = 1; t < gen.terms.size(); ++t) {
                const Filling& term = gen.terms[t].first;
                if (!term.is_cardinal())
                    continue;
                auto [sorted, sign] = sort_columns(term);
                expansion.push_back({sorted.row_word(), sign, sorted.is_semistandard()});
            }
            memo_it = memo.emplace(std::move(word), std::move(expansion)).first;
        }
        for (const auto& term : memo_it->second) {
            Int& slot = support[term.word];
            slot += coeff * term.sign;
            if (slot == 0) {
                support.erase(term.word);
                if (!term.ssyt)
                    violators.erase(term.word);
            } else if (!term.ssyt) {
                violators.insert(term.word);
            }
        }
    }

    for (const auto& [word, coeff] : support) {
        auto label = basis.label_of(from_word(word));
        if (!label)
            throw std::logic_error("classical support left a non-basis tableau");
        out.coeffs[*label - 1] = coeff;
    }
    if (stats)
        stats->substitutions = substitutions;
    return out;
}

} // namespace ytab
