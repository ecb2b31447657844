#include "ytab/json_io.hpp"

#include <limits>

namespace ytab {

Json int_json(const Int& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

Json filling_json(const Filling& f) {
    Json rows = Json::array();
    for (int r = 0; r < f.num_rows(); ++r)
        rows.push_back(f.row(r));
    return rows;
}

Json basis_json(const SsytBasis& basis) {
    Json out;
    out["format"] = 1;
    out["shape"] = basis.shape().parts();
    out["content"] = basis.content().counts();
    out["kostka"] = basis.kostka();
    Json tabs = Json::array();
    for (int i = 1; i <= basis.kostka(); ++i)
        tabs.push_back(filling_json(basis.tableau(i)));
    out["tableaux"] = std::move(tabs);
    return out;
}

Json matrix_json(const RearrangementMatrix& m) {
    Json out;
    out["format"] = 1;
    out["kostka"] = m.size();
    Json rows = Json::array();
    for (int i = 1; i <= m.size(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= m.size(); ++j)
            row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    return out;
}

Json straightening_json(const Straightening& s, const SsytBasis& basis) {
    Json out;
    out["format"] = 1;
    out["input"] = filling_json(s.input);
    out["method"] = method_name(s.method);
    Json terms = Json::array();
    for (int i = 1; i <= basis.kostka(); ++i) {
        const Int& c = s.coeffs[i - 1];
        if (c == 0)
            continue;
        Json term;
        term["coeff"] = int_json(c);
        term["index"] = i;
        term["tableau"] = filling_json(basis.tableau(i));
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json graph_json(const CoeffGraph& g) {
    Json out;
    out["format"] = 1;
    out["kostka"] = g.num_vertices();
    Json edges = Json::array();
    for (const auto& [i, j] : g.edges()) {
        Json e;
        e["from"] = i;
        e["to"] = j;
        e["weight"] = int_json(g.weight(i, j));
        edges.push_back(std::move(e));
    }
    out["edges"] = std::move(edges);
    return out;
}

} // namespace ytab
