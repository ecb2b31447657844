#include "ytab/coeff_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytab {

CoeffGraph::CoeffGraph(RearrangementMatrix m) : m_(std::move(m)) {
    int k = m_.size();
    out_.assign(k, {});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < i; ++j)
            if (m_.at(i, j) != 0)
                out_[i - 1].push_back(j);
}

std::vector<std::pair<int, int>> CoeffGraph::edges() const {
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= num_vertices(); ++i)
        for (int j : out_edges(i))
            all.emplace_back(i, j);
    return all;
}

CoeffGraph build_graph(RearrangementMatrix m) { return CoeffGraph(std::move(m)); }

std::vector<int> active_vertices(const Filling& f, const SsytBasis& basis) {
    if (f.shape() != basis.shape() || !content_of(f).same_values(basis.content()))
        throw std::invalid_argument("active_vertices: filling does not match the basis shape and content");
    std::vector<int> active;
    for (int k = 1; k <= basis.kostka(); ++k)
        if (rcoeff(f, basis.tableau(k)) != 0)
            active.push_back(k);
    return active;
}

namespace {

// Edges decrease the label, so no visited set is needed; branches below
// the target are pruned.
void dfs_paths(const CoeffGraph& g, int at, int to, Path& stack,
               std::vector<Path>& out, std::size_t max_paths) {
    if (at == to) {
        if (out.size() >= max_paths)
            throw CapExceeded("path enumeration exceeded the configured cap");
        out.push_back(stack);
        return;
    }
    for (int next : g.out_edges(at)) {
        if (next < to)
            continue;
        stack.push_back(next);
        dfs_paths(g, next, to, stack, out, max_paths);
        stack.pop_back();
    }
}

} // namespace

std::vector<Path> paths(const CoeffGraph& g, int from, int to, std::size_t max_paths) {
    if (from < 1 || from > g.num_vertices() || to < 1 || to > g.num_vertices())
        throw std::invalid_argument("path endpoint out of range");
    std::vector<Path> out;
    Path stack{from};
    dfs_paths(g, from, to, stack, out, max_paths);
    return out;
}

Int coefficient_paths(const Filling& f, int i, const CoeffGraph& g, std::size_t max_paths) {
    const SsytBasis& basis = g.basis();
    if (!f.is_cardinal())
        throw std::invalid_argument("coefficient_paths requires a cardinal filling");
    if (i < 1 || i > g.num_vertices())
        throw std::invalid_argument("basis label out of range");
    std::vector<Int> rf(g.num_vertices() + 1, Int(0));
    for (int k = 1; k <= g.num_vertices(); ++k)
        rf[k] = rcoeff(f, basis.tableau(k));

    Int total = 0;
    for (int j = 1; j <= g.num_vertices(); ++j) {
        if (rf[j] == 0)
            continue;
        for (const Path& p : paths(g, j, i, max_paths)) {
            Int term = rf[j];
            for (std::size_t t = 0; t + 1 < p.size(); ++t)
                term *= g.weight(p[t], p[t + 1]);
            term *= g.matrix().at(i, i);    // the final factor R[S_{p_0}, S_i]
            if ((p.size() - 1) % 2 == 1)
                term = -term;
            total += term;
        }
    }
    return total;
}

std::string export_dot(const CoeffGraph& g, const Filling* highlight) {
    std::vector<char> active(g.num_vertices() + 1, 0);
    if (highlight) {
        for (int k : active_vertices(*highlight, g.basis()))
            active[k] = 1;
    }
    std::string dot = "digraph coeffgraph {\n";
    for (int i = 1; i <= g.num_vertices(); ++i) {
        dot += "  S" + std::to_string(i);
        if (active[i])
            dot += " [style=filled, fillcolor=lightblue]";
        dot += ";\n";
    }
    for (int i = 1; i <= g.num_vertices(); ++i)
        for (int j : g.out_edges(i))
            dot += "  S" + std::to_string(i) + " -> S" + std::to_string(j) +
                   " [label=\"" + g.weight(i, j).str() + "\"];\n";
    dot += "}\n";
    return dot;
}

} // namespace ytab
