#pragma once

#include <string>
#include <vector>

#include "ytab/rearrange.hpp"

namespace ytab {

// Directed graph on the SSYT basis: edge (i,j) iff i != j and
// R[S_i,S_j] != 0, weighted by that coefficient. Every edge decreases the
// label, so the graph is acyclic by construction.
class CoeffGraph {
public:
    explicit CoeffGraph(RearrangementMatrix m);

    const RearrangementMatrix& matrix() const { return m_; }
    const SsytBasis& basis() const { return m_.basis(); }
    int num_vertices() const { return m_.size(); }

    // Targets of edges out of vertex i, ascending.
    const std::vector<int>& out_edges(int i) const { return out_[i - 1]; }
    // All edges, ordered by source label then target label.
    std::vector<std::pair<int, int>> edges() const;
    const Int& weight(int i, int j) const { return m_.at(i, j); }

private:
    RearrangementMatrix m_;
    std::vector<std::vector<int>> out_;
};

CoeffGraph build_graph(RearrangementMatrix m);

// Labels k with R[F,S_k] != 0, ascending.
std::vector<int> active_vertices(const Filling& f, const SsytBasis& basis);

using Path = std::vector<int>;   // vertex labels, start first

// All directed paths from one vertex to another, in lexicographic order on
// the label sequences; includes the zero-length path when from == to.
// Throws CapExceeded beyond max_paths.
std::vector<Path> paths(const CoeffGraph& g, int from, int to,
                        std::size_t max_paths = 1'000'000);

// a_i as the signed weighted path sum over the active vertices of F.
// Requires cardinal input; agrees with coefficient_chain.
Int coefficient_paths(const Filling& f, int i, const CoeffGraph& g,
                      std::size_t max_paths = 1'000'000);

// DOT rendering with stable node names S1..SK and edge weight labels; the
// active vertices of the optional filling are filled.
std::string export_dot(const CoeffGraph& g, const Filling* highlight = nullptr);

} // namespace ytab
