#pragma once

#include <string>
#include <vector>

#include "ytab/rearrange.hpp"
#include "ytab/relations.hpp"

namespace ytab {

// The D-basis: D(S_i) = S_i - sum_{j<i} R[S_i,S_j] D(S_j), expanded over
// the SSYT basis. Row j of the expansion matrix is unitriangular under the
// descending labeling, with integer entries. Each element carries its
// recursion depth over the nonzero rearrangement coefficients.
class DBasis {
public:
    explicit DBasis(RearrangementMatrix m);

    const RearrangementMatrix& matrix() const { return m_; }
    const SsytBasis& basis() const { return m_.basis(); }
    int size() const { return m_.size(); }

    // Coefficients of D(S_label) over S_1..S_K; index 0 holds S_1.
    const std::vector<Int>& expansion(int label) const { return rows_[label - 1]; }
    int depth(int label) const { return depths_[label - 1]; }

private:
    RearrangementMatrix m_;
    std::vector<std::vector<Int>> rows_;
    std::vector<int> depths_;
};

DBasis build_dbasis(RearrangementMatrix m);

// Coefficient of S_i in D(S_j) by the closed chain sum: over all index
// chains i = b_0 < b_1 < ... < b_d = j with every link R[S_{b_t},S_{b_t-1}]
// nonzero, add (-1)^d times the product of the links.
Int dbasis_coeff_closed(int i, int j, const RearrangementMatrix& m);

// Recursion depth of D(S_label) over the nonzero entries of m.
int depth_of(int label, const RearrangementMatrix& m);

enum class Method { Closed, Classical, Chain, Paths, Oracle };

std::string method_name(Method method);

// A filling expressed over the SSYT basis; coeffs[i-1] is the coefficient
// of S_i.
struct Straightening {
    Filling input;
    std::vector<Int> coeffs;
    Method method = Method::Closed;
};

// Closed straightening: a duplicate column gives the zero combination;
// otherwise sum R[F,S_j] * D(S_j) over j up to the label of std(F).
Straightening straighten_closed(const Filling& f, const DBasis& d);

// a_i by the chain-sum coefficient formula; agrees with straighten_closed.
// Requires cardinal input.
Int coefficient_chain(const Filling& f, int i, const RearrangementMatrix& m);

struct ClassicalStats {
    long long substitutions = 0;
};

// Classical relation rewriting: keep an integer combination over
// column-strict tableaux (column-sorting every term with its sign,
// dropping duplicate columns); while some tableau violates row weakness,
// expand the row-word-smallest violator at its leftmost violating column
// pair and topmost violating row r via the Pluecker generator with m = r+1.
// The substitution cap turns a rule failure into an error.
Straightening straighten_classical(const Filling& f, const SsytBasis& basis,
                                   long long max_substitutions = 10'000'000,
                                   ClassicalStats* stats = nullptr);

} // namespace ytab
