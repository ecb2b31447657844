#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ytab/tableau.hpp"

namespace ytab {

// The ordered basis S_1 > S_2 > ... > S_K of semistandard tableaux of one
// shape and content, descending in row word order. Labels are 1-based to
// match the S_i notation used throughout.
class SsytBasis {
public:
    SsytBasis(Partition shape, Content content, std::vector<Filling> descending);

    int kostka() const { return static_cast<int>(tableaux_.size()); }
    const Filling& tableau(int label) const;                 // 1 <= label <= K
    const std::vector<Filling>& tableaux() const { return tableaux_; }
    std::optional<int> label_of(const Filling& f) const;

    const Partition& shape() const { return shape_; }
    const Content& content() const { return content_; }

    bool operator==(const SsytBasis& other) const {
        return shape_ == other.shape_ && content_ == other.content_ &&
               tableaux_ == other.tableaux_;
    }

private:
    Partition shape_;
    Content content_;
    std::vector<Filling> tableaux_;
    std::map<std::vector<int>, int> index_;   // row word -> label
};

// Exactly the set SSYT(lambda,z), sorted descending by row word.
SsytBasis enumerate_ssyt(const Partition& shape, const Content& z);

// K_{lambda,z} = |SSYT(lambda,z)|.
long long kostka(const Partition& shape, const Content& z);

} // namespace ytab
