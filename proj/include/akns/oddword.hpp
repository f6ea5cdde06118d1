#pragma once
// Canonical Grassmann monomials ("odd words").
//
// An OddWord is a product of distinct odd jets stored in strictly increasing
// canonical order. The product of two words is computed by a sorted merge
// that counts transpositions: each time a factor of the right word moves past
// a factor of the left word the sign flips, and a repeated factor annihilates
// the product (theta * theta = 0).

#include "akns/jet.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace akns {

struct OddWord {
    // Strictly increasing sequence of odd jets.
    std::vector<Jet> factors;

    bool empty() const { return factors.empty(); }
    int length() const { return static_cast<int>(factors.size()); }
    // Grassmann parity of the word: 0 even, 1 odd.
    int parity() const { return length() & 1; }

    friend auto operator<=>(const OddWord&, const OddWord&) = default;
};

struct SignedWord {
    int sign;  // +1 or -1
    OddWord word;
};

// True iff all factors are odd jets in strictly increasing order.
bool odd_word_is_canonical(const OddWord& w);

// Concatenation product a*b reduced to canonical form.
// Returns std::nullopt when the product vanishes (repeated factor).
std::optional<SignedWord> odd_concat(const OddWord& a, const OddWord& b);

// Canonicalizes an arbitrary sequence of odd jets (not necessarily sorted).
// Returns std::nullopt when two equal jets appear.
std::optional<SignedWord> odd_normalize(const std::vector<Jet>& seq);

}  // namespace akns
