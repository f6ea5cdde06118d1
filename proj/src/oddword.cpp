#include "akns/oddword.hpp"

namespace akns {

bool odd_word_is_canonical(const OddWord& w) {
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (!jet_is_odd(w.factors[i])) return false;
        if (i > 0 && !(w.factors[i - 1] < w.factors[i])) return false;
    }
    return true;
}

std::optional<SignedWord> odd_concat(const OddWord& a, const OddWord& b) {
    SignedWord out{+1, {}};
    out.word.factors.reserve(a.factors.size() + b.factors.size());
    std::size_t i = 0, j = 0;
    // Sorted merge. Taking b[j] while a[i..] remains means b[j] jumps over
    // (len(a) - i) odd factors, contributing that many sign flips.
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i] == b.factors[j]) return std::nullopt;
        if (a.factors[i] < b.factors[j]) {
            out.word.factors.push_back(a.factors[i++]);
        } else {
            if ((a.factors.size() - i) & 1) out.sign = -out.sign;
            out.word.factors.push_back(b.factors[j++]);
        }
    }
    while (i < a.factors.size()) out.word.factors.push_back(a.factors[i++]);
    while (j < b.factors.size()) out.word.factors.push_back(b.factors[j++]);
    return out;
}

std::optional<SignedWord> odd_normalize(const std::vector<Jet>& seq) {
    SignedWord out{+1, {}};
    for (const Jet& j : seq) {
        OddWord single;
        single.factors.push_back(j);
        auto merged = odd_concat(out.word, single);
        if (!merged) return std::nullopt;
        out.sign *= merged->sign;
        out.word = std::move(merged->word);
    }
    return out;
}

}  // namespace akns
