#include "akns/integrate.hpp"
#include "akns/io.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace akns {

namespace {

struct BlockKey {
    int mu_pow;
    std::array<int, 6> counts;
    int weight;

    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

// Enumerates, for one field, all canonical order-tuples of the given
// multiplicity with the given total derivative order. Even fields allow
// repeated orders (non-decreasing tuples); odd fields require strictly
// increasing tuples since a repeated odd jet annihilates the monomial.
void enumerate_field_tuples(Field f, int multiplicity, int total_order, int min_order,
                            std::vector<Jet>& acc, const std::function<void()>& emit) {
    if (multiplicity == 0) {
        if (total_order == 0) emit();
        return;
    }
    const bool odd = field_is_odd(f);
    // Remaining factors must be able to absorb the rest of the budget; no
    // upper bound needed beyond total_order itself.
    for (int o = min_order; o <= total_order; ++o) {
        acc.push_back(Jet{f, o});
        enumerate_field_tuples(f, multiplicity - 1, total_order - o, odd ? o + 1 : o, acc, emit);
        acc.pop_back();
    }
}

// Enumerates all canonical TermKeys with the given mu power, field multiset
// and total derivative-order budget.
void enumerate_candidates(int mu_pow, const std::array<int, 6>& counts, int budget,
                          std::vector<TermKey>& out) {
    // Distribute the budget over the six fields in order.
    struct Rec {
        const std::array<int, 6>& counts;
        int mu_pow;
        std::vector<TermKey>& out;
        std::vector<Jet> jets;

        void go(int fi, int remaining) {
            if (fi == 6) {
                if (remaining != 0) return;
                TermKey k;
                k.mu_pow = mu_pow;
                for (const Jet& j : jets) {
                    if (jet_is_odd(j)) {
                        k.odd.factors.push_back(j);
                    } else if (!k.even.empty() && k.even.back().first == j) {
                        k.even.back().second++;
                    } else {
                        k.even.emplace_back(j, 1);
                    }
                }
                out.push_back(std::move(k));
                return;
            }
            Field f = kAllFields[static_cast<std::size_t>(fi)];
            int m = counts[static_cast<std::size_t>(fi)];
            if (m == 0) {
                go(fi + 1, remaining);
                return;
            }
            for (int part = 0; part <= remaining; ++part) {
                std::size_t mark = jets.size();
                enumerate_field_tuples(f, m, part, 0, jets,
                                       [&] { go(fi + 1, remaining - part); });
                jets.resize(mark);
            }
        }
    } rec{counts, mu_pow, out, {}};
    rec.go(0, budget);
}

}  // namespace

NotExactError::NotExactError(DiffPoly integrand_, DiffPoly remainder_, const std::string& context)
    : std::runtime_error("not a total x-derivative" +
                         (context.empty() ? std::string() : " (" + context + ")") +
                         "; remainder: " + to_text(remainder_)),
      integrand(std::move(integrand_)),
      remainder(std::move(remainder_)) {}

std::pair<DiffPoly, DiffPoly> integrate_with_remainder(const DiffPoly& f) {
    // Group the integrand into solver blocks.
    std::map<BlockKey, DiffPoly> blocks;
    for (const auto& [k, c] : f.terms())
        blocks[BlockKey{k.mu_pow, k.field_counts(), k.weight()}].add_term(k, c);

    DiffPoly g, rem;
    for (const auto& [bk, fb] : blocks) {
        int occupancy = 0;
        for (int cnt : bk.counts) occupancy += cnt;
        // Total derivative-order budget for antiderivative candidates.
        int jet_weight = bk.weight + bk.mu_pow;  // sum over factors of (1 + order)
        int budget = jet_weight - occupancy - 1;
        std::vector<TermKey> candidates;
        if (occupancy > 0 && budget >= 0)
            enumerate_candidates(bk.mu_pow, bk.counts, budget, candidates);
        if (candidates.empty()) {
            rem += fb;
            continue;
        }

        // d-images of the candidates, and the union of their monomial supports.
        std::vector<DiffPoly> images;
        images.reserve(candidates.size());
        std::map<TermKey, std::size_t> row_of;
        for (const TermKey& cand : candidates) {
            DiffPoly img = d_total(DiffPoly::monomial(1, cand));
            for (const auto& [k, c] : img.terms()) row_of.emplace(k, 0);
            images.push_back(std::move(img));
        }
        for (const auto& [k, c] : fb.terms()) row_of.emplace(k, 0);
        std::size_t nrows = 0;
        for (auto& [k, idx] : row_of) idx = nrows++;

        const std::size_t ncols = candidates.size();
        std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
        for (std::size_t j = 0; j < ncols; ++j)
            for (const auto& [k, c] : images[j].terms()) m[row_of[k]][j] = c;
        for (const auto& [k, c] : fb.terms()) m[row_of[k]][ncols] = c;

        // Gauss-Jordan with deterministic pivoting: for each column take the
        // first unused row (in canonical monomial order) with a nonzero
        // entry. The pivot pattern depends only on the candidate images, so
        // the splitting is linear in the integrand.
        std::vector<bool> row_used(nrows, false);
        std::vector<std::ptrdiff_t> pivot_row(ncols, -1);
        for (std::size_t j = 0; j < ncols; ++j) {
            std::size_t pr = nrows;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (!row_used[i] && m[i][j] != 0) { pr = i; break; }
            }
            if (pr == nrows) continue;  // dependent column; coefficient stays 0
            row_used[pr] = true;
            pivot_row[j] = static_cast<std::ptrdiff_t>(pr);
            Rational inv = m[pr][j];
            for (std::size_t jj = 0; jj <= ncols; ++jj) m[pr][jj] /= inv;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (i == pr || m[i][j] == 0) continue;
                Rational factor = m[i][j];
                for (std::size_t jj = 0; jj <= ncols; ++jj) m[i][jj] -= factor * m[pr][jj];
            }
        }

        DiffPoly gb;
        for (std::size_t j = 0; j < ncols; ++j)
            if (pivot_row[j] >= 0)
                gb.add_term(candidates[j], m[static_cast<std::size_t>(pivot_row[j])][ncols]);
        g += gb;
        rem += fb - d_total(gb);
    }
    return {std::move(g), std::move(rem)};
}

DiffPoly integrate_exact(const DiffPoly& f, const std::string& context) {
    auto [g, rem] = integrate_with_remainder(f);
    if (!rem.is_zero()) throw NotExactError(f, rem, context);
    return g;
}

}  // namespace akns
