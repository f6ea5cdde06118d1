#include "akns/nonlocal.hpp"

#include "akns/io.hpp"
#include "akns/parse.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace akns {

namespace {

Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

// Joint rational content and minimal mu power over a set of coefficients.
// The sign is taken from the first term of the lowest differential power.
std::pair<Rational, int> joint_content(const std::map<int, DiffPoly>& parts) {
    mpz_class num_gcd = 0, den_lcm = 1;
    int min_mu = INT_MAX;
    int sign = 0;
    for (const auto& [k, c] : parts) {
        for (const auto& [key, coeff] : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
            if (sign == 0) sign = sgn(coeff);
        }
        if (!c.is_zero()) min_mu = std::min(min_mu, c.min_mu_pow());
    }
    if (sign == 0) return {Rational(0), 0};
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sign < 0) content = -content;
    return {content, min_mu};
}

}  // namespace

// --- LocalOp -----------------------------------------------------------------

DiffPoly LocalOp::coeff(int k) const {
    auto it = parts_.find(k);
    return it == parts_.end() ? DiffPoly::zero() : it->second;
}

void LocalOp::add(DiffPoly c, int k) {
    if (c.is_zero()) return;
    if (k < 0) throw std::logic_error("LocalOp: negative differential power");
    auto it = parts_.find(k);
    if (it == parts_.end()) {
        parts_.emplace(k, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

LocalOp LocalOp::operator+(const LocalOp& o) const {
    LocalOp r = *this;
    for (const auto& [k, c] : o.parts_) r.add(c, k);
    return r;
}

LocalOp LocalOp::operator-(const LocalOp& o) const { return *this + (-o); }

LocalOp LocalOp::operator-() const {
    LocalOp r;
    for (const auto& [k, c] : parts_) r.parts_.emplace(k, -c);
    return r;
}

LocalOp LocalOp::scaled(const Rational& c) const {
    LocalOp r;
    if (sgn(c) == 0) return r;
    for (const auto& [k, v] : parts_) r.parts_.emplace(k, v.scaled(c));
    return r;
}

LocalOp LocalOp::left_multiplied(const DiffPoly& f) const {
    LocalOp r;
    for (const auto& [k, v] : parts_) r.add(f * v, k);
    return r;
}

LocalOp LocalOp::subst_mu(const Rational& value) const {
    LocalOp r;
    for (const auto& [k, v] : parts_) r.add(v.subst_mu(value), k);
    return r;
}

DiffPoly LocalOp::apply(const DiffPoly& v) const {
    DiffPoly r;
    for (const auto& [k, c] : parts_) r += c * d_total_n(v, k);
    return r;
}

LocalOp compose(const LocalOp& a, const LocalOp& b) {
    LocalOp r;
    for (const auto& [k, c] : a.parts_)
        for (const auto& [l, e] : b.parts_) {
            DiffPoly di = e;
            for (int i = 0; i <= k; ++i) {
                r.add((c * di).scaled(binom(k, i)), k - i + l);
                if (i < k) di = d_total(di);
            }
        }
    return r;
}

LocalOp LocalOp::normalized(DiffPoly& factor) const {
    if (parts_.empty()) {
        factor = DiffPoly::zero();
        return LocalOp();
    }
    auto [content, min_mu] = joint_content(parts_);
    factor = DiffPoly::monomial(content, TermKey{min_mu, {}, {}});
    LocalOp r;
    for (const auto& [k, v] : parts_)
        r.parts_.emplace(k, v.scaled(Rational(1) / content).mu_shifted(-min_mu));
    return r;
}

bool operator<(const LocalOp& a, const LocalOp& b) {
    auto ia = a.parts_.begin(), ib = b.parts_.begin();
    for (; ia != a.parts_.end() && ib != b.parts_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.parts_.end() && ib != b.parts_.end();
}

std::string to_text(const LocalOp& op) {
    if (op.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : op.parts()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_text(c) + ")";
        if (k == 1) out += " d";
        else if (k > 1) out += " d^" + std::to_string(k);
    }
    return out;
}

// --- Chain -------------------------------------------------------------------

bool Chain::has_zero_stage() const {
    for (const LocalOp& s : stages)
        if (s.is_zero()) return true;
    return false;
}

bool operator<(const Chain& a, const Chain& b) {
    return std::lexicographical_compare(a.stages.begin(), a.stages.end(),
                                        b.stages.begin(), b.stages.end());
}

std::string to_text(const Chain& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        if (i) out += " dinv ";
        out += "[" + to_text(chain.stages[i]) + "]";
    }
    return out;
}

// --- OperatorEntry -----------------------------------------------------------

OperatorEntry OperatorEntry::operator+(const OperatorEntry& o) const {
    OperatorEntry r;
    r.local = local + o.local;
    r.chains = chains;
    r.chains.insert(r.chains.end(), o.chains.begin(), o.chains.end());
    return r.canonicalized();
}

OperatorEntry OperatorEntry::operator-(const OperatorEntry& o) const { return *this + (-o); }

OperatorEntry OperatorEntry::operator-() const { return scaled(-1); }

OperatorEntry OperatorEntry::scaled(const Rational& c) const {
    OperatorEntry r;
    if (sgn(c) == 0) return r;
    r.local = local.scaled(c);
    for (Chain chain : chains) {
        chain.stages[0] = chain.stages[0].scaled(c);
        r.chains.push_back(std::move(chain));
    }
    return r;
}

OperatorEntry OperatorEntry::left_multiplied(const DiffPoly& f) const {
    OperatorEntry r;
    if (f.is_zero()) return r;
    r.local = local.left_multiplied(f);
    for (Chain chain : chains) {
        chain.stages[0] = chain.stages[0].left_multiplied(f);
        if (!chain.has_zero_stage()) r.chains.push_back(std::move(chain));
    }
    return r;
}

OperatorEntry OperatorEntry::subst_mu(const Rational& value) const {
    OperatorEntry r;
    r.local = local.subst_mu(value);
    for (const Chain& chain : chains) {
        Chain c;
        for (const LocalOp& s : chain.stages) c.stages.push_back(s.subst_mu(value));
        if (!c.has_zero_stage()) r.chains.push_back(std::move(c));
    }
    return r.canonicalized();
}

OperatorEntry compose(const OperatorEntry& a, const OperatorEntry& b) {
    OperatorEntry r;
    r.local = compose(a.local, b.local);
    if (!a.local.is_zero())
        for (Chain chain : b.chains) {
            chain.stages[0] = compose(a.local, chain.stages[0]);
            if (!chain.has_zero_stage()) r.chains.push_back(std::move(chain));
        }
    if (!b.local.is_zero())
        for (Chain chain : a.chains) {
            chain.stages.back() = compose(chain.stages.back(), b.local);
            if (!chain.has_zero_stage()) r.chains.push_back(std::move(chain));
        }
    for (const Chain& ca : a.chains)
        for (const Chain& cb : b.chains) {
            Chain c;
            c.stages.assign(ca.stages.begin(), ca.stages.end() - 1);
            c.stages.push_back(compose(ca.stages.back(), cb.stages[0]));
            c.stages.insert(c.stages.end(), cb.stages.begin() + 1, cb.stages.end());
            if (!c.has_zero_stage()) r.chains.push_back(std::move(c));
        }
    return r.canonicalized();
}

OperatorEntry OperatorEntry::canonicalized() const {
    std::vector<Chain> depth1, kept;

    // Depth-2 chains: pool by normalized outer stages, then reduce the summed
    // middle operator.
    std::map<std::pair<LocalOp, LocalOp>, LocalOp> two;
    for (const Chain& chain : chains) {
        if (chain.has_zero_stage()) continue;
        if (chain.depth() == 1) {
            depth1.push_back(chain);
        } else if (chain.depth() == 2) {
            DiffPoly f0, f2;
            LocalOp s0 = chain.stages[0].normalized(f0);
            LocalOp s2 = chain.stages[2].normalized(f2);
            LocalOp mid = chain.stages[1].left_multiplied(f0 * f2);
            auto [it, inserted] = two.emplace(std::make_pair(s0, s2), mid);
            if (!inserted) it->second = it->second + mid;
        } else {
            // Deeper chains: fold stage contents into stage 0 for determinism.
            Chain c = chain;
            DiffPoly folded = DiffPoly::integer(1);
            for (std::size_t i = 1; i < c.stages.size(); ++i) {
                DiffPoly f;
                c.stages[i] = c.stages[i].normalized(f);
                folded = folded * f;
            }
            c.stages[0] = c.stages[0].left_multiplied(folded);
            if (!c.has_zero_stage()) kept.push_back(std::move(c));
        }
    }
    for (const auto& [key, mid] : two) {
        if (mid.is_zero()) continue;
        const auto& [s0, s2] = key;
        LocalOp high;  // sum_{k>=1} T_k d^(k-1)
        for (const auto& [k, c] : mid.parts())
            if (k >= 1) high.add(c, k - 1);
        if (!high.is_zero()) {
            Chain c;
            c.stages = {s0, compose(high, s2)};
            if (!c.has_zero_stage()) depth1.push_back(std::move(c));
        }
        DiffPoly g = mid.coeff(0);
        if (!g.is_zero()) {
            auto [G, R] = integrate_with_remainder(g);
            if (R.is_zero()) {
                // dinv o G_x o dinv = G o dinv - dinv o G.
                Chain ca;
                ca.stages = {compose(s0, LocalOp(G)), s2};
                if (!ca.has_zero_stage()) depth1.push_back(std::move(ca));
                Chain cb;
                cb.stages = {s0.scaled(-1), compose(LocalOp(G), s2)};
                if (!cb.has_zero_stage()) depth1.push_back(std::move(cb));
            } else {
                Chain c;
                c.stages = {s0, LocalOp(g), s2};
                kept.push_back(std::move(c));
            }
        }
    }

    // Depth-1 chains: split each last stage into monic monomial atoms (folding
    // coefficients and mu powers into the first stage, which is valid because
    // dinv is linear and constants pass through it), pool by atom, then pool
    // by normalized first stage (summing the last).  The atom split is what
    // lets e.g. a dinv (q+s) and a dinv q + a dinv s reach one canonical form.
    std::map<LocalOp, LocalOp> by_last;
    for (const Chain& chain : depth1) {
        if (chain.has_zero_stage()) continue;
        for (const auto& [k, c] : chain.stages[1].parts()) {
            for (const auto& [key, coeff] : c.terms()) {
                TermKey monic = key;
                monic.mu_pow = 0;
                LocalOp atom(DiffPoly::monomial(1, monic), k);
                DiffPoly factor = DiffPoly::monomial(coeff, TermKey{key.mu_pow, {}, {}});
                LocalOp first = chain.stages[0].left_multiplied(factor);
                auto [it, inserted] = by_last.emplace(std::move(atom), first);
                if (!inserted) it->second = it->second + first;
            }
        }
    }
    std::map<LocalOp, LocalOp> by_first;
    for (const auto& [last, first_sum] : by_last) {
        if (first_sum.is_zero()) continue;
        DiffPoly f;
        LocalOp first = first_sum.normalized(f);
        LocalOp scaled_last = last.left_multiplied(f);
        auto [it, inserted] = by_first.emplace(first, scaled_last);
        if (!inserted) it->second = it->second + scaled_last;
    }
    OperatorEntry r;
    r.local = local;
    for (const auto& [first, last_sum] : by_first) {
        if (last_sum.is_zero()) continue;
        DiffPoly f;
        LocalOp last = last_sum.normalized(f);
        Chain c;
        c.stages = {first.left_multiplied(f), last};
        if (!c.has_zero_stage()) r.chains.push_back(std::move(c));
    }
    // Deeper chains: merge identical tails.
    std::map<std::vector<LocalOp>, LocalOp> deep;
    for (const Chain& chain : kept) {
        std::vector<LocalOp> tail(chain.stages.begin() + 1, chain.stages.end());
        auto [it, inserted] = deep.emplace(std::move(tail), chain.stages[0]);
        if (!inserted) it->second = it->second + chain.stages[0];
    }
    for (const auto& [tail, first_sum] : deep) {
        if (first_sum.is_zero()) continue;
        Chain c;
        c.stages.push_back(first_sum);
        c.stages.insert(c.stages.end(), tail.begin(), tail.end());
        r.chains.push_back(std::move(c));
    }
    std::sort(r.chains.begin(), r.chains.end(),
              [](const Chain& a, const Chain& b) {
                  if (a.stages.size() != b.stages.size()) return a.stages.size() < b.stages.size();
                  return a < b;
              });
    return r;
}

std::string to_text(const OperatorEntry& entry) {
    if (entry.is_zero()) return "0";
    std::string out;
    if (!entry.local.is_zero()) out = to_text(entry.local);
    for (const Chain& c : entry.chains) {
        if (!out.empty()) out += " + ";
        out += to_text(c);
    }
    return out;
}

// --- Operator expression parser ----------------------------------------------

namespace {

using detail::Token;

class OperatorParser {
public:
    explicit OperatorParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    OperatorEntry parse() {
        OperatorEntry e = expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { if (cur().kind != Token::End) ++pos_; }
    bool accept(Token::Kind k) {
        if (cur().kind == k) { advance(); return true; }
        return false;
    }
    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what);
    }

    OperatorEntry expr() {
        bool neg = false;
        if (accept(Token::Minus)) neg = true;
        else accept(Token::Plus);
        OperatorEntry acc = term();
        if (neg) acc = acc.scaled(-1);
        for (;;) {
            if (accept(Token::Plus)) acc = plain_sum(acc, term());
            else if (accept(Token::Minus)) acc = plain_sum(acc, term().scaled(-1));
            else break;
        }
        return acc;
    }

    // Sum without canonicalization; the final entry is canonicalized once.
    static OperatorEntry plain_sum(OperatorEntry a, const OperatorEntry& b) {
        a.local = a.local + b.local;
        a.chains.insert(a.chains.end(), b.chains.begin(), b.chains.end());
        return a;
    }

    OperatorEntry term() {
        OperatorEntry acc = factor();
        while (accept(Token::Star)) acc = compose(acc, factor());
        return acc;
    }

    OperatorEntry factor() {
        OperatorEntry base = primary();
        if (accept(Token::Caret)) {
            if (cur().kind != Token::Num || cur().num.get_den() != 1 || sgn(cur().num) < 0)
                throw ParseError("exponent must be a non-negative integer");
            unsigned e = static_cast<unsigned>(cur().num.get_num().get_ui());
            advance();
            OperatorEntry acc;
            acc.local = LocalOp::identity();
            for (unsigned i = 0; i < e; ++i) acc = compose(acc, base);
            return acc;
        }
        return base;
    }

    OperatorEntry primary() {
        OperatorEntry e;
        if (cur().kind == Token::Num) {
            e.local = LocalOp(DiffPoly::constant(cur().num));
            advance();
            return e;
        }
        if (accept(Token::LParen)) {
            e = expr();
            expect(Token::RParen, "')'");
            return e;
        }
        if (cur().kind == Token::Name) {
            auto [base, order] = detail::split_derivative_suffix(cur().name);
            advance();
            if (base == "d") {
                if (order != 0) throw ParseError("d takes no derivative suffix");
                e.local = LocalOp(DiffPoly::integer(1), 1);
                return e;
            }
            if (base == "dinv") {
                if (order != 0) throw ParseError("dinv takes no derivative suffix");
                Chain c;
                c.stages = {LocalOp::identity(), LocalOp::identity()};
                e.chains.push_back(std::move(c));
                return e;
            }
            if (base == "mu") {
                if (order != 0) throw ParseError("mu takes no derivative suffix");
                e.local = LocalOp(DiffPoly::mu());
                return e;
            }
            if (base == "h") {
                e.local = LocalOp(d_total_n(make_h(), order));
                return e;
            }
            e.local = LocalOp(DiffPoly::jet(field_from_name(base), order));
            return e;
        }
        throw ParseError("expected a number, name, 'd', 'dinv' or '('");
    }
};

}  // namespace

OperatorEntry parse_operator(std::string_view src) {
    try {
        return OperatorParser(detail::lex(src)).parse().canonicalized();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " while parsing operator '" + std::string(src) + "'");
    }
}

// --- NonlocalOperator ----------------------------------------------------------

NonlocalOperator::NonlocalOperator(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("NonlocalOperator: bad shape");
}

NonlocalOperator NonlocalOperator::from_table(const std::vector<std::vector<std::string>>& table) {
    int rows = static_cast<int>(table.size());
    if (rows == 0) throw std::invalid_argument("from_table: empty table");
    int cols = static_cast<int>(table[0].size());
    NonlocalOperator op(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(table[i].size()) != cols)
            throw std::invalid_argument("from_table: ragged table");
        for (int j = 0; j < cols; ++j)
            if (!table[i][j].empty()) op.at(i, j) = parse_operator(table[i][j]);
    }
    return op;
}

OperatorEntry& NonlocalOperator::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("NonlocalOperator::at");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const OperatorEntry& NonlocalOperator::at(int i, int j) const {
    return const_cast<NonlocalOperator*>(this)->at(i, j);
}

NonlocalOperator NonlocalOperator::operator+(const NonlocalOperator& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator+: shape mismatch");
    NonlocalOperator r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

NonlocalOperator NonlocalOperator::operator-(const NonlocalOperator& o) const {
    return *this + o.scaled(-1);
}

NonlocalOperator NonlocalOperator::scaled(const Rational& c) const {
    NonlocalOperator r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].scaled(c);
    return r;
}

NonlocalOperator NonlocalOperator::subst_mu(const Rational& value) const {
    NonlocalOperator r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].subst_mu(value);
    return r;
}

NonlocalOperator NonlocalOperator::composed_with(const NonlocalOperator& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("composed_with: shape mismatch");
    NonlocalOperator r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            OperatorEntry acc;
            for (int k = 0; k < cols_; ++k) {
                const OperatorEntry& a = at(i, k);
                const OperatorEntry& b = o.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                OperatorEntry prod = compose(a, b);
                acc.local = acc.local + prod.local;
                acc.chains.insert(acc.chains.end(), prod.chains.begin(), prod.chains.end());
            }
            r.at(i, j) = acc.canonicalized();
        }
    return r;
}

NonlocalOperator NonlocalOperator::canonicalized() const {
    NonlocalOperator r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].canonicalized();
    return r;
}

bool operator==(const NonlocalOperator& a, const NonlocalOperator& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// --- Row application -----------------------------------------------------------

namespace {

struct PendingItem {
    std::vector<LocalOp> stages;  // content-normalized prefix
    DiffPoly integrand;
};

// Internal signal for a row whose value has an irreducible antiderivative.
struct RowFail {
    DiffPoly core;
    DiffPoly multiplier;
};

DiffPoly apply_row(const NonlocalOperator& op, int row, const std::vector<DiffPoly>& v) {
    DiffPoly result;
    std::map<int, std::vector<PendingItem>> pending;
    for (int j = 0; j < op.cols(); ++j) {
        const OperatorEntry& entry = op.at(row, j);
        result += entry.local.apply(v[static_cast<std::size_t>(j)]);
        for (const Chain& chain : entry.chains) {
            DiffPoly integrand = chain.stages.back().apply(v[static_cast<std::size_t>(j)]);
            if (integrand.is_zero()) continue;
            PendingItem item;
            item.stages.assign(chain.stages.begin(), chain.stages.end() - 1);
            for (LocalOp& s : item.stages) {
                DiffPoly f;
                s = s.normalized(f);
                integrand = f * integrand;
            }
            if (integrand.is_zero()) continue;
            item.integrand = std::move(integrand);
            pending[static_cast<int>(item.stages.size())].push_back(std::move(item));
        }
    }
    while (!pending.empty()) {
        int depth = pending.rbegin()->first;
        std::vector<PendingItem> items = std::move(pending.rbegin()->second);
        pending.erase(depth);
        // Pool integrands sharing the whole normalized prefix.
        std::map<std::vector<LocalOp>, DiffPoly> groups;
        for (PendingItem& item : items) {
            auto [it, inserted] = groups.emplace(std::move(item.stages), item.integrand);
            if (!inserted) it->second += item.integrand;
        }
        // (deeper prefix, last stage, canonical remainder)
        std::map<std::vector<LocalOp>, std::vector<std::pair<LocalOp, DiffPoly>>> residuals;
        auto emit = [&](const std::vector<LocalOp>& deeper, DiffPoly value) {
            if (value.is_zero()) return;
            if (deeper.empty()) {
                result += value;
                return;
            }
            PendingItem item;
            item.stages = deeper;
            item.integrand = std::move(value);
            pending[static_cast<int>(deeper.size())].push_back(std::move(item));
        };
        for (const auto& [stages, integrand] : groups) {
            if (integrand.is_zero()) continue;
            auto [g, rem] = integrate_with_remainder(integrand);
            std::vector<LocalOp> deeper(stages.begin(), stages.end() - 1);
            if (!g.is_zero()) emit(deeper, stages.back().apply(g));
            if (!rem.is_zero()) residuals[deeper].push_back({stages.back(), rem});
        }
        // Formal cancellation of leftover remainders: basis-reduce them and
        // require each basis multiplier to vanish or to lose its d^0 part.
        for (const auto& [deeper, list] : residuals) {
            std::vector<DiffPoly> basis;             // unit leading coefficient
            std::map<TermKey, std::size_t> pivots;   // leading key -> basis index
            std::vector<std::map<std::size_t, Rational>> coords(list.size());
            for (std::size_t idx = 0; idx < list.size(); ++idx) {
                DiffPoly work = list[idx].second;
                while (!work.is_zero()) {
                    const auto& [key, c] = *work.terms().begin();
                    auto it = pivots.find(key);
                    if (it != pivots.end()) {
                        coords[idx][it->second] += c;
                        work -= basis[it->second].scaled(c);
                    } else {
                        std::size_t bi = basis.size();
                        basis.push_back(work.scaled(Rational(1) / c));
                        pivots.emplace(key, bi);
                        coords[idx][bi] += c;
                        work = DiffPoly::zero();
                    }
                }
            }
            for (std::size_t b = 0; b < basis.size(); ++b) {
                LocalOp total;
                for (std::size_t idx = 0; idx < list.size(); ++idx) {
                    auto it = coords[idx].find(b);
                    if (it != coords[idx].end() && sgn(it->second) != 0)
                        total = total + list[idx].first.scaled(it->second);
                }
                if (total.is_zero()) continue;
                DiffPoly head = total.coeff(0);
                if (!head.is_zero()) throw RowFail{basis[b], head};
                LocalOp reduced;  // d^k o dinv = d^(k-1)
                for (const auto& [k, c] : total.parts())
                    if (k >= 1) reduced.add(c, k - 1);
                emit(deeper, reduced.apply(basis[b]));
            }
        }
    }
    return result;
}

}  // namespace

std::vector<DiffPoly> NonlocalOperator::apply(const std::vector<DiffPoly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("apply: vector size mismatch");
    std::vector<DiffPoly> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        try {
            out.push_back(apply_row(*this, i, v));
        } catch (const RowFail& fail) {
            throw NotExactError(fail.core, fail.core,
                                "operator application, row " + std::to_string(i + 1) +
                                    ": irreducible antiderivative with multiplier " +
                                    to_text(fail.multiplier));
        }
    }
    return out;
}

NonlocalOperator::ApplyOutcome NonlocalOperator::try_apply(const std::vector<DiffPoly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("try_apply: vector size mismatch");
    ApplyOutcome out;
    out.value.resize(static_cast<std::size_t>(rows_));
    out.row_ok.assign(static_cast<std::size_t>(rows_), true);
    for (int i = 0; i < rows_; ++i) {
        try {
            out.value[static_cast<std::size_t>(i)] = apply_row(*this, i, v);
        } catch (const RowFail& fail) {
            out.row_ok[static_cast<std::size_t>(i)] = false;
            out.issues.push_back(RowIssue{i, fail.core, fail.multiplier});
        }
    }
    return out;
}

std::string to_text(const NonlocalOperator& op) {
    std::string out;
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j) {
            if (op.at(i, j).is_zero()) continue;
            out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                   to_text(op.at(i, j)) + "\n";
        }
    return out.empty() ? "0\n" : out;
}

}  // namespace akns
