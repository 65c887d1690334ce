#include "griess/series.hpp"

#include <functional>
#include <stdexcept>

namespace griess {

Rational central_charge(long m) {
    if (m < 0) throw std::invalid_argument("the discrete series starts at m = 0");
    return Rational(1) - Rational(6) / (Rational(m + 2) * Rational(m + 3));
}

std::optional<long> find_m(const Rational& c) {
    if (c.sign() < 0 || c >= Rational(1)) return std::nullopt;
    // c = 1 - 6/((m+2)(m+3)), so (m+2)(m+3) = 6/(1-c) and m solves
    // m^2 + 5m + 6 - t = 0 with t = 6/(1-c).
    Rational t = Rational(6) / (Rational(1) - c);
    if (!t.is_integer()) return std::nullopt;
    mpz_class disc = 4 * t.num() + 1;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return std::nullopt;
    mpz_class twice_m = sqrt(disc) - 5;
    if (twice_m < 0 || mpz_odd_p(twice_m.get_mpz_t())) return std::nullopt;
    mpz_class m = twice_m / 2;
    if (!m.fits_slong_p()) return std::nullopt;
    return m.get_si();
}

std::set<Rational> MinimalModelTable::values() const {
    std::set<Rational> out;
    for (const WeightCell& cell : cells) out.insert(cell.h);
    return out;
}

MinimalModelTable weight_table(long m) {
    MinimalModelTable table{m, central_charge(m), {}};
    Rational denom = Rational(4) * Rational(m + 2) * Rational(m + 3);
    for (long r = 1; r <= m + 1; ++r)
        for (long s = 1; s <= r; ++s) {
            Rational top = Rational(m + 3) * Rational(r) - Rational(m + 2) * Rational(s);
            table.cells.push_back({r, s, (top * top - Rational(1)) / denom});
        }
    return table;
}

std::set<Rational> weights(long m) { return weight_table(m).values(); }

std::set<std::pair<Rational, Rational>> integer_weight_pairs(const std::set<Rational>& ws1,
                                                             const std::set<Rational>& ws2) {
    std::set<std::pair<Rational, Rational>> out;
    for (const Rational& h : ws1)
        for (const Rational& k : ws2) {
            Rational sum = h + k;
            if (sum.is_integer() && sum.sign() >= 0) out.insert({h, k});
        }
    return out;
}

std::set<std::vector<Rational>> decompose_charge(const Rational& c, const Rational& lower,
                                                 const Rational& upper) {
    if (lower.sign() <= 0) throw std::invalid_argument("part lower bound must be positive");
    if (upper >= Rational(1))
        throw std::invalid_argument(
            "the discrete series accumulates at 1; an upper bound of 1 or more has no "
            "finite candidate list");

    // The series is increasing, so the candidates form a contiguous block.
    std::vector<Rational> candidates;
    for (long k = 0;; ++k) {
        Rational ck = central_charge(k);
        if (ck > upper) break;
        if (ck >= lower) candidates.push_back(ck);
    }

    std::set<std::vector<Rational>> out;
    std::vector<Rational> current;
    // Parts are chosen with non-decreasing candidate index, so each multiset
    // is visited exactly once, already sorted.  Depth is bounded by c/lower.
    std::function<void(size_t, const Rational&)> extend = [&](size_t start,
                                                              const Rational& remaining) {
        if (remaining.is_zero()) {
            if (!current.empty()) out.insert(current);
            return;
        }
        for (size_t i = start; i < candidates.size(); ++i) {
            if (candidates[i] > remaining) break;
            current.push_back(candidates[i]);
            extend(i, remaining - candidates[i]);
            current.pop_back();
        }
    };
    extend(0, c);
    return out;
}

namespace {

A2Summand plain_summand(long h, long k) {
    return {"(" + std::to_string(h) + "," + std::to_string(k) + ")", true, Rational(h),
            Rational(k)};
}

A2Summand twisted_summand(const std::string& label) {
    return {label, false, Rational(2, 3), Rational(4, 3)};
}

}  // namespace

std::vector<A2Decomposition> type_a2_decompositions() {
    std::vector<A2Decomposition> cases;
    cases.push_back({1,
                     {plain_summand(0, 0), plain_summand(3, 0),
                      twisted_summand("W(2/3,+) x L(6/7,4/3)"),
                      twisted_summand("W(2/3,-) x L(6/7,4/3)")},
                     ""});
    cases.push_back({2,
                     {plain_summand(0, 0), plain_summand(0, 5),
                      twisted_summand("L(4/5,2/3) x L(6/7,4/3)^{+1}"),
                      twisted_summand("L(4/5,2/3) x L(6/7,4/3)^{-1}")},
                     ""});
    cases.push_back({3,
                     {plain_summand(0, 0), plain_summand(3, 5),
                      twisted_summand("W(2/3,+) x L(6/7,4/3)^{+1}"),
                      twisted_summand("W(2/3,-) x L(6/7,4/3)^{+1}")},
                     ""});
    cases.push_back({4,
                     {plain_summand(0, 0), plain_summand(3, 0), plain_summand(0, 5),
                      plain_summand(3, 5), twisted_summand("W(2/3,+/-) x L(6/7,4/3)^{+1}"),
                      twisted_summand("W(2/3,-/+) x L(6/7,4/3)^{-1}")},
                     "3-State Potts model"});

    // Every summand's weight pair must appear among the integer-weight pairs
    // of the two factor models restricted to the labels in play.
    auto allowed = integer_weight_pairs({Rational(0), Rational(2, 3), Rational(3)},
                                        {Rational(0), Rational(4, 3), Rational(5)});
    for (const A2Decomposition& d : cases)
        for (const A2Summand& s : d.summands) {
            if (!allowed.count({s.h, s.k}))
                throw std::logic_error("summand " + s.label +
                                       " is outside the integer-weight pair list");
            if (s.plain && !(s.h + s.k).is_integer())
                throw std::logic_error("plain summand " + s.label +
                                       " has a non-integer total weight");
        }
    return cases;
}

}  // namespace griess
