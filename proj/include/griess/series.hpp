#pragma once

#include "griess/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace griess {

/// Central charge 1 - 6/((m+2)(m+3)) of the m-th unitary discrete-series
/// model, m >= 0.  The values increase strictly from 0 towards 1.
Rational central_charge(long m);

/// Exact inverse of central_charge; nullopt when c is not in the series.
std::optional<long> find_m(const Rational& c);

/// One cell of the weight grid: h = (((m+3)r - (m+2)s)^2 - 1) / (4(m+2)(m+3)).
struct WeightCell {
    long r, s;
    Rational h;
};

/// The full weight grid of the m-th model over 1 <= s <= r <= m+1, together
/// with the deduplicated value set (distinct cells can share a value).
struct MinimalModelTable {
    long m;
    Rational c;
    std::vector<WeightCell> cells;

    std::set<Rational> values() const;
};

MinimalModelTable weight_table(long m);

/// The deduplicated highest-weight values of the m-th model.
std::set<Rational> weights(long m);

/// All (h, k) with h in ws1, k in ws2 and h + k a non-negative integer.
std::set<std::pair<Rational, Rational>> integer_weight_pairs(const std::set<Rational>& ws1,
                                                             const std::set<Rational>& ws2);

/// Every multiset of discrete-series central charges from [lower, upper]
/// summing exactly to c, each returned as a non-decreasing vector.  The
/// search is exhaustive: parts are at least `lower`, so no multiset has more
/// than c/lower parts.  Requires 0 < lower and upper < 1 (the series
/// accumulates at 1, so a window reaching 1 has no finite candidate list).
std::set<std::vector<Rational>> decompose_charge(const Rational& c, const Rational& lower,
                                                 const Rational& upper);

/// Summand of a two-generator module decomposition over the charge-(4/5)
/// and charge-(6/7) models: either a plain tensor L(4/5,h) x L(6/7,k), or a
/// twisted one whose first factor is a W-algebra module (weight h with a
/// sign) and whose second factor L(6/7,4/3) may carry one of its two module
/// structures.  `label` is the rendered form used in reports.
struct A2Summand {
    std::string label;
    bool plain;
    Rational h, k;
};

struct A2Decomposition {
    int case_number;
    std::vector<A2Summand> summands;
    std::string annotation;
};

/// The four possible decompositions of a VOA generated by two charge-(1/2)
/// conformal vectors whose reflections compose to an order-3 map with
/// generator inner product 13/1024.  Static data; every summand's weight
/// pair is validated against the integer-weight pair list of the two models
/// before returning.
std::vector<A2Decomposition> type_a2_decompositions();

}  // namespace griess
