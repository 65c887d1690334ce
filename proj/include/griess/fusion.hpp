#pragma once

#include "griess/rational.hpp"
#include "griess/report.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace griess {

/// Raw material for a fusion ring: named labels, the unit label, the nonzero
/// multiplicities N_{ab}^c by label name, and optional conformal weights.
struct FusionData {
    std::string name;
    std::vector<std::string> labels;
    std::string unit;
    std::vector<std::tuple<std::string, std::string, std::string, unsigned>> mult;
    std::map<std::string, Rational> weights;
};

/**
 * Commutative fusion ring presented by non-negative integer multiplicities
 * over named labels.  Construction resolves and validates label references;
 * the ring laws themselves (unit, commutativity, associativity) are checked
 * by `verify`, so a corrupted table is representable and diagnosable.
 */
class FusionRing {
public:
    explicit FusionRing(FusionData data);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    size_t size() const noexcept { return labels_.size(); }
    const std::string& unit() const noexcept { return labels_[unit_]; }
    size_t unit_index() const noexcept { return unit_; }

    /// Index of a label; throws std::out_of_range for unknown labels.
    size_t index_of(const std::string& label) const;

    unsigned mult(size_t a, size_t b, size_t c) const {
        return n_[(a * size() + b) * size() + c];
    }

    /// The product a * b as a multiset of labels (each repeated with its
    /// multiplicity, ordered by label index).
    std::vector<std::string> fuse(const std::string& a, const std::string& b) const;

    const std::map<std::string, Rational>& weights() const noexcept { return weights_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    size_t unit_ = 0;
    std::vector<unsigned> n_;
    std::map<std::string, Rational> weights_;
};

/// Unit law, commutativity and associativity over all label triples.  Every
/// violated instance becomes its own fail entry naming the labels involved;
/// a clean aspect is summarized by a single pass entry.
Report verify(const FusionRing& r);

/// Smallest label set containing `seed` and the unit, closed under fuse.
/// Throws std::invalid_argument on an empty seed, std::out_of_range on an
/// unknown label.
std::set<std::string> closure(const FusionRing& r, const std::set<std::string>& seed);

/// FNV-1a hash of a canonical serialization (labels, unit, nonzero cells).
/// Guards the embedded tables against accidental edits.
uint64_t table_checksum(const FusionRing& r);

/// The rings transcribed from the printed tables: "ising", "vir_4_5",
/// "w3_4_5" and "vir_6_7_sub".  Each table is checksummed against a frozen
/// value and certified by `verify` at load.  Throws std::invalid_argument
/// for an unknown name, std::logic_error when certification fails.
FusionRing builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

/// Checks that `grade` makes every product grade-additive mod `modulus`:
/// for all nonzero N_{ab}^c, grade(a) + grade(b) = grade(c) (mod modulus).
Report verify_grading(const FusionRing& r, const std::map<std::string, int>& grade,
                      int modulus);

/// The Z3 grading carried by the w3_4_5 ring.
std::map<std::string, int> w3_grading();

/// Does `map` carry ring a onto ring b cell-for-cell: a label bijection
/// sending unit to unit and preserving every multiplicity?
bool isomorphic_by_label_map(const FusionRing& a, const FusionRing& b,
                             const std::map<std::string, std::string>& map);

/// The subring on a fusion-closed label subset.  The unit is added to the
/// subset automatically; label order and weights are inherited.  Throws
/// std::invalid_argument when the subset is not closed under fusion.
FusionRing restriction(const FusionRing& r, const std::set<std::string>& subset);

}  // namespace griess
