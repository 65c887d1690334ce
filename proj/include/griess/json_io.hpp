#pragma once

#include "griess/algebra.hpp"
#include "griess/fusion.hpp"

#include <stdexcept>
#include <string>

namespace griess {

/// Malformed input document: bad JSON, wrong shapes, out-of-range indices,
/// unparsable rationals.  The CLI maps this to a usage/input error.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical JSON rendering of an algebra: {"basis": [...], "structure":
/// [[i, j, k, "p/q"], ...], "gram": [["p/q", ...], ...]}.  Structure triples
/// are sparse (nonzero only) with i <= j; the mirrored entries are implied.
std::string algebra_to_json(const GriessAlgebra& a);

GriessAlgebra algebra_from_json(const std::string& text);

void write_algebra_file(const GriessAlgebra& a, const std::string& path);

/// Throws FormatError for an unreadable or malformed file.
GriessAlgebra read_algebra_file(const std::string& path);

/// {"labels": [...], "unit": "...", "N": [[a, b, c, mult], ...]} with labels
/// by name and one entry per unordered pair (index of a <= index of b);
/// a "weights" object is emitted when the ring carries weights.
std::string fusion_to_json(const FusionRing& r);

FusionRing fusion_from_json(const std::string& text);

}  // namespace griess
