#pragma once

#include <string>

namespace griess {

/**
 * The full reproduction document: parameter classification, both algebra
 * tables with their conformal data, the symmetry identities, the
 * printed-constant audit, the discrete-series weight data with the
 * integer-weight pair lists, the charge window search, the four module
 * decompositions, and the fusion ring certifications.  Everything is
 * recomputed on each call and rendered deterministically, so two runs
 * produce byte-identical output.
 */
std::string paper_report_json();
std::string paper_report_markdown();

/// Number of flagged printed constants in the document's audit section,
/// for strict-mode exit decisions.
size_t paper_report_flag_count();

}  // namespace griess
