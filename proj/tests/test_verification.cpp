#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "griess/ansatz.hpp"
#include "griess/verification.hpp"

#include <string>
#include <vector>

using namespace griess;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

GriessAlgebra with_tables(const GriessAlgebra& a, std::vector<Rational> structure,
                          std::vector<Rational> gram) {
    return GriessAlgebra(a.basis(), std::move(structure), std::move(gram));
}

std::vector<Rational> structure_of(const GriessAlgebra& a) {
    std::vector<Rational> s;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (size_t k = 0; k < a.dim(); ++k) s.push_back(a.structure(i, j, k));
    return s;
}

std::vector<Rational> gram_of(const GriessAlgebra& a) {
    std::vector<Rational> g;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) g.push_back(a.gram(i, j));
    return g;
}

}  // namespace

TEST_CASE("recognized_lambda identifies the two instantiations") {
    CHECK(recognized_lambda(build_algebra(rat(13, 256))) == rat(13, 256));
    CHECK(recognized_lambda(build_algebra(rat(1, 64))) == rat(1, 64));

    GriessAlgebra trivial({"x"}, {rat(2)}, {rat(1)});
    CHECK_FALSE(recognized_lambda(trivial).has_value());

    // A one-entry perturbation is no longer either instantiation.
    GriessAlgebra a = build_algebra(rat(1, 64));
    std::vector<Rational> g = gram_of(a);
    g[0] += rat(1, 1000);
    CHECK_FALSE(recognized_lambda(with_tables(a, structure_of(a), g)).has_value());
}

TEST_CASE("full verification passes on both built algebras") {
    for (const Rational& lambda : admissible_lambdas()) {
        GriessAlgebra a = build_algebra(lambda);
        Report rep = build_verify_report(a);
        CHECK(rep.ok());
        CHECK(rep.failures() == 0);
        // The typo audit is folded in, so the built algebras carry exactly
        // the global flag count.
        CHECK(rep.flags() == audit_as_report().flags());
    }
}

TEST_CASE("audit_as_report mirrors the printed-constant audit") {
    Report rep = audit_as_report();
    AuditReport audit = audit_printed_constants();
    CHECK(rep.entries().size() == audit.entries.size());
    CHECK(rep.flags() == audit.flag_count());
    CHECK(rep.failures() == 0);

    // Flag entries carry both values and the group as context.
    for (const CheckEntry& entry : rep.entries()) {
        if (entry.status != CheckStatus::flagged) continue;
        CHECK(entry.lhs.find("printed") != std::string::npos);
        CHECK(entry.rhs.find("derived") != std::string::npos);
        CHECK_FALSE(entry.context.empty());
    }
}

TEST_CASE("verification can skip the audit") {
    Report rep = build_verify_report(build_algebra(rat(13, 256)), false);
    CHECK(rep.ok());
    CHECK(rep.flags() == 0);
}

TEST_CASE("a broken gram diagonal fails verification") {
    GriessAlgebra a = build_algebra(rat(13, 256));
    std::vector<Rational> g = gram_of(a);
    g[a.dim() + 1] = rat(0);  // <a,a> = 0: kills positive definiteness
    Report rep = build_verify_report(with_tables(a, structure_of(a), g));
    CHECK_FALSE(rep.ok());
    bool saw_pd = false;
    for (const CheckEntry& entry : rep.entries())
        if (entry.status == CheckStatus::fail &&
            entry.name.find("positive definite") != std::string::npos)
            saw_pd = true;
    CHECK(saw_pd);
}

TEST_CASE("unrecognized frames are rejected before deep checks") {
    GriessAlgebra odd({"x", "y"}, std::vector<Rational>(8, rat(0)),
                      {rat(1), rat(0), rat(0), rat(1)});
    Report rep = build_verify_report(odd);
    CHECK_FALSE(rep.ok());
    bool saw_frame_failure = false;
    for (const CheckEntry& entry : rep.entries())
        if (entry.status == CheckStatus::fail &&
            entry.name.find("frame recognition") != std::string::npos)
            saw_frame_failure = true;
    CHECK(saw_frame_failure);
}

TEST_CASE("a perturbed structure constant fails table agreement") {
    GriessAlgebra a = build_algebra(rat(1, 64));
    std::vector<Rational> s = structure_of(a);
    size_t n = a.dim();
    // a*c and c*a, coefficient of c: the dim-3 misprint value.
    s[(1 * n + 2) * n + 2] = rat(1001, 1024);
    s[(2 * n + 1) * n + 2] = rat(1001, 1024);
    Report rep = build_verify_report(with_tables(a, s, gram_of(a)));
    CHECK_FALSE(rep.ok());
}
