#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "griess/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace griess;

namespace {

// Correct three-label ring with spectrum {0, 1/2, 1/16}, handy as a
// mutation baseline.  Off-diagonal cells appear in both orders because the
// constructor takes the multiplicity list literally.
FusionData small_ring() {
    FusionData d;
    d.name = "small";
    d.labels = {"0", "1/2", "1/16"};
    d.unit = "0";
    auto both = [&d](const std::string& a, const std::string& b, const std::string& c) {
        d.mult.emplace_back(a, b, c, 1);
        if (a != b) d.mult.emplace_back(b, a, c, 1);
    };
    both("0", "0", "0");
    both("0", "1/2", "1/2");
    both("0", "1/16", "1/16");
    both("1/2", "1/2", "0");
    both("1/2", "1/16", "1/16");
    both("1/16", "1/16", "0");
    both("1/16", "1/16", "1/2");
    return d;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("construction validates label references") {
    CHECK_NOTHROW(FusionRing{small_ring()});

    FusionData empty;
    empty.name = "empty";
    CHECK_THROWS_AS(FusionRing{empty}, std::invalid_argument);

    FusionData dup = small_ring();
    dup.labels.push_back("1/2");
    CHECK_THROWS_AS(FusionRing{dup}, std::invalid_argument);

    FusionData bad_unit = small_ring();
    bad_unit.unit = "2";
    CHECK_THROWS_AS(FusionRing{bad_unit}, std::out_of_range);

    FusionData bad_cell = small_ring();
    bad_cell.mult.emplace_back("1/2", "nope", "0", 1);
    CHECK_THROWS_AS(FusionRing{bad_cell}, std::out_of_range);

    FusionRing r(small_ring());
    CHECK(r.size() == 3);
    CHECK(r.unit() == "0");
    CHECK_THROWS_AS(r.index_of("nope"), std::out_of_range);
    CHECK_THROWS_AS(r.fuse("nope", "0"), std::out_of_range);
}

TEST_CASE("builtins load, certify and checksum stably") {
    CHECK(builtin_names() ==
          std::vector<std::string>{"ising", "vir_4_5", "w3_4_5", "vir_6_7_sub"});
    CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);

    for (const std::string& name : builtin_names()) {
        FusionRing r = builtin(name);
        CHECK(r.name() == name);
        Report rep = verify(r);
        CHECK(rep.ok());
        // Loading twice gives the same table bit for bit.
        CHECK(table_checksum(r) == table_checksum(builtin(name)));
    }

    CHECK(builtin("ising").size() == 3);
    CHECK(builtin("vir_4_5").size() == 10);
    CHECK(builtin("w3_4_5").size() == 6);
    CHECK(builtin("vir_6_7_sub").size() == 3);
}

TEST_CASE("fuse returns label multisets") {
    FusionRing ising = builtin("ising");
    CHECK(ising.fuse("1/2", "1/2") == std::vector<std::string>{"0"});
    CHECK(ising.fuse("1/2", "1/16") == std::vector<std::string>{"1/16"});
    CHECK(sorted(ising.fuse("1/16", "1/16")) == std::vector<std::string>{"0", "1/2"});

    FusionRing vir = builtin("vir_4_5");
    CHECK(sorted(vir.fuse("2/3", "2/3")) == std::vector<std::string>{"0", "2/3", "3"});
    CHECK(vir.fuse("3", "3") == std::vector<std::string>{"0"});
    CHECK(vir.fuse("3", "13/8") == std::vector<std::string>{"1/8"});

    FusionRing w3 = builtin("w3_4_5");
    CHECK(w3.fuse("W(2/3,+)", "W(2/3,+)") == std::vector<std::string>{"W(2/3,-)"});
    CHECK(w3.fuse("W(2/3,+)", "W(2/3,-)") == std::vector<std::string>{"W(0)"});
    CHECK(sorted(w3.fuse("W(1/15,+)", "W(1/15,-)")) ==
          std::vector<std::string>{"W(0)", "W(2/5)"});
}

TEST_CASE("closure walks the generated subring") {
    FusionRing vir = builtin("vir_4_5");
    CHECK(closure(vir, {"2/3"}) == std::set<std::string>{"0", "2/3", "3"});
    CHECK(closure(vir, {"3"}) == std::set<std::string>{"0", "3"});
    CHECK(closure(vir, {"7/5"}) == std::set<std::string>{"0", "7/5"});
    CHECK(closure(vir, {"1/40"}).size() == 10);  // 1/40 generates everything

    FusionRing ising = builtin("ising");
    CHECK(closure(ising, {"1/16"}) == std::set<std::string>{"0", "1/2", "1/16"});
    CHECK(closure(ising, {"0"}) == std::set<std::string>{"0"});

    CHECK_THROWS_AS(closure(vir, {}), std::invalid_argument);
    CHECK_THROWS_AS(closure(vir, {"nope"}), std::out_of_range);
}

TEST_CASE("verify pinpoints a corrupted cell") {
    FusionData d = small_ring();
    // Drop 1/16 * 1/16 -> 1/2 (both orders), leaving the table commutative
    // but non-associative.
    d.mult.erase(std::remove_if(d.mult.begin(), d.mult.end(),
                                [](const auto& cell) {
                                    return std::get<2>(cell) == std::string("1/2") &&
                                           std::get<0>(cell) == std::string("1/16");
                                }),
                 d.mult.end());
    FusionRing broken(d);

    Report rep = verify(broken);
    CHECK_FALSE(rep.ok());
    for (const CheckEntry& entry : rep.entries()) {
        if (entry.status == CheckStatus::pass) continue;
        CHECK(entry.name.find("associativity") != std::string::npos);
        CHECK(entry.name.find("1/16") != std::string::npos);
    }
}

TEST_CASE("verify reports unit and commutativity violations") {
    FusionData d = small_ring();
    d.mult.emplace_back("0", "1/2", "1/16", 1);  // unit no longer acts as identity
    Report unit_rep = verify(FusionRing(d));
    bool saw_unit = false;
    for (const CheckEntry& entry : unit_rep.entries())
        if (entry.status == CheckStatus::fail && entry.name.find("unit law") != std::string::npos)
            saw_unit = true;
    CHECK(saw_unit);

    FusionData e = small_ring();
    e.mult.emplace_back("1/2", "1/16", "0", 1);  // one order only
    Report comm_rep = verify(FusionRing(e));
    bool saw_comm = false;
    for (const CheckEntry& entry : comm_rep.entries())
        if (entry.status == CheckStatus::fail &&
            entry.name.find("commutativity") != std::string::npos)
            saw_comm = true;
    CHECK(saw_comm);
}

TEST_CASE("the w3 ring carries a Z3 grading") {
    FusionRing w3 = builtin("w3_4_5");
    std::map<std::string, int> grade = w3_grading();
    CHECK(grade.size() == w3.size());
    CHECK(grade.at("W(0)") == 0);
    CHECK(grade.at("W(2/5)") == 0);
    CHECK((grade.at("W(2/3,+)") - grade.at("W(2/3,-)")) % 3 != 0);

    Report rep = verify_grading(w3, grade, 3);
    CHECK(rep.ok());

    // Swapping one grade breaks additivity somewhere.
    std::map<std::string, int> bad = grade;
    bad["W(2/5)"] = 1;
    CHECK_FALSE(verify_grading(w3, bad, 3).ok());
}

TEST_CASE("restriction extracts fusion-closed subrings") {
    FusionRing vir = builtin("vir_4_5");

    FusionRing sub = restriction(vir, {"2/3", "3"});
    CHECK(sub.size() == 3);
    CHECK(sub.unit() == "0");
    CHECK(sorted(sub.fuse("2/3", "2/3")) == std::vector<std::string>{"0", "2/3", "3"});
    CHECK(verify(sub).ok());
    // Weights come along.
    CHECK(sub.weights().at("2/3") == Rational(2, 3));

    // The unit is implied.
    FusionRing sub2 = restriction(vir, {"7/5"});
    CHECK(sub2.size() == 2);
    CHECK(verify(sub2).ok());

    // {0, 2/5} is not closed: 2/5 * 2/5 reaches 7/5.
    CHECK_THROWS_AS(restriction(vir, {"2/5"}), std::invalid_argument);
    CHECK_THROWS_AS(restriction(vir, {"nope"}), std::out_of_range);
}

TEST_CASE("the charge-subring map onto the 6/7 table is an isomorphism") {
    FusionRing vir = builtin("vir_4_5");
    FusionRing sub = restriction(vir, {"2/3", "3"});
    FusionRing target = builtin("vir_6_7_sub");

    std::map<std::string, std::string> good = {{"0", "0"}, {"2/3", "4/3"}, {"3", "5"}};
    CHECK(isomorphic_by_label_map(sub, target, good));

    // Swapping the non-unit labels is not an isomorphism: 2/3 generates
    // everything, 3 squares to the unit.
    std::map<std::string, std::string> swapped = {{"0", "0"}, {"2/3", "5"}, {"3", "4/3"}};
    CHECK_FALSE(isomorphic_by_label_map(sub, target, swapped));

    // Non-bijective or incomplete maps fail rather than throw.
    std::map<std::string, std::string> collapsed = {{"0", "0"}, {"2/3", "5"}, {"3", "5"}};
    CHECK_FALSE(isomorphic_by_label_map(sub, target, collapsed));
    std::map<std::string, std::string> partial = {{"0", "0"}, {"2/3", "4/3"}};
    CHECK_FALSE(isomorphic_by_label_map(sub, target, partial));

    // The full ring is not isomorphic to its own subring.
    CHECK_FALSE(isomorphic_by_label_map(vir, target, good));
}

TEST_CASE("checksums distinguish different tables") {
    std::set<uint64_t> sums;
    for (const std::string& name : builtin_names()) sums.insert(table_checksum(builtin(name)));
    CHECK(sums.size() == 4);

    // A one-cell edit moves the checksum.
    FusionRing base(small_ring());
    FusionData tweaked = small_ring();
    tweaked.mult.emplace_back("1/2", "1/2", "1/2", 1);
    CHECK(table_checksum(base) != table_checksum(FusionRing(tweaked)));
}
