#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "griess/ansatz.hpp"
#include "griess/fusion.hpp"
#include "griess/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace griess;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

bool same_tables(const GriessAlgebra& a, const GriessAlgebra& b) {
    if (a.basis() != b.basis()) return false;
    size_t n = a.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!(a.gram(i, j) == b.gram(i, j))) return false;
            for (size_t k = 0; k < n; ++k)
                if (!(a.structure(i, j, k) == b.structure(i, j, k))) return false;
        }
    return true;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/griess_io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }

    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

}  // namespace

TEST_CASE("algebra json round-trips both instantiations") {
    for (const Rational& lambda : {rat(13, 256), rat(1, 64)}) {
        GriessAlgebra a = build_algebra(lambda);
        std::string text = algebra_to_json(a);
        GriessAlgebra back = algebra_from_json(text);
        CHECK(same_tables(a, back));
        // Canonical form: serializing again reproduces the text.
        CHECK(algebra_to_json(back) == text);
    }
}

TEST_CASE("algebra files round-trip") {
    TempFile file("algebra.json");
    GriessAlgebra a = build_algebra(rat(13, 256));
    write_algebra_file(a, file.path);
    GriessAlgebra back = read_algebra_file(file.path);
    CHECK(same_tables(a, back));
}

TEST_CASE("unreadable and malformed algebra files raise FormatError") {
    CHECK_THROWS_AS(read_algebra_file("/tmp/griess_io_test_does_not_exist.json"), FormatError);

    TempFile file("bad.json");

    file.write("not json at all");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    file.write("[1, 2, 3]");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Missing gram.
    file.write(R"({"basis": ["x"], "structure": []})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Unparsable rational.
    file.write(R"({"basis": ["x"], "structure": [[0, 0, 0, "1.5"]], "gram": [["1"]]})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Index out of range.
    file.write(R"({"basis": ["x"], "structure": [[0, 1, 0, "1"]], "gram": [["1"]]})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Triple with i > j (mirrored entries are implied, so this is a
    // duplicate in disguise).
    file.write(
        R"({"basis": ["x", "y"],
            "structure": [[1, 0, 0, "1"]],
            "gram": [["1", "0"], ["0", "1"]]})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Duplicate triple.
    file.write(
        R"({"basis": ["x", "y"],
            "structure": [[0, 1, 0, "1"], [0, 1, 0, "2"]],
            "gram": [["1", "0"], ["0", "1"]]})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);

    // Non-square gram.
    file.write(R"({"basis": ["x"], "structure": [], "gram": [["1", "2"]]})");
    CHECK_THROWS_AS(read_algebra_file(file.path), FormatError);
}

TEST_CASE("asymmetric gram is representable but fails verification") {
    // The reader accepts any well-shaped table; axioms are a separate
    // concern, checked by verify_axioms.
    TempFile file("asym.json");
    file.write(
        R"({"basis": ["x", "y"],
            "structure": [],
            "gram": [["1", "1"], ["0", "1"]]})");
    GriessAlgebra a = read_algebra_file(file.path);
    CHECK_FALSE(verify_axioms(a).ok());
}

TEST_CASE("fusion json round-trips the builtins") {
    for (const std::string& name : builtin_names()) {
        FusionRing r = builtin(name);
        FusionRing back = fusion_from_json(fusion_to_json(r));
        CHECK(back.labels() == r.labels());
        CHECK(back.unit() == r.unit());
        CHECK(back.weights() == r.weights());
        CHECK(table_checksum(back) == table_checksum(r));
    }
}

TEST_CASE("malformed fusion documents raise FormatError") {
    CHECK_THROWS_AS(fusion_from_json("{"), FormatError);
    CHECK_THROWS_AS(fusion_from_json("{}"), FormatError);
    CHECK_THROWS_AS(fusion_from_json(R"({"labels": ["0"], "unit": "1", "N": []})"),
                    FormatError);
    CHECK_THROWS_AS(
        fusion_from_json(R"({"labels": ["0"], "unit": "0", "N": [["0", "0", "x", 1]]})"),
        FormatError);
}
