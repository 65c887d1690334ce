#pragma once

#include <string>
#include <vector>

namespace griess {

enum class CheckStatus { pass, fail, flagged };

/// One verified claim: what was checked, both sides of the comparison as
/// rendered values, and a short context label saying where the claim lives.
struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string lhs;
    std::string rhs;
    std::string context;
};

class Report {
public:
    void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
    void pass(std::string name, std::string lhs = "", std::string rhs = "",
              std::string context = "");
    void fail(std::string name, std::string lhs = "", std::string rhs = "",
              std::string context = "");
    void flag(std::string name, std::string lhs = "", std::string rhs = "",
              std::string context = "");

    /// Record `name` as pass or fail depending on `ok`.
    void check(bool ok, std::string name, std::string lhs = "", std::string rhs = "",
               std::string context = "");

    void merge(const Report& other);

    const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
    size_t count(CheckStatus s) const;
    size_t failures() const { return count(CheckStatus::fail); }
    size_t flags() const { return count(CheckStatus::flagged); }
    bool ok() const { return failures() == 0; }

private:
    std::vector<CheckEntry> entries_;
};

std::string to_string(CheckStatus s);

}  // namespace griess
