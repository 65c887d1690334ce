#include "griess/report.hpp"

namespace griess {

void Report::pass(std::string name, std::string lhs, std::string rhs, std::string context) {
    add({std::move(name), CheckStatus::pass, std::move(lhs), std::move(rhs), std::move(context)});
}

void Report::fail(std::string name, std::string lhs, std::string rhs, std::string context) {
    add({std::move(name), CheckStatus::fail, std::move(lhs), std::move(rhs), std::move(context)});
}

void Report::flag(std::string name, std::string lhs, std::string rhs, std::string context) {
    add({std::move(name), CheckStatus::flagged, std::move(lhs), std::move(rhs),
         std::move(context)});
}

void Report::check(bool ok, std::string name, std::string lhs, std::string rhs,
                   std::string context) {
    if (ok)
        pass(std::move(name), std::move(lhs), std::move(rhs), std::move(context));
    else
        fail(std::move(name), std::move(lhs), std::move(rhs), std::move(context));
}

void Report::merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

size_t Report::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& e : entries_)
        if (e.status == s) ++n;
    return n;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
    }
    return "unknown";
}

}  // namespace griess
