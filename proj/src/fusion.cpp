#include "griess/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace griess {

FusionRing::FusionRing(FusionData data)
    : name_(std::move(data.name)),
      labels_(std::move(data.labels)),
      weights_(std::move(data.weights)) {
    if (labels_.empty()) throw std::invalid_argument("fusion ring needs at least one label");
    std::set<std::string> seen;
    for (const std::string& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate fusion label: " + l);
    unit_ = index_of(data.unit);
    n_.assign(size() * size() * size(), 0);
    for (const auto& [a, b, c, m] : data.mult)
        n_[(index_of(a) * size() + index_of(b)) * size() + index_of(c)] += m;
    for (const auto& kv : weights_) index_of(kv.first);
}

size_t FusionRing::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw std::out_of_range("unknown fusion label: " + label);
}

std::vector<std::string> FusionRing::fuse(const std::string& a, const std::string& b) const {
    size_t i = index_of(a), j = index_of(b);
    std::vector<std::string> out;
    for (size_t c = 0; c < size(); ++c)
        for (unsigned k = 0; k < mult(i, j, c); ++k) out.push_back(labels_[c]);
    return out;
}

Report verify(const FusionRing& r) {
    Report rep;
    size_t n = r.size(), u = r.unit_index();
    const auto& lab = r.labels();

    bool unit_ok = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t c = 0; c < n; ++c) {
            unsigned expected = a == c ? 1 : 0;
            if (r.mult(u, a, c) != expected) {
                unit_ok = false;
                rep.fail("unit law at " + lab[a] + " -> " + lab[c],
                         std::to_string(r.mult(u, a, c)), std::to_string(expected), r.name());
            }
        }
    if (unit_ok) rep.pass("unit law", "", "", r.name());

    bool comm_ok = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (r.mult(a, b, c) != r.mult(b, a, c)) {
                    comm_ok = false;
                    rep.fail("commutativity at (" + lab[a] + ", " + lab[b] + ") -> " + lab[c],
                             std::to_string(r.mult(a, b, c)), std::to_string(r.mult(b, a, c)),
                             r.name());
                }
    if (comm_ok) rep.pass("commutativity", "", "", r.name());

    bool assoc_ok = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d) {
                    unsigned lhs = 0, rhs = 0;
                    for (size_t e = 0; e < n; ++e) lhs += r.mult(a, b, e) * r.mult(e, c, d);
                    for (size_t f = 0; f < n; ++f) rhs += r.mult(b, c, f) * r.mult(a, f, d);
                    if (lhs != rhs) {
                        assoc_ok = false;
                        rep.fail("associativity at (" + lab[a] + ", " + lab[b] + ", " + lab[c] +
                                     ") -> " + lab[d],
                                 std::to_string(lhs), std::to_string(rhs), r.name());
                    }
                }
    if (assoc_ok) rep.pass("associativity", "", "", r.name());
    return rep;
}

std::set<std::string> closure(const FusionRing& r, const std::set<std::string>& seed) {
    if (seed.empty()) throw std::invalid_argument("closure of an empty label set");
    std::set<size_t> current;
    for (const std::string& label : seed) current.insert(r.index_of(label));
    current.insert(r.unit_index());

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<size_t> snapshot(current.begin(), current.end());
        for (size_t a : snapshot)
            for (size_t b : snapshot)
                for (size_t c = 0; c < r.size(); ++c)
                    if (r.mult(a, b, c) > 0 && current.insert(c).second) grew = true;
    }

    std::set<std::string> out;
    for (size_t i : current) out.insert(r.labels()[i]);
    return out;
}

uint64_t table_checksum(const FusionRing& r) {
    std::string bytes;
    for (const std::string& label : r.labels()) {
        bytes += label;
        bytes += '\n';
    }
    bytes += r.unit();
    bytes += '\n';
    for (size_t a = 0; a < r.size(); ++a)
        for (size_t b = 0; b < r.size(); ++b)
            for (size_t c = 0; c < r.size(); ++c)
                if (unsigned m = r.mult(a, b, c)) {
                    bytes += std::to_string(a) + ',' + std::to_string(b) + ',' +
                             std::to_string(c) + ',' + std::to_string(m) + ';';
                }

    uint64_t hash = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

namespace {

std::vector<std::string> split_cell(const std::string& cell) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream stream(cell);
    while (std::getline(stream, piece, ':')) out.push_back(piece);
    return out;
}

/// Assembles FusionData from a printed table body: row i, column j of
/// `cells` lists the summands of labels[i+1] * labels[j+1], and the unit
/// (labels[0]) row and column are implied.
FusionData from_table(std::string name, std::vector<std::string> labels,
                      const std::vector<std::vector<std::string>>& cells,
                      std::map<std::string, Rational> weights) {
    FusionData d;
    d.name = std::move(name);
    d.labels = std::move(labels);
    d.unit = d.labels.front();
    d.weights = std::move(weights);
    for (const std::string& x : d.labels) {
        d.mult.emplace_back(d.unit, x, x, 1);
        if (x != d.unit) d.mult.emplace_back(x, d.unit, x, 1);
    }
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells[i].size(); ++j)
            for (const std::string& summand : split_cell(cells[i][j]))
                d.mult.emplace_back(d.labels[i + 1], d.labels[j + 1], summand, 1);
    return d;
}

std::map<std::string, Rational> weights_from_labels(const std::vector<std::string>& labels) {
    std::map<std::string, Rational> w;
    for (const std::string& l : labels) w[l] = Rational::parse(l);
    return w;
}

FusionData ising_data() {
    std::vector<std::string> labels = {"0", "1/2", "1/16"};
    std::vector<std::vector<std::string>> cells = {
        {"0", "1/16"},
        {"1/16", "0:1/2"},
    };
    return from_table("ising", labels, cells, weights_from_labels(labels));
}

FusionData vir_4_5_data() {
    std::vector<std::string> labels = {"0",    "2/5", "1/40", "7/5", "21/40",
                                       "1/15", "3",   "13/8", "2/3", "1/8"};
    std::vector<std::vector<std::string>> cells = {
        {"0:7/5", "1/8:21/40", "2/5:3", "1/40:13/8", "1/15:2/3", "7/5", "21/40", "1/15",
         "1/40"},
        {"1/8:21/40", "0:7/5:2/3:1/15", "1/40:13/8", "2/5:3:1/15:2/3", "1/40:13/8:21/40:1/8",
         "21/40", "7/5:1/15", "21/40:1/40", "1/15:2/5"},
        {"2/5:3", "1/40:13/8", "0:7/5", "1/8:21/40", "2/3:1/15", "2/5", "1/40", "1/15",
         "21/40"},
        {"1/40:13/8", "2/5:3:1/15:2/3", "1/8:21/40", "0:7/5:2/3:1/15", "1/8:21/40:13/8:1/40",
         "1/40", "2/5:1/15", "1/40:21/40", "1/15:7/5"},
        {"1/15:2/3", "1/40:13/8:21/40:1/8", "2/3:1/15", "1/8:21/40:13/8:1/40",
         "0:7/5:2/3:1/15:3:2/5", "1/15", "1/40:21/40", "2/5:1/15:7/5", "1/40:21/40"},
        {"7/5", "21/40", "2/5", "1/40", "1/15", "0", "1/8", "2/3", "13/8"},
        {"21/40", "7/5:1/15", "1/40", "2/5:1/15", "1/40:21/40", "1/8", "0:2/3", "1/8:13/8",
         "2/3:3"},
        {"1/15", "21/40:1/40", "1/15", "1/40:21/40", "2/5:1/15:7/5", "2/3", "1/8:13/8",
         "0:2/3:3", "1/8:13/8"},
        {"1/40", "1/15:2/5", "21/40", "1/15:7/5", "1/40:21/40", "13/8", "2/3:3", "1/8:13/8",
         "0:2/3"},
    };
    return from_table("vir_4_5", labels, cells, weights_from_labels(labels));
}

FusionData w3_4_5_data() {
    std::vector<std::string> labels = {"W(0)",      "W(2/5)",    "W(2/3,+)",
                                       "W(1/15,+)", "W(2/3,-)",  "W(1/15,-)"};
    std::vector<std::vector<std::string>> cells = {
        {"W(0):W(2/5)", "W(1/15,+)", "W(1/15,+):W(2/3,+)", "W(1/15,-)",
         "W(1/15,-):W(2/3,-)"},
        {"W(1/15,+)", "W(2/3,-)", "W(1/15,-)", "W(0)", "W(2/5)"},
        {"W(1/15,+):W(2/3,+)", "W(1/15,-)", "W(1/15,-):W(2/3,-)", "W(2/5)", "W(0):W(2/5)"},
        {"W(1/15,-)", "W(0)", "W(2/5)", "W(2/3,+)", "W(1/15,+)"},
        {"W(1/15,-):W(2/3,-)", "W(2/5)", "W(0):W(2/5)", "W(1/15,+)", "W(1/15,+):W(2/3,+)"},
    };
    std::map<std::string, Rational> weights = {
        {"W(0)", Rational(0)},          {"W(2/5)", Rational(2, 5)},
        {"W(2/3,+)", Rational(2, 3)},   {"W(1/15,+)", Rational(1, 15)},
        {"W(2/3,-)", Rational(2, 3)},   {"W(1/15,-)", Rational(1, 15)},
    };
    return from_table("w3_4_5", labels, cells, std::move(weights));
}

FusionData vir_6_7_sub_data() {
    std::vector<std::string> labels = {"0", "4/3", "5"};
    std::vector<std::vector<std::string>> cells = {
        {"0:4/3:5", "4/3"},
        {"4/3", "0"},
    };
    return from_table("vir_6_7_sub", labels, cells, weights_from_labels(labels));
}

struct BuiltinSpec {
    FusionData (*data)();
    uint64_t checksum;
};

// Frozen checksums of the embedded tables, via table_checksum.
const std::map<std::string, BuiltinSpec>& builtin_registry() {
    static const std::map<std::string, BuiltinSpec> registry = {
        {"ising", {ising_data, 0x179bcdcc6ecbe9ddull}},
        {"vir_4_5", {vir_4_5_data, 0x774102606687faa7ull}},
        {"w3_4_5", {w3_4_5_data, 0xf2ea60f5d3cb2ccull}},
        {"vir_6_7_sub", {vir_6_7_sub_data, 0x47439d46fc1ab471ull}},
    };
    return registry;
}

std::string hex64(uint64_t value) {
    std::ostringstream os;
    os << "0x" << std::hex << value;
    return os.str();
}

}  // namespace

FusionRing builtin(const std::string& name) {
    auto it = builtin_registry().find(name);
    if (it == builtin_registry().end())
        throw std::invalid_argument("unknown fusion ring: " + name);
    FusionRing ring(it->second.data());
    uint64_t sum = table_checksum(ring);
    if (sum != it->second.checksum)
        throw std::logic_error(name + " table checksum mismatch: computed " + hex64(sum) +
                               ", frozen " + hex64(it->second.checksum));
    Report rep = verify(ring);
    if (!rep.ok()) {
        std::string what = name + " table failed ring certification:";
        for (const auto& entry : rep.entries())
            if (entry.status == CheckStatus::fail) what += " [" + entry.name + "]";
        throw std::logic_error(what);
    }
    return ring;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"ising", "vir_4_5", "w3_4_5",
                                                   "vir_6_7_sub"};
    return names;
}

Report verify_grading(const FusionRing& r, const std::map<std::string, int>& grade,
                      int modulus) {
    Report rep;
    const auto& lab = r.labels();
    for (const std::string& l : lab)
        if (!grade.count(l)) {
            rep.fail("graded label coverage", l, "no grade assigned", r.name());
            return rep;
        }
    bool ok = true;
    for (size_t a = 0; a < r.size(); ++a)
        for (size_t b = 0; b < r.size(); ++b)
            for (size_t c = 0; c < r.size(); ++c) {
                if (r.mult(a, b, c) == 0) continue;
                int lhs = (grade.at(lab[a]) + grade.at(lab[b])) % modulus;
                int rhs = grade.at(lab[c]) % modulus;
                if (lhs != rhs) {
                    ok = false;
                    rep.fail("grade additivity at (" + lab[a] + ", " + lab[b] + ") -> " +
                                 lab[c],
                             std::to_string(lhs), std::to_string(rhs), r.name());
                }
            }
    if (ok)
        rep.pass("grade additivity mod " + std::to_string(modulus), "", "", r.name());
    return rep;
}

std::map<std::string, int> w3_grading() {
    return {{"W(0)", 0},      {"W(2/5)", 0},    {"W(2/3,+)", 1},
            {"W(1/15,+)", 1}, {"W(2/3,-)", 2},  {"W(1/15,-)", 2}};
}

FusionRing restriction(const FusionRing& r, const std::set<std::string>& subset) {
    std::set<size_t> keep = {r.unit_index()};
    for (const std::string& label : subset) keep.insert(r.index_of(label));
    for (size_t a : keep)
        for (size_t b : keep)
            for (size_t c = 0; c < r.size(); ++c)
                if (r.mult(a, b, c) > 0 && !keep.count(c))
                    throw std::invalid_argument("label subset is not closed under fusion: " +
                                                r.labels()[a] + " * " + r.labels()[b] +
                                                " reaches " + r.labels()[c]);

    FusionData d;
    d.name = r.name() + "_sub";
    d.unit = r.unit();
    for (size_t i = 0; i < r.size(); ++i)
        if (keep.count(i)) {
            const std::string& label = r.labels()[i];
            d.labels.push_back(label);
            auto w = r.weights().find(label);
            if (w != r.weights().end()) d.weights.insert(*w);
        }
    for (size_t a : keep)
        for (size_t b : keep)
            for (size_t c : keep)
                if (unsigned m = r.mult(a, b, c))
                    d.mult.emplace_back(r.labels()[a], r.labels()[b], r.labels()[c], m);
    return FusionRing(std::move(d));
}

bool isomorphic_by_label_map(const FusionRing& a, const FusionRing& b,
                             const std::map<std::string, std::string>& map) {
    if (a.size() != b.size() || map.size() != a.size()) return false;
    std::vector<size_t> image(a.size());
    std::set<size_t> hit;
    for (const auto& [from, to] : map) {
        size_t i = a.index_of(from);
        size_t j = b.index_of(to);
        image[i] = j;
        if (!hit.insert(j).second) return false;
    }
    if (hit.size() != a.size()) return false;
    if (image[a.unit_index()] != b.unit_index()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t k = 0; k < a.size(); ++k)
                if (a.mult(i, j, k) != b.mult(image[i], image[j], image[k])) return false;
    return true;
}

}  // namespace griess
