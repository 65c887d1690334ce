#include "griess/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace griess {

namespace {

using nlohmann::ordered_json;

Rational parse_rational(const ordered_json& node, const char* where) {
    if (!node.is_string())
        throw FormatError(std::string(where) + ": expected a rational string");
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(std::string(where) + ": " + e.what());
    }
}

size_t parse_index(const ordered_json& node, size_t dim, const char* where) {
    if (!node.is_number_integer() || node.get<long long>() < 0 ||
        node.get<long long>() >= static_cast<long long>(dim))
        throw FormatError(std::string(where) + ": index out of range");
    return static_cast<size_t>(node.get<long long>());
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string algebra_to_json(const GriessAlgebra& a) {
    ordered_json doc;
    doc["basis"] = a.basis();
    ordered_json triples = ordered_json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = i; j < a.dim(); ++j)
            for (size_t k = 0; k < a.dim(); ++k) {
                const Rational& v = a.structure(i, j, k);
                if (!v.is_zero()) triples.push_back({i, j, k, v.str()});
            }
    doc["structure"] = std::move(triples);
    ordered_json gram = ordered_json::array();
    for (size_t i = 0; i < a.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < a.dim(); ++j) row.push_back(a.gram(i, j).str());
        gram.push_back(std::move(row));
    }
    doc["gram"] = std::move(gram);
    return doc.dump(2) + "\n";
}

GriessAlgebra algebra_from_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("basis") || !doc.contains("structure") ||
        !doc.contains("gram"))
        throw FormatError("algebra document needs basis, structure and gram");

    const ordered_json& basis_node = doc["basis"];
    if (!basis_node.is_array() || basis_node.empty())
        throw FormatError("basis: expected a non-empty array of names");
    std::vector<std::string> basis;
    for (const auto& name : basis_node) {
        if (!name.is_string()) throw FormatError("basis: expected a non-empty array of names");
        basis.push_back(name.get<std::string>());
    }
    size_t dim = basis.size();

    std::vector<Rational> structure(dim * dim * dim, Rational(0));
    const ordered_json& triples = doc["structure"];
    if (!triples.is_array()) throw FormatError("structure: expected an array of triples");
    std::set<std::array<size_t, 3>> seen;
    for (const auto& entry : triples) {
        if (!entry.is_array() || entry.size() != 4)
            throw FormatError("structure: each entry is [i, j, k, \"p/q\"]");
        size_t i = parse_index(entry[0], dim, "structure");
        size_t j = parse_index(entry[1], dim, "structure");
        size_t k = parse_index(entry[2], dim, "structure");
        if (i > j) throw FormatError("structure: triples must satisfy i <= j");
        if (!seen.insert({i, j, k}).second)
            throw FormatError("structure: duplicate triple");
        Rational v = parse_rational(entry[3], "structure");
        structure[(i * dim + j) * dim + k] = v;
        structure[(j * dim + i) * dim + k] = v;
    }

    const ordered_json& gram_node = doc["gram"];
    if (!gram_node.is_array() || gram_node.size() != dim)
        throw FormatError("gram: expected a square matrix of rationals");
    std::vector<Rational> gram(dim * dim, Rational(0));
    for (size_t i = 0; i < dim; ++i) {
        const auto& row = gram_node[i];
        if (!row.is_array() || row.size() != dim)
            throw FormatError("gram: expected a square matrix of rationals");
        for (size_t j = 0; j < dim; ++j) gram[i * dim + j] = parse_rational(row[j], "gram");
    }

    try {
        return GriessAlgebra(std::move(basis), std::move(structure), std::move(gram));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

void write_algebra_file(const GriessAlgebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << algebra_to_json(a);
    if (!out) throw FormatError("failed writing " + path);
}

GriessAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return algebra_from_json(buffer.str());
}

std::string fusion_to_json(const FusionRing& r) {
    ordered_json doc;
    doc["labels"] = r.labels();
    doc["unit"] = r.unit();
    ordered_json cells = ordered_json::array();
    for (size_t a = 0; a < r.size(); ++a)
        for (size_t b = a; b < r.size(); ++b)
            for (size_t c = 0; c < r.size(); ++c)
                if (unsigned m = r.mult(a, b, c))
                    cells.push_back({r.labels()[a], r.labels()[b], r.labels()[c], m});
    doc["N"] = std::move(cells);
    if (!r.weights().empty()) {
        ordered_json weights = ordered_json::object();
        for (const std::string& label : r.labels()) {
            auto it = r.weights().find(label);
            if (it != r.weights().end()) weights[label] = it->second.str();
        }
        doc["weights"] = std::move(weights);
    }
    return doc.dump(2) + "\n";
}

FusionRing fusion_from_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("unit") ||
        !doc.contains("N"))
        throw FormatError("fusion document needs labels, unit and N");

    FusionData data;
    data.name = "imported";
    const ordered_json& labels_node = doc["labels"];
    if (!labels_node.is_array() || labels_node.empty())
        throw FormatError("labels: expected a non-empty array of names");
    for (const auto& l : labels_node) {
        if (!l.is_string()) throw FormatError("labels: expected a non-empty array of names");
        data.labels.push_back(l.get<std::string>());
    }
    if (!doc["unit"].is_string()) throw FormatError("unit: expected a label string");
    data.unit = doc["unit"].get<std::string>();

    auto label_index = [&](const std::string& l) -> size_t {
        for (size_t i = 0; i < data.labels.size(); ++i)
            if (data.labels[i] == l) return i;
        throw FormatError("N: unknown label " + l);
    };

    const ordered_json& cells = doc["N"];
    if (!cells.is_array()) throw FormatError("N: expected an array of [a, b, c, mult]");
    std::set<std::array<size_t, 3>> seen;
    for (const auto& entry : cells) {
        if (!entry.is_array() || entry.size() != 4 || !entry[0].is_string() ||
            !entry[1].is_string() || !entry[2].is_string() ||
            !entry[3].is_number_integer() || entry[3].get<long long>() <= 0)
            throw FormatError("N: each entry is [a, b, c, mult] with mult >= 1");
        size_t a = label_index(entry[0].get<std::string>());
        size_t b = label_index(entry[1].get<std::string>());
        size_t c = label_index(entry[2].get<std::string>());
        if (a > b) throw FormatError("N: entries must satisfy index(a) <= index(b)");
        if (!seen.insert({a, b, c}).second) throw FormatError("N: duplicate cell");
        unsigned m = static_cast<unsigned>(entry[3].get<long long>());
        data.mult.emplace_back(data.labels[a], data.labels[b], data.labels[c], m);
        if (a != b) data.mult.emplace_back(data.labels[b], data.labels[a], data.labels[c], m);
    }

    if (doc.contains("weights")) {
        const ordered_json& weights = doc["weights"];
        if (!weights.is_object()) throw FormatError("weights: expected an object");
        for (const auto& item : weights.items()) {
            label_index(item.key());
            data.weights[item.key()] = parse_rational(item.value(), "weights");
        }
    }

    try {
        return FusionRing(std::move(data));
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace griess
