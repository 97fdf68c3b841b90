#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "crystalbench/crystal.hpp"
#include "crystalbench/ffgeom.hpp"
#include "crystalbench/tableaux.hpp"
#include "crystalbench/tensor_decomp.hpp"

namespace crystalbench {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

[[nodiscard]] inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace detail

// Graphviz rendering: one node per element, one labeled arrow per defined
// lowering operator.
[[nodiscard]] inline std::string to_dot(const Crystal& c) {
    std::string out = "digraph crystal {\n  rankdir=TB;\n";
    for (int a = 0; a < c.size(); ++a) {
        out += "  v" + std::to_string(a) + " [label=\"" +
               detail::dot_escape(c.labels[static_cast<std::size_t>(a)]) + "\"];\n";
    }
    for (int k = 1; k < c.n_colors; ++k) {
        for (int a = 0; a < c.size(); ++a) {
            const int b = c.apply_f(a, k);
            if (b == kAbsent) continue;
            out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + " [label=\"" +
                   std::to_string(k) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

[[nodiscard]] inline OrderedJson crystal_to_json(const Crystal& c) {
    OrderedJson j;
    j["n_colors"] = c.n_colors;
    j["size"] = c.size();
    OrderedJson elements = OrderedJson::array();
    for (int a = 0; a < c.size(); ++a) {
        OrderedJson e;
        e["index"] = a;
        e["label"] = c.labels[static_cast<std::size_t>(a)];
        e["weight"] = format_weight(c.wts[static_cast<std::size_t>(a)]);
        OrderedJson ups = OrderedJson::array();
        OrderedJson downs = OrderedJson::array();
        for (int k = 1; k < c.n_colors; ++k) {
            const int up = c.apply_e(a, k);
            const int down = c.apply_f(a, k);
            ups.push_back(up == kAbsent ? OrderedJson() : OrderedJson(up));
            downs.push_back(down == kAbsent ? OrderedJson() : OrderedJson(down));
        }
        e["e"] = std::move(ups);
        e["f"] = std::move(downs);
        elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);
    return j;
}

[[nodiscard]] inline OrderedJson report_to_json(const DecompositionReport& report) {
    OrderedJson j;
    OrderedJson factors = OrderedJson::array();
    for (const auto& f : report.factors) factors.push_back(format_weight(f));
    j["factors"] = std::move(factors);
    j["n"] = report.n_letters;
    j["total"] = report.total;
    OrderedJson components = OrderedJson::array();
    for (const auto& entry : report.entries) {
        OrderedJson e;
        e["lambda"] = format_weight(entry.lambda);
        e["multiplicity"] = entry.multiplicity;
        components.push_back(std::move(e));
    }
    j["components"] = std::move(components);
    return j;
}

[[nodiscard]] inline OrderedJson tableau_to_json(const Tableau& t) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

[[nodiscard]] inline std::string rational_to_string(const RationalPoly::Rational& r) {
    return r.str();
}

[[nodiscard]] inline OrderedJson poly_to_json(const RationalPoly& p) {
    OrderedJson coeffs = OrderedJson::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    return coeffs;
}

}  // namespace crystalbench
