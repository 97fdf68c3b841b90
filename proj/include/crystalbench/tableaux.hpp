#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystalbench/crystal.hpp"
#include "crystalbench/weights.hpp"

namespace crystalbench {

// A semistandard tableau with entries 1..n_letters: rows weakly increase,
// columns strictly increase, row lengths weakly decrease. The empty tableau
// (no rows) is valid and serves as the unit shape.
class Tableau {
  public:
    Tableau(std::vector<std::vector<int>> rows, int n_letters)
        : n_letters_(n_letters), rows_(std::move(rows)) {
        if (n_letters_ < 1) throw std::invalid_argument("tableau needs n_letters >= 1");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
            if (i > 0 && row.size() > rows_[i - 1].size())
                throw std::invalid_argument("tableau row lengths must weakly decrease");
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] < 1 || row[j] > n_letters_)
                    throw std::invalid_argument("tableau entry out of range");
                if (j > 0 && row[j] < row[j - 1])
                    throw std::invalid_argument("tableau rows must weakly increase");
                if (i > 0 && row[j] <= rows_[i - 1][j])
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }

    [[nodiscard]] int n_letters() const { return n_letters_; }
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }

    [[nodiscard]] Partition shape() const {
        Partition s;
        for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
        return s;
    }

    [[nodiscard]] Weight weight() const {
        Weight w(static_cast<std::size_t>(n_letters_), 0);
        for (const auto& row : rows_)
            for (int x : row) ++w[static_cast<std::size_t>(x) - 1];
        return w;
    }

    [[nodiscard]] bool operator==(const Tableau& other) const {
        return n_letters_ == other.n_letters_ && rows_ == other.rows_;
    }

  private:
    int n_letters_;
    std::vector<std::vector<int>> rows_;
};

// One-line text form, e.g. "[[1,1],[2]]"; the empty tableau prints as "[]".
[[nodiscard]] inline std::string to_text(const Tableau& t) {
    if (t.rows().empty()) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(t.rows()[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

// Reading word: each row right to left, top row first. The leftmost letter
// of the word plays the role of the first tensor factor under the product
// rule, which is what makes the signature scan below match the two-factor
// formulas.
[[nodiscard]] inline std::vector<int> arabic_word(const Tableau& t) {
    std::vector<int> word;
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    return word;
}

namespace detail {

struct WordCell {
    int row;
    int col;
};

[[nodiscard]] inline std::vector<WordCell> arabic_cells(const Tableau& t) {
    std::vector<WordCell> cells;
    for (std::size_t i = 0; i < t.rows().size(); ++i)
        for (std::size_t j = t.rows()[i].size(); j-- > 0;)
            cells.push_back({static_cast<int>(i), static_cast<int>(j)});
    return cells;
}

// Bracketing pass for color k: letter k reads as plus, k+1 as minus, and a
// minus cancels the nearest unmatched plus to its left. Afterwards every
// surviving minus precedes every surviving plus, so the raising operator
// targets the last surviving minus and the lowering operator the first
// surviving plus.
struct SignatureScan {
    std::vector<std::size_t> plus;   // surviving positions, ascending
    std::vector<std::size_t> minus;  // surviving positions, ascending
};

[[nodiscard]] inline SignatureScan scan_signature(const std::vector<int>& word, int k) {
    SignatureScan s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == k) {
            s.plus.push_back(i);
        } else if (word[i] == k + 1) {
            if (!s.plus.empty())
                s.plus.pop_back();
            else
                s.minus.push_back(i);
        }
    }
    return s;
}

[[nodiscard]] inline Tableau rewrite_cell(const Tableau& t, WordCell cell, int letter) {
    auto rows = t.rows();
    rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = letter;
    try {
        return Tableau(std::move(rows), t.n_letters());
    } catch (const std::invalid_argument& err) {
        // The signature rule always lands on a rewrite that keeps the
        // tableau semistandard; reaching this line means the reading or
        // cancellation convention was transcribed wrong.
        throw std::logic_error(std::string("operator broke semistandardness: ") + err.what());
    }
}

}  // namespace detail

inline void require_tableau_color(const Tableau& t, int k) {
    if (k < 1 || k >= t.n_letters())
        throw std::invalid_argument("tableau color out of range: " + std::to_string(k));
}

[[nodiscard]] inline int sig_eps(const Tableau& t, int k) {
    require_tableau_color(t, k);
    return static_cast<int>(detail::scan_signature(arabic_word(t), k).minus.size());
}

[[nodiscard]] inline int sig_phi(const Tableau& t, int k) {
    require_tableau_color(t, k);
    return static_cast<int>(detail::scan_signature(arabic_word(t), k).plus.size());
}

[[nodiscard]] inline std::optional<Tableau> apply_e(const Tableau& t, int k) {
    require_tableau_color(t, k);
    const auto scan = detail::scan_signature(arabic_word(t), k);
    if (scan.minus.empty()) return std::nullopt;
    const auto cells = detail::arabic_cells(t);
    return detail::rewrite_cell(t, cells[scan.minus.back()], k);
}

[[nodiscard]] inline std::optional<Tableau> apply_f(const Tableau& t, int k) {
    require_tableau_color(t, k);
    const auto scan = detail::scan_signature(arabic_word(t), k);
    if (scan.plus.empty()) return std::nullopt;
    const auto cells = detail::arabic_cells(t);
    return detail::rewrite_cell(t, cells[scan.plus.front()], k + 1);
}

// Row i filled with letter i: the unique tableau of weight equal to its
// shape, and the element every other tableau of that shape raises to.
[[nodiscard]] inline Tableau highest_tableau(const Partition& shape, int n_letters) {
    if (!is_partition(shape)) throw std::invalid_argument("shape must be a partition");
    const Partition parts = trimmed(shape);
    if (static_cast<int>(parts.size()) > n_letters)
        throw std::invalid_argument("shape has more rows than letters");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < parts.size(); ++i)
        rows.emplace_back(static_cast<std::size_t>(parts[i]), static_cast<int>(i) + 1);
    return Tableau(std::move(rows), n_letters);
}

// All semistandard tableaux of the given shape with entries up to n_letters,
// in a fixed order: cells are filled row by row, left to right, smallest
// letter first.
[[nodiscard]] inline std::vector<Tableau> tableaux_of(const Partition& shape, int n_letters) {
    if (!is_partition(shape)) throw std::invalid_argument("shape must be a partition");
    const Partition parts = trimmed(shape);
    if (static_cast<int>(parts.size()) > n_letters)
        throw std::invalid_argument("shape has more rows than letters");
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    for (int len : parts) rows.emplace_back(static_cast<std::size_t>(len), 0);
    auto fill = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows.size()) {
            out.emplace_back(rows, n_letters);
            return;
        }
        if (j == rows[i].size()) {
            self(self, i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int x = lo; x <= n_letters; ++x) {
            rows[i][j] = x;
            self(self, i, j + 1);
        }
        rows[i][j] = 0;
    };
    fill(fill, 0, 0);
    return out;
}

// The tableau crystal of the given shape, with to_text() labels and the
// signature-rule operators materialized into tables.
[[nodiscard]] inline Crystal crystal_of(const Partition& shape, int n_letters) {
    const std::vector<Tableau> tabs = tableaux_of(shape, n_letters);
    std::map<std::string, int> index_of;
    Crystal c;
    c.n_colors = n_letters;
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        c.labels.push_back(to_text(tabs[i]));
        c.wts.push_back(tabs[i].weight());
        index_of[c.labels.back()] = static_cast<int>(i);
    }
    c.e_tab.assign(static_cast<std::size_t>(n_letters) - 1,
                   std::vector<int>(tabs.size(), kAbsent));
    c.f_tab = c.e_tab;
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        for (int k = 1; k < n_letters; ++k) {
            if (const auto up = apply_e(tabs[i], k))
                c.e_tab[static_cast<std::size_t>(k) - 1][i] = index_of.at(to_text(*up));
            if (const auto down = apply_f(tabs[i], k))
                c.f_tab[static_cast<std::size_t>(k) - 1][i] = index_of.at(to_text(*down));
        }
    }
    return c;
}

// Parameters of the color-k string through an element: the string is a copy
// of the two-row crystal M_2(w_k, r_k) and the element sits at position v_k
// in it. Violations of the parity or range conditions cannot arise from the
// crystals this library builds, hence logic_error.
struct Gl2StringData {
    int w = 0;
    int r = 0;
    int v = 0;
};

[[nodiscard]] inline Gl2StringData gl2_string_data(const Crystal& c, int a, int k) {
    c.require_element(a);
    c.require_color(k);
    Gl2StringData d;
    const Weight& wt = c.wts[static_cast<std::size_t>(a)];
    d.w = wt[static_cast<std::size_t>(k) - 1] + wt[static_cast<std::size_t>(k)];
    d.v = wt[static_cast<std::size_t>(k) - 1];
    const int len = c.eps(a, k) + c.phi(a, k);
    if ((d.w - len) % 2 != 0) throw std::logic_error("string length parity violation");
    d.r = (d.w - len) / 2;
    if (d.r < 0 || d.v < d.r || d.v > d.w - d.r)
        throw std::logic_error("string data out of the two-row crystal range");
    return d;
}

// Connected components after keeping only the listed colors, i.e. the
// decomposition over the block subalgebra those colors generate. Every
// component again has a unique head.
[[nodiscard]] inline std::vector<Component> levi_restrict(const Crystal& c,
                                                          const std::vector<int>& keep) {
    return components_under(c, keep);
}

}  // namespace crystalbench
