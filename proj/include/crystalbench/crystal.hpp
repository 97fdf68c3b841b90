#pragma once

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystalbench/weights.hpp"

namespace crystalbench {

// Raising and lowering operators are partial maps; this sentinel marks the
// undefined case. It is never a valid element index.
inline constexpr int kAbsent = -1;

// For crystals built by tensor(), records which pair of factor elements an
// element of the product came from.
struct TensorElement {
    int left = kAbsent;
    int right = kAbsent;
};

// A finite normal gl_N-crystal with materialized operator tables. Elements
// are indices 0..size()-1; colors are k = 1..n_colors-1. e_tab[k-1][a] holds
// the index of the raising operator's value at a (kAbsent if undefined), and
// f_tab likewise for lowering. The string counts eps/phi are not stored: by
// normality they are the iteration counts of the tables, so eps() and phi()
// walk the tables directly.
struct Crystal {
    int n_colors = 0;
    std::vector<std::string> labels;
    std::vector<Weight> wts;
    std::vector<std::vector<int>> e_tab;
    std::vector<std::vector<int>> f_tab;
    std::vector<TensorElement> pairs;  // nonempty only for tensor products

    [[nodiscard]] int size() const { return static_cast<int>(labels.size()); }

    void require_color(int k) const {
        if (k < 1 || k >= n_colors)
            throw std::invalid_argument("color index out of range: " + std::to_string(k));
    }

    void require_element(int a) const {
        if (a < 0 || a >= size())
            throw std::invalid_argument("element index out of range: " + std::to_string(a));
    }

    [[nodiscard]] int apply_e(int a, int k) const {
        require_element(a);
        require_color(k);
        return e_tab[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(a)];
    }

    [[nodiscard]] int apply_f(int a, int k) const {
        require_element(a);
        require_color(k);
        return f_tab[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(a)];
    }

    [[nodiscard]] int eps(int a, int k) const {
        int count = 0;
        for (int b = apply_e(a, k); b != kAbsent; b = apply_e(b, k)) {
            if (++count > size())
                throw std::logic_error("raising operator cycles; not a crystal");
        }
        return count;
    }

    [[nodiscard]] int phi(int a, int k) const {
        int count = 0;
        for (int b = apply_f(a, k); b != kAbsent; b = apply_f(b, k)) {
            if (++count > size())
                throw std::logic_error("lowering operator cycles; not a crystal");
        }
        return count;
    }

    [[nodiscard]] bool is_highest(int a) const {
        for (int k = 1; k < n_colors; ++k)
            if (apply_e(a, k) != kAbsent) return false;
        return true;
    }
};

// Verifies the defining axioms on every element and color:
//   - table shapes are consistent and weights have length n_colors;
//   - e and f are mutually inverse partial bijections;
//   - wt(e_k a) = wt(a) + alpha_k;
//   - wt(a)_k - wt(a)_{k+1} = phi_k(a) - eps_k(a);
//   - the operator strings terminate (no cycles), so eps/phi are finite.
// Throws std::logic_error naming the first violation found.
inline void check_axioms(const Crystal& c) {
    const auto n = static_cast<std::size_t>(c.size());
    if (c.n_colors < 1) throw std::logic_error("n_colors must be at least 1");
    if (c.wts.size() != n) throw std::logic_error("weight table size mismatch");
    if (c.e_tab.size() != static_cast<std::size_t>(c.n_colors - 1) ||
        c.f_tab.size() != static_cast<std::size_t>(c.n_colors - 1))
        throw std::logic_error("operator table count differs from color count");
    for (const auto& w : c.wts)
        if (static_cast<int>(w.size()) != c.n_colors)
            throw std::logic_error("weight length differs from n_colors");
    for (int k = 1; k < c.n_colors; ++k) {
        const auto& e_row = c.e_tab[static_cast<std::size_t>(k) - 1];
        const auto& f_row = c.f_tab[static_cast<std::size_t>(k) - 1];
        if (e_row.size() != n || f_row.size() != n)
            throw std::logic_error("operator table row size mismatch");
        for (int a = 0; a < c.size(); ++a) {
            const int ea = e_row[static_cast<std::size_t>(a)];
            const int fa = f_row[static_cast<std::size_t>(a)];
            if (ea != kAbsent) {
                if (ea < 0 || ea >= c.size())
                    throw std::logic_error("raising operator leaves the element set");
                if (f_row[static_cast<std::size_t>(ea)] != a)
                    throw std::logic_error("f(e(a)) != a");
                for (int i = 0; i < c.n_colors; ++i) {
                    const int delta = (i == k - 1) ? 1 : (i == k ? -1 : 0);
                    if (c.wts[static_cast<std::size_t>(ea)][static_cast<std::size_t>(i)] !=
                        c.wts[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] + delta)
                        throw std::logic_error("wt(e(a)) != wt(a) + alpha");
                }
            }
            if (fa != kAbsent) {
                if (fa < 0 || fa >= c.size())
                    throw std::logic_error("lowering operator leaves the element set");
                if (e_row[static_cast<std::size_t>(fa)] != a)
                    throw std::logic_error("e(f(a)) != a");
            }
        }
        for (int a = 0; a < c.size(); ++a) {
            const int pairing = c.wts[static_cast<std::size_t>(a)][static_cast<std::size_t>(k) - 1] -
                                c.wts[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
            if (pairing != c.phi(a, k) - c.eps(a, k))
                throw std::logic_error("wt_k - wt_{k+1} != phi - eps");
        }
    }
}

// Crystal structure with every operator undefined and weight zero. Useful as
// a multiplicity space: tensoring with m trivial elements makes m copies.
[[nodiscard]] inline Crystal trivial_crystal(const std::vector<std::string>& labels, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Crystal c;
    c.n_colors = n;
    c.labels = labels;
    c.wts.assign(labels.size(), Weight(static_cast<std::size_t>(n), 0));
    c.e_tab.assign(static_cast<std::size_t>(n) - 1, std::vector<int>(labels.size(), kAbsent));
    c.f_tab = c.e_tab;
    return c;
}

// Tensor product. Element (a, b) gets index a*|B| + b. The operators follow
// the signature rule for two factors:
//   e_k(a, b) = (e_k a, b) if phi_k(a) >= eps_k(b), else (a, e_k b)
//   f_k(a, b) = (f_k a, b) if phi_k(a) >  eps_k(b), else (a, f_k b)
// with any pair containing an undefined side identified with "undefined".
// The closed-form string counts
//   eps(a, b) = max(eps(a), eps(a) + eps(b) - phi(a))
//   phi(a, b) = max(phi(b), phi(a) + phi(b) - eps(b))
// are recomputed from the built tables by iteration and must agree; a
// mismatch means the rule was transcribed wrong, so it throws.
[[nodiscard]] inline Crystal tensor(const Crystal& lhs, const Crystal& rhs) {
    if (lhs.n_colors != rhs.n_colors)
        throw std::invalid_argument("tensor factors must share n_colors");
    Crystal c;
    c.n_colors = lhs.n_colors;
    const int nb = rhs.size();
    c.labels.reserve(static_cast<std::size_t>(lhs.size()) * static_cast<std::size_t>(nb));
    for (int a = 0; a < lhs.size(); ++a) {
        for (int b = 0; b < nb; ++b) {
            c.labels.push_back(lhs.labels[static_cast<std::size_t>(a)] + " (x) " +
                               rhs.labels[static_cast<std::size_t>(b)]);
            Weight w = lhs.wts[static_cast<std::size_t>(a)];
            for (int i = 0; i < c.n_colors; ++i)
                w[static_cast<std::size_t>(i)] +=
                    rhs.wts[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
            c.wts.push_back(std::move(w));
            c.pairs.push_back({a, b});
        }
    }
    c.e_tab.assign(static_cast<std::size_t>(c.n_colors) - 1,
                   std::vector<int>(c.labels.size(), kAbsent));
    c.f_tab = c.e_tab;
    for (int k = 1; k < c.n_colors; ++k) {
        auto& e_row = c.e_tab[static_cast<std::size_t>(k) - 1];
        auto& f_row = c.f_tab[static_cast<std::size_t>(k) - 1];
        for (int a = 0; a < lhs.size(); ++a) {
            const int pa = lhs.phi(a, k);
            for (int b = 0; b < nb; ++b) {
                const int eb = rhs.eps(b, k);
                const int idx = a * nb + b;
                if (pa >= eb) {
                    const int ea = lhs.apply_e(a, k);
                    if (ea != kAbsent) e_row[static_cast<std::size_t>(idx)] = ea * nb + b;
                } else {
                    const int e2 = rhs.apply_e(b, k);
                    if (e2 != kAbsent) e_row[static_cast<std::size_t>(idx)] = a * nb + e2;
                }
                if (pa > eb) {
                    const int fa = lhs.apply_f(a, k);
                    if (fa != kAbsent) f_row[static_cast<std::size_t>(idx)] = fa * nb + b;
                } else {
                    const int f2 = rhs.apply_f(b, k);
                    if (f2 != kAbsent) f_row[static_cast<std::size_t>(idx)] = a * nb + f2;
                }
            }
        }
    }
    for (int k = 1; k < c.n_colors; ++k) {
        for (int a = 0; a < lhs.size(); ++a) {
            const int ea = lhs.eps(a, k), pa = lhs.phi(a, k);
            for (int b = 0; b < nb; ++b) {
                const int eb = rhs.eps(b, k), pb = rhs.phi(b, k);
                const int idx = a * nb + b;
                if (c.eps(idx, k) != std::max(ea, ea + eb - pa) ||
                    c.phi(idx, k) != std::max(pb, pa + pb - eb))
                    throw std::logic_error("tensor string counts disagree with closed form");
            }
        }
    }
    return c;
}

// Disjoint union; operators act within each summand. The result forgets any
// tensor pairing of the inputs since its elements no longer name factor
// pairs of a single product.
[[nodiscard]] inline Crystal direct_sum(const Crystal& lhs, const Crystal& rhs) {
    if (lhs.n_colors != rhs.n_colors)
        throw std::invalid_argument("direct summands must share n_colors");
    Crystal c = lhs;
    c.pairs.clear();
    const int offset = lhs.size();
    c.labels.insert(c.labels.end(), rhs.labels.begin(), rhs.labels.end());
    c.wts.insert(c.wts.end(), rhs.wts.begin(), rhs.wts.end());
    for (int k = 1; k < c.n_colors; ++k) {
        for (int b = 0; b < rhs.size(); ++b) {
            const int eb = rhs.apply_e(b, k);
            const int fb = rhs.apply_f(b, k);
            c.e_tab[static_cast<std::size_t>(k) - 1].push_back(eb == kAbsent ? kAbsent
                                                                             : eb + offset);
            c.f_tab[static_cast<std::size_t>(k) - 1].push_back(fb == kAbsent ? kAbsent
                                                                             : fb + offset);
        }
    }
    return c;
}

[[nodiscard]] inline std::vector<std::pair<int, Weight>> highest_elements(const Crystal& c) {
    std::vector<std::pair<int, Weight>> out;
    for (int a = 0; a < c.size(); ++a)
        if (c.is_highest(a)) out.emplace_back(a, c.wts[static_cast<std::size_t>(a)]);
    return out;
}

struct RaisePath {
    int head = kAbsent;
    // Colors in replay order: applying the lowering operators in this order
    // starting at head reproduces the original element.
    std::vector<int> path;
};

// Walks raising operators (smallest defined color first) until none applies.
// Throws if the walk exceeds the crystal size, which would mean a cycle.
[[nodiscard]] inline RaisePath raise_to_highest(const Crystal& c, int a) {
    c.require_element(a);
    RaisePath r;
    int cur = a;
    int steps = 0;
    for (;;) {
        int k = kAbsent;
        for (int color = 1; color < c.n_colors; ++color) {
            if (c.apply_e(cur, color) != kAbsent) {
                k = color;
                break;
            }
        }
        if (k == kAbsent) break;
        cur = c.apply_e(cur, k);
        r.path.push_back(k);
        if (++steps > c.size())
            throw std::logic_error("raising walk exceeded crystal size; not a crystal");
    }
    r.head = cur;
    std::reverse(r.path.begin(), r.path.end());
    return r;
}

struct Component {
    Weight head_wt;
    int highest = kAbsent;
    std::vector<int> members;  // ascending element indices
};

// Splits a crystal into connected components of the graph spanned by the
// given colors; each component must contain exactly one element with all
// those raising operators absent (true for the crystals this library
// builds, where every component is a full highest-weight crystal, also
// after restriction to a color subset). Components are ordered by head
// weight, larger weights first, ties by first appearance.
[[nodiscard]] inline std::vector<Component> components_under(const Crystal& c,
                                                             const std::vector<int>& colors) {
    for (int k : colors) c.require_color(k);
    std::vector<int> comp_of(static_cast<std::size_t>(c.size()), -1);
    std::vector<Component> comps;
    for (int start = 0; start < c.size(); ++start) {
        if (comp_of[static_cast<std::size_t>(start)] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::deque<int> queue{start};
        comp_of[static_cast<std::size_t>(start)] = id;
        while (!queue.empty()) {
            const int a = queue.front();
            queue.pop_front();
            comps[static_cast<std::size_t>(id)].members.push_back(a);
            for (int k : colors) {
                for (int b : {c.apply_e(a, k), c.apply_f(a, k)}) {
                    if (b != kAbsent && comp_of[static_cast<std::size_t>(b)] == -1) {
                        comp_of[static_cast<std::size_t>(b)] = id;
                        queue.push_back(b);
                    }
                }
            }
        }
    }
    for (auto& comp : comps) {
        std::sort(comp.members.begin(), comp.members.end());
        for (int a : comp.members) {
            bool top = true;
            for (int k : colors)
                if (c.apply_e(a, k) != kAbsent) {
                    top = false;
                    break;
                }
            if (!top) continue;
            if (comp.highest != kAbsent)
                throw std::logic_error("component has two highest elements");
            comp.highest = a;
        }
        if (comp.highest == kAbsent)
            throw std::logic_error("component has no highest element");
        comp.head_wt = c.wts[static_cast<std::size_t>(comp.highest)];
    }
    std::stable_sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) {
        return x.head_wt > y.head_wt;
    });
    return comps;
}

[[nodiscard]] inline std::vector<Component> components_under(const Crystal& c) {
    std::vector<int> colors;
    for (int k = 1; k < c.n_colors; ++k) colors.push_back(k);
    return components_under(c, colors);
}

[[nodiscard]] inline std::vector<Component> decompose(const Crystal& c) {
    return components_under(c);
}

// Canonical serialization of the component reachable from a highest element.
// Breadth-first over lowering operators in color order, recording for every
// (visited element, color) the discovery index of the target or -1. Lowering
// operators are deterministic and reach the whole component from its head,
// so two components are isomorphic as crystals exactly when their signatures
// match (the head weight pins all other weights through the weight axiom).
[[nodiscard]] inline std::string canonical_signature(const Crystal& c, int root) {
    c.require_element(root);
    if (!c.is_highest(root))
        throw std::invalid_argument("signature root must be a highest element");
    std::vector<int> discovery(static_cast<std::size_t>(c.size()), -1);
    std::vector<int> order;
    discovery[static_cast<std::size_t>(root)] = 0;
    order.push_back(root);
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        for (int k = 1; k < c.n_colors; ++k) {
            const int b = c.apply_f(a, k);
            if (b != kAbsent && discovery[static_cast<std::size_t>(b)] == -1) {
                discovery[static_cast<std::size_t>(b)] = static_cast<int>(order.size());
                order.push_back(b);
                queue.push_back(b);
            }
        }
    }
    std::string sig = "wt:" + format_weight(c.wts[static_cast<std::size_t>(root)]);
    sig += ";n:" + std::to_string(order.size());
    for (int a : order) {
        sig += ';';
        for (int k = 1; k < c.n_colors; ++k) {
            if (k > 1) sig += ',';
            const int b = c.apply_f(a, k);
            sig += std::to_string(b == kAbsent ? -1 : discovery[static_cast<std::size_t>(b)]);
        }
    }
    return sig;
}

[[nodiscard]] inline std::map<Weight, long long> character(const Crystal& c) {
    std::map<Weight, long long> counts;
    for (const auto& w : c.wts) ++counts[w];
    return counts;
}

}  // namespace crystalbench
