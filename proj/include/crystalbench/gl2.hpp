#pragma once

#include <stdexcept>
#include <string>

#include "crystalbench/crystal.hpp"
#include "crystalbench/weights.hpp"

namespace crystalbench {

// One basis element of the two-row crystal M_2(w, r): a v-dimensional
// subspace position inside a w-dimensional space relative to a rank-r
// nilpotent. Valid when r <= v <= w - r (the underlying Grassmannian layer
// is nonempty exactly then).
struct Gl2Elem {
    int v = 0;
    int w = 0;
    int r = 0;
};

inline void require_valid(const Gl2Elem& a) {
    if (a.r < 0 || a.v < a.r || a.v > a.w - a.r)
        throw std::invalid_argument("invalid two-row crystal element (need r <= v <= w - r)");
}

// Parameters of the two-factor intersection variety: factor data (w1, r1),
// (w2, r2) and a target rank r on the (w1 + w2)-dimensional sum.
struct S2Label {
    int w1 = 0;
    int r1 = 0;
    int w2 = 0;
    int r2 = 0;
    int r = 0;
};

[[nodiscard]] inline std::string gl2_label(int v, int w, int r) {
    return "M_2(v=" + std::to_string(v) + ",w=" + std::to_string(w) +
           ",r=" + std::to_string(r) + ")";
}

// The two-row crystal M_2(w, r): elements v = r .. w-r with weight
// (v, w - v); raising moves v up, lowering moves v down. When 2r > w there
// are no valid v and the crystal is empty, mirroring the empty Grassmannian;
// that case is deliberately not an error so sums over r stay uniform.
[[nodiscard]] inline Crystal gl2_crystal(int w, int r) {
    if (w < 0 || r < 0) throw std::invalid_argument("gl2_crystal needs w, r >= 0");
    Crystal c;
    c.n_colors = 2;
    const int lo = r, hi = w - r;
    for (int v = lo; v <= hi; ++v) {
        c.labels.push_back(gl2_label(v, w, r));
        c.wts.push_back({v, w - v});
    }
    const auto n = c.labels.size();
    c.e_tab.assign(1, std::vector<int>(n, kAbsent));
    c.f_tab.assign(1, std::vector<int>(n, kAbsent));
    for (int v = lo; v <= hi; ++v) {
        const auto idx = static_cast<std::size_t>(v - lo);
        if (v < hi) c.e_tab[0][idx] = v - lo + 1;
        if (v > lo) c.f_tab[0][idx] = v - lo - 1;
    }
    return c;
}

[[nodiscard]] inline bool s2_nonempty(const S2Label& lbl) {
    return lbl.r >= lbl.r1 + lbl.r2 &&
           lbl.r <= std::min(lbl.w2 - lbl.r2 + lbl.r1, lbl.w1 - lbl.r1 + lbl.r2);
}

// Dimension of the (smooth, connected) intersection variety named by lbl.
[[nodiscard]] inline int s2_dim(const S2Label& lbl) {
    if (!s2_nonempty(lbl)) throw std::invalid_argument("empty intersection variety label");
    const int sum = orbit_dim({lbl.w1 - lbl.r1, lbl.r1}) + orbit_dim({lbl.w2 - lbl.r2, lbl.r2}) -
                    orbit_dim({lbl.w1 + lbl.w2 - lbl.r, lbl.r});
    return lbl.w1 * lbl.w2 + detail::exact_half(sum, "intersection variety dimension");
}

struct Tau2Result {
    int r0 = 0;  // rank label of the image component
    int v = 0;   // element position inside M_2(w1 + w2, r0)
};

// The explicit labeling map on pairs: a pair (a, b) of two-row crystal
// elements lands in the component labeled r0 = min(b.w - b.v + a.r,
// a.v + b.r), at position v = a.v + b.v. The image label is always a
// nonempty variety and a valid element of M_2(a.w + b.w, r0); failure of
// either check means the formula was transcribed wrong, hence logic_error.
[[nodiscard]] inline Tau2Result tau2(const Gl2Elem& a, const Gl2Elem& b) {
    require_valid(a);
    require_valid(b);
    Tau2Result out;
    out.r0 = std::min(b.w - b.v + a.r, a.v + b.r);
    out.v = a.v + b.v;
    if (!s2_nonempty({a.w, a.r, b.w, b.r, out.r0}))
        throw std::logic_error("labeling map produced an empty variety label");
    if (out.v < out.r0 || out.v > a.w + b.w - out.r0)
        throw std::logic_error("labeling map produced an out-of-range element");
    return out;
}

}  // namespace crystalbench
