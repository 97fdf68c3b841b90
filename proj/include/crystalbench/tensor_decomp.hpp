#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystalbench/crystal.hpp"
#include "crystalbench/tableaux.hpp"
#include "crystalbench/weights.hpp"

namespace crystalbench {

struct DecompEntry {
    Weight lambda;             // head weight, length n_letters
    int multiplicity = 0;
    std::vector<int> highest;  // product element indices, ascending
};

struct DecompositionReport {
    std::vector<Partition> factors;
    int n_letters = 0;
    Crystal product;
    std::vector<DecompEntry> entries;  // lambda strictly descending
    long long total = 0;
};

// Iterated tensor product of tableau crystals, associated left to right.
// The unit of the fold is the empty-shape crystal, so an empty factor list
// yields the one-element product of weight zero.
[[nodiscard]] inline Crystal product_crystal(const std::vector<Partition>& factors, int n) {
    Crystal acc = crystal_of({}, n);
    for (const auto& shape : factors) acc = tensor(acc, crystal_of(shape, n));
    return acc;
}

[[nodiscard]] inline DecompositionReport decompose_product(const std::vector<Partition>& factors,
                                                           int n) {
    DecompositionReport report;
    report.factors = factors;
    report.n_letters = n;
    if (factors.size() == 1) {
        report.product = crystal_of(factors[0], n);
    } else {
        report.product = product_crystal(factors, n);
    }
    report.total = report.product.size();
    for (const auto& comp : decompose(report.product)) {
        if (report.entries.empty() || report.entries.back().lambda != comp.head_wt) {
            report.entries.push_back({comp.head_wt, 0, {}});
        }
        auto& entry = report.entries.back();
        ++entry.multiplicity;
        entry.highest.push_back(comp.highest);
    }
    for (auto& entry : report.entries) std::sort(entry.highest.begin(), entry.highest.end());
    return report;
}

// Multiplicity of the shape-lambda crystal inside the product of the two
// factor crystals: the number of highest product elements of weight lambda.
[[nodiscard]] inline int lr_coefficient(const Partition& mu1, const Partition& mu2,
                                        const Partition& lambda, int n) {
    if (!is_partition(mu1) || !is_partition(mu2) || !is_partition(lambda))
        throw std::invalid_argument("lr_coefficient arguments must be partitions");
    if (weight_sum(mu1) + weight_sum(mu2) != weight_sum(lambda))
        throw std::invalid_argument("lr_coefficient needs |mu1| + |mu2| = |lambda|");
    const Weight target = padded(lambda, n);
    const Crystal t = tensor(crystal_of(mu1, n), crystal_of(mu2, n));
    int count = 0;
    for (const auto& [idx, w] : highest_elements(t)) {
        (void)idx;
        if (w == target) ++count;
    }
    return count;
}

struct TauResult {
    Weight lambda;            // head weight of the component, length n
    int component_index = 0;  // position among same-weight heads, from 0
    Tableau image;
};

// Reusable state for mapping many elements of one two-factor product: the
// product crystal and its highest elements grouped by weight. An element is
// sent to (head weight, index of its head among same-weight heads, tableau
// reached by replaying the raising path downward from the highest tableau).
class TauContext {
  public:
    TauContext(const Partition& mu1, const Partition& mu2, int n)
        : n_(n),
          left_(crystal_of(mu1, n)),
          right_(crystal_of(mu2, n)),
          product_(tensor(left_, right_)) {
        for (const auto& [idx, w] : highest_elements(product_)) heads_by_wt_[w].push_back(idx);
    }

    [[nodiscard]] const Crystal& product() const { return product_; }

    [[nodiscard]] int index_of(TensorElement x) const {
        left_.require_element(x.left);
        right_.require_element(x.right);
        return x.left * right_.size() + x.right;
    }

    [[nodiscard]] TauResult map_index(int idx) const {
        const RaisePath lift = raise_to_highest(product_, idx);
        const Weight& lambda = product_.wts[static_cast<std::size_t>(lift.head)];
        const auto& heads = heads_by_wt_.at(lambda);
        const auto pos = std::find(heads.begin(), heads.end(), lift.head);
        Tableau image = highest_tableau(lambda, n_);
        for (int k : lift.path) {
            const auto next = apply_f(image, k);
            if (!next)
                throw std::logic_error("path replay left the target crystal; not isomorphic");
            image = *next;
        }
        return {lambda, static_cast<int>(pos - heads.begin()), image};
    }

    [[nodiscard]] TauResult map(TensorElement x) const { return map_index(index_of(x)); }

  private:
    int n_;
    Crystal left_;
    Crystal right_;
    Crystal product_;
    std::map<Weight, std::vector<int>> heads_by_wt_;
};

[[nodiscard]] inline TauResult tau_n(const Partition& mu1, const Partition& mu2, int n,
                                     TensorElement x) {
    return TauContext(mu1, mu2, n).map(x);
}

// True when every component of the product is isomorphic, as a crystal, to
// the plain tableau crystal of its head weight.
[[nodiscard]] inline bool verify_component_isomorphism(const DecompositionReport& report) {
    std::map<Weight, std::string> reference;
    for (const auto& entry : report.entries) {
        auto it = reference.find(entry.lambda);
        if (it == reference.end()) {
            const Crystal model = crystal_of(entry.lambda, report.n_letters);
            const auto tops = highest_elements(model);
            if (tops.size() != 1) return false;
            it = reference.emplace(entry.lambda, canonical_signature(model, tops[0].first))
                     .first;
        }
        for (int head : entry.highest)
            if (canonical_signature(report.product, head) != it->second) return false;
    }
    return true;
}

}  // namespace crystalbench
