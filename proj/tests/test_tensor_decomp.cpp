#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "crystalbench/gl2.hpp"
#include "crystalbench/schur.hpp"
#include "crystalbench/tensor_decomp.hpp"
#include "doctest.h"

using namespace crystalbench;

namespace {

std::map<Weight, int> multiplicity_map(const DecompositionReport& report) {
    std::map<Weight, int> out;
    for (const auto& entry : report.entries) out[entry.lambda] = entry.multiplicity;
    return out;
}

std::map<Weight, int> multiplicity_map(const Crystal& c) {
    std::map<Weight, int> out;
    for (const auto& comp : decompose(c)) ++out[comp.head_wt];
    return out;
}

std::vector<Partition> shapes_up_to(int max_size, int max_rows) {
    std::vector<Partition> shapes;
    for (int k = 1; k <= max_size; ++k)
        for (const auto& p : enumerate_partitions(max_rows, k)) shapes.push_back(p);
    return shapes;
}

}  // namespace

TEST_CASE("multiplicity of a shape in a two-factor product") {
    CHECK(lr_coefficient({1, 0}, {1, 0}, {2, 0}, 2) == 1);
    CHECK(lr_coefficient({1, 1, 0, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}, 4) == 1);
    CHECK_THROWS_AS((void)lr_coefficient({1}, {1}, {3}, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)lr_coefficient({2, 1}, {1}, {2, 1, 1}, 2), std::invalid_argument);

    for (const auto& mu1 : shapes_up_to(4, 3)) {
        for (const auto& mu2 : shapes_up_to(4, 3)) {
            Weight sum = padded(mu1, 3);
            const Weight m2 = padded(mu2, 3);
            for (std::size_t i = 0; i < 3; ++i) sum[i] += m2[i];
            CHECK(lr_coefficient(mu1, mu2, sum, 3) >= 1);
        }
    }
}

TEST_CASE("two and three letter products decompose classically") {
    const auto pair = decompose_product({{1, 0}, {1, 0}}, 2);
    REQUIRE(pair.entries.size() == 2);
    CHECK(pair.entries[0].lambda == Weight{2, 0});
    CHECK(pair.entries[0].multiplicity == 1);
    CHECK(pair.entries[1].lambda == Weight{1, 1});
    CHECK(pair.entries[1].multiplicity == 1);
    CHECK(pair.total == 4);

    const auto triple = decompose_product({{1}, {1}, {1}}, 3);
    CHECK(multiplicity_map(triple) ==
          std::map<Weight, int>{{{3, 0, 0}, 1}, {{2, 1, 0}, 2}, {{1, 1, 1}, 1}});

    for (const auto& shape : shapes_up_to(4, 3)) {
        const auto single = decompose_product({shape}, 3);
        REQUIRE(single.entries.size() == 1);
        CHECK(single.entries[0].lambda == padded(shape, 3));
        CHECK(single.entries[0].multiplicity == 1);
    }
}

TEST_CASE("component sizes add up to the product size") {
    const std::vector<std::pair<std::vector<Partition>, int>> runs{
        {{{2, 1}, {1, 1}}, 3},
        {{{2, 0}, {2, 0}}, 2},
        {{{1}, {1}, {1}, {1}}, 2},
        {{{2, 1}, {1}, {1, 1}}, 3},
    };
    for (const auto& [factors, n] : runs) {
        const auto report = decompose_product(factors, n);
        long long covered = 0;
        for (const auto& entry : report.entries)
            covered += static_cast<long long>(entry.multiplicity) *
                       crystal_of(entry.lambda, n).size();
        CHECK(covered == report.total);
    }
}

TEST_CASE("every component matches its model crystal") {
    CHECK(verify_component_isomorphism(decompose_product({{1, 0}, {1, 0}}, 2)));
    CHECK(verify_component_isomorphism(decompose_product({{2, 1}, {1, 0}}, 3)));

    const auto cg = decompose_product({{2, 0}, {2, 0}}, 2);
    CHECK(verify_component_isomorphism(cg));
    CHECK(multiplicity_map(cg) ==
          std::map<Weight, int>{{{4, 0}, 1}, {{3, 1}, 1}, {{2, 2}, 1}});
}

TEST_CASE("multiplicities agree with the symmetric function oracle") {
    for (int n = 2; n <= 4; ++n) {
        const int budget = 8;
        const auto shapes = shapes_up_to(budget - 1, n);
        for (const auto& mu1 : shapes) {
            for (const auto& mu2 : shapes) {
                if (weight_sum(mu1) + weight_sum(mu2) > budget) continue;
                const auto got = multiplicity_map(decompose_product({mu1, mu2}, n));
                std::map<Weight, int> want;
                for (const auto& [lam, coeff] :
                     decompose_into_schur(schur(mu1, n) * schur(mu2, n), n))
                    want[lam] = static_cast<int>(coeff);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("product characters multiply") {
    const std::vector<std::tuple<Partition, Partition, int>> runs{
        {{2, 1}, {1, 1}, 3}, {{2, 0}, {3, 0}, 2}, {{1, 1}, {2, 1}, 4}};
    for (const auto& [mu1, mu2, n] : runs) {
        const Crystal t = tensor(crystal_of(mu1, n), crystal_of(mu2, n));
        ExactPolynomial got(n);
        for (const auto& [w, count] : character(t)) got.add_term(w, count);
        CHECK(got == schur(mu1, n) * schur(mu2, n));
    }
}

TEST_CASE("elementwise transport is a bijective crystal map") {
    const std::vector<std::tuple<Partition, Partition, int>> runs{
        {{1}, {1}, 2}, {{2, 1}, {1, 1}, 3}, {{2}, {2}, 2}, {{2, 1}, {2, 1}, 3}};
    for (const auto& [mu1, mu2, n] : runs) {
        const TauContext ctx(mu1, mu2, n);
        const Crystal& t = ctx.product();
        std::set<std::tuple<Weight, int, std::string>> seen;
        std::map<std::pair<Weight, int>, long long> per_slot;
        for (int idx = 0; idx < t.size(); ++idx) {
            const TauResult res = ctx.map_index(idx);
            CHECK(seen.insert({res.lambda, res.component_index, to_text(res.image)}).second);
            ++per_slot[{res.lambda, res.component_index}];
            CHECK(res.image.weight() == t.wts[static_cast<std::size_t>(idx)]);
            for (int k = 1; k < n; ++k) {
                const int down = t.apply_f(idx, k);
                const auto image_down = apply_f(res.image, k);
                if (down == kAbsent) {
                    CHECK_FALSE(image_down.has_value());
                } else {
                    REQUIRE(image_down.has_value());
                    const TauResult res_down = ctx.map_index(down);
                    CHECK(res_down.lambda == res.lambda);
                    CHECK(res_down.component_index == res.component_index);
                    CHECK(to_text(res_down.image) == to_text(*image_down));
                }
                CHECK((t.apply_e(idx, k) == kAbsent) == !apply_e(res.image, k).has_value());
            }
        }
        for (const auto& [slot, count] : per_slot)
            CHECK(count == crystal_of(slot.first, n).size());
    }
}

TEST_CASE("pairs of highest elements are highest with summed weight") {
    const TauContext ctx({2, 1}, {1, 1}, 3);
    const Crystal& t = ctx.product();
    const Crystal a = crystal_of({2, 1}, 3);
    const Crystal b = crystal_of({1, 1}, 3);
    const int ha = highest_elements(a)[0].first;
    const int hb = highest_elements(b)[0].first;
    const int idx = ctx.index_of({ha, hb});
    CHECK(t.is_highest(idx));
    const TauResult res = ctx.map_index(idx);
    CHECK(res.lambda == Weight{3, 2, 0});
    CHECK(to_text(res.image) == to_text(highest_tableau({3, 2, 0}, 3)));
}

TEST_CASE("two-row transport matches the closed-form labeling map") {
    for (int w1 = 0; w1 <= 6; ++w1) {
        for (int r1 = 0; 2 * r1 <= w1; ++r1) {
            for (int w2 = 0; w2 <= 6; ++w2) {
                for (int r2 = 0; 2 * r2 <= w2; ++r2) {
                    const Partition mu1{w1 - r1, r1};
                    const Partition mu2{w2 - r2, r2};
                    const TauContext ctx(mu1, mu2, 2);
                    const Crystal& t = ctx.product();
                    const Crystal left = crystal_of(mu1, 2);
                    const Crystal right = crystal_of(mu2, 2);
                    for (int idx = 0; idx < t.size(); ++idx) {
                        const auto& pair = t.pairs[static_cast<std::size_t>(idx)];
                        const int v1 = left.wts[static_cast<std::size_t>(pair.left)][0];
                        const int v2 = right.wts[static_cast<std::size_t>(pair.right)][0];
                        const auto closed = tau2({v1, w1, r1}, {v2, w2, r2});
                        const TauResult res = ctx.map_index(idx);
                        CHECK(res.lambda == Weight{w1 + w2 - closed.r0, closed.r0});
                        CHECK(res.image.weight() ==
                              Weight{closed.v, w1 + w2 - closed.v});
                        CHECK(res.component_index == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("association order does not change multiplicities") {
    const Crystal a = crystal_of({2, 0}, 3);
    const Crystal b = crystal_of({1, 0}, 3);
    const Crystal c = crystal_of({1, 1}, 3);
    CHECK(multiplicity_map(tensor(tensor(a, b), c)) == multiplicity_map(tensor(a, tensor(b, c))));
    CHECK(multiplicity_map(decompose_product({{2, 0}, {1, 0}, {1, 1}}, 3)) ==
          multiplicity_map(tensor(a, tensor(b, c))));
}
