#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystalbench/weights.hpp"

namespace crystalbench {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse multivariate polynomial with exact arbitrary-precision integer
/// coefficients, keyed by exponent vectors of fixed length. Zero coefficients
/// are never stored.
class ExactPolynomial {
public:
    using TermMap = std::map<std::vector<int>, BigInt>;

    explicit ExactPolynomial(int n_vars) : n_vars_(n_vars) {
        if (n_vars < 1) throw std::invalid_argument("ExactPolynomial: need at least one variable");
    }

    [[nodiscard]] static ExactPolynomial one(int n_vars) {
        ExactPolynomial p(n_vars);
        p.add_term(std::vector<int>(n_vars, 0), 1);
        return p;
    }

    [[nodiscard]] int n_vars() const { return n_vars_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }

    void add_term(const std::vector<int>& expo, const BigInt& coeff) {
        if (static_cast<int>(expo.size()) != n_vars_)
            throw std::invalid_argument("ExactPolynomial: exponent length mismatch");
        auto it = terms_.find(expo);
        if (it == terms_.end()) {
            if (coeff != 0) terms_.emplace(expo, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ExactPolynomial& operator+=(const ExactPolynomial& rhs) {
        require_same_vars(rhs);
        for (const auto& [expo, c] : rhs.terms_) add_term(expo, c);
        return *this;
    }

    ExactPolynomial& operator-=(const ExactPolynomial& rhs) {
        require_same_vars(rhs);
        for (const auto& [expo, c] : rhs.terms_) add_term(expo, -c);
        return *this;
    }

    [[nodiscard]] friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) {
        a += b;
        return a;
    }

    [[nodiscard]] friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) {
        a -= b;
        return a;
    }

    [[nodiscard]] friend ExactPolynomial operator*(const ExactPolynomial& a,
                                                   const ExactPolynomial& b) {
        a.require_same_vars(b);
        ExactPolynomial out(a.n_vars_);
        std::vector<int> expo(a.n_vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_vars_; ++i) expo[i] = ea[i] + eb[i];
                out.add_term(expo, ca * cb);
            }
        }
        return out;
    }

    [[nodiscard]] friend ExactPolynomial operator*(const BigInt& c, ExactPolynomial p) {
        if (c == 0) return ExactPolynomial(p.n_vars_);
        for (auto& [expo, coeff] : p.terms_) coeff *= c;
        return p;
    }

    [[nodiscard]] bool operator==(const ExactPolynomial& rhs) const {
        return n_vars_ == rhs.n_vars_ && terms_ == rhs.terms_;
    }

    /// Lexicographically largest exponent vector with its coefficient.
    [[nodiscard]] std::pair<std::vector<int>, BigInt> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    /// Invariance under every adjacent variable transposition.
    [[nodiscard]] bool is_symmetric() const {
        for (int i = 0; i + 1 < n_vars_; ++i) {
            TermMap swapped;
            for (const auto& [expo, c] : terms_) {
                std::vector<int> e = expo;
                std::swap(e[i], e[i + 1]);
                swapped.emplace(std::move(e), c);
            }
            if (swapped != terms_) return false;
        }
        return true;
    }

    /// Value at x_1 = ... = x_N = 1, i.e. the sum of all coefficients.
    [[nodiscard]] BigInt eval_ones() const {
        BigInt total = 0;
        for (const auto& [expo, c] : terms_) total += c;
        return total;
    }

private:
    void require_same_vars(const ExactPolynomial& rhs) const {
        if (n_vars_ != rhs.n_vars_)
            throw std::invalid_argument("ExactPolynomial: variable count mismatch");
    }

    int n_vars_;
    TermMap terms_;
};

/// Complete homogeneous polynomial h_d in N variables: the sum of all degree-d
/// monomials with coefficient one. h_0 = 1 and h_d = 0 for d < 0.
[[nodiscard]] inline ExactPolynomial complete_homogeneous(int d, int N) {
    ExactPolynomial p(N);
    if (d < 0) return p;
    for (const Weight& expo : enumerate_weights(N, d)) p.add_term(expo, 1);
    return p;
}

/// Schur polynomial s_lambda in N variables via the determinant
/// det(h_{lambda_i - i + j}), expanded exactly over permutations. This route
/// deliberately avoids tableau enumeration so it can serve as an independent
/// oracle for crystal characters.
[[nodiscard]] inline ExactPolynomial schur(const Partition& lambda, int N) {
    if (!is_partition(lambda)) throw std::invalid_argument("schur: not a partition");
    const Partition lam = trimmed(lambda);
    const int rows = static_cast<int>(lam.size());
    if (rows > N) throw std::invalid_argument("schur: partition has more than N rows");

    struct Key {
        Partition lam;
        int N;
        bool operator<(const Key& o) const { return std::tie(lam, N) < std::tie(o.lam, o.N); }
    };
    static std::map<Key, ExactPolynomial> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({lam, N});
        if (it != cache.end()) return it->second;
    }

    ExactPolynomial result(N);
    if (rows == 0) {
        result = ExactPolynomial::one(N);
    } else {
        std::map<int, ExactPolynomial> h;
        auto h_of = [&](int d) -> const ExactPolynomial& {
            auto it = h.find(d);
            if (it == h.end()) it = h.emplace(d, complete_homogeneous(d, N)).first;
            return it->second;
        };
        std::vector<int> perm(rows);
        for (int i = 0; i < rows; ++i) perm[i] = i;
        do {
            bool vanishes = false;
            for (int i = 0; i < rows && !vanishes; ++i)
                if (lam[i] - i + perm[i] < 0) vanishes = true;
            if (vanishes) continue;
            int inversions = 0;
            for (int i = 0; i < rows; ++i)
                for (int j = i + 1; j < rows; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            ExactPolynomial term = ExactPolynomial::one(N);
            for (int i = 0; i < rows; ++i) term = term * h_of(lam[i] - i + perm[i]);
            if (inversions % 2 == 0) result += term;
            else result -= term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(Key{lam, N}, result);
    return result;
}

/// Expand a symmetric polynomial as a non-negative integer combination of
/// Schur polynomials by repeatedly subtracting at the lexicographically
/// largest surviving monomial. Keys are padded to length N.
[[nodiscard]] inline std::map<Partition, long long> decompose_into_schur(ExactPolynomial p,
                                                                         int N) {
    if (p.n_vars() != N) throw std::invalid_argument("decompose_into_schur: variable mismatch");
    if (!p.is_symmetric()) throw std::invalid_argument("decompose_into_schur: not symmetric");
    std::map<Partition, long long> out;
    int guard = 0;
    while (!p.empty()) {
        if (++guard > 1'000'000) throw std::logic_error("decompose_into_schur: no convergence");
        auto [expo, coeff] = p.leading_term();
        // The lexicographically largest exponent of a symmetric polynomial is
        // weakly decreasing; anything else signals corrupted input.
        if (!is_partition(expo))
            throw std::logic_error("decompose_into_schur: leading exponent not a partition");
        if (coeff < 0)
            throw std::logic_error("decompose_into_schur: negative leading coefficient");
        const long long c = coeff.convert_to<long long>();
        out[padded(expo, N)] += c;
        p -= coeff * schur(expo, N);
    }
    return out;
}

/// Number of monomials of s_lambda in N variables counted with multiplicity.
[[nodiscard]] inline long long dim_of(const Partition& lambda, int N) {
    return schur(lambda, N).eval_ones().convert_to<long long>();
}

}  // namespace crystalbench
