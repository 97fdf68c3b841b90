#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystalbench {

// A weight is a fixed-length tuple of non-negative integers; a partition is a
// weight whose entries weakly decrease. Trailing zeros are legitimate parts:
// (2,1,0) and (2,1) name the same partition stored at different lengths, and
// helpers that compare partitions ignore the padding.
using Weight = std::vector<int>;
using Partition = std::vector<int>;

[[nodiscard]] inline int weight_sum(const Weight& w) {
    return std::accumulate(w.begin(), w.end(), 0);
}

[[nodiscard]] inline bool is_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

[[nodiscard]] inline bool is_partition(const Weight& w) {
    if (!is_weight(w)) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

/// Copy with trailing zeros removed.
[[nodiscard]] inline Weight trimmed(const Weight& w) {
    Weight t = w;
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

/// Copy padded with zeros to length n (n must not truncate nonzero entries).
[[nodiscard]] inline Weight padded(const Weight& w, int n) {
    Weight t = w;
    if (static_cast<int>(t.size()) > n) {
        for (std::size_t i = n; i < t.size(); ++i)
            if (t[i] != 0) throw std::invalid_argument("padded: would drop a nonzero entry");
        t.resize(n);
    } else {
        t.resize(n, 0);
    }
    return t;
}

[[nodiscard]] inline bool same_partition(const Partition& a, const Partition& b) {
    return trimmed(a) == trimmed(b);
}

/// Conjugate partition: result_j = #{i : p_i >= j}. The natural length is the
/// largest part; a longer length pads with zeros. Conjugation is an involution
/// up to trailing zeros.
[[nodiscard]] inline Partition conjugate(const Partition& p, int length = -1) {
    if (!is_partition(p)) throw std::invalid_argument("conjugate: not a partition");
    const int largest = p.empty() ? 0 : p.front();
    if (length < 0) length = largest;
    if (length < largest)
        throw std::invalid_argument("conjugate: requested length drops nonzero parts");
    Partition out(length, 0);
    for (int j = 1; j <= largest; ++j)
        out[j - 1] = static_cast<int>(std::count_if(p.begin(), p.end(),
                                                    [j](int part) { return part >= j; }));
    return out;
}

/// Dimension of the conjugacy class of a nilpotent matrix whose Jordan type is
/// lambda: |lambda|^2 - sum(lambda_i^2). The centralizer of such a matrix has
/// dimension sum(lambda_i^2).
[[nodiscard]] inline int orbit_dim(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("orbit_dim: not a partition");
    const int total = weight_sum(lambda);
    int sq = 0;
    for (int part : lambda) sq += part * part;
    return total * total - sq;
}

/// Merge entries k and k+1 of a length-N weight into one, producing the
/// length-(N-1) weight (v_1,...,v_{k-1}, v_k+v_{k+1}, v_{k+2},...,v_N).
[[nodiscard]] inline Weight rho(int N, int k, const Weight& v) {
    if (static_cast<int>(v.size()) != N) throw std::invalid_argument("rho: weight length != N");
    if (k < 1 || k > N - 1) throw std::invalid_argument("rho: color out of range");
    Weight out;
    out.reserve(N - 1);
    for (int i = 0; i < N; ++i) {
        if (i == k - 1) out.push_back(v[i] + v[i + 1]);
        else if (i != k) out.push_back(v[i]);
    }
    return out;
}

namespace detail {
// sum_{i != j} a_i a_j over ordered pairs equals (sum a)^2 - sum a^2.
[[nodiscard]] inline int cross_sum(const std::vector<int>& a) {
    const int total = std::accumulate(a.begin(), a.end(), 0);
    int sq = 0;
    for (int x : a) sq += x * x;
    return total * total - sq;
}

[[nodiscard]] inline int exact_half(int numerator, const char* who) {
    if (numerator % 2 != 0) throw std::logic_error(std::string(who) + ": odd numerator");
    return numerator / 2;
}
}  // namespace detail

/// Dimension of the variety of t-invariant l-step flags with subfactor Jordan
/// types Lambda = (lambda^1,...,lambda^l), where t has type mu. May be
/// negative when no such flag exists; emptiness is decided by counting.
[[nodiscard]] inline int spaltenstein_dim(const std::vector<Partition>& Lambda,
                                          const Partition& mu) {
    std::vector<int> sizes;
    sizes.reserve(Lambda.size());
    for (const Partition& lam : Lambda) sizes.push_back(weight_sum(lam));
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != weight_sum(mu))
        throw std::invalid_argument("spaltenstein_dim: subfactor sizes do not sum to |mu|");
    int numerator = detail::cross_sum(sizes) - orbit_dim(mu);
    for (const Partition& lam : Lambda) numerator += orbit_dim(lam);
    return detail::exact_half(numerator, "spaltenstein_dim");
}

/// Dimension of the variety of N-step flags of dimension v annihilated
/// stepwise by a nilpotent of type lambda.
[[nodiscard]] inline int m_dim(const Weight& v, const Partition& lambda) {
    if (weight_sum(v) != weight_sum(lambda))
        throw std::invalid_argument("m_dim: |v| != |lambda|");
    return detail::exact_half(detail::cross_sum(v) - orbit_dim(lambda), "m_dim");
}

/// Dimension of the tensor product variety attached to (v, mu1, mu2).
[[nodiscard]] inline int t_dim(const Weight& v, const Partition& mu1, const Partition& mu2) {
    const int s1 = weight_sum(mu1), s2 = weight_sum(mu2);
    if (weight_sum(v) != s1 + s2)
        throw std::invalid_argument("t_dim: |v| != |mu1| + |mu2|");
    const int numerator = detail::cross_sum(v) + orbit_dim(mu1) + orbit_dim(mu2);
    return s1 * s2 + detail::exact_half(numerator, "t_dim");
}

namespace detail {
inline void gen_weights(int positions, int rem, Weight& acc, std::vector<Weight>& out) {
    if (positions == 1) {
        acc.push_back(rem);
        out.push_back(acc);
        acc.pop_back();
        return;
    }
    for (int a = 0; a <= rem; ++a) {
        acc.push_back(a);
        gen_weights(positions - 1, rem - a, acc, out);
        acc.pop_back();
    }
}

inline void gen_partitions(int positions, int rem, int maxpart, Weight& acc,
                           std::vector<Partition>& out) {
    if (positions == 1) {
        if (rem <= maxpart) {
            acc.push_back(rem);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    // First entry must cover at least its share of the remainder so that the
    // weakly decreasing tail can absorb the rest.
    const int lo = (rem + positions - 1) / positions;
    const int hi = std::min(maxpart, rem);
    for (int a = lo; a <= hi; ++a) {
        acc.push_back(a);
        gen_partitions(positions - 1, rem - a, a, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

/// All length-N weights of total k, lexicographically increasing.
[[nodiscard]] inline std::vector<Weight> enumerate_weights(int N, int k) {
    if (N < 1 || k < 0) throw std::invalid_argument("enumerate_weights: need N >= 1, k >= 0");
    std::vector<Weight> out;
    Weight acc;
    detail::gen_weights(N, k, acc, out);
    return out;
}

/// All length-N partitions of k, lexicographically increasing.
[[nodiscard]] inline std::vector<Partition> enumerate_partitions(int N, int k) {
    if (N < 1 || k < 0) throw std::invalid_argument("enumerate_partitions: need N >= 1, k >= 0");
    std::vector<Partition> out;
    Weight acc;
    detail::gen_partitions(N, k, k, acc, out);
    return out;
}

/// Render as comma-separated integers, e.g. "2,1,0".
[[nodiscard]] inline std::string format_weight(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

/// Parse comma-separated non-negative integers; rejects anything else.
[[nodiscard]] inline Weight parse_weight(const std::string& s) {
    Weight out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        int value = 0;
        const char* b = tok.data();
        const char* e = b + tok.size();
        auto [ptr, ec] = std::from_chars(b, e, value);
        if (ec != std::errc() || ptr != e || value < 0)
            throw std::invalid_argument("parse_weight: bad entry '" + tok + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace crystalbench
