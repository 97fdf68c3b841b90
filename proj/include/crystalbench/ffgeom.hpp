#pragma once

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystalbench/weights.hpp"

namespace crystalbench {

// Work limits for the enumeration routines. The budget is measured in
// elementary field operations (roughly: one table lookup or one visited
// candidate); the defaults keep a stray CLI invocation bounded. Worker
// counts beyond 1 split the outermost enumeration into chunks whose exact
// integer results are merged in a fixed order, so answers do not depend on
// the worker count.
struct ExecConfig {
    long long budget = 100'000'000;
    int jobs = 1;
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class BudgetMeter {
  public:
    explicit BudgetMeter(long long budget)
        : remaining_(std::make_shared<std::atomic<long long>>(budget)) {}

    void spend(long long ops) const {
        if (remaining_->fetch_sub(ops, std::memory_order_relaxed) - ops < 0)
            throw BudgetExceeded("enumeration budget exceeded");
    }

  private:
    std::shared_ptr<std::atomic<long long>> remaining_;
};

template <class T>
void merge_into(T& acc, T&& part);

inline void merge_into(long long& acc, long long part) { acc += part; }

inline void merge_into(std::map<Partition, long long>& acc,
                       std::map<Partition, long long>&& part) {
    for (auto& [key, value] : part) acc[key] += value;
}

// Runs fn(0..n_chunks-1) and merges the results in ascending chunk order.
// With jobs <= 1 this is a plain loop; otherwise chunks are pulled from a
// shared counter by worker threads and the merge still happens in chunk
// order afterwards, which keeps the result independent of scheduling.
template <class T, class Fn>
T run_chunks(T init, int n_chunks, int jobs, const Fn& fn) {
    T acc = std::move(init);
    if (jobs <= 1 || n_chunks <= 1) {
        for (int chunk = 0; chunk < n_chunks; ++chunk) merge_into(acc, fn(chunk));
        return acc;
    }
    std::vector<std::optional<T>> results(static_cast<std::size_t>(n_chunks));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_chunks));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int chunk = next.fetch_add(1);
            if (chunk >= n_chunks) return;
            try {
                results[static_cast<std::size_t>(chunk)] = fn(chunk);
            } catch (...) {
                errors[static_cast<std::size_t>(chunk)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_workers = std::min(jobs, n_chunks);
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    for (auto& part : results) merge_into(acc, std::move(*part));
    return acc;
}

}  // namespace detail

// Arithmetic tables for a prime field. Multiplication and inverses are
// table lookups; the sizes in play (q <= a few dozen) keep the tables tiny.
class Fq {
  public:
    explicit Fq(int q) : q_(q) {
        if (q < 2) throw std::invalid_argument("field modulus must be at least 2");
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) throw std::invalid_argument("field modulus must be prime");
        mul_.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                     static_cast<std::size_t>(b)] = a * b % q;
        inv_.assign(static_cast<std::size_t>(q), 0);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (a * b % q == 1) inv_[static_cast<std::size_t>(a)] = b;
    }

    [[nodiscard]] int q() const { return q_; }

    [[nodiscard]] int add(int a, int b) const {
        const int s = a + b;
        return s >= q_ ? s - q_ : s;
    }

    [[nodiscard]] int sub(int a, int b) const {
        const int s = a - b;
        return s < 0 ? s + q_ : s;
    }

    [[nodiscard]] int neg(int a) const { return a == 0 ? 0 : q_ - a; }

    [[nodiscard]] int mul(int a, int b) const {
        return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
                    static_cast<std::size_t>(b)];
    }

    [[nodiscard]] int inv(int a) const {
        if (a == 0) throw std::invalid_argument("zero is not invertible");
        return inv_[static_cast<std::size_t>(a)];
    }

  private:
    int q_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

// Square matrix over a prime field, with the row-vector convention: vectors
// are rows and act by v -> v * M, so row i of M is the image of the i-th
// basis vector. Entries are 0..q-1; the field is passed to the operations
// rather than stored.
class FieldMatrix {
  public:
    explicit FieldMatrix(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
        for (auto& row : rows_) row.assign(static_cast<std::size_t>(n), 0);
    }

    [[nodiscard]] int n() const { return n_; }

    [[nodiscard]] int at(int i, int j) const {
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    void set(int i, int j, int value) {
        rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    }

    [[nodiscard]] const std::vector<int>& row(int i) const {
        return rows_[static_cast<std::size_t>(i)];
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& row : rows_)
            for (int x : row)
                if (x != 0) return false;
        return true;
    }

    [[nodiscard]] bool operator==(const FieldMatrix& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

  private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

[[nodiscard]] inline FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b,
                                          const Fq& f) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
    FieldMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i) {
        for (int k = 0; k < a.n(); ++k) {
            const int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n(); ++j)
                c.set(i, j, f.add(c.at(i, j), f.mul(aik, b.at(k, j))));
        }
    }
    return c;
}

[[nodiscard]] inline std::vector<int> apply(const std::vector<int>& v, const FieldMatrix& m,
                                            const Fq& f) {
    if (static_cast<int>(v.size()) != m.n()) throw std::invalid_argument("vector size mismatch");
    std::vector<int> out(v.size(), 0);
    for (int i = 0; i < m.n(); ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m.n(); ++j)
            out[static_cast<std::size_t>(j)] =
                f.add(out[static_cast<std::size_t>(j)],
                      f.mul(v[static_cast<std::size_t>(i)], m.at(i, j)));
    }
    return out;
}

namespace detail {

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<int>>& rows, const Fq& f) {
    std::vector<int> pivots;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < rows.size() && rows[pivot_row][c] == 0) ++pivot_row;
        if (pivot_row == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        const int scale = f.inv(rows[r][c]);
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = f.mul(rows[r][j], scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const int factor = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace detail

[[nodiscard]] inline int rank(const FieldMatrix& m, const Fq& f) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) rows.push_back(m.row(i));
    return static_cast<int>(detail::rref(rows, f).size());
}

// Block-diagonal nilpotent with Jordan blocks of sizes conjugate(lambda),
// which is exactly the matrix whose Jordan type (blocks of size >= i) is
// lambda. In particular lambda = (n, 0, ...) names the zero matrix and
// lambda = (1, ..., 1) a single big block. Each block is a chain
// e_{o+s-1} -> ... -> e_{o+1} -> e_o -> 0 under the row-vector action.
[[nodiscard]] inline FieldMatrix jordan_matrix(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("jordan_matrix needs a partition");
    const int n = weight_sum(lambda);
    if (n > 6) throw std::invalid_argument("jordan_matrix size cap is 6");
    FieldMatrix m(n);
    int offset = 0;
    for (int size : conjugate(lambda)) {
        for (int i = 1; i < size; ++i) m.set(offset + i, offset + i - 1, 1);
        offset += size;
    }
    return m;
}

namespace detail {

// Jordan type if the matrix is nilpotent, nothing otherwise. Entry i (from
// 1) is rank(t^{i-1}) - rank(t^i); the result has length n with trailing
// zeros.
[[nodiscard]] inline std::optional<Partition> try_jordan_type(const FieldMatrix& t,
                                                              const Fq& f) {
    const int n = t.n();
    std::vector<int> ranks{n};  // ranks[i] = rank(t^i)
    FieldMatrix power = t;
    for (int i = 1; i <= n && !power.is_zero(); ++i) {
        ranks.push_back(rank(power, f));
        power = multiply(power, t, f);
    }
    if (!power.is_zero()) return std::nullopt;
    ranks.resize(static_cast<std::size_t>(n) + 1, 0);
    Partition type(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        type[static_cast<std::size_t>(i) - 1] =
            ranks[static_cast<std::size_t>(i) - 1] - ranks[static_cast<std::size_t>(i)];
    return type;
}

}  // namespace detail

[[nodiscard]] inline Partition jordan_type(const FieldMatrix& t, const Fq& f) {
    auto type = detail::try_jordan_type(t, f);
    if (!type) throw std::invalid_argument("matrix is not nilpotent");
    return *type;
}

// A subspace of F_q^n held as a reduced row echelon basis, which is the
// unique such basis: equal subspaces have equal representations.
class Subspace {
  public:
    [[nodiscard]] static Subspace zero(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }

    [[nodiscard]] static Subspace full(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        for (int i = 0; i < ambient; ++i) {
            std::vector<int> row(static_cast<std::size_t>(ambient), 0);
            row[static_cast<std::size_t>(i)] = 1;
            s.rows_.push_back(std::move(row));
            s.pivots_.push_back(i);
        }
        return s;
    }

    [[nodiscard]] static Subspace from_span(std::vector<std::vector<int>> vectors, int ambient,
                                            const Fq& f) {
        for (const auto& v : vectors)
            if (static_cast<int>(v.size()) != ambient)
                throw std::invalid_argument("span vector has wrong length");
        Subspace s;
        s.ambient_ = ambient;
        s.pivots_ = detail::rref(vectors, f);
        s.rows_ = std::move(vectors);
        return s;
    }

    // Caller guarantees the rows are already in reduced echelon form with
    // the given pivots; used by the pattern enumerators, which construct
    // echelon bases directly.
    [[nodiscard]] static Subspace from_rref(std::vector<std::vector<int>> rows, int ambient,
                                            std::vector<int> pivots) {
        Subspace s;
        s.ambient_ = ambient;
        s.rows_ = std::move(rows);
        s.pivots_ = std::move(pivots);
        return s;
    }

    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const std::vector<std::vector<int>>& basis() const { return rows_; }
    [[nodiscard]] const std::vector<int>& pivots() const { return pivots_; }

    [[nodiscard]] bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && rows_ == other.rows_;
    }

    [[nodiscard]] bool operator<(const Subspace& other) const {
        return rows_ < other.rows_;
    }

    // Canonical coset representative: subtracts the basis multiples fixed by
    // the pivot coordinates, leaving zeros in every pivot position.
    [[nodiscard]] std::vector<int> reduce(std::vector<int> v, const Fq& f) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int coeff = v[static_cast<std::size_t>(pivots_[i])];
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = f.sub(v[j], f.mul(coeff, rows_[i][j]));
        }
        return v;
    }

    [[nodiscard]] bool contains(const std::vector<int>& v, const Fq& f) const {
        const auto residue = reduce(v, f);
        for (int x : residue)
            if (x != 0) return false;
        return true;
    }

  private:
    int ambient_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

[[nodiscard]] inline long long gaussian_binomial(int n, int m, int q) {
    if (m < 0 || m > n) return 0;
    namespace mp = boost::multiprecision;
    mp::cpp_int result = 1;
    for (int i = 0; i < m; ++i) {
        result *= mp::pow(mp::cpp_int(q), static_cast<unsigned>(n - i)) - 1;
        result /= mp::pow(mp::cpp_int(q), static_cast<unsigned>(i + 1)) - 1;
    }
    if (result > std::numeric_limits<long long>::max())
        throw std::overflow_error("gaussian binomial exceeds long long");
    return static_cast<long long>(result);
}

namespace detail {

// Streams every m-dimensional subspace of F_q^n exactly once by echelon
// pattern: choose pivot columns, then sweep the free entries (right of a
// pivot, not in a pivot column).
template <class Fn>
void for_each_subspace(int n, int m, const Fq& f, const BudgetMeter& meter, const Fn& fn) {
    if (m < 0 || m > n) return;
    if (m == 0) {
        meter.spend(1);
        fn(Subspace::zero(n));
        return;
    }
    std::vector<int> pivots(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pivots[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < m; ++i)
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (!is_pivot[static_cast<std::size_t>(j)]) free_cells.emplace_back(i, j);
        std::vector<int> values(free_cells.size(), 0);
        for (;;) {
            meter.spend(static_cast<long long>(m) * n);
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), 0);
                rows[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
            }
            for (std::size_t c = 0; c < free_cells.size(); ++c)
                rows[static_cast<std::size_t>(free_cells[c].first)]
                    [static_cast<std::size_t>(free_cells[c].second)] = values[c];
            fn(Subspace::from_rref(std::move(rows), n, pivots));
            std::size_t pos = 0;
            while (pos < values.size() && values[pos] == f.q() - 1) values[pos++] = 0;
            if (pos == values.size()) break;
            ++values[pos];
        }
        // Next pivot combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j) - 1] + 1;
    }
}

}  // namespace detail

[[nodiscard]] inline std::vector<Subspace> enumerate_subspaces(int n, int m, int q,
                                                               const ExecConfig& cfg = {}) {
    if (n < 0 || n > 6) throw std::invalid_argument("subspace enumeration size cap is 6");
    const Fq f(q);
    const detail::BudgetMeter meter(cfg.budget);
    std::vector<Subspace> out;
    detail::for_each_subspace(n, m, f, meter, [&](Subspace s) { out.push_back(std::move(s)); });
    return out;
}

// Restriction of t to an invariant subspace, written in the echelon basis;
// empty if the subspace is not invariant. Because the basis is in reduced
// echelon form, the coordinates of an image vector are just its entries at
// the pivot columns, valid exactly when the reduction residue vanishes.
[[nodiscard]] inline std::optional<FieldMatrix> try_restriction(const Subspace& s,
                                                                const FieldMatrix& t,
                                                                const Fq& f) {
    FieldMatrix r(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        const auto image = apply(s.basis()[static_cast<std::size_t>(i)], t, f);
        if (!s.contains(image, f)) return std::nullopt;
        for (int j = 0; j < s.dim(); ++j)
            r.set(i, j, image[static_cast<std::size_t>(s.pivots()[static_cast<std::size_t>(j)])]);
    }
    return r;
}

// Induced operator on the quotient by an invariant subspace. The classes of
// the non-pivot coordinate vectors form a basis of the quotient, and the
// reduction residue of any vector reads off its class in that basis.
[[nodiscard]] inline FieldMatrix quotient_matrix(const Subspace& s, const FieldMatrix& t,
                                                 const Fq& f) {
    const int n = s.ambient();
    std::vector<int> coords;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : s.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) coords.push_back(j);
    }
    FieldMatrix qm(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(coords[i])] = 1;
        const auto residue = s.reduce(apply(e, t, f), f);
        for (std::size_t j = 0; j < coords.size(); ++j)
            qm.set(static_cast<int>(i), static_cast<int>(j),
                   residue[static_cast<std::size_t>(coords[j])]);
    }
    return qm;
}

// The subspace of vectors whose image under t lies in s, computed as the
// left kernel of the map v -> residue of v * t modulo s.
[[nodiscard]] inline Subspace preimage(const FieldMatrix& t, const Subspace& s, const Fq& f) {
    const int n = t.n();
    std::vector<int> coords;
    {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : s.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) coords.push_back(j);
    }
    const std::size_t k = coords.size();
    // Rows [residue | identity]: after reduction, rows whose first k entries
    // vanish carry kernel vectors in the trailing block.
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        const auto residue = s.reduce(apply(e, t, f), f);
        auto& row = rows[static_cast<std::size_t>(i)];
        row.assign(k + static_cast<std::size_t>(n), 0);
        for (std::size_t j = 0; j < k; ++j) row[j] = residue[static_cast<std::size_t>(coords[j])];
        row[k + static_cast<std::size_t>(i)] = 1;
    }
    detail::rref(rows, f);
    std::vector<std::vector<int>> kernel;
    for (const auto& row : rows) {
        bool lead_zero = true;
        for (std::size_t j = 0; j < k; ++j)
            if (row[j] != 0) {
                lead_zero = false;
                break;
            }
        if (lead_zero) kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(k),
                                           row.end());
    }
    return Subspace::from_span(std::move(kernel), n, f);
}

namespace detail {

// Streams the subspaces t with lo <= t <= hi and dim t = m, by enumerating
// the subspaces of the quotient hi/lo in coordinates of a completion of lo
// inside hi and lifting back.
template <class Fn>
void for_each_between(const Subspace& lo, const Subspace& hi, int m, const Fq& f,
                      const BudgetMeter& meter, const Fn& fn) {
    const int r = m - lo.dim();
    const int d = hi.dim() - lo.dim();
    if (r < 0 || r > d) return;
    std::vector<std::vector<int>> completion;
    {
        std::vector<std::vector<int>> acc = lo.basis();
        rref(acc, f);
        for (const auto& row : hi.basis()) {
            std::vector<std::vector<int>> trial = acc;
            trial.push_back(row);
            if (rref(trial, f).size() > acc.size()) {
                completion.push_back(row);
                acc = std::move(trial);
            }
        }
    }
    for_each_subspace(d, r, f, meter, [&](const Subspace& coef) {
        std::vector<std::vector<int>> span = lo.basis();
        for (const auto& coef_row : coef.basis()) {
            std::vector<int> lifted(static_cast<std::size_t>(lo.ambient()), 0);
            for (int j = 0; j < d; ++j) {
                const int c = coef_row[static_cast<std::size_t>(j)];
                if (c == 0) continue;
                for (std::size_t x = 0; x < lifted.size(); ++x)
                    lifted[x] = f.add(lifted[x],
                                      f.mul(c, completion[static_cast<std::size_t>(j)][x]));
            }
            span.push_back(std::move(lifted));
        }
        meter.spend(static_cast<long long>(m) * lo.ambient());
        fn(Subspace::from_span(std::move(span), lo.ambient(), f));
    });
}

// Number of l-step invariant flags of t with prescribed subfactor types,
// recursing through invariant subspaces of the first type and the induced
// quotient operator.
inline long long spaltenstein_count_for(const FieldMatrix& t, const Fq& f,
                                        const std::vector<Partition>& strata,
                                        std::size_t first, const BudgetMeter& meter) {
    const int n = t.n();
    if (first + 1 == strata.size()) {
        meter.spend(static_cast<long long>(n) * n * n);
        if (weight_sum(strata[first]) != n) return 0;
        const auto type = try_jordan_type(t, f);
        return type && same_partition(*type, strata[first]) ? 1 : 0;
    }
    const int m = weight_sum(strata[first]);
    if (m > n) return 0;
    long long total = 0;
    for_each_subspace(n, m, f, meter, [&](const Subspace& x) {
        meter.spend(static_cast<long long>(n) * n * n);
        const auto restriction = try_restriction(x, t, f);
        if (!restriction) return;
        const auto type = try_jordan_type(*restriction, f);
        if (!type || !same_partition(*type, strata[first])) return;
        total += spaltenstein_count_for(quotient_matrix(x, t, f), f, strata, first + 1, meter);
    });
    return total;
}

// Number of flags 0 = F_0 <= F_1 <= ... <= F_N = full with step dimensions
// v and t F_i <= F_{i-1}: each F_i ranges over the subspaces of the right
// dimension between F_{i-1} and its preimage under t.
inline long long mflag_count_for(const FieldMatrix& t, const Fq& f, const Weight& v,
                                 std::size_t step, int reached, const Subspace& prev,
                                 const BudgetMeter& meter) {
    if (step == v.size()) return reached == t.n() ? 1 : 0;
    const int target = reached + v[step];
    const Subspace roof = preimage(t, prev, f);
    long long total = 0;
    for_each_between(prev, roof, target, f, meter, [&](const Subspace& next) {
        total += mflag_count_for(t, f, v, step + 1, target, next, meter);
    });
    return total;
}

// Streams every n x n matrix whose top-left entry is fixed, in odometer
// order over the remaining entries.
template <class Fn>
void for_each_matrix_with_corner(int n, const Fq& f, int corner, const BudgetMeter& meter,
                                 const Fn& fn) {
    const int cells = n * n;
    std::vector<int> flat(static_cast<std::size_t>(cells), 0);
    flat[0] = corner;
    long long pending = 0;
    for (;;) {
        if (++pending >= 4096) {
            meter.spend(pending);
            pending = 0;
        }
        fn(flat);
        int pos = 1;
        while (pos < cells && flat[static_cast<std::size_t>(pos)] == f.q() - 1)
            flat[static_cast<std::size_t>(pos++)] = 0;
        if (pos == cells) break;
        ++flat[static_cast<std::size_t>(pos)];
    }
    meter.spend(pending);
}

[[nodiscard]] inline FieldMatrix matrix_from_flat(const std::vector<int>& flat, int n) {
    FieldMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, flat[static_cast<std::size_t>(i * n + j)]);
    return m;
}

[[nodiscard]] inline bool power_is_zero(const FieldMatrix& t, int e, const Fq& f) {
    FieldMatrix power = t;
    for (int i = 1; i < e && !power.is_zero(); ++i) power = multiply(power, t, f);
    return power.is_zero();
}

}  // namespace detail

// Number of l-step flags invariant under the reference nilpotent of type mu
// whose successive subfactors have Jordan types strata[0..l-1]. Size caps:
// |mu| <= 5 for up to two steps, <= 4 beyond.
[[nodiscard]] inline long long count_spaltenstein(const std::vector<Partition>& strata,
                                                  const Partition& mu, int q,
                                                  const ExecConfig& cfg = {}) {
    if (strata.empty()) throw std::invalid_argument("need at least one flag step");
    for (const auto& p : strata)
        if (!is_partition(p)) throw std::invalid_argument("flag step types must be partitions");
    if (!is_partition(mu)) throw std::invalid_argument("ambient type must be a partition");
    const int n = weight_sum(mu);
    const int cap = strata.size() <= 2 ? 5 : 4;
    if (n > cap) throw std::invalid_argument("ambient size cap exceeded");
    const Fq f(q);
    int total = 0;
    for (const auto& p : strata) total += weight_sum(p);
    if (total != n) return 0;
    const detail::BudgetMeter meter(cfg.budget);
    return detail::spaltenstein_count_for(jordan_matrix(mu), f, strata, 0, meter);
}

// Number of N-step flags with step dimensions v, each step mapped into the
// previous one by the reference nilpotent of type lambda. Size caps:
// |lambda| <= 5 and at most 4 steps.
[[nodiscard]] inline long long count_mflags(const Weight& v, const Partition& lambda, int q,
                                            const ExecConfig& cfg = {}) {
    if (!is_weight(v)) throw std::invalid_argument("step dimensions must be nonnegative");
    if (!is_partition(lambda)) throw std::invalid_argument("type must be a partition");
    if (weight_sum(lambda) > 5 || v.size() > 4)
        throw std::invalid_argument("flag counting size cap exceeded");
    const Fq f(q);
    if (weight_sum(v) != weight_sum(lambda)) return 0;
    const detail::BudgetMeter meter(cfg.budget);
    const FieldMatrix t = jordan_matrix(lambda);
    return detail::mflag_count_for(t, f, v, 0, 0, Subspace::zero(t.n()), meter);
}

// Number of triples (t, X, F): t nilpotent with t^N = 0, X a t-invariant
// subspace with restriction type mu1 and quotient type mu2, F an N-step
// flag of step dimensions v with t F_i <= F_{i-1}. Size caps: |mu1| + |mu2|
// <= 3 at any prime, = 4 only at q = 2.
[[nodiscard]] inline long long count_tensor_variety(const Weight& v, const Partition& mu1,
                                                    const Partition& mu2, int q,
                                                    const ExecConfig& cfg = {}) {
    if (!is_weight(v)) throw std::invalid_argument("step dimensions must be nonnegative");
    if (!is_partition(mu1) || !is_partition(mu2))
        throw std::invalid_argument("subspace types must be partitions");
    const int n = weight_sum(mu1) + weight_sum(mu2);
    if (n > 4 || (n == 4 && q != 2) || v.size() > 4)
        throw std::invalid_argument("tensor variety size cap exceeded");
    const Fq f(q);
    if (weight_sum(v) != n) return 0;
    if (n == 0) return 1;  // the empty triple
    const detail::BudgetMeter meter(cfg.budget);
    const std::vector<Partition> strata{mu1, mu2};
    const int len = static_cast<int>(v.size());
    const int nilpotency_exponent = std::min(len, n);
    return detail::run_chunks<long long>(0, q, cfg.jobs, [&](int corner) {
        long long total = 0;
        detail::for_each_matrix_with_corner(n, f, corner, meter, [&](const std::vector<int>& flat) {
            int trace = 0;
            for (int i = 0; i < n; ++i) trace = f.add(trace, flat[static_cast<std::size_t>(i * n + i)]);
            if (trace != 0) return;
            const FieldMatrix t = detail::matrix_from_flat(flat, n);
            meter.spend(static_cast<long long>(n) * n * n);
            if (!detail::power_is_zero(t, nilpotency_exponent, f)) return;
            const long long subspaces = detail::spaltenstein_count_for(t, f, strata, 0, meter);
            if (subspaces == 0) return;
            const long long flags =
                detail::mflag_count_for(t, f, v, 0, 0, Subspace::zero(n), meter);
            total += subspaces * flags;
        });
        return total;
    });
}

// Orbit census by exhaustive sweep: counts every nilpotent matrix by Jordan
// type. Size caps: n <= 3 at any prime, n = 4 only at q = 2.
[[nodiscard]] inline std::map<Partition, long long> count_nilpotent_orbits_all(
    int n, int q, const ExecConfig& cfg = {}) {
    if (n < 0 || n > 4 || (n == 4 && q != 2))
        throw std::invalid_argument("orbit sweep size cap exceeded");
    const Fq f(q);
    const detail::BudgetMeter meter(cfg.budget);
    std::map<Partition, long long> init;
    for (const auto& p : enumerate_partitions(std::max(n, 1), n)) init[p] = 0;
    if (n == 0) {
        init.begin()->second = 1;  // the empty matrix
        return init;
    }
    return detail::run_chunks<std::map<Partition, long long>>(
        std::move(init), q, cfg.jobs, [&](int corner) {
            std::map<Partition, long long> tally;
            detail::for_each_matrix_with_corner(
                n, f, corner, meter, [&](const std::vector<int>& flat) {
                    int trace = 0;
                    for (int i = 0; i < n; ++i)
                        trace = f.add(trace, flat[static_cast<std::size_t>(i * n + i)]);
                    if (trace != 0) return;
                    const FieldMatrix t = detail::matrix_from_flat(flat, n);
                    meter.spend(static_cast<long long>(n) * n * n);
                    const auto type = detail::try_jordan_type(t, f);
                    if (type) ++tally[*type];
                });
            return tally;
        });
}

[[nodiscard]] inline long long count_nilpotent_orbit(const Partition& lambda, int q,
                                                     const ExecConfig& cfg = {}) {
    if (!is_partition(lambda)) throw std::invalid_argument("orbit label must be a partition");
    const int n = weight_sum(lambda);
    const auto census = count_nilpotent_orbits_all(n, q, cfg);
    return census.at(padded(lambda, std::max(n, 1)));
}

// Orbit count by stratification instead of a full sweep: a nilpotent of
// type lambda determines its kernel flag (dimensions: partial sums of
// lambda), and for a fixed flag the matrices adapted to it with exactly
// that type are a sweep over the entries allowed by the flag. The number of
// flags is a product of Gaussian binomials (choices of each step inside the
// previous quotient). The identity is cross-checked against the exhaustive
// sweep in the tests at small q; its value is reaching primes where the
// full sweep is out of range.
[[nodiscard]] inline long long count_nilpotent_orbit_stratified(const Partition& lambda, int q,
                                                                const ExecConfig& cfg = {}) {
    if (!is_partition(lambda)) throw std::invalid_argument("orbit label must be a partition");
    const Partition parts = trimmed(lambda);
    const int n = weight_sum(parts);
    if (n > 4) throw std::invalid_argument("stratified orbit size cap exceeded");
    if (n == 0) return 1;
    const Fq f(q);
    const detail::BudgetMeter meter(cfg.budget);
    std::vector<int> dims{0};
    for (int part : parts) dims.push_back(dims.back() + part);
    long long flags = 1;
    for (std::size_t i = 1; i < dims.size(); ++i)
        flags *= gaussian_binomial(n - dims[i - 1], dims[i] - dims[i - 1], q);
    // Adapted matrices: row a may be nonzero only in the columns of the
    // previous flag step, so the kernel flag of a candidate contains the
    // reference flag; equality of types then forces equality of flags.
    std::vector<std::pair<int, int>> free_cells;
    for (std::size_t level = 1; level < dims.size(); ++level)
        for (int a = dims[level - 1]; a < dims[level]; ++a)
            for (int b = 0; b < dims[level - 1]; ++b) free_cells.emplace_back(a, b);
    std::vector<int> values(free_cells.size(), 0);
    long long adapted = 0;
    for (;;) {
        meter.spend(static_cast<long long>(n) * n * n);
        FieldMatrix t(n);
        for (std::size_t c = 0; c < free_cells.size(); ++c)
            t.set(free_cells[c].first, free_cells[c].second, values[c]);
        const auto type = detail::try_jordan_type(t, f);
        if (type && same_partition(*type, parts)) ++adapted;
        std::size_t pos = 0;
        while (pos < values.size() && values[pos] == f.q() - 1) values[pos++] = 0;
        if (pos == values.size()) break;
        ++values[pos];
    }
    return flags * adapted;
}

// Exact polynomial in one variable with rational coefficients, stored in
// ascending degree order with no trailing zero.
class RationalPoly {
  public:
    using Rational = boost::multiprecision::cpp_rational;

    RationalPoly() = default;

    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    [[nodiscard]] Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    [[nodiscard]] Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    [[nodiscard]] bool operator==(const RationalPoly& rhs) const {
        return coeffs_ == rhs.coeffs_;
    }

    [[nodiscard]] friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
        return RationalPoly(std::move(sum));
    }

    [[nodiscard]] friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return RationalPoly();
        std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPoly(std::move(prod));
    }

  private:
    std::vector<Rational> coeffs_;
};

// Exact Lagrange interpolation through (q, count) samples. The interpolant
// is the unique polynomial of degree < #samples through the points; callers
// wanting to certify "degree D with one confirming point" must supply at
// least D + 2 samples.
[[nodiscard]] inline RationalPoly interpolate(
    const std::vector<std::pair<int, long long>>& samples) {
    using Rational = RationalPoly::Rational;
    if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("sample points must be distinct");
    std::vector<Rational> acc(samples.size(), Rational(0));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        // Basis polynomial for sample i, scaled by its value.
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d] -= basis[d] * samples[j].first;
                next[d + 1] += basis[d];
            }
            basis = std::move(next);
            denom *= Rational(samples[i].first) - Rational(samples[j].first);
        }
        const Rational scale = Rational(samples[i].second) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
    }
    return RationalPoly(std::move(acc));
}

// The explicit invariant subspace witnessing that a nilpotent of type
// mu1 + mu2 admits restriction type mu1 and quotient type mu2: take the
// reference nilpotent of type mu1 + mu2 and span the whole Jordan blocks
// indexed by the column intervals (mu1_{i+1} + mu2_{i+1}, mu1_i + mu2_{i+1}].
// Every column j in interval i has height i, so the selected block sizes
// form the conjugate of mu1 and the complement forms the conjugate of mu2.
// The construction is re-verified through the generic restriction and
// quotient machinery; failure would mean the indexing is wrong, so it
// throws logic_error.
[[nodiscard]] inline Subspace lemma_sum_witness(const Partition& mu1, const Partition& mu2,
                                                int q) {
    if (!is_partition(mu1) || !is_partition(mu2))
        throw std::invalid_argument("witness arguments must be partitions");
    const int n = weight_sum(mu1) + weight_sum(mu2);
    if (n > 6) throw std::invalid_argument("witness size cap is 6");
    const Fq f(q);
    const std::size_t len = std::max(mu1.size(), mu2.size());
    const Weight a = padded(mu1, static_cast<int>(len));
    const Weight b = padded(mu2, static_cast<int>(len));
    Partition lambda(len);
    for (std::size_t i = 0; i < len; ++i) lambda[i] = a[i] + b[i];
    const FieldMatrix t = jordan_matrix(lambda);
    const Partition heights = conjugate(lambda);
    std::vector<int> offsets{0};
    for (int h : heights) offsets.push_back(offsets.back() + h);
    std::vector<std::vector<int>> span;
    auto take_block = [&](int block) {
        for (int row = offsets[static_cast<std::size_t>(block)];
             row < offsets[static_cast<std::size_t>(block) + 1]; ++row) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(row)] = 1;
            span.push_back(std::move(e));
        }
    };
    for (std::size_t i = 0; i < len; ++i) {
        const int next_a = (i + 1 < len) ? a[i + 1] : 0;
        const int next_b = (i + 1 < len) ? b[i + 1] : 0;
        for (int col = next_a + next_b + 1; col <= a[i] + next_b; ++col) take_block(col - 1);
    }
    const Subspace x = Subspace::from_span(std::move(span), n, f);
    const auto restriction = try_restriction(x, t, f);
    if (!restriction) throw std::logic_error("witness subspace is not invariant");
    if (!same_partition(jordan_type(*restriction, f), mu1))
        throw std::logic_error("witness restriction has the wrong type");
    if (!same_partition(jordan_type(quotient_matrix(x, t, f), f), mu2))
        throw std::logic_error("witness quotient has the wrong type");
    return x;
}

}  // namespace crystalbench
