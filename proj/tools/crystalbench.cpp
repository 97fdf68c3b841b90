#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "crystalbench/crystal.hpp"
#include "crystalbench/ffgeom.hpp"
#include "crystalbench/gl2.hpp"
#include "crystalbench/io.hpp"
#include "crystalbench/schur.hpp"
#include "crystalbench/tableaux.hpp"
#include "crystalbench/tensor_decomp.hpp"
#include "crystalbench/weights.hpp"

namespace cb = crystalbench;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

cb::Partition parse_partition(const std::string& text, const char* what) {
    const cb::Weight w = cb::parse_weight(text);
    if (!cb::is_partition(w))
        throw std::invalid_argument(std::string(what) + " must be weakly decreasing: " + text);
    return w;
}

std::vector<int> parse_primes(const std::string& text) {
    const cb::Weight list = cb::parse_weight(text);
    std::set<int> seen;
    for (int p : list) {
        (void)cb::Fq(p);  // rejects non-primes
        if (!seen.insert(p).second)
            throw std::invalid_argument("duplicate prime: " + std::to_string(p));
    }
    return list;
}

long long resolve_default_budget() {
    const char* env = std::getenv("CRYSTALBENCH_BUDGET");
    if (env == nullptr || *env == '\0') return cb::ExecConfig{}.budget;
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || value <= 0)
        throw std::invalid_argument("CRYSTALBENCH_BUDGET must be a positive integer");
    return value;
}

int unsupported_format(const std::string& format, const char* command) {
    std::cerr << "error: format '" << format << "' is not supported by " << command << "\n";
    return kExitUsage;
}

void emit(const cb::OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

struct LrOpts {
    std::string mu1, mu2, lambda;
    int n = 0;
    bool verify = false;
    std::string format = "text";
};

int run_lr(const LrOpts& o) {
    const auto mu1 = parse_partition(o.mu1, "mu1");
    const auto mu2 = parse_partition(o.mu2, "mu2");
    const auto lambda = parse_partition(o.lambda, "lambda");
    if (cb::weight_sum(mu1) + cb::weight_sum(mu2) != cb::weight_sum(lambda)) {
        std::cout << 0 << "\n";
        std::cerr << "error: size mismatch, |mu1| + |mu2| must equal |lambda|\n";
        return kExitUsage;
    }
    int rows = 0;
    for (int part : lambda)
        if (part > 0) ++rows;
    const bool representable = rows <= o.n;
    const long long coefficient =
        representable ? cb::lr_coefficient(mu1, mu2, lambda, o.n) : 0;
    long long oracle = 0;
    bool pass = true;
    if (o.verify) {
        if (representable) {
            const auto table =
                cb::decompose_into_schur(cb::schur(mu1, o.n) * cb::schur(mu2, o.n), o.n);
            const auto it = table.find(cb::padded(lambda, o.n));
            oracle = it == table.end() ? 0 : it->second;
        }
        pass = oracle == coefficient;
    }
    if (o.format == "json") {
        cb::OrderedJson j;
        j["mu1"] = cb::format_weight(mu1);
        j["mu2"] = cb::format_weight(mu2);
        j["lambda"] = cb::format_weight(lambda);
        j["n"] = o.n;
        j["coefficient"] = coefficient;
        if (o.verify) {
            j["oracle"] = oracle;
            j["pass"] = pass;
        }
        emit(j);
    } else {
        std::cout << coefficient << "\n";
        if (o.verify && !pass)
            std::cerr << "error: oracle disagrees: crystal " << coefficient << ", oracle "
                      << oracle << "\n";
    }
    return pass ? kExitPass : kExitMismatch;
}

struct DecomposeOpts {
    std::vector<std::string> factors;
    int n = 0;
    std::string format = "text";
};

int run_decompose(const DecomposeOpts& o) {
    std::vector<cb::Partition> factors;
    factors.reserve(o.factors.size());
    for (const auto& text : o.factors) factors.push_back(parse_partition(text, "factor"));
    const cb::DecompositionReport report = cb::decompose_product(factors, o.n);
    if (o.format == "json") {
        emit(cb::report_to_json(report));
    } else {
        for (const auto& entry : report.entries)
            std::cout << cb::format_weight(entry.lambda) << ": " << entry.multiplicity << "\n";
        std::cout << "total: " << report.total << "\n";
    }
    return kExitPass;
}

struct Tau2Opts {
    int v1 = 0, w1 = 0, r1 = 0;
    int v2 = 0, w2 = 0, r2 = 0;
    std::string format = "text";
};

int run_tau2(const Tau2Opts& o) {
    const cb::Tau2Result res = cb::tau2({o.v1, o.w1, o.r1}, {o.v2, o.w2, o.r2});
    if (o.format == "json") {
        cb::OrderedJson j;
        j["r0"] = res.r0;
        j["v"] = res.v;
        emit(j);
    } else {
        std::cout << "r0=" << res.r0 << " v=" << res.v << "\n";
    }
    return kExitPass;
}

struct TauOpts {
    std::string mu1, mu2;
    int n = 0;
    std::string format = "text";
};

int run_tau(const TauOpts& o) {
    const auto mu1 = parse_partition(o.mu1, "mu1");
    const auto mu2 = parse_partition(o.mu2, "mu2");
    const cb::TauContext ctx(mu1, mu2, o.n);
    const cb::Crystal& product = ctx.product();
    cb::OrderedJson rows = cb::OrderedJson::array();
    for (int idx = 0; idx < product.size(); ++idx) {
        const cb::TauResult res = ctx.map_index(idx);
        if (o.format == "json") {
            cb::OrderedJson row;
            row["element"] = product.labels[static_cast<std::size_t>(idx)];
            row["lambda"] = cb::format_weight(res.lambda);
            row["k"] = res.component_index;
            row["image"] = cb::tableau_to_json(res.image);
            rows.push_back(std::move(row));
        } else {
            std::cout << product.labels[static_cast<std::size_t>(idx)]
                      << " -> lambda=" << cb::format_weight(res.lambda)
                      << " k=" << res.component_index << " image=" << cb::to_text(res.image)
                      << "\n";
        }
    }
    if (o.format == "json") {
        cb::OrderedJson j;
        j["mu1"] = cb::format_weight(mu1);
        j["mu2"] = cb::format_weight(mu2);
        j["n"] = o.n;
        j["elements"] = std::move(rows);
        emit(j);
    }
    return kExitPass;
}

struct RestrictOpts {
    std::string lambda;
    int n = 0;
    std::string keep;
    std::string format = "text";
};

int run_restrict(const RestrictOpts& o) {
    const auto lambda = parse_partition(o.lambda, "lambda");
    const cb::Weight keep = cb::parse_weight(o.keep);
    const cb::Crystal c = cb::crystal_of(lambda, o.n);
    const auto components = cb::levi_restrict(c, keep);
    const bool single = keep.size() == 1;
    cb::OrderedJson comps = cb::OrderedJson::array();
    for (const auto& comp : components) {
        if (single) {
            const int k = keep.front();
            const auto data = cb::gl2_string_data(c, comp.highest, k);
            std::vector<std::string> chain;
            for (int a = comp.highest; a != cb::kAbsent; a = c.apply_f(a, k))
                chain.push_back(c.labels[static_cast<std::size_t>(a)]);
            if (o.format == "json") {
                cb::OrderedJson j;
                j["w"] = data.w;
                j["r"] = data.r;
                j["size"] = static_cast<int>(comp.members.size());
                j["members"] = chain;
                comps.push_back(std::move(j));
            } else {
                std::cout << "M_2(w=" << data.w << ",r=" << data.r
                          << ") size=" << comp.members.size() << ":";
                for (const auto& label : chain) std::cout << " " << label;
                std::cout << "\n";
            }
        } else {
            std::vector<std::string> members;
            for (int a : comp.members) members.push_back(c.labels[static_cast<std::size_t>(a)]);
            if (o.format == "json") {
                cb::OrderedJson j;
                j["head"] = cb::format_weight(comp.head_wt);
                j["size"] = static_cast<int>(comp.members.size());
                j["members"] = members;
                comps.push_back(std::move(j));
            } else {
                std::cout << "head=" << cb::format_weight(comp.head_wt)
                          << " size=" << comp.members.size() << ":";
                for (const auto& label : members) std::cout << " " << label;
                std::cout << "\n";
            }
        }
    }
    if (o.format == "json") {
        cb::OrderedJson j;
        j["lambda"] = cb::format_weight(lambda);
        j["n"] = o.n;
        j["keep"] = std::vector<int>(keep.begin(), keep.end());
        j["components"] = std::move(comps);
        emit(j);
    }
    return kExitPass;
}

struct CrystalOpts {
    std::string lambda;
    int n = 0;
    std::string format = "text";
};

int run_crystal(const CrystalOpts& o) {
    const auto lambda = parse_partition(o.lambda, "lambda");
    const cb::Crystal c = cb::crystal_of(lambda, o.n);
    if (o.format == "dot") {
        std::cout << cb::to_dot(c);
    } else if (o.format == "json") {
        emit(cb::crystal_to_json(c));
    } else {
        std::cout << "size=" << c.size() << " colors=" << c.n_colors - 1 << "\n";
        for (int a = 0; a < c.size(); ++a) {
            std::cout << a << ": " << c.labels[static_cast<std::size_t>(a)]
                      << " wt=" << cb::format_weight(c.wts[static_cast<std::size_t>(a)]);
            for (int k = 1; k < c.n_colors; ++k) {
                const int up = c.apply_e(a, k);
                const int down = c.apply_f(a, k);
                std::cout << " e" << k << "=";
                if (up == cb::kAbsent)
                    std::cout << "-";
                else
                    std::cout << up;
                std::cout << " f" << k << "=";
                if (down == cb::kAbsent)
                    std::cout << "-";
                else
                    std::cout << down;
            }
            std::cout << "\n";
        }
    }
    return kExitPass;
}

struct SchurOpts {
    std::string lambda;
    int n = 0;
    std::string format = "text";
};

int run_schur(const SchurOpts& o) {
    const auto lambda = parse_partition(o.lambda, "lambda");
    const cb::ExactPolynomial poly = cb::schur(lambda, o.n);
    if (o.format == "json") {
        cb::OrderedJson j;
        j["lambda"] = cb::format_weight(lambda);
        j["n"] = o.n;
        cb::OrderedJson terms = cb::OrderedJson::array();
        for (const auto& [expo, coeff] : poly.terms()) {
            cb::OrderedJson term;
            term["exponent"] = cb::format_weight(expo);
            term["coeff"] = coeff.str();
            terms.push_back(std::move(term));
        }
        j["terms"] = std::move(terms);
        emit(j);
    } else {
        for (const auto& [expo, coeff] : poly.terms())
            std::cout << cb::format_weight(expo) << ": " << coeff.str() << "\n";
    }
    return kExitPass;
}

struct CheckOpts {
    std::string a, b, c;
    int n = 0;
    std::string primes;
    int jobs = 1;
    long long budget = 0;
};

[[nodiscard]] cb::ExecConfig exec_config(const CheckOpts& o) {
    cb::ExecConfig cfg;
    cfg.budget = o.budget;
    cfg.jobs = o.jobs;
    return cfg;
}

// Shared shape of every verification record: inputs, per-prime counts, the
// exact interpolant, and the predicted degree and leading coefficient.
struct CheckOutcome {
    std::vector<int> primes;
    std::vector<long long> counts;
    cb::RationalPoly poly;
    int predicted_degree = 0;
    long long predicted_leading = 0;
    bool pass = false;
};

int finish_check(const char* name, const std::string& variety, cb::OrderedJson inputs,
                 CheckOutcome out, cb::OrderedJson extras = cb::OrderedJson::object()) {
    cb::OrderedJson j;
    j["check"] = name;
    j["variety"] = variety;
    j["inputs"] = std::move(inputs);
    j["primes"] = out.primes;
    j["counts"] = out.counts;
    j["interpolant"] = cb::poly_to_json(out.poly);
    j["predicted_degree"] = out.predicted_degree;
    j["predicted_leading"] = std::to_string(out.predicted_leading);
    j["degree"] = out.poly.degree();
    j["leading"] = cb::rational_to_string(out.poly.leading());
    for (auto& [key, value] : extras.items()) j[key] = value;
    j["pass"] = out.pass;
    emit(j);
    return out.pass ? kExitPass : kExitMismatch;
}

void require_samples(std::size_t n_primes, int predicted_degree) {
    const std::size_t need =
        static_cast<std::size_t>(std::max(2, std::max(0, predicted_degree) + 2));
    if (n_primes < need)
        throw std::invalid_argument("insufficient samples: need at least " +
                                    std::to_string(need) + " primes for degree " +
                                    std::to_string(predicted_degree));
}

int run_hall_check(const CheckOpts& o) {
    const auto mu1 = parse_partition(o.a, "mu1");
    const auto mu2 = parse_partition(o.b, "mu2");
    const auto lambda = parse_partition(o.c, "lambda");
    if (cb::weight_sum(mu1) + cb::weight_sum(mu2) != cb::weight_sum(lambda))
        throw std::invalid_argument("size mismatch: |mu1| + |mu2| must equal |lambda|");
    CheckOutcome out;
    out.primes = parse_primes(o.primes);
    const int dim = cb::spaltenstein_dim({mu1, mu2}, lambda);
    const long long lr = cb::lr_coefficient(mu1, mu2, lambda, o.n);
    out.predicted_degree = lr > 0 ? dim : -1;
    out.predicted_leading = lr;
    require_samples(out.primes.size(), out.predicted_degree);
    const cb::ExecConfig cfg = exec_config(o);
    std::vector<std::pair<int, long long>> samples;
    for (int p : out.primes) {
        out.counts.push_back(cb::count_spaltenstein({mu1, mu2}, lambda, p, cfg));
        samples.emplace_back(p, out.counts.back());
    }
    out.poly = cb::interpolate(samples);
    out.pass = out.poly.degree() == out.predicted_degree && out.poly.leading() == lr;
    cb::OrderedJson inputs;
    inputs["mu1"] = cb::format_weight(mu1);
    inputs["mu2"] = cb::format_weight(mu2);
    inputs["lambda"] = cb::format_weight(lambda);
    inputs["n"] = o.n;
    const std::string variety = "S_2((" + cb::format_weight(mu1) + "),(" +
                                cb::format_weight(mu2) + ");" + cb::format_weight(lambda) + ")";
    return finish_check("hall-check", variety, std::move(inputs), std::move(out));
}

int run_mflag_check(const CheckOpts& o) {
    const cb::Weight v = cb::parse_weight(o.a);
    const auto lambda = parse_partition(o.b, "lambda");
    if (v.empty()) throw std::invalid_argument("step dimensions must be nonempty");
    if (cb::weight_sum(v) != cb::weight_sum(lambda))
        throw std::invalid_argument("size mismatch: |v| must equal |lambda|");
    const int n_steps = static_cast<int>(v.size());
    CheckOutcome out;
    out.primes = parse_primes(o.primes);
    const int dim = cb::m_dim(v, lambda);
    const auto chi = cb::character(cb::crystal_of(lambda, n_steps));
    const auto it = chi.find(v);
    const long long multiplicity = it == chi.end() ? 0 : it->second;
    out.predicted_degree = multiplicity > 0 ? dim : -1;
    out.predicted_leading = multiplicity;
    require_samples(out.primes.size(), out.predicted_degree);
    const cb::ExecConfig cfg = exec_config(o);
    std::vector<std::pair<int, long long>> samples;
    for (int p : out.primes) {
        out.counts.push_back(cb::count_mflags(v, lambda, p, cfg));
        samples.emplace_back(p, out.counts.back());
    }
    out.poly = cb::interpolate(samples);
    out.pass =
        out.poly.degree() == out.predicted_degree && out.poly.leading() == multiplicity;
    cb::OrderedJson inputs;
    inputs["v"] = cb::format_weight(v);
    inputs["lambda"] = cb::format_weight(lambda);
    const std::string variety =
        "M_" + std::to_string(n_steps) + "(" + cb::format_weight(v) + ";" +
        cb::format_weight(lambda) + ")";
    return finish_check("mflag-check", variety, std::move(inputs), std::move(out));
}

int run_tensor_check(const CheckOpts& o) {
    const cb::Weight v = cb::parse_weight(o.a);
    const auto mu1 = parse_partition(o.b, "mu1");
    const auto mu2 = parse_partition(o.c, "mu2");
    if (v.empty()) throw std::invalid_argument("step dimensions must be nonempty");
    const int total = cb::weight_sum(mu1) + cb::weight_sum(mu2);
    if (cb::weight_sum(v) != total)
        throw std::invalid_argument("size mismatch: |v| must equal |mu1| + |mu2|");
    const int n_steps = static_cast<int>(v.size());
    CheckOutcome out;
    out.primes = parse_primes(o.primes);
    const int dim = cb::t_dim(v, mu1, mu2);
    const auto chi = cb::character(
        cb::tensor(cb::crystal_of(mu1, n_steps), cb::crystal_of(mu2, n_steps)));
    const auto it = chi.find(v);
    const long long purity = it == chi.end() ? 0 : it->second;
    out.predicted_degree = purity > 0 ? dim : -1;
    out.predicted_leading = purity;
    require_samples(out.primes.size(), out.predicted_degree);
    const cb::ExecConfig cfg = exec_config(o);
    std::vector<std::pair<int, long long>> samples;
    std::vector<bool> stratified_match;
    for (int p : out.primes) {
        const long long direct = cb::count_tensor_variety(v, mu1, mu2, p, cfg);
        out.counts.push_back(direct);
        samples.emplace_back(p, direct);
        // Stratify by the Jordan type of the nilpotent: each stratum
        // contributes orbit size times subspace count times flag count.
        long long stratified = 0;
        for (const auto& lambda : cb::enumerate_partitions(std::max(total, 1), total))
            stratified += cb::count_nilpotent_orbit(lambda, p, cfg) *
                          cb::count_spaltenstein({mu1, mu2}, lambda, p, cfg) *
                          cb::count_mflags(v, lambda, p, cfg);
        stratified_match.push_back(stratified == direct);
    }
    out.poly = cb::interpolate(samples);
    bool all_match = true;
    for (bool match : stratified_match) all_match = all_match && match;
    out.pass = all_match && out.poly.degree() == out.predicted_degree &&
               out.poly.leading() == purity;
    cb::OrderedJson inputs;
    inputs["v"] = cb::format_weight(v);
    inputs["mu1"] = cb::format_weight(mu1);
    inputs["mu2"] = cb::format_weight(mu2);
    const std::string variety = "T_" + std::to_string(n_steps) + "(" + cb::format_weight(v) +
                                ";(" + cb::format_weight(mu1) + "),(" +
                                cb::format_weight(mu2) + "))";
    cb::OrderedJson extras;
    extras["stratified_match"] = stratified_match;
    return finish_check("tensor-check", variety, std::move(inputs), std::move(out),
                        std::move(extras));
}

int run_orbit_check(const CheckOpts& o) {
    const auto lambda = parse_partition(o.a, "lambda");
    const int n = cb::weight_sum(lambda);
    CheckOutcome out;
    out.primes = parse_primes(o.primes);
    out.predicted_degree = cb::orbit_dim(lambda);
    out.predicted_leading = 1;
    require_samples(out.primes.size(), out.predicted_degree);
    const cb::ExecConfig cfg = exec_config(o);
    std::vector<std::pair<int, long long>> samples;
    std::vector<std::string> methods;
    for (int p : out.primes) {
        const bool sweepable = n <= 3 || (n == 4 && p == 2);
        const long long count = sweepable
                                    ? cb::count_nilpotent_orbit(lambda, p, cfg)
                                    : cb::count_nilpotent_orbit_stratified(lambda, p, cfg);
        methods.push_back(sweepable ? "sweep" : "stratified");
        out.counts.push_back(count);
        samples.emplace_back(p, count);
    }
    out.poly = cb::interpolate(samples);
    out.pass = out.poly.degree() == out.predicted_degree && out.poly.leading() == 1;
    cb::OrderedJson inputs;
    inputs["lambda"] = cb::format_weight(lambda);
    cb::OrderedJson extras;
    extras["methods"] = methods;
    return finish_check("orbit-check", "O_(" + cb::format_weight(lambda) + ")",
                        std::move(inputs), std::move(out), std::move(extras));
}

void add_check_flags(CLI::App* cmd, const std::shared_ptr<CheckOpts>& opts) {
    cmd->add_option("--primes", opts->primes, "comma-separated sample primes")->required();
    cmd->add_option("--jobs", opts->jobs, "worker threads for the enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", opts->budget, "enumeration budget in field operations")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    long long default_budget = 0;
    try {
        default_budget = resolve_default_budget();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Crystal combinatorics with finite-field verification"};
    app.require_subcommand(1);
    std::function<int()> action;

    const auto lr_opts = std::make_shared<LrOpts>();
    auto* lr_cmd = app.add_subcommand("lr", "Multiplicity of a highest weight in a product");
    lr_cmd->add_option("mu1", lr_opts->mu1, "first factor partition")->required();
    lr_cmd->add_option("mu2", lr_opts->mu2, "second factor partition")->required();
    lr_cmd->add_option("lambda", lr_opts->lambda, "target partition")->required();
    lr_cmd->add_option("--n", lr_opts->n, "number of letters")->required();
    lr_cmd->add_flag("--verify", lr_opts->verify, "cross-check against the polynomial oracle");
    lr_cmd->add_option("--format", lr_opts->format)->check(CLI::IsMember({"text", "json"}));
    lr_cmd->callback([lr_opts, &action]() {
        action = [lr_opts]() { return run_lr(*lr_opts); };
    });

    const auto decompose_opts = std::make_shared<DecomposeOpts>();
    auto* decompose_cmd =
        app.add_subcommand("decompose", "Decompose a product of tableau crystals");
    decompose_cmd->add_option("factors", decompose_opts->factors, "factor partitions")
        ->required()
        ->expected(-1);
    decompose_cmd->add_option("--n", decompose_opts->n, "number of letters")->required();
    decompose_cmd->add_option("--format", decompose_opts->format)
        ->check(CLI::IsMember({"text", "json"}));
    decompose_cmd->callback([decompose_opts, &action]() {
        action = [decompose_opts]() { return run_decompose(*decompose_opts); };
    });

    const auto tau2_opts = std::make_shared<Tau2Opts>();
    auto* tau2_cmd = app.add_subcommand("tau2", "Two-row labeling map on a pair of elements");
    tau2_cmd->add_option("--v1", tau2_opts->v1, "first factor element")->required();
    tau2_cmd->add_option("--w1", tau2_opts->w1, "first factor string weight")->required();
    tau2_cmd->add_option("--r1", tau2_opts->r1, "first factor string depth")->required();
    tau2_cmd->add_option("--v2", tau2_opts->v2, "second factor element")->required();
    tau2_cmd->add_option("--w2", tau2_opts->w2, "second factor string weight")->required();
    tau2_cmd->add_option("--r2", tau2_opts->r2, "second factor string depth")->required();
    tau2_cmd->add_option("--format", tau2_opts->format)->check(CLI::IsMember({"text", "json"}));
    tau2_cmd->callback([tau2_opts, &action]() {
        action = [tau2_opts]() { return run_tau2(*tau2_opts); };
    });

    const auto tau_opts = std::make_shared<TauOpts>();
    auto* tau_cmd =
        app.add_subcommand("tau", "Map every element of a two-factor product to its component");
    tau_cmd->add_option("mu1", tau_opts->mu1, "first factor partition")->required();
    tau_cmd->add_option("mu2", tau_opts->mu2, "second factor partition")->required();
    tau_cmd->add_option("--n", tau_opts->n, "number of letters")->required();
    tau_cmd->add_option("--format", tau_opts->format)->check(CLI::IsMember({"text", "json"}));
    tau_cmd->callback([tau_opts, &action]() {
        action = [tau_opts]() { return run_tau(*tau_opts); };
    });

    const auto restrict_opts = std::make_shared<RestrictOpts>();
    auto* restrict_cmd =
        app.add_subcommand("restrict", "Decompose a tableau crystal under a color subset");
    restrict_cmd->add_option("lambda", restrict_opts->lambda, "shape partition")->required();
    restrict_cmd->add_option("--n", restrict_opts->n, "number of letters")->required();
    restrict_cmd->add_option("--keep", restrict_opts->keep, "comma-separated colors to keep")
        ->required();
    restrict_cmd->add_option("--format", restrict_opts->format)
        ->check(CLI::IsMember({"text", "json"}));
    restrict_cmd->callback([restrict_opts, &action]() {
        action = [restrict_opts]() { return run_restrict(*restrict_opts); };
    });

    const auto crystal_opts = std::make_shared<CrystalOpts>();
    auto* crystal_cmd = app.add_subcommand("crystal", "Dump a tableau crystal");
    crystal_cmd->add_option("lambda", crystal_opts->lambda, "shape partition")->required();
    crystal_cmd->add_option("--n", crystal_opts->n, "number of letters")->required();
    crystal_cmd->add_option("--format", crystal_opts->format)
        ->check(CLI::IsMember({"text", "json", "dot"}));
    crystal_cmd->callback([crystal_opts, &action]() {
        action = [crystal_opts]() { return run_crystal(*crystal_opts); };
    });

    const auto schur_opts = std::make_shared<SchurOpts>();
    auto* schur_cmd = app.add_subcommand("schur", "Monomial expansion of a Schur polynomial");
    schur_cmd->add_option("lambda", schur_opts->lambda, "shape partition")->required();
    schur_cmd->add_option("--n", schur_opts->n, "number of variables")->required();
    schur_cmd->add_option("--format", schur_opts->format)
        ->check(CLI::IsMember({"text", "json"}));
    schur_cmd->callback([schur_opts, &action]() {
        action = [schur_opts]() { return run_schur(*schur_opts); };
    });

    const auto hall_opts = std::make_shared<CheckOpts>();
    hall_opts->budget = default_budget;
    auto* hall_cmd = app.add_subcommand(
        "hall-check", "Verify the invariant-subspace count against the multiplicity");
    hall_cmd->add_option("mu1", hall_opts->a, "subspace type partition")->required();
    hall_cmd->add_option("mu2", hall_opts->b, "quotient type partition")->required();
    hall_cmd->add_option("lambda", hall_opts->c, "ambient type partition")->required();
    hall_cmd->add_option("--n", hall_opts->n, "number of letters")->required();
    add_check_flags(hall_cmd, hall_opts);
    hall_cmd->callback([hall_opts, &action]() {
        action = [hall_opts]() { return run_hall_check(*hall_opts); };
    });

    const auto mflag_opts = std::make_shared<CheckOpts>();
    mflag_opts->budget = default_budget;
    auto* mflag_cmd = app.add_subcommand(
        "mflag-check", "Verify the flag count against dimension and weight multiplicity");
    mflag_cmd->add_option("v", mflag_opts->a, "flag step dimensions")->required();
    mflag_cmd->add_option("lambda", mflag_opts->b, "nilpotent type partition")->required();
    add_check_flags(mflag_cmd, mflag_opts);
    mflag_cmd->callback([mflag_opts, &action]() {
        action = [mflag_opts]() { return run_mflag_check(*mflag_opts); };
    });

    const auto tensor_opts = std::make_shared<CheckOpts>();
    tensor_opts->budget = default_budget;
    auto* tensor_cmd = app.add_subcommand(
        "tensor-check", "Verify the triple-variety count and its stratification");
    tensor_cmd->add_option("v", tensor_opts->a, "flag step dimensions")->required();
    tensor_cmd->add_option("mu1", tensor_opts->b, "subspace type partition")->required();
    tensor_cmd->add_option("mu2", tensor_opts->c, "quotient type partition")->required();
    add_check_flags(tensor_cmd, tensor_opts);
    tensor_cmd->callback([tensor_opts, &action]() {
        action = [tensor_opts]() { return run_tensor_check(*tensor_opts); };
    });

    const auto orbit_opts = std::make_shared<CheckOpts>();
    orbit_opts->budget = default_budget;
    auto* orbit_cmd =
        app.add_subcommand("orbit-check", "Verify nilpotent orbit counts against the dimension");
    orbit_cmd->add_option("lambda", orbit_opts->a, "orbit type partition")->required();
    add_check_flags(orbit_cmd, orbit_opts);
    orbit_cmd->callback([orbit_opts, &action]() {
        action = [orbit_opts]() { return run_orbit_check(*orbit_opts); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        return action();
    } catch (const cb::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
