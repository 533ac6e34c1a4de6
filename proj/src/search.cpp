#include "jk/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "jk/rng.hpp"
#include "jk/spectra.hpp"

namespace jk {

using nlohmann::json;

void SearchConfig::validate() const {
    if (trials < 1) throw BadConfig("trials must be >= 1");
    if (n_min < 2 || n_max < n_min) throw BadConfig("empty dimension range");
    if (rank_min < 1 || rank_max < rank_min) throw BadConfig("empty rank range");
    if (rank_max > n_max) throw BadConfig("rank exceeds dimension");
    if (threads < 1) throw BadConfig("threads must be >= 1");
    if (skew) {
        bool any_even = false;
        for (int k = rank_min; k <= rank_max; ++k)
            if (k % 2 == 0) any_even = true;
        if (!any_even) throw BadConfig("skew rank range must contain an even rank");
    }
    for (const auto& p : properties)
        if (p != "weak" && p != "interlacing" && p != "strong")
            throw BadConfig("unknown property: " + p);
    if (properties.empty()) throw BadConfig("no properties requested");
    if (conjecture_mode && skew) throw BadConfig("conjecture mode is for symmetric pairs");
}

json TrialRecord::to_json() const {
    return json{{"trial_index", trial_index},
                {"generator", json{{"n", n},
                                   {"rank", rank},
                                   {"symmetry_class", skew ? "Skew" : "Symmetric"},
                                   {"conjecture", conjecture},
                                   {"seed", seed}}},
                {"verdicts", json{{"weak", weak_holds},
                                  {"interlacing", interlacing_holds},
                                  {"strong", strong_holds}}},
                {"min_parity", min_parity},
                {"max_parity", max_parity},
                {"margin_min", margin_min},
                {"margin_max", margin_max},
                {"violation", violation},
                {"conjecture_violation", conjecture_violation},
                {"wall_ms", wall_ms}};
}

json SearchSummary::to_json(const SearchConfig& cfg) const {
    return json{{"schema_version", 1},
                {"trials", trials},
                {"seed", cfg.seed},
                {"n_range", json::array({cfg.n_min, cfg.n_max})},
                {"rank_range", json::array({cfg.rank_min, cfg.rank_max})},
                {"symmetry_class", cfg.skew ? "Skew" : "Symmetric"},
                {"conjecture_mode", cfg.conjecture_mode},
                {"violations", json{{"weak", weak_violations},
                                    {"interlacing", interlacing_violations},
                                    {"strong", strong_violations},
                                    {"conjecture", conjecture_violations}}}};
}

namespace {

DenseMatrix random_pd(int n, uint64_t seed) {
    Rng rng(seed);
    DenseMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = static_cast<double>(rng.uniform_int(-9, 9));
    DenseMatrix ggt = g * g.transpose();
    const double delta = 1e-3 * ggt.frobenius_norm();
    for (int i = 0; i < n; ++i) ggt(i, i) += delta;
    return ggt;
}

MatrixPair make_pair(int n, int rank, bool skew, bool conjecture, uint64_t fork_seed) {
    if (conjecture) return {random_pd(n, fork_seed), random_pd(n, fork_seed ^ 0x5bd1e995ULL)};
    return random_pair(n, rank, skew, fork_seed);
}

struct TrialParams {
    int n, rank;
};

TrialParams draw_params(const SearchConfig& cfg, Rng& rng) {
    TrialParams p;
    p.n = static_cast<int>(rng.uniform_int(cfg.n_min, cfg.n_max));
    int klo = std::max(cfg.rank_min, 1), khi = std::min(cfg.rank_max, p.n);
    if (cfg.skew) {
        // even ranks only; the validated range always contains one
        klo += klo % 2;
        khi -= khi % 2;
        if (klo > khi) klo = khi = 2;
        p.rank = static_cast<int>(2 * rng.uniform_int(klo / 2, khi / 2));
    } else {
        if (klo > khi) klo = khi;
        p.rank = static_cast<int>(rng.uniform_int(klo, khi));
    }
    return p;
}

bool wants(const SearchConfig& cfg, const char* prop) {
    return std::find(cfg.properties.begin(), cfg.properties.end(), prop) != cfg.properties.end();
}

TrialRecord run_trial(const SearchConfig& cfg, int index) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng = Rng::fork(cfg.seed, static_cast<uint64_t>(index));
    const TrialParams params = draw_params(cfg, rng);
    const uint64_t fork_seed = rng.next();

    TrialRecord rec;
    rec.trial_index = index;
    rec.n = params.n;
    rec.rank = cfg.conjecture_mode ? params.n : params.rank;
    rec.skew = cfg.skew;
    rec.conjecture = cfg.conjecture_mode;
    rec.seed = fork_seed;

    const auto [a, b] = make_pair(params.n, rec.rank, cfg.skew, cfg.conjecture_mode, fork_seed);
    const SpectrumSplit split = spectrum_split(a, b);
    const double tol = interlace_tol(a, b, cfg.tol_factor);
    const InterlaceReport report = check_all(split, tol);

    rec.weak_holds = report.weak.holds;
    rec.interlacing_holds = report.full.holds;
    rec.strong_holds = report.strong.holds;
    rec.margin_min = report.weak.rhs_min_odd - report.weak.lhs_min_even;
    rec.margin_max = report.weak.rhs_max_even - report.weak.lhs_max_odd;
    rec.min_parity = report.weak.lhs_min_even <= report.weak.rhs_min_odd ? "even" : "odd";
    rec.max_parity = report.weak.rhs_max_even >= report.weak.lhs_max_odd ? "even" : "odd";

    const bool suspect = (wants(cfg, "weak") && !rec.weak_holds) ||
                         (wants(cfg, "interlacing") && !rec.interlacing_holds) ||
                         (wants(cfg, "strong") && !rec.strong_holds);
    if (suspect) {
        // confirm at a tighter tolerance before recording a violation
        const InterlaceReport strict = check_all(split, tol / 10);
        rec.weak_holds = rec.weak_holds || strict.weak.holds;
        rec.interlacing_holds = rec.interlacing_holds || strict.full.holds;
        rec.strong_holds = rec.strong_holds || strict.strong.holds;
        rec.violation = (wants(cfg, "weak") && !strict.weak.holds) ||
                        (wants(cfg, "interlacing") && !strict.full.holds) ||
                        (wants(cfg, "strong") && !strict.strong.holds);
    }
    if (cfg.conjecture_mode && rec.min_parity == "odd" && rec.margin_min < -tol)
        rec.conjecture_violation = true;

    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace

MatrixPair replay_trial(const TrialRecord& rec) {
    return make_pair(rec.n, rec.rank, rec.skew, rec.conjecture, rec.seed);
}

SearchResult run_search(const SearchConfig& cfg) {
    cfg.validate();
    SearchResult out;
    out.records.resize(static_cast<size_t>(cfg.trials));

    if (cfg.threads <= 1) {
        for (int i = 0; i < cfg.trials; ++i) out.records[static_cast<size_t>(i)] = run_trial(cfg, i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1))
                out.records[static_cast<size_t>(i)] = run_trial(cfg, i);
        };
        std::vector<std::thread> pool;
        const int nthreads = std::min(cfg.threads, cfg.trials);
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    out.summary.trials = cfg.trials;
    for (const auto& r : out.records) {
        if (wants(cfg, "weak") && !r.weak_holds) ++out.summary.weak_violations;
        if (wants(cfg, "interlacing") && !r.interlacing_holds) ++out.summary.interlacing_violations;
        if (wants(cfg, "strong") && !r.strong_holds) ++out.summary.strong_violations;
        if (r.conjecture_violation) ++out.summary.conjecture_violations;
    }
    return out;
}

std::string records_to_jsonl(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) out << r.to_json().dump() << "\n";
    return out.str();
}

}  // namespace jk
