// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any fail.
//
// Usage: acceptance [--seed S] [--workers W] [--only N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../stats.hpp"
#include "rrt/centrality.hpp"
#include "rrt/cli.hpp"
#include "rrt/experiments.hpp"
#include "rrt/oracle.hpp"
#include "rrt/parallel.hpp"
#include "rrt/urns.hpp"

using namespace rrt;

namespace {

std::uint64_t g_seed = 20240611;
unsigned g_workers = 1;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

struct Estimate {
    double value = 0;
    double se = 0;
};

Estimate proportion(std::uint64_t hits, std::uint64_t reps) {
    const double p = static_cast<double>(hits) / static_cast<double>(reps);
    return {p, reps > 1 ? std::sqrt(p * (1 - p) / static_cast<double>(reps - 1)) : 0.0};
}

Estimate mean_of(const std::vector<double>& xs) {
    double sum = 0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()))};
}

std::string show(Estimate e) { return fmt("%.5f (SE %.5f)", e.value, e.se); }

std::size_t measure_index(const RankSample& s, MeasureKind kind) {
    for (std::size_t m = 0; m < s.measures().size(); ++m) {
        if (s.measures()[m].kind == kind) return m;
    }
    throw std::logic_error("measure not simulated");
}

std::vector<double> root_ranks(const RankSample& s, MeasureKind kind) {
    const auto m = measure_index(s, kind);
    std::vector<double> out(s.reps());
    for (std::uint64_t r = 0; r < s.reps(); ++r) out[r] = static_cast<double>(s.root_rank(r, m));
    return out;
}

std::vector<double> center_indices(const RankSample& s, MeasureKind kind) {
    const auto m = measure_index(s, kind);
    std::vector<double> out(s.reps());
    for (std::uint64_t r = 0; r < s.reps(); ++r) out[r] = static_cast<double>(s.center_index(r, m));
    return out;
}

template <class Pred>
Estimate fraction(const std::vector<double>& xs, Pred pred) {
    std::uint64_t hits = 0;
    for (double x : xs) hits += pred(x) ? 1 : 0;
    return proportion(hits, xs.size());
}

// Sorted copy for O(log reps) tail queries.
struct Tail {
    std::vector<double> sorted;
    explicit Tail(std::vector<double> xs) : sorted(std::move(xs)) { std::sort(sorted.begin(), sorted.end()); }
    std::uint64_t above(double x) const {
        return static_cast<std::uint64_t>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x));
    }
    Estimate p_above(double x) const { return proportion(above(x), sorted.size()); }
};

std::string measure_label(MeasureKind kind) { return Measure{kind}.name(); }

class Samples {
public:
    const RankSample& at(std::uint64_t n) {
        for (auto& s : cache_) {
            if (s.n() == n) return s;
        }
        const std::uint64_t reps = n == 10'000 ? 50'000 : 10'000;
        const auto start = std::chrono::steady_clock::now();
        cache_.push_back(simulate_ranks(n, standard_measures(), reps, g_seed, g_workers));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("        (simulated %llu trees at n=%llu in %.1fs)\n", static_cast<unsigned long long>(reps),
                    static_cast<unsigned long long>(n), secs);
        std::fflush(stdout);
        return cache_.back();
    }

private:
    std::vector<RankSample> cache_;
};

Samples g_samples;

// 1. Jordan, closeness and rumor P(R_n = 1) at n = 10^4 equal 1 - ln 2 within 0.01.
Outcome centroid_root_probability() {
    const auto& s = g_samples.at(10'000);
    const double target = 1 - std::log(2.0);
    bool ok = true;
    std::string detail = fmt("target %.5f;", target);
    for (auto kind : {MeasureKind::Jordan, MeasureKind::Closeness, MeasureKind::Rumor}) {
        const auto e = fraction(root_ranks(s, kind), [](double r) { return r == 1; });
        ok = ok && std::abs(e.value - target) <= 0.01;
        detail += " " + measure_label(kind) + " " + show(e);
    }
    return {ok, detail + fmt(", reps %llu", static_cast<unsigned long long>(s.reps()))};
}

// 2. Betweenness P(R_n = 1) at n = 10^4 is at least 0.0708 - 3 SE.
Outcome betweenness_root_probability() {
    const auto& s = g_samples.at(10'000);
    const auto e = fraction(root_ranks(s, MeasureKind::BetweennessSq), [](double r) { return r == 1; });
    const double bound = 3 - std::sqrt(5.0) - std::log(2.0);
    return {e.value >= bound - 3 * e.se, "estimate " + show(e) + fmt(", lower bound %.6f", bound)};
}

// 3. Centroid E[I_n] in [2.3, 2.6] at n = 10^4.
Outcome centroid_index() {
    const auto& s = g_samples.at(10'000);
    bool ok = true;
    std::string detail;
    for (auto kind : {MeasureKind::Jordan, MeasureKind::Closeness, MeasureKind::Rumor}) {
        const auto e = mean_of(center_indices(s, kind));
        ok = ok && e.value >= 2.3 && e.value <= 2.6;
        detail += measure_label(kind) + " " + show(e) + " ";
    }
    return {ok, detail + "band [2.3, 2.6]"};
}

// 4. Betweenness E[I_n] < 20 and P(I_n >= k) + 3 SE below 16(k/3+1)(3/4)^k for k in {5, 10, 15}.
Outcome betweenness_index() {
    const auto& s = g_samples.at(10'000);
    const auto index = center_indices(s, MeasureKind::BetweennessSq);
    const auto mean = mean_of(index);
    bool ok = mean.value < 20;
    std::string detail = "E[I] " + show(mean);
    for (std::uint64_t k : {5, 10, 15}) {
        const auto e = fraction(index, [&](double i) { return i >= static_cast<double>(k); });
        const double envelope = betweenness_index_envelope(k);
        ok = ok && e.value + 3 * e.se < envelope;
        detail += fmt("; P(I>=%llu) %.5f+3SE=%.5f vs %.4f", static_cast<unsigned long long>(k), e.value,
                      e.value + 3 * e.se, envelope);
    }
    return {ok, detail};
}

// 5. Jordan E[R_n]/ln n mutually within a factor 1.5 over n in {10^3, 10^4, 10^5};
//    x P(R_n > x) in [0.05, 100] for every integer x in 1..100 at n = 10^4.
Outcome jordan_rank_scaling() {
    std::vector<double> ratios;
    std::string detail = "E[R]/ln n:";
    for (std::uint64_t n : {1'000, 10'000, 100'000}) {
        const auto e = mean_of(root_ranks(g_samples.at(n), MeasureKind::Jordan));
        ratios.push_back(e.value / std::log(static_cast<double>(n)));
        detail += fmt(" n=%llu %.4f (E[R] %s)", static_cast<unsigned long long>(n), ratios.back(), show(e).c_str());
    }
    const double spread = *std::max_element(ratios.begin(), ratios.end()) /
                          *std::min_element(ratios.begin(), ratios.end());
    bool ok = spread <= 1.5;
    const Tail tail(root_ranks(g_samples.at(10'000), MeasureKind::Jordan));
    double lo = 1e300, hi = 0;
    for (int x = 1; x <= 100; ++x) {
        const double scaled = x * tail.p_above(x).value;
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    ok = ok && lo >= 0.05 && hi <= 100;
    return {ok, detail + fmt("; max/min %.3f (<= 1.5); x*P(R>x) over x=1..100 in [%.4f, %.4f]", spread, lo, hi)};
}

// 6. Rumor E[R_n] at n = 10^5 within 20% of n = 10^3; rumor tail <= Jordan tail for all x >= 10 at n = 10^4.
Outcome rumor_rank_bounded() {
    const auto small = mean_of(root_ranks(g_samples.at(1'000), MeasureKind::Rumor));
    const auto large = mean_of(root_ranks(g_samples.at(100'000), MeasureKind::Rumor));
    const double change = std::abs(large.value / small.value - 1);
    bool ok = change <= 0.2;
    const auto& s = g_samples.at(10'000);
    const Tail rumor(root_ranks(s, MeasureKind::Rumor));
    const Tail jordan(root_ranks(s, MeasureKind::Jordan));
    std::uint64_t violations = 0;
    std::uint64_t first = 0;
    for (std::uint64_t x = 10; x <= s.n(); ++x) {
        if (rumor.above(static_cast<double>(x)) > jordan.above(static_cast<double>(x))) {
            if (!violations) first = x;
            ++violations;
        }
    }
    ok = ok && violations == 0;
    return {ok, "E[R] n=1e3 " + show(small) + ", n=1e5 " + show(large) + fmt(", relative change %.3f (<= 0.2)", change) +
                    fmt("; tail violations for x in [10, n]: %llu", static_cast<unsigned long long>(violations)) +
                    (violations ? fmt(" (first x=%llu)", static_cast<unsigned long long>(first)) : std::string())};
}

// 7. Closeness E[R_n] strictly increasing and P(R_n <= 10) strictly decreasing over n in {10^3, 10^4, 10^5}.
Outcome closeness_divergence() {
    std::vector<Estimate> mean, top10;
    std::string detail;
    for (std::uint64_t n : {1'000, 10'000, 100'000}) {
        const auto ranks = root_ranks(g_samples.at(n), MeasureKind::Closeness);
        mean.push_back(mean_of(ranks));
        top10.push_back(fraction(ranks, [](double r) { return r <= 10; }));
        detail += fmt("n=%llu E[R] %s P(R<=10) %s; ", static_cast<unsigned long long>(n), show(mean.back()).c_str(),
                      show(top10.back()).c_str());
    }
    const bool ok = mean[0].value < mean[1].value && mean[1].value < mean[2].value && top10[0].value > top10[1].value &&
                    top10[1].value > top10[2].value;
    return {ok, detail};
}

// 8. Degree: P(R_n = 1) < 0.05 at 10^4; median log I_n / log n at 10^5 in [0.18, 0.38]; E[I_n] increasing in n.
Outcome degree_statistics() {
    const auto root = fraction(root_ranks(g_samples.at(10'000), MeasureKind::Degree), [](double r) { return r == 1; });
    std::vector<ResultRecord> records;
    summarize_index_tail(g_samples.at(100'000), {1}, g_seed, records);
    double median = -1, median_se = 0;
    for (const auto& r : records) {
        if (r.measure == "degree" && r.statistic == "median_log_index_ratio") {
            median = r.estimate;
            median_se = r.std_error;
        }
    }
    std::vector<Estimate> index;
    std::string detail = "P(R=1) " + show(root) + fmt("; median log I/log n %.4f (SE %.4f); E[I]:", median, median_se);
    for (std::uint64_t n : {1'000, 10'000, 100'000}) {
        index.push_back(mean_of(center_indices(g_samples.at(n), MeasureKind::Degree)));
        detail += " " + show(index.back());
    }
    const bool ok = root.value < 0.05 && median >= 0.18 && median <= 0.38 && index[0].value < index[1].value &&
                    index[1].value < index[2].value;
    return {ok, detail};
}

// 9. P(D >= 1/2) = ln 2 within 0.005 over 10^6 samples; KS(D, max subtree fraction at n = 10^5 over 10^4 trees) < 0.02.
Outcome dickman() {
    constexpr std::uint64_t kSamples = 1'000'000;
    std::vector<double> d(kSamples);
    RngStream rng(g_seed, 0xD1C);
    for (auto& x : d) x = sample_dickman(rng).value;
    const auto half = fraction(d, [](double x) { return x >= 0.5; });

    constexpr std::uint64_t kTrees = 10'000;
    constexpr std::uint64_t kN = 100'000;
    std::vector<double> fractions(kTrees);
    parallel_for(kTrees, g_workers, [&](std::uint64_t r) {
        RngStream tree_rng(g_seed ^ 0xF4AC, r);
        const auto tree = grow_urrt(kN, tree_rng);
        fractions[r] = max_subtree_fraction(tree, subtree_sizes(tree));
    });
    const double ks = rrt::testing::ks_distance(fractions, d);
    const bool ok = std::abs(half.value - std::log(2.0)) <= 0.005 && ks < 0.02;
    return {ok, "P(D>=1/2) " + show(half) + fmt(" vs ln 2 = %.5f; KS %.4f (< 0.02)", std::log(2.0), ks)};
}

// 10. All recursive trees up to n = 8 agree with the brute-force oracles.
Outcome oracle_equivalence() {
    const auto levels = verify_against_oracles(8);
    std::size_t trees = 0, bad = 0;
    for (const auto& l : levels) {
        trees += l.trees;
        bad += l.mismatches;
    }
    const bool ok = bad == 0 && levels.size() == 8 && levels.back().trees == 5040;
    return {ok, fmt("%zu trees checked (%zu at n=8), %zu mismatches", trees, levels.back().trees, bad)};
}

// 11. Structural invariants on 10^4 random trees at n = 10^3.
Outcome structural_invariants() {
    constexpr std::uint64_t kTrees = 10'000;
    constexpr std::size_t kN = 1'000;
    std::vector<std::uint8_t> fail(kTrees, 0);
    parallel_for(kTrees, g_workers, [&](std::uint64_t r) {
        RngStream rng(g_seed ^ 0x57C7, r);
        const auto t = grow_urrt(kN, rng);
        const auto s = subtree_sizes(t);
        auto tied = [&](MeasureKind kind) { return center_report(compute_profile(t, s, {kind})).tied_center_set; };
        const auto psi = jordan_scores(t, s);
        const auto close = closeness_scores(t, s);
        const auto rumor = rumor_scores(t, s);
        const auto best = tied(MeasureKind::Jordan);
        std::uint8_t bad = 0;
        if (best.size() > 2) bad |= 1;
        if (best.size() == 2 && t.parent(best[0]) != best[1] && t.parent(best[1]) != best[0]) bad |= 1;
        if (2 * psi[best[0]] > static_cast<std::int64_t>(kN)) bad |= 1;
        if (tied(MeasureKind::Closeness) != best || tied(MeasureKind::Rumor) != best) bad |= 2;
        if (rank_vertices(compute_profile(t, s, {MeasureKind::BetweennessPairs})) !=
            rank_vertices(compute_profile(t, s, {MeasureKind::BetweennessSq}))) {
            bad |= 8;
        }
        const ChildLists children(t);
        std::vector<Vertex> prev(kN + 1, kNoVertex);
        std::vector<Vertex> order{best[0]};
        prev[best[0]] = best[0];
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            auto visit = [&](Vertex w) {
                if (prev[w] != kNoVertex) return;
                prev[w] = v;
                order.push_back(w);
                if (prev[v] != v && (close[w] <= close[v] || rumor.compare(w, v) <= 0)) bad |= 4;
            };
            for (Vertex w : children.of(v)) visit(w);
            if (v != kRoot) visit(t.parent(v));
        }
        fail[r] = bad;
    });
    std::uint64_t centroid = 0, coincide = 0, monotone = 0, pairs = 0;
    for (auto f : fail) {
        centroid += f & 1 ? 1 : 0;
        coincide += f & 2 ? 1 : 0;
        monotone += f & 4 ? 1 : 0;
        pairs += f & 8 ? 1 : 0;
    }
    const bool ok = centroid + coincide + monotone + pairs == 0;
    return {ok, fmt("violations over %llu trees: centroid %llu, coincidence %llu, monotonicity %llu, "
                    "pairs-vs-squares ranking %llu",
                    static_cast<unsigned long long>(kTrees), static_cast<unsigned long long>(centroid),
                    static_cast<unsigned long long>(coincide), static_cast<unsigned long long>(monotone),
                    static_cast<unsigned long long>(pairs))};
}

// 12. Persistence at N = 10^5 over 200 trajectories: change-in-last-half below 0.05 for Jordan, rumor and
//     betweenness I_n and R_n; above 0.2 for closeness R_n and degree I_n.
Outcome persistence_separation() {
    ExperimentConfig c;
    c.experiment = ExperimentKind::Persistence;
    c.reps = 200;
    c.seed = g_seed;
    c.workers = g_workers;
    c.horizon = 100'000;
    c.checkpoints = {10'000, 100'000};
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_persistence(c).summary;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = true;
    std::string detail = fmt("stride %llu, %.1fs;", static_cast<unsigned long long>(c.effective_stride()), secs);
    for (const char* m : {"jordan", "rumor", "betweenness"}) {
        for (const char* stat : {"center_change_last_half", "rank_change_last_half"}) {
            const auto& r = result.find(m, 100'000, stat);
            ok = ok && r.estimate < 0.05;
            detail += fmt(" %s %s %.3f;", m, stat[0] == 'c' ? "I" : "R", r.estimate);
        }
    }
    const auto& close = result.find("closeness", 100'000, "rank_change_last_half");
    const auto& degree = result.find("degree", 100'000, "center_change_last_half");
    ok = ok && close.estimate > 0.2 && degree.estimate > 0.2;
    detail += fmt(" closeness R %.3f; degree I %.3f", close.estimate, degree.estimate);
    return {ok, detail};
}

// 13. Hoppe: P(leader change after t) non-increasing over t in {10^2, 10^3, 10^4} and < 0.05 at 10^4
//     (10^3 runs to 10^5 steps); Polya diagonal-hit estimates decreasing in a at x = 0.5.
Outcome urn_limits() {
    constexpr std::uint64_t kRuns = 1'000;
    constexpr std::int64_t kSteps = 100'000;
    std::vector<std::int64_t> last_change(kRuns, 0);
    parallel_for(kRuns, g_workers, [&](std::uint64_t r) {
        RngStream rng(g_seed ^ 0x40BBE, r);
        const auto run = hoppe_run(kSteps, rng, false);
        last_change[r] = run.leader_changes.empty() ? 0 : run.leader_changes.back();
    });
    std::vector<Estimate> after;
    std::string detail = "P(change after t):";
    for (std::int64_t t : {100, 1'000, 10'000}) {
        std::uint64_t hits = 0;
        for (auto c : last_change) hits += c > t ? 1 : 0;
        after.push_back(proportion(hits, kRuns));
        detail += fmt(" t=%lld %s", static_cast<long long>(t), show(after.back()).c_str());
    }
    bool ok = after[0].value >= after[1].value && after[1].value >= after[2].value && after[2].value < 0.05;

    detail += "; diagonal hit (x=0.5, horizon 1e5, 1e4 reps):";
    double previous = 2;
    for (std::int64_t a = 1; a <= 6; ++a) {
        const auto e = polya_diagonal_hit_estimate(a, 0.5, 100'000, 10'000, g_seed ^ 0xB01A, g_workers);
        const bool step_ok = previous > 0 ? e.estimate < previous : e.estimate == 0;
        ok = ok && step_ok;
        previous = e.estimate;
        detail += fmt(" a=%lld %.4f", static_cast<long long>(a), e.estimate);
    }
    return {ok, detail};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// 14. Same seed, different worker counts: byte-identical CSV.
Outcome determinism() {
    auto csv_for = [](ExperimentConfig c, unsigned workers) {
        c.workers = workers;
        std::ostringstream out;
        if (c.experiment == ExperimentKind::Persistence) {
            write_result_csv(out, run_persistence(c).summary);
        } else {
            write_result_csv(out, run_experiment(c));
        }
        return out.str();
    };
    ExperimentConfig survey;
    survey.experiment = ExperimentKind::Survey;
    survey.n_values = {1'000, 5'000};
    survey.reps = 400;
    survey.seed = g_seed;
    survey.measures.push_back({MeasureKind::BetweennessPairs});
    survey.measures.push_back({MeasureKind::BetweennessQ, 3});
    ExperimentConfig persist;
    persist.experiment = ExperimentKind::Persistence;
    persist.reps = 24;
    persist.seed = g_seed;
    persist.horizon = 4'000;
    persist.checkpoints = {1'000, 4'000};

    bool ok = true;
    for (const auto& c : {survey, persist}) {
        const auto reference = csv_for(c, 1);
        for (unsigned w : {2u, 3u, 8u}) ok = ok && csv_for(c, w) == reference;
    }

    const auto dir = std::filesystem::temp_directory_path() / ("rrt_acceptance_" + std::to_string(g_seed));
    std::filesystem::create_directories(dir);
    const auto config = dir / "tail.cfg";
    std::ofstream(config) << "experiment = rank-tail\nn = 2000\nreps = 300\nmeasures = jordan, rumor, degree\n";
    std::ostringstream sink;
    const auto seed = std::to_string(g_seed);
    for (const char* w : {"1", "8"}) {
        const auto out = (dir / (std::string("w") + w + ".csv")).string();
        ok = ok && run_cli({"experiment", "--config", config.string(), "--seed", seed, "--workers", w, "--out", out},
                           sink, sink) == kExitOk;
    }
    ok = ok && read_file(dir / "w1.csv") == read_file(dir / "w8.csv") && !read_file(dir / "w1.csv").empty();
    std::filesystem::remove_all(dir);
    return {ok, "survey, persistence and CLI rank-tail CSVs compared at 1/2/3/8 workers"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    g_workers = std::max(1u, std::thread::hardware_concurrency());
    int only = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--seed")) g_seed = std::stoull(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--workers")) g_workers = static_cast<unsigned>(std::stoul(argv[i + 1]));
        else if (!std::strcmp(argv[i], "--only")) only = std::stoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: acceptance [--seed S] [--workers W] [--only N]\n");
            return 2;
        }
    }
    std::printf("acceptance: seed %llu, %u worker(s)\n", static_cast<unsigned long long>(g_seed), g_workers);

    const std::vector<Criterion> criteria = {
        {1, "centroid root probability", centroid_root_probability},
        {2, "betweenness root probability", betweenness_root_probability},
        {3, "centroid center index", centroid_index},
        {4, "betweenness center index", betweenness_index},
        {5, "Jordan rank scaling", jordan_rank_scaling},
        {6, "rumor rank boundedness", rumor_rank_bounded},
        {7, "closeness divergence", closeness_divergence},
        {8, "degree statistics", degree_statistics},
        {9, "Dickman machinery", dickman},
        {10, "exhaustive oracle equivalence", oracle_equivalence},
        {11, "structural invariants", structural_invariants},
        {12, "persistence separation", persistence_separation},
        {13, "Hoppe and Polya urns", urn_limits},
        {14, "determinism across workers", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %02d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("acceptance: %d failed\n", failed);
    return failed ? 1 : 0;
}
