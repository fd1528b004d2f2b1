#include "gendet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "gendet/determinant.hpp"
#include "gendet/errors.hpp"
#include "gendet/generalized.hpp"
#include "gendet/scalar.hpp"

namespace gendet::bench {

std::vector<BenchShape> parse_shapes(const std::string& text) {
    std::vector<BenchShape> shapes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos)
            throw ParseError("shape '" + item + "' is not of the form MxN");
        int m = 0;
        int n = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(item.substr(0, x), &used);
            if (used != x) throw std::invalid_argument(item);
            const std::string rest = item.substr(x + 1);
            n = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("shape '" + item + "' is not of the form MxN");
        }
        if (m < 1 || n < 1 || m < n)
            throw DimensionError("benchmark shape " + std::to_string(m) + "x" +
                                 std::to_string(n) + " must be tall (m >= n >= 1)");
        shapes.push_back({m, n});
    }
    if (shapes.empty()) throw ParseError("no benchmark shapes given");
    return shapes;
}

namespace {

// Falling factorial m(m-1)...(m-n+1), capped: the recursive gdet walks
// this many paths, so the comparison only runs when it is desk-scale.
constexpr std::uint64_t kRecursionPathCap = 1'000'000;

std::uint64_t falling_factorial_capped(int m, int n) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        v *= static_cast<std::uint64_t>(m - i);
        if (v > kRecursionPathCap) return kRecursionPathCap + 1;
    }
    return v;
}

Eigen::MatrixXd random_float_matrix(int m, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
    return a;
}

MatrixXq random_exact_matrix(int m, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-9, 9);
    MatrixXq a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Rational(dist(rng));
    return a;
}

// One warm-up pass, then the median of `reps` timed passes.
template <typename F>
double median_ms(int reps, F&& op) {
    op();
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        op();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return 0.5 * (samples[mid - 1] + samples[mid]);
}

template <typename S>
BenchRow bench_shape(const BenchShape& shape, const MatrixX<S>& a, const BenchOptions& options) {
    BenchRow row;
    row.rows = shape.rows;
    row.cols = shape.cols;
    row.minor_count = binomial(shape.rows, shape.cols);
    row.enumeration_skipped = row.minor_count > options.max_minors;

    // Gram path: detl_gram for doubles, det_exact(A^T A) for rationals.
    S gram_square{0};
    if constexpr (is_exact_v<S>) {
        row.detl_gram_ms = median_ms(options.repetitions, [&] {
            const MatrixX<S> g = a.transpose() * a;
            gram_square = det_exact(g);
        });
        row.detl_gram_value = std::sqrt(to_double(gram_square));
    } else {
        double gram_value = 0.0;
        row.detl_gram_ms = median_ms(options.repetitions,
                                     [&] { gram_value = detl_gram(a, options.tolerance); });
        row.detl_gram_value = gram_value;
    }

    if (!row.enumeration_skipped) {
        S minor_square{0};
        std::uint64_t visited = 0;
        row.detl_minor_ms = median_ms(options.repetitions, [&] {
            minor_square = detl_squared(a, options.max_minors, visited);
        });
        row.minors_visited = visited;
        row.detl_minor_value = std::sqrt(to_double(minor_square));

        if constexpr (is_exact_v<S>) {
            row.detl_agree = minor_square == gram_square;
            row.detl_rel_diff = 0.0;
        } else {
            const double scale = std::max({std::abs(row.detl_minor_value),
                                           std::abs(row.detl_gram_value), 1e-300});
            row.detl_rel_diff = std::abs(row.detl_minor_value - row.detl_gram_value) / scale;
            row.detl_agree = row.detl_rel_diff <= options.tolerance;
        }

        row.gdet_compared = falling_factorial_capped(shape.rows, shape.cols) <= kRecursionPathCap;
        if (row.gdet_compared) {
            S closed{0};
            S recursive{0};
            row.gdet_closed_ms =
                median_ms(options.repetitions, [&] { closed = gdet(a, options.max_minors); });
            row.gdet_recursive_ms =
                median_ms(options.repetitions, [&] { recursive = gdet_recursive(a); });
            if constexpr (is_exact_v<S>) {
                row.gdet_agree = closed == recursive;
            } else {
                const double c = to_double(closed);
                const double r = to_double(recursive);
                const double scale = std::max({std::abs(c), std::abs(r), 1e-300});
                row.gdet_agree = std::abs(c - r) / scale <= options.tolerance;
            }
        }
    }
    return row;
}

} // namespace

BenchReport run_benchmark(const BenchOptions& options) {
    if (options.repetitions < 1) throw DimensionError("benchmark needs at least 1 repetition");
    if (options.shapes.empty()) throw DimensionError("benchmark needs at least one shape");

    BenchReport report;
    report.domain = options.exact ? "exact" : "float";
    report.repetitions = options.repetitions;
    report.max_minors = options.max_minors;
    report.tolerance = options.tolerance;
    report.seed = options.seed;

    std::mt19937_64 rng(options.seed);
    for (const BenchShape& shape : options.shapes) {
        if (options.exact) {
            const MatrixXq a = random_exact_matrix(shape.rows, shape.cols, rng);
            report.rows.push_back(bench_shape(shape, a, options));
        } else {
            const Eigen::MatrixXd a = random_float_matrix(shape.rows, shape.cols, rng);
            report.rows.push_back(bench_shape(shape, a, options));
        }
    }
    return report;
}

nlohmann::json report_to_json(const BenchReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& r : report.rows) {
        rows.push_back({{"rows", r.rows},
                        {"cols", r.cols},
                        {"minor_count", r.minor_count},
                        {"enumeration_skipped", r.enumeration_skipped},
                        {"minors_visited", r.minors_visited},
                        {"detl_minor_ms", r.detl_minor_ms},
                        {"detl_gram_ms", r.detl_gram_ms},
                        {"detl_minor_value", r.detl_minor_value},
                        {"detl_gram_value", r.detl_gram_value},
                        {"detl_agree", r.detl_agree},
                        {"detl_rel_diff", r.detl_rel_diff},
                        {"gdet_compared", r.gdet_compared},
                        {"gdet_closed_ms", r.gdet_closed_ms},
                        {"gdet_recursive_ms", r.gdet_recursive_ms},
                        {"gdet_agree", r.gdet_agree}});
    }
    return nlohmann::json{{"domain", report.domain},     {"repetitions", report.repetitions},
                          {"max_minors", report.max_minors}, {"tolerance", report.tolerance},
                          {"seed", report.seed},         {"rows", std::move(rows)}};
}

BenchReport report_from_json(const nlohmann::json& j) {
    try {
        BenchReport report;
        report.domain = j.at("domain").get<std::string>();
        report.repetitions = j.at("repetitions").get<int>();
        report.max_minors = j.at("max_minors").get<std::uint64_t>();
        report.tolerance = j.at("tolerance").get<double>();
        report.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& r : j.at("rows")) {
            BenchRow row;
            row.rows = r.at("rows").get<int>();
            row.cols = r.at("cols").get<int>();
            row.minor_count = r.at("minor_count").get<std::uint64_t>();
            row.enumeration_skipped = r.at("enumeration_skipped").get<bool>();
            row.minors_visited = r.at("minors_visited").get<std::uint64_t>();
            row.detl_minor_ms = r.at("detl_minor_ms").get<double>();
            row.detl_gram_ms = r.at("detl_gram_ms").get<double>();
            row.detl_minor_value = r.at("detl_minor_value").get<double>();
            row.detl_gram_value = r.at("detl_gram_value").get<double>();
            row.detl_agree = r.at("detl_agree").get<bool>();
            row.detl_rel_diff = r.at("detl_rel_diff").get<double>();
            row.gdet_compared = r.at("gdet_compared").get<bool>();
            row.gdet_closed_ms = r.at("gdet_closed_ms").get<double>();
            row.gdet_recursive_ms = r.at("gdet_recursive_ms").get<double>();
            row.gdet_agree = r.at("gdet_agree").get<bool>();
            report.rows.push_back(row);
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid benchmark report JSON: ") + e.what());
    }
}

namespace {

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", ms);
    return buf;
}

std::string fmt_count(std::uint64_t n) {
    if (n == kBinomialSaturated) return ">2^64";
    return std::to_string(n);
}

} // namespace

std::string render_table(const BenchReport& report) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"shape", "minors", "detl minor (ms)", "detl gram (ms)", "detl agree",
                     "gdet closed (ms)", "gdet rec (ms)", "gdet agree"});
    for (const BenchRow& r : report.rows) {
        std::vector<std::string> line;
        line.push_back(std::to_string(r.rows) + "x" + std::to_string(r.cols));
        line.push_back(fmt_count(r.minor_count));
        if (r.enumeration_skipped) {
            line.push_back("skipped (cap)");
        } else {
            line.push_back(fmt_ms(r.detl_minor_ms));
        }
        line.push_back(fmt_ms(r.detl_gram_ms));
        line.push_back(r.enumeration_skipped ? "-" : (r.detl_agree ? "yes" : "NO"));
        if (r.gdet_compared) {
            line.push_back(fmt_ms(r.gdet_closed_ms));
            line.push_back(fmt_ms(r.gdet_recursive_ms));
            line.push_back(r.gdet_agree ? "yes" : "NO");
        } else {
            line.push_back("-");
            line.push_back("-");
            line.push_back("-");
        }
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            widths[c] = std::max(widths[c], line[c].size());

    std::string out;
    out += "domain: " + report.domain + ", repetitions: " + std::to_string(report.repetitions) +
           ", cap: " + std::to_string(report.max_minors) + ", seed: " +
           std::to_string(report.seed) + "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out += line[c];
            if (c + 1 < line.size()) out.append(widths[c] - line[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

} // namespace gendet::bench
