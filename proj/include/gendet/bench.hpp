#pragma once

/*
 * Strategy benchmark: minor enumeration vs the Gram path for detl, and
 * closed-form vs recursive evaluation for gdet.
 *
 * Each configured shape gets one random matrix; each timed operation runs
 * one warm-up pass and then `repetitions` measured passes, reporting the
 * median. Shapes whose C(m,n) exceeds the minor cap keep the Gram timing
 * and mark the enumeration side skipped — that is the expected outcome for
 * something like 2000x10, not an error.
 *
 * Agreement is checked within one scalar domain only: bit-exact for
 * rationals (detl^2 against det_exact(A^T A)), relative tolerance for
 * doubles (detl against detl_gram).
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gendet/minors.hpp"

namespace gendet::bench {

struct BenchShape {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const BenchShape&, const BenchShape&) = default;
};

/// Parses "15x3,20x3,2000x10" (the CLI --shapes grammar).
std::vector<BenchShape> parse_shapes(const std::string& text);

struct BenchOptions {
    std::vector<BenchShape> shapes;
    bool exact = false; // scalar domain: Rational when true, double otherwise
    int repetitions = 5;
    std::uint64_t max_minors = kDefaultMinorCap;
    double tolerance = 1e-9; // float-domain agreement threshold
    std::uint64_t seed = 1;
};

struct BenchRow {
    int rows = 0;
    int cols = 0;
    std::uint64_t minor_count = 0;   // C(m,n); UINT64_MAX marks 64-bit overflow
    bool enumeration_skipped = false;
    std::uint64_t minors_visited = 0; // counter from the enumeration pass

    double detl_minor_ms = 0.0; // medians; 0 when the path was skipped
    double detl_gram_ms = 0.0;
    double detl_minor_value = 0.0; // double views of the results
    double detl_gram_value = 0.0;
    bool detl_agree = false;
    double detl_rel_diff = 0.0;

    bool gdet_compared = false; // recursion only runs at desk scale
    double gdet_closed_ms = 0.0;
    double gdet_recursive_ms = 0.0;
    bool gdet_agree = false;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
    std::string domain; // "exact" | "float"
    int repetitions = 0;
    std::uint64_t max_minors = 0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

BenchReport run_benchmark(const BenchOptions& options);

nlohmann::json report_to_json(const BenchReport& report);
BenchReport report_from_json(const nlohmann::json& j);

/// Aligned text table, one line per shape.
std::string render_table(const BenchReport& report);

} // namespace gendet::bench
