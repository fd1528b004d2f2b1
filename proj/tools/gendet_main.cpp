// gendet CLI: generalized determinants of tall matrices from the shell.
//
// Exit codes: 0 success; 1 usage or internal error; 2 dimension, parse, or
// numeric-input error; 3 inconsistent system; 4 minor cap exceeded;
// 5 rank-deficient system or degenerate direction.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gendet/gendet.hpp"

namespace {

using namespace gendet;

struct GlobalOptions {
    bool exact = false;
    std::string format = "plain";
    std::string in_format = "auto";
    double tolerance = 1e-9;
    std::uint64_t max_minors = kDefaultMinorCap;

    bool json() const { return format == "json"; }
};

template <Scalar S>
MatrixX<S> load(const std::string& path, const GlobalOptions& g) {
    return io::read_matrix_source<S>(path, io::parse_format_name(g.in_format));
}

template <Scalar S>
VectorX<S> load_vector(const std::string& path, const GlobalOptions& g, Index expected_rows) {
    const MatrixX<S> m = load<S>(path, g);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1 && m.cols() == expected_rows) return m.row(0).transpose();
    throw DimensionError("right-hand side must be a length-" + std::to_string(expected_rows) +
                         " vector (one value per CSV line), got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

// ---- command bodies --------------------------------------------------

int run_detl(const std::string& path, const GlobalOptions& g, bool force_gram) {
    if (g.exact) {
        const MatrixXq a = load<Rational>(path, g);
        Rational square;
        if (force_gram) {
            if (a.rows() < 1 || a.cols() < 1) throw DimensionError("detl: empty matrix");
            if (a.rows() < a.cols()) {
                square = Rational(0);
            } else {
                const MatrixXq gram = a.transpose() * a;
                square = det_exact(gram);
            }
        } else {
            square = detl_squared(a, g.max_minors);
        }
        const double root = std::sqrt(to_double(square));
        if (g.json())
            emit({{"detl", root}, {"detl_squared", to_string(square)}});
        else
            std::cout << format_scalar(root) << "\n";
        return 0;
    }
    const Eigen::MatrixXd a = load<double>(path, g);
    DetlOutcome outcome;
    if (force_gram) {
        if (a.rows() < 1 || a.cols() < 1) throw DimensionError("detl: empty matrix");
        outcome.path = DetlPath::Gram;
        outcome.value = a.rows() < a.cols() ? 0.0 : detl_gram(a, g.tolerance);
    } else {
        outcome = detl_adaptive(a, g.max_minors, g.tolerance);
    }
    if (g.json())
        emit({{"detl", outcome.value},
              {"path", outcome.path == DetlPath::Gram ? "gram" : "minors"}});
    else
        std::cout << format_scalar(outcome.value) << "\n";
    return 0;
}

template <Scalar S>
void print_multivector(const Multivector<S>& v, const GlobalOptions& g) {
    CombinationCursor cursor(v.ambient(), v.grade());
    if (g.json()) {
        nlohmann::json coeffs = nlohmann::json::array();
        std::uint64_t rank = 0;
        do {
            nlohmann::json blade = nlohmann::json::array();
            for (int i : cursor.current()) blade.push_back(i + 1);
            coeffs.push_back({{"blade", std::move(blade)},
                              {"value", io::scalar_to_json(v[rank])}});
            ++rank;
        } while (cursor.advance());
        emit({{"ambient", v.ambient()}, {"grade", v.grade()}, {"coefficients", std::move(coeffs)}});
        return;
    }
    std::uint64_t rank = 0;
    do {
        std::cout << to_string(Combination(cursor.current(), v.ambient())) << " "
                  << format_scalar(v[rank]) << "\n";
        ++rank;
    } while (cursor.advance());
}

template <Scalar S>
int run_vdet(const std::string& path, const GlobalOptions& g) {
    print_multivector(vdet(load<S>(path, g), g.max_minors), g);
    return 0;
}

template <Scalar S>
int run_wedge(const std::string& path, const GlobalOptions& g) {
    print_multivector(wedge_columns(load<S>(path, g)), g);
    return 0;
}

template <Scalar S>
int run_scalar_sum(const std::string& path, const GlobalOptions& g, bool signed_sum) {
    const MatrixX<S> a = load<S>(path, g);
    const S value = signed_sum ? gdet(a, g.max_minors) : tdet(a, g.max_minors);
    if (g.json())
        emit({{signed_sum ? "gdet" : "tdet", io::scalar_to_json(value)}});
    else
        std::cout << format_scalar(value) << "\n";
    return 0;
}

template <Scalar S>
int run_dirdet(const std::string& path_a, const std::string& path_b, const GlobalOptions& g) {
    const MatrixX<S> a = load<S>(path_a, g);
    const MatrixX<S> b = load<S>(path_b, g);
    const DirectionalProjection<S> p = directional_det(a, b, g.max_minors);
    if constexpr (is_exact_v<S>) {
        if (g.json())
            emit({{"numerator", to_string(p.numerator)},
                  {"direction_squared", to_string(p.direction_squared)},
                  {"value", p.value()}});
        else
            std::cout << "numerator " << to_string(p.numerator) << "\n"
                      << "direction_squared " << to_string(p.direction_squared) << "\n";
    } else {
        if (g.json())
            emit({{"dirdet", p.value()}});
        else
            std::cout << format_scalar(p.value()) << "\n";
    }
    return 0;
}

template <Scalar S>
int run_solve(const std::string& path_a, const std::string& path_b, const GlobalOptions& g) {
    const MatrixX<S> a = load<S>(path_a, g);
    const VectorX<S> b = load_vector<S>(path_b, g, a.rows());
    const SolveResult<S> r = solve_overdetermined(a, b, g.max_minors, g.tolerance);
    switch (r.status) {
    case SolveStatus::Solved:
        if (g.json()) {
            emit({{"status", "solved"}, {"solution", io::matrix_to_json(r.solution)}});
        } else {
            for (Index j = 0; j < r.solution.size(); ++j)
                std::cout << format_scalar(r.solution[j]) << "\n";
        }
        return 0;
    case SolveStatus::Inconsistent:
        if (g.json())
            emit({{"status", "inconsistent"},
                  {"column", r.inconsistent_column},
                  {"blade_rank", r.inconsistent_blade}});
        std::cerr << "gendet: system is inconsistent: replacing column "
                  << r.inconsistent_column << " breaks proportionality at blade rank "
                  << r.inconsistent_blade << "\n";
        return 3;
    case SolveStatus::RankDeficient:
        if (g.json()) emit({{"status", "rank_deficient"}});
        std::cerr << "gendet: matrix is rank-deficient (vdet = 0); Cramer's rule does not apply\n";
        return 5;
    }
    return 1;
}

template <Scalar S>
int run_polyarea(const std::string& path, const GlobalOptions& g) {
    const MatrixX<S> vertices = load<S>(path, g);
    const S area = polygon_area_gdet(vertices);
    if (g.json())
        emit({{"area", io::scalar_to_json(area)}});
    else
        std::cout << format_scalar(area) << "\n";
    return 0;
}

int run_bench(const bench::BenchOptions& options, const std::string& out_path,
              const GlobalOptions& g) {
    const bench::BenchReport report = bench::run_benchmark(options);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << bench::report_to_json(report).dump(2) << "\n";
    }
    if (g.json())
        emit(bench::report_to_json(report));
    else
        std::cout << bench::render_table(report);
    return 0;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const MinorCapError& e) {
        std::cerr << "gendet: " << e.what() << "\n";
        return 4;
    } catch (const DegenerateDirectionError& e) {
        std::cerr << "gendet: " << e.what() << "\n";
        return 5;
    } catch (const ConsistencyError& e) {
        std::cerr << "gendet: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) { // dimension, size, parse, numeric input
        std::cerr << "gendet: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gendet: internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized determinants of tall matrices"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_flag("--exact", g.exact, "exact rational arithmetic (integers and p/q literals)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();
    app.add_option("--in-format", g.in_format, "input matrix format")
        ->check(CLI::IsMember({"csv", "json", "auto"}))
        ->capture_default_str();
    app.add_option("--tolerance", g.tolerance, "float-domain comparison tolerance")
        ->capture_default_str();
    app.add_option("--max-minors", g.max_minors,
                   "cap on C(m,n) minor enumerations (flag wins over the environment)")
        ->envname("GENDET_MAX_MINORS")
        ->capture_default_str();

    const std::string source_help = "matrix source: file path, or - for standard input";
    std::string src_a = "-";
    std::string src_b;
    bool force_gram = false;

    CLI::App* detl_cmd = app.add_subcommand("detl", "determinant-like function (unsigned n-volume)");
    detl_cmd->add_option("matrix", src_a, source_help);
    detl_cmd->add_flag("--gram", force_gram, "force the Gram path sqrt(det(A^T A))");

    CLI::App* vdet_cmd = app.add_subcommand("vdet", "vector determinant (all maximal minors)");
    vdet_cmd->add_option("matrix", src_a, source_help);

    CLI::App* gdet_cmd = app.add_subcommand("gdet", "g-determinant (Laplace-signed minor sum)");
    gdet_cmd->add_option("matrix", src_a, source_help);

    CLI::App* tdet_cmd = app.add_subcommand("tdet", "sum-determinant (unweighted minor sum)");
    tdet_cmd->add_option("matrix", src_a, source_help);

    CLI::App* wedge_cmd = app.add_subcommand("wedge", "wedge product of the columns (oracle path)");
    wedge_cmd->add_option("matrix", src_a, source_help);

    CLI::App* dirdet_cmd =
        app.add_subcommand("dirdet", "directional determinant of A along B's column span");
    dirdet_cmd->add_option("matrix_a", src_a, "matrix A source")->required();
    dirdet_cmd->add_option("matrix_b", src_b, "direction matrix B source")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve the overdetermined system Ax = b");
    solve_cmd->add_option("matrix", src_a, "system matrix A source")->required();
    solve_cmd->add_option("rhs", src_b, "right-hand side b source")->required();

    CLI::App* poly_cmd =
        app.add_subcommand("polyarea", "signed polygon area from x,y vertex lines");
    poly_cmd->add_option("vertices", src_a, source_help);

    CLI::App* bench_cmd = app.add_subcommand("bench", "minor-path vs Gram-path benchmark");
    std::string shapes = "15x3,20x3,25x4,2000x10";
    std::string bench_out;
    int reps = 5;
    std::uint64_t seed = 1;
    bench_cmd->add_option("--shapes", shapes, "comma-separated MxN shapes")->capture_default_str();
    bench_cmd->add_option("--reps", reps, "timed repetitions per measurement")
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "write the JSON report here");
    bench_cmd->add_option("--seed", seed, "random-input seed")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 1;
    }

    return guarded([&]() -> int {
        if (detl_cmd->parsed()) return run_detl(src_a, g, force_gram);
        if (vdet_cmd->parsed())
            return g.exact ? run_vdet<Rational>(src_a, g) : run_vdet<double>(src_a, g);
        if (gdet_cmd->parsed())
            return g.exact ? run_scalar_sum<Rational>(src_a, g, true)
                           : run_scalar_sum<double>(src_a, g, true);
        if (tdet_cmd->parsed())
            return g.exact ? run_scalar_sum<Rational>(src_a, g, false)
                           : run_scalar_sum<double>(src_a, g, false);
        if (wedge_cmd->parsed())
            return g.exact ? run_wedge<Rational>(src_a, g) : run_wedge<double>(src_a, g);
        if (dirdet_cmd->parsed())
            return g.exact ? run_dirdet<Rational>(src_a, src_b, g)
                           : run_dirdet<double>(src_a, src_b, g);
        if (solve_cmd->parsed())
            return g.exact ? run_solve<Rational>(src_a, src_b, g)
                           : run_solve<double>(src_a, src_b, g);
        if (poly_cmd->parsed())
            return g.exact ? run_polyarea<Rational>(src_a, g) : run_polyarea<double>(src_a, g);
        if (bench_cmd->parsed()) {
            bench::BenchOptions options;
            options.shapes = bench::parse_shapes(shapes);
            options.exact = g.exact;
            options.repetitions = reps;
            options.max_minors = g.max_minors;
            options.tolerance = g.tolerance;
            options.seed = seed;
            return run_bench(options, bench_out, g);
        }
        return 1; // unreachable: require_subcommand(1)
    });
}
