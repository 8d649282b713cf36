#include "hankel1/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hankel1/cli/matrix_io.hpp"
#include "hankel1/hankel1.hpp"

namespace hankel1::cli
{

void validate(const RunConfig& c)
{
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0))
            throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be positive");
    };
    if (c.eps)
        positive(*c.eps, "eps");
    positive(c.tol, "tol");
    positive(c.tol_zero, "tol-zero");
    if (c.grid_radii < 3 || c.grid_angles < 3 || c.grid < 3)
        throw Error(ErrorKind::InvalidArgument, "grid sizes must be at least 3");
    if (c.max_iter < 1)
        throw Error(ErrorKind::InvalidArgument, "max-iter must be positive");
    if (c.field != "auto" && c.field != "real" && c.field != "complex")
        throw Error(ErrorKind::InvalidArgument, "field must be auto, real or complex");
    if (c.output != "json" && c.output != "text")
        throw Error(ErrorKind::InvalidArgument, "output must be json or text");
}

namespace
{

using Clock = std::chrono::steady_clock;

/// The message without the leading kind tag added by Error.
std::string bare_message(const Error& e)
{
    std::string message      = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (message.rfind(prefix, 0) == 0)
        message.erase(0, prefix.size());
    return message;
}

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Session
{
    const RunConfig& config;
    const CMatrix& a;
    Json solvers  = Json::array();
    Json timing   = Json::object();
    Json notices  = Json::array();

    template <typename F>
    void attempt(const std::string& name, F&& body)
    {
        const auto start = Clock::now();
        try
        {
            solvers.push_back(body());
        }
        catch (const Error& e)
        {
            solvers.push_back(error_block(name, e.kind(), bare_message(e)));
        }
        timing[name] = elapsed_ms(start);
    }

    FrobeniusOptions frobenius_options() const
    {
        FrobeniusOptions o;
        o.grid_radii  = config.grid_radii;
        o.grid_angles = config.grid_angles;
        return o;
    }

    void frobenius()
    {
        const bool real_input = is_real(a);
        const bool want_real  = config.field == "real" || (config.field == "auto" && real_input);
        const bool want_cplx  = config.field != "real";
        if (want_real)
            attempt("frobenius-real", [&] {
                if (!real_input)
                    throw Error(ErrorKind::InvalidArgument, "field=real needs a real matrix");
                return frobenius_block(a, solve_real(real_part(a), frobenius_options()));
            });
        if (want_cplx)
            attempt("frobenius-complex", [&] { return frobenius_block(a, solve_complex(a, frobenius_options())); });
    }

    void spectral()
    {
        attempt("spectral", [&] {
            if (!is_real(a))
                throw Error(ErrorKind::AsymmetricInput, "spectral solver needs a real symmetric matrix");
            SpectralOptions o;
            o.eps  = config.eps;
            o.grid = config.grid;
            return spectral_block(a, solve_spectral(real_part(a), o));
        });
    }

    void cadzow()
    {
        attempt("cadzow", [&] {
            CadzowOptions o;
            o.tol      = config.tol;
            o.tol_zero = config.tol_zero;
            o.max_iter = config.max_iter;
            return cadzow_block(a, cadzow_iterate(a, o), config.trace);
        });
    }

    bool symmetric_real() const
    {
        if (!is_real(a) || a.rows() != a.cols())
            return false;
        const RMatrix r = real_part(a);
        return (r - r.transpose()).norm() <= Tolerances{}.structural * r.norm();
    }
};

}  // namespace

Json run_command(const RunConfig& config, const CMatrix& a)
{
    validate(config);
    require_valid(a);
    const auto start = Clock::now();
    Json report{{"input", input_summary(a)}};
    Session s{config, a};

    if (config.command == "frobenius")
        s.frobenius();
    else if (config.command == "spectral")
        s.spectral();
    else if (config.command == "cadzow")
        s.cadzow();
    else if (config.command == "compare")
    {
        s.frobenius();
        if (s.symmetric_real())
            s.spectral();
        else
            s.notices.push_back("spectral solver skipped: input is not real symmetric");
        s.cadzow();
        Json table = Json::array();
        for (const Json& b : s.solvers)
        {
            Json row{{"solver", b.value("solver", "")}};
            row["frobenius"] = b.contains("errors") ? b["errors"]["frobenius"] : Json(nullptr);
            row["spectral"]  = b.contains("errors") ? b["errors"]["spectral"] : Json(nullptr);
            table.push_back(std::move(row));
        }
        report["table"] = std::move(table);
    }
    else if (config.command == "project")
    {
        const auto t0        = Clock::now();
        report["projection"] = matrix_json(hankel_project(a));
        s.timing["project"]  = elapsed_ms(t0);
    }
    else
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + config.command + "'");

    if (config.command != "project")
        report["solvers"] = std::move(s.solvers);
    if (!s.notices.empty())
        report["notices"] = std::move(s.notices);
    s.timing["total"]   = elapsed_ms(start);
    report["timing_ms"] = std::move(s.timing);
    report["version"]   = version;
    return report;
}

CMatrix generate(const RunConfig& config)
{
    if (config.rows < 1 || config.cols < 1)
        throw Error(ErrorKind::InvalidArgument, "rows and cols must be positive");
    if (config.noise < 0.0)
        throw Error(ErrorKind::InvalidArgument, "noise must be non-negative");
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> normal;
    const bool complex_field = config.field == "complex";
    auto draw = [&]() { return complex_field ? Complex(normal(rng), normal(rng)) : Complex(normal(rng), 0.0); };
    const Index m = config.rows, n = config.cols;
    CMatrix a(m, n);

    if (config.kind == "random")
    {
        for (Index j = 0; j < m; ++j)
            for (Index k = 0; k < n; ++k)
                a(j, k) = draw();
    }
    else if (config.kind == "random-symmetric")
    {
        if (m != n)
            throw Error(ErrorKind::InvalidArgument, "random-symmetric needs rows == cols");
        for (Index j = 0; j < m; ++j)
            for (Index k = j; k < n; ++k)
                a(j, k) = a(k, j) = Complex(normal(rng), 0.0);
    }
    else if (config.kind == "hankel" || config.kind == "rank1-hankel-plus-noise")
    {
        std::vector<Complex> h(static_cast<std::size_t>(m + n - 1));
        if (config.kind == "hankel")
            for (Complex& x : h)
                x = draw();
        else
        {
            std::uniform_real_distribution<double> unit(-1.2, 1.2);
            const Complex z = complex_field ? Complex(unit(rng), unit(rng)) : Complex(unit(rng), 0.0);
            const Complex c = draw();
            Complex p = c;
            for (Complex& x : h)
            {
                x = p;
                p *= z;
            }
        }
        for (Index j = 0; j < m; ++j)
            for (Index k = 0; k < n; ++k)
                a(j, k) = h[static_cast<std::size_t>(j + k)];
        if (config.kind == "rank1-hankel-plus-noise" && config.noise > 0.0)
            for (Index j = 0; j < m; ++j)
                for (Index k = 0; k < n; ++k)
                    a(j, k) += config.noise * draw();
    }
    else
        throw Error(ErrorKind::InvalidArgument, "unknown generator kind '" + config.kind + "'");
    return a;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    auto emit = [&](const Json& report) {
        if (config.output == "text")
            out << render_text(report);
        else
            out << report.dump(2) << '\n';
        return has_error(report) ? 1 : 0;
    };
    auto failure = [&](const Error& e) {
        Json report = error_block("", e.kind(), bare_message(e));
        report["version"] = version;
        err << e.what() << '\n';
        return emit(report);
    };

    try
    {
        validate(config);
        if (config.command == "gen")
        {
            const std::string csv = format_matrix(generate(config));
            if (config.out.empty())
                out << csv;
            else
            {
                std::ofstream f(config.out, std::ios::binary);
                if (!f)
                    throw Error(ErrorKind::InvalidArgument, "cannot write '" + config.out + "'");
                f << csv;
            }
            return 0;
        }
        if (config.input.empty() == config.matrix.empty())
            throw Error(ErrorKind::InvalidArgument, "give exactly one of --input or --matrix");
        const CMatrix a = config.matrix.empty() ? read_matrix(config.input) : parse_matrix(config.matrix);
        if (config.command == "project" && config.output == "text")
        {
            out << format_matrix(hankel_project(a));
            return 0;
        }
        return emit(run_command(config, a));
    }
    catch (const Error& e)
    {
        return failure(e);
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rank-1 Hankel approximation in the Frobenius and spectral norms", "hankel1"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "matrix file, '-' for stdin");
        sub->add_option("--matrix,-m", cfg.matrix, "inline matrix, rows separated by ';'");
        sub->add_option("--field", cfg.field, "auto, real or complex")
            ->check(CLI::IsMember({"auto", "real", "complex"}));
        sub->add_option("--output,-o", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto tuning = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.eps, "spectral bisection width")->check(CLI::PositiveNumber);
        sub->add_option("--tol", cfg.tol, "Cadzow fixed-point tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--tol-zero", cfg.tol_zero, "Cadzow zero-limit tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--grid-radii", cfg.grid_radii, "complex search radii")->check(CLI::Range(3, 1 << 16));
        sub->add_option("--grid-angles", cfg.grid_angles, "complex search angles")->check(CLI::Range(3, 1 << 20));
        sub->add_option("--grid", cfg.grid, "spectral inner grid")->check(CLI::Range(3, 1 << 24));
        sub->add_option("--max-iter", cfg.max_iter, "Cadzow iteration cap")->check(CLI::PositiveNumber);
        sub->add_flag("--trace", cfg.trace, "include the full Cadzow trace");
    };

    const std::pair<const char*, const char*> commands[] = {
        {"frobenius", "optimal approximation in the Frobenius norm"},
        {"spectral", "optimal approximation in the spectral norm (real symmetric input)"},
        {"cadzow", "alternating projections from the truncated SVD"},
        {"compare", "run every applicable solver"},
        {"project", "orthogonal projection onto Hankel matrices"},
    };
    for (const auto& [name, help] : commands)
    {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        tuning(sub);
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    CLI::App* gen = app.add_subcommand("gen", "write a deterministic test matrix");
    gen->add_option("--kind", cfg.kind)
        ->check(CLI::IsMember({"random", "random-symmetric", "hankel", "rank1-hankel-plus-noise"}));
    gen->add_option("--seed", cfg.seed);
    gen->add_option("--rows", cfg.rows)->check(CLI::PositiveNumber);
    gen->add_option("--cols", cfg.cols)->check(CLI::PositiveNumber);
    gen->add_option("--noise", cfg.noise)->check(CLI::NonNegativeNumber);
    gen->add_option("--field", cfg.field)->check(CLI::IsMember({"auto", "real", "complex"}));
    gen->add_option("--out", cfg.out, "target file; stdout when omitted");
    gen->callback([&cfg] { cfg.command = "gen"; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    return run(cfg, out, err);
}

}  // namespace hankel1::cli
