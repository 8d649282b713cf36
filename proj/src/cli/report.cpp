#include "hankel1/cli/report.hpp"

#include <cstdio>
#include <sstream>

#include "hankel1/cli/matrix_io.hpp"
#include "hankel1/numerics.hpp"

namespace hankel1::cli
{

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json extended_json(const ExtendedScalar& z) { return z.is_infinite() ? Json("inf") : complex_json(z.value()); }

Json params_json(const Rank1HankelParams& p)
{
    return Json{{"c", complex_json(p.c)}, {"z", extended_json(p.z)}, {"rows", p.rows}, {"cols", p.cols}};
}

Json matrix_json(const CMatrix& a)
{
    const bool real = is_real(a);
    Json rows       = Json::array();
    for (Index j = 0; j < a.rows(); ++j)
    {
        Json row = Json::array();
        for (Index k = 0; k < a.cols(); ++k)
            row.push_back(real ? Json(a(j, k).real()) : complex_json(a(j, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json input_summary(const CMatrix& a)
{
    Json in{{"rows", a.rows()}, {"cols", a.cols()}, {"field", is_real(a) ? "real" : "complex"}};
    in["norm_frobenius"] = frobenius_norm(a);
    in["norm_spectral"]  = a.norm() == 0.0 ? 0.0 : spectral_norm(a);
    if (a.norm() > 0.0)
    {
        const RVector sigma   = svd(a).sigma;
        in["singular_values"] = std::vector<double>(sigma.data(), sigma.data() + sigma.size());
    }
    if (is_real(a) && a.rows() == a.cols() && a.norm() > 0.0)
    {
        const RMatrix r = real_part(a);
        in["symmetric"] = (r - r.transpose()).norm() <= Tolerances{}.structural * r.norm();
        if (in["symmetric"].get<bool>())
        {
            const SymmetricEigen e = eig_symmetric(r);
            in["eigenvalues"]      = std::vector<double>(e.values.data(), e.values.data() + e.values.size());
        }
    }
    return in;
}

Json error_json(const CMatrix& a, const CMatrix& approximant)
{
    const CMatrix e = a - approximant;
    return Json{{"frobenius", frobenius_norm(e)}, {"spectral", e.norm() == 0.0 ? 0.0 : spectral_norm(e)}};
}

Json frobenius_block(const CMatrix& a, const FrobeniusSolution& sol)
{
    const CMatrix h = sol.approximant();
    Json b{{"solver", sol.mode == FrobeniusMode::RealSearch ? "frobenius-real" : "frobenius-complex"}};
    b["mode"]      = std::string(to_string(sol.mode));
    b["params"]    = params_json(sol.params);
    b["entry00"]   = complex_json(h(0, 0));
    b["objective"] = sol.objective_value;
    b["errors"]    = error_json(a, h);
    const SvdCoincidence c = svd_coincidence(a, sol);
    b["certificate"] = Json{{"svd_coincident", c.by_error && c.by_vectors}, {"by_error", c.by_error},
                            {"by_vectors", c.by_vectors}};
    Json alts = Json::array();
    for (const Rank1HankelParams& p : sol.alternates)
        alts.push_back(params_json(p));
    b["alternates"] = std::move(alts);
    return b;
}

Json spectral_block(const CMatrix& a, const SpectralSolution& sol)
{
    Json b{{"solver", "spectral"}};
    b["case"]                 = std::string(to_string(sol.spectral_case));
    b["lambda_tilde"]         = sol.lambda_tilde;
    b["bisection_iterations"] = sol.bisection_iterations;
    if (sol.c_interval)
        b["c_interval"] = Json{{"lo", sol.c_interval->lo},
                               {"hi", sol.c_interval->hi},
                               {"lo_open", sol.c_interval->lo_open},
                               {"hi_open", sol.c_interval->hi_open}};
    if (sol.params)
    {
        const CMatrix h = build_rank1(*sol.params);
        b["params"]     = params_json(*sol.params);
        b["entry00"]    = complex_json(h(0, 0));
        b["errors"]     = error_json(a, h);
    }
    else
        b["diagnostic"] = "there may be no real rank-1 Hankel matrix attaining the bound";
    return b;
}

Json cadzow_block(const CMatrix& a, const CadzowTrace& trace, bool full_trace)
{
    Json b{{"solver", "cadzow"}};
    b["terminal"]   = std::string(to_string(trace.terminal));
    b["iterations"] = trace.iterations;
    if (trace.params)
    {
        b["params"]  = params_json(*trace.params);
        b["entry00"] = complex_json(trace.final_iterate(0, 0));
    }
    b["errors"]               = error_json(a, trace.final_iterate);
    b["final_sigma"]          = trace.sigmas.empty() ? 0.0 : trace.sigmas.back();
    b["tail_ratio"]           = trace.tail_ratio;
    b["fixed_point_residual"] = fixed_point_residual(trace.final_iterate);
    if (full_trace)
        b["trace"] = Json{{"sigmas", trace.sigmas},
                          {"iterate_deltas", trace.iterate_deltas},
                          {"sigma_ratios", trace.sigma_ratios()}};
    return b;
}

Json error_block(std::string_view solver, ErrorKind kind, std::string_view message)
{
    Json b;
    if (!solver.empty())
        b["solver"] = std::string(solver);
    b["error"] = Json{{"kind", std::string(to_string(kind))}, {"message", std::string(message)}};
    return b;
}

bool has_error(const Json& report)
{
    if (report.contains("error"))
        return true;
    if (report.contains("solvers"))
        for (const Json& b : report["solvers"])
            if (b.contains("error"))
                return true;
    return false;
}

namespace
{

std::string fixed(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string show(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.contains("re"))
        return format_complex({v["re"].get<double>(), v["im"].get<double>()});
    if (v.is_number())
        return fixed(v.get<double>());
    return v.dump();
}

}  // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    if (report.contains("error"))
        os << "error: " << report["error"]["kind"].get<std::string>() << ": "
           << report["error"]["message"].get<std::string>() << '\n';
    if (report.contains("input"))
    {
        const Json& in = report["input"];
        os << "input: " << in["rows"] << 'x' << in["cols"] << ' ' << in["field"].get<std::string>()
           << "  |A|_F = " << fixed(in["norm_frobenius"]) << "  |A|_2 = " << fixed(in["norm_spectral"]) << '\n';
        if (in.contains("eigenvalues"))
        {
            os << "eigenvalues:";
            for (const Json& v : in["eigenvalues"])
                os << ' ' << fixed(v);
            os << '\n';
        }
    }
    if (report.contains("projection"))
    {
        os << "projection:\n";
        for (const Json& row : report["projection"])
        {
            bool first = true;
            for (const Json& v : row)
            {
                os << (first ? "  " : ", ") << show(v);
                first = false;
            }
            os << '\n';
        }
    }
    if (report.contains("solvers"))
        for (const Json& b : report["solvers"])
        {
            os << '[' << (b.contains("solver") ? b["solver"].get<std::string>() : "input") << ']';
            if (b.contains("error"))
            {
                os << " error: " << b["error"]["kind"].get<std::string>() << ": "
                   << b["error"]["message"].get<std::string>() << '\n';
                continue;
            }
            if (b.contains("case"))
                os << " case = " << b["case"].get<std::string>() << "  lambda~ = " << fixed(b["lambda_tilde"]);
            if (b.contains("terminal"))
                os << " terminal = " << b["terminal"].get<std::string>() << "  iterations = " << b["iterations"];
            if (b.contains("params"))
                os << "  z = " << show(b["params"]["z"]) << "  c = " << show(b["params"]["c"]);
            if (b.contains("errors"))
                os << "  error_F = " << fixed(b["errors"]["frobenius"]) << "  error_2 = " << fixed(b["errors"]["spectral"]);
            if (b.contains("c_interval"))
            {
                const Json& ci = b["c_interval"];
                os << "  c in " << (ci["lo_open"].get<bool>() ? '(' : '[') << fixed(ci["lo"]) << ", " << fixed(ci["hi"])
                   << (ci["hi_open"].get<bool>() ? ')' : ']');
            }
            if (b.contains("diagnostic"))
                os << "  " << b["diagnostic"].get<std::string>();
            os << '\n';
            if (b.contains("alternates"))
                for (const Json& p : b["alternates"])
                    os << "    alternate z = " << show(p["z"]) << "  c = " << show(p["c"]) << '\n';
            if (b.contains("trace"))
            {
                os << "    sigmas:";
                for (const Json& s : b["trace"]["sigmas"])
                    os << ' ' << fixed(s);
                os << '\n';
            }
        }
    if (report.contains("table"))
    {
        os << "solver               error_F     error_2\n";
        for (const Json& row : report["table"])
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%-18s %10s  %10s\n", row["solver"].get<std::string>().c_str(),
                          row["frobenius"].is_number() ? fixed(row["frobenius"]).c_str() : "-",
                          row["spectral"].is_number() ? fixed(row["spectral"]).c_str() : "-");
            os << buf;
        }
    }
    if (report.contains("notices"))
        for (const Json& n : report["notices"])
            os << "notice: " << n.get<std::string>() << '\n';
    return os.str();
}

}  // namespace hankel1::cli
