#include "betatet/cli.hpp"

#include "betatet/abel.hpp"
#include "betatet/beta.hpp"
#include "betatet/dynamics.hpp"
#include "betatet/jet.hpp"
#include "betatet/render.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace betatet::cli {

namespace {

double parse_real_part(const std::string& text, const std::string& whole)
{
    if (text.empty() || text == "+")
        return 1.0;
    if (text == "-")
        return -1.0;
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument("malformed complex number '" + whole + "'");
    return v;
}

std::string format_real(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

/// Everything any subcommand can be told; unused fields keep their defaults.
struct RunConfig {
    std::string lambda = "1";
    std::string mu = "1";
    int order = kDefaultSeriesOrder;
    std::string s = "0";
    int n_max = 64;
    std::optional<int> k_shift;
    double tol = 1e-12;
    int jet_order = 10;
    int K = 0;
    double delta = 1e-8;
    double D = 1e8;
    double probe_radius = 0.02;
    int probes = 8;
    double theta_tol = 1e-9;
    int theta_n_max = 80;
    long k_index = 0;
    double radius = 0.1;
    int nodes = 512;
    std::string function = "beta";
    GridSpec grid{-5.0, 10.0, -7.5, 7.5, 256, 256};
    std::string output;
};

void add_params(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("--lambda", c.lambda, "convergence rate lambda (complex, Re > 0)")
        ->capture_default_str();
    cmd->add_option("--mu", c.mu, "base exponent mu, base b = e^mu (complex, nonzero)")
        ->capture_default_str();
    cmd->add_option("-K,--order", c.order, "series order")->capture_default_str()
        ->check(CLI::PositiveNumber);
}

void add_point(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("--s", c.s, "evaluation point (complex)")->capture_default_str();
}

void add_tau(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("--n-max", c.n_max, "rho depth")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--k-shift", c.k_shift, "fixed evaluation offset (adaptive if omitted)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", c.tol, "rho convergence tolerance")->capture_default_str()
        ->check(CLI::PositiveNumber);
}

void add_classify(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("--window", c.K, "orbit window K (0: 80 / Re lambda)")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--delta", c.delta, "lower bound on |1/beta|")->capture_default_str();
    cmd->add_option("--D", c.D, "upper bound on |1/beta|")->capture_default_str();
    cmd->add_option("--probe-radius", c.probe_radius, "probe circle radius")->capture_default_str();
    cmd->add_option("--probes", c.probes, "probe count")->capture_default_str();
}

void add_grid(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("--re-min", c.grid.re_min)->capture_default_str();
    cmd->add_option("--re-max", c.grid.re_max)->capture_default_str();
    cmd->add_option("--im-min", c.grid.im_min)->capture_default_str();
    cmd->add_option("--im-max", c.grid.im_max)->capture_default_str();
    cmd->add_option("--width", c.grid.width)->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--height", c.grid.height)->capture_default_str()->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, RunConfig& c)
{
    cmd->add_option("-o,--output", c.output, "output file")->required();
}

ClassifyConfig classify_config(const RunConfig& c)
{
    return ClassifyConfig{c.K, c.delta, c.D, c.probe_radius, c.probes};
}

/// Prints `name = value` for a healthy value; otherwise reports the sentinel
/// on err and returns false.
bool print_checked(std::ostream& out, std::ostream& err, const char* name, const Checked& v)
{
    if (!v) {
        err << name << ": " << to_string(v.sentinel()) << '\n';
        return false;
    }
    out << name << " = " << format_complex(*v) << '\n';
    return true;
}

std::string format_radius(double r)
{
    return std::isinf(r) ? std::string("inf") : format_real(r, 15);
}

class Runner {
public:
    Runner(const RunConfig& c, std::ostream& out, std::ostream& err)
        : c_(c), out_(out), err_(err), p_(parse_complex(c.lambda), parse_complex(c.mu))
    {
    }

    int eval()
    {
        const cplx s = parse_complex(c_.s);
        const GSeries gs = g_coefficients(p_, c_.order);
        const bool beta_ok = print_checked(out_, err_, "beta", beta_eval(s, gs));
        const bool F_ok = print_checked(out_, err_, "F", abel_value(s, gs).F);
        return beta_ok && F_ok ? kExitOk : kExitSentinel;
    }

    int series()
    {
        const GSeries gs = g_coefficients(p_, c_.order);
        std::ofstream file(c_.output);
        if (!file)
            throw std::runtime_error("cannot open '" + c_.output + "' for writing");
        write_gseries(file, gs);
        return kExitOk;
    }

    int abel()
    {
        const cplx s = parse_complex(c_.s);
        const GSeries gs = g_coefficients(p_, c_.order);
        const AbelResult r = abel_value(s, gs);
        const bool F_ok = print_checked(out_, err_, "F", r.F);
        if (F_ok)
            print_checked(out_, err_, "tau", r.tau);
        out_ << "n_used = " << r.n_used << '\n'
             << "rho_tail = " << format_real(r.rho_tail, 15) << '\n'
             << "converged = " << (r.converged ? "true" : "false") << '\n';
        return F_ok ? kExitOk : kExitSentinel;
    }

    int jet()
    {
        const cplx s0 = parse_complex(c_.s);
        const GSeries gs = g_coefficients(p_, c_.order);
        const TauConfig cfg{c_.n_max, c_.k_shift.value_or(0), c_.tol};
        const Jet j = tau_jet(s0, c_.jet_order, p_, cfg, gs);
        if (!j) {
            err_ << "jet: " << to_string(j.sentinel()) << '\n';
            return kExitSentinel;
        }
        std::ofstream file(c_.output);
        if (!file)
            throw std::runtime_error("cannot open '" + c_.output + "' for writing");
        write_jet(file, j);
        if (j.order() >= 8)
            out_ << "radius = " << format_radius(radius_estimate(j)) << '\n';
        return kExitOk;
    }

    int classify()
    {
        const cplx s = parse_complex(c_.s);
        const GSeries gs = g_coefficients(p_, c_.order);
        const Classification cls = classify_point(s, gs, classify_config(c_));
        out_ << to_string(cls.verdict) << '\n'
             << "orbit_min = " << format_radius(cls.orbit_min) << '\n'
             << "orbit_max = " << format_radius(cls.orbit_max) << '\n'
             << "k_window = " << cls.k_window << '\n';
        return kExitOk;
    }

    int theta()
    {
        const cplx s = parse_complex(c_.s);
        const GSeries gs = g_coefficients(p_, c_.order);
        const auto ks = koenigs_series(p_);
        if (!ks) {
            err_ << "theta: " << to_string(ks.sentinel()) << " (no attracting fixed point)\n";
            return kExitSentinel;
        }
        const ThetaValue t = theta_map(s, gs, *ks, c_.theta_n_max, c_.theta_tol);
        if (!print_checked(out_, err_, "theta", t.theta))
            return kExitSentinel;
        out_ << "drift = " << format_real(t.drift, 15) << '\n'
             << "n_used = " << t.n_used << '\n';
        const Checked offset = regular_tet_offset(*ks);
        if (offset)
            out_ << "offset = " << format_complex(*offset) << '\n';
        return kExitOk;
    }

    int residue()
    {
        const GSeries gs = g_coefficients(p_, c_.order);
        const ResidueCheck r = residue_check(gs, c_.k_index, c_.radius, c_.nodes);
        if (!print_checked(out_, err_, "integral", r.integral))
            return kExitSentinel;
        out_ << "expected = " << format_complex(r.expected) << '\n'
             << "rel_err = " << format_real(r.rel_err, 15) << '\n';
        return kExitOk;
    }

    int plot()
    {
        const GSeries gs = g_coefficients(p_, c_.order);
        PlaneMap f;
        if (c_.function == "beta") {
            f = [&gs](cplx s) { return beta_eval(s, gs); };
        } else {
            const double tol = c_.tol;
            f = [&gs, tol](cplx s) { return inverse_abel(s, gs.params, gs, tol).F; };
        }
        write_ppm(c_.output, phase_plot(f, c_.grid));
        return kExitOk;
    }

    int julia()
    {
        const GSeries gs = g_coefficients(p_, c_.order);
        write_ppm(c_.output, julia_mask(gs, c_.grid, classify_config(c_)));
        return kExitOk;
    }

private:
    AbelResult abel_value(cplx s, const GSeries& gs) const
    {
        if (c_.k_shift)
            return tau_n(s, p_, TauConfig{c_.n_max, *c_.k_shift, c_.tol}, gs);
        return inverse_abel(s, p_, gs, c_.tol);
    }

    const RunConfig& c_;
    std::ostream& out_;
    std::ostream& err_;
    Params p_;
};

}  // namespace

cplx parse_complex(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty complex number");
    if (text.back() != 'i')
        return {parse_real_part(text, text), 0.0};

    const std::string body = text.substr(0, text.size() - 1);
    // the split is the last sign that does not belong to an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {0.0, parse_real_part(body, text)};
    const std::string re = body.substr(0, split);
    if (re.empty() || re == "+" || re == "-")
        throw std::invalid_argument("malformed complex number '" + text + "'");
    return {parse_real_part(re, text), parse_real_part(body.substr(split), text)};
}

std::string format_complex(cplx z, int digits)
{
    const double im = z.imag();
    const char sign = std::signbit(im) ? '-' : '+';
    return format_real(z.real(), digits) + sign + format_real(std::abs(im), digits) + "i";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"asymptotic tetration numerics", "betatet"};
    app.set_config("--config", "", "read flags from a TOML/INI file");
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "print beta(s) and the inverse Abel value F(s)");
    add_params(eval, c);
    add_point(eval, c);
    add_tau(eval, c);

    auto* series = app.add_subcommand("series", "write the Taylor coefficients of g");
    add_params(series, c);
    add_output(series, c);

    auto* abel = app.add_subcommand("abel", "print the rho-process result at s");
    add_params(abel, c);
    add_point(abel, c);
    add_tau(abel, c);

    auto* jet = app.add_subcommand("jet", "write the Taylor jet of F at s and its radius estimate");
    add_params(jet, c);
    add_point(jet, c);
    add_tau(jet, c);
    jet->add_option("-m,--jet-order", c.jet_order, "jet order")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    add_output(jet, c);

    auto* classify = app.add_subcommand("classify", "weak Fatou / Julia verdict at s");
    add_params(classify, c);
    add_point(classify, c);
    add_classify(classify, c);

    auto* theta = app.add_subcommand("theta", "theta mapping against regular iteration");
    add_params(theta, c);
    add_point(theta, c);
    theta->add_option("--n-max", c.theta_n_max, "maximum orbit index")->capture_default_str();
    theta->add_option("--tol", c.theta_tol, "drift tolerance")->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* residue = app.add_subcommand("residue", "contour integral of beta around a pole");
    add_params(residue, c);
    residue->add_option("--k-index", c.k_index, "pole index k")->capture_default_str();
    residue->add_option("--radius", c.radius, "contour radius")->capture_default_str();
    residue->add_option("--nodes", c.nodes, "trapezoid nodes")->capture_default_str();

    auto* plot = app.add_subcommand("plot", "phase plot of beta or F as a P6 pixmap");
    add_params(plot, c);
    add_grid(plot, c);
    plot->add_option("--function", c.function, "beta or F")->capture_default_str()
        ->check(CLI::IsMember({"beta", "F"}));
    plot->add_option("--tol", c.tol, "rho tolerance for F")->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output(plot, c);

    auto* julia = app.add_subcommand("julia", "weak Julia mask as a P6 pixmap");
    add_params(julia, c);
    add_grid(julia, c);
    add_classify(julia, c);
    add_output(julia, c);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        Runner r(c, out, err);
        if (*eval) return r.eval();
        if (*series) return r.series();
        if (*abel) return r.abel();
        if (*jet) return r.jet();
        if (*classify) return r.classify();
        if (*theta) return r.theta();
        if (*residue) return r.residue();
        if (*plot) return r.plot();
        if (*julia) return r.julia();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SentinelError& e) {
        err << to_string(e.sentinel()) << '\n';
        return kExitSentinel;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace betatet::cli
