#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fslp/decomposition.hpp"
#include "fslp/errors.hpp"
#include "fslp/solutions.hpp"
#include "fslp/specfun.hpp"
#include "fslp/spectrum.hpp"
#include "fslp/types.hpp"

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kDefaultAlphas = {
    "0.78", "0.80",  "0.82",  "0.84",  "0.86",  "0.88",  "0.90",  "0.92",
    "0.94", "0.96",  "0.98",  "0.981", "0.982", "0.983", "0.984", "0.985",
    "0.989", "0.9898"};

struct Settings {
    std::string format = "table";
    bool format_given = false;
    int precision = 6;
    bool precision_given = false;
    bool quiet = false;
    fslp::QuadratureConfig quad;
    int ml_series_terms_max = 400;
    int ml_asymptotic_terms = 8;
    double ml_switch_radius = 40.0;
    int scan_samples_per_unit = 64;
};

[[noreturn]] void usage_error(const std::string& message) {
    throw fslp::domain_error(message);
}

std::string fmt_real(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void apply_config_file(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) usage_error("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            usage_error("config: line " + std::to_string(lineno) +
                        " is not key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "quad_abs_tol")
                s.quad.abs_tol = std::stod(value);
            else if (key == "quad_rel_tol")
                s.quad.rel_tol = std::stod(value);
            else if (key == "quad_max_subdivisions")
                s.quad.max_subdivisions = std::stoi(value);
            else if (key == "ml_series_terms_max")
                s.ml_series_terms_max = std::stoi(value);
            else if (key == "ml_asymptotic_terms")
                s.ml_asymptotic_terms = std::stoi(value);
            else if (key == "ml_switch_radius")
                s.ml_switch_radius = std::stod(value);
            else if (key == "scan_samples_per_unit")
                s.scan_samples_per_unit = std::stoi(value);
            else
                usage_error("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            usage_error("config: bad value for '" + key + "'");
        } catch (const std::out_of_range&) {
            usage_error("config: bad value for '" + key + "'");
        }
    }
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (...) {
        usage_error("invalid " + what + " '" + text + "'");
    }
    if (pos != text.size()) usage_error("invalid " + what + " '" + text + "'");
    return v;
}

double parse_spectrum_alpha(const std::string& text) {
    const double a = parse_double(text, "alpha");
    if (!(a > 0.5 && a < 1.0))
        usage_error("alpha must lie in (1/2, 1), got '" + text + "'");
    return a;
}

fslp::FractionalOrder parse_order(const std::string& text) {
    return fslp::FractionalOrder(parse_double(text, "alpha"));
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(width[c], ' ');
            if (c) line += "  ";
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::cout << line << "\n";
    }
}

int cmd_sweep(const Settings& s, const std::vector<std::string>& alpha_args,
               bool refine) {
    const std::vector<std::string>& alphas =
        alpha_args.empty() ? kDefaultAlphas : alpha_args;
    std::vector<std::pair<std::string, fslp::SpectrumReport>> rows;
    rows.reserve(alphas.size());
    for (const std::string& text : alphas) {
        const double a = parse_spectrum_alpha(text);
        fslp::SpectrumReport rep =
            fslp::spectrum_report(fslp::FractionalOrder(a), 1e-10, refine,
                                  s.quad, s.scan_samples_per_unit);
        if (!s.quiet)
            for (const std::string& w : rep.warnings)
                std::cerr << "sweep: alpha = " << text << ": " << w << "\n";
        rows.emplace_back(text, std::move(rep));
    }

    if (s.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [text, rep] : rows) {
            ordered_json o;
            o["alpha"] = text;
            o["eigen_count"] = rep.eigen_count;
            if (rep.first_bracket) {
                o["I0_lo"] = rep.first_bracket->rho_lo;
                o["I0_hi"] = rep.first_bracket->rho_hi;
                o["Ilast_lo"] = rep.last_bracket->rho_lo;
                o["Ilast_hi"] = rep.last_bracket->rho_hi;
            } else {
                o["I0_lo"] = nullptr;
                o["I0_hi"] = nullptr;
                o["Ilast_lo"] = nullptr;
                o["Ilast_hi"] = nullptr;
            }
            o["oracle_agrees"] = rep.oracle_agrees;
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"alpha", "eigen_count", "I0_lo", "I0_hi", "Ilast_lo",
                     "Ilast_hi", "oracle_agrees"});
    for (const auto& [text, rep] : rows) {
        std::vector<std::string> row{text, std::to_string(rep.eigen_count),
                                     "", "", "", "",
                                     rep.oracle_agrees ? "true" : "false"};
        if (rep.first_bracket) {
            row[2] = fmt_real(rep.first_bracket->rho_lo, s.precision);
            row[3] = fmt_real(rep.first_bracket->rho_hi, s.precision);
            row[4] = fmt_real(rep.last_bracket->rho_lo, s.precision);
            row[5] = fmt_real(rep.last_bracket->rho_hi, s.precision);
        }
        cells.push_back(std::move(row));
    }
    if (s.format == "csv") {
        for (const auto& row : cells) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) line += ',';
                line += row[c];
            }
            std::cout << line << "\n";
        }
    } else {
        print_aligned(cells);
    }
    return 0;
}

int cmd_eig(const Settings& s, const std::string& alpha_text, double tol) {
    const double a = parse_spectrum_alpha(alpha_text);
    if (!(tol > 0.0)) usage_error("tol must be positive");
    fslp::SpectrumReport rep =
        fslp::spectrum_report(fslp::FractionalOrder(a), tol, true, s.quad,
                              s.scan_samples_per_unit);
    if (!s.quiet)
        for (const std::string& w : rep.warnings)
            std::cerr << "eig: alpha = " << alpha_text << ": " << w << "\n";

    if (s.format == "json") {
        const fslp::DecompositionContext ctx(fslp::FractionalOrder(a),
                                             s.quad);
        ordered_json j;
        j["alpha"] = a;
        j["n_star"] = rep.n_star;
        j["eigen_count"] = rep.eigen_count;
        ordered_json bs = ordered_json::array();
        for (int n = 0; n < rep.n_star; ++n) {
            const fslp::EigenvalueBracket b = fslp::negative_interval(ctx, n);
            ordered_json ob;
            ob["n"] = b.n;
            ob["lambda_lo"] = b.lambda_lo;
            ob["lambda_hi"] = b.lambda_hi;
            ob["rho_lo"] = b.rho_lo;
            ob["rho_hi"] = b.rho_hi;
            bs.push_back(std::move(ob));
        }
        j["brackets"] = std::move(bs);
        ordered_json evs = ordered_json::array();
        for (const fslp::Eigenvalue& ev : rep.eigenvalues) {
            ordered_json oe;
            oe["lambda"] = ev.lambda;
            oe["residual"] = ev.residual;
            oe["bracket"] = ev.bracket;
            evs.push_back(std::move(oe));
        }
        j["eigenvalues"] = std::move(evs);
        j["oracle_count"] = rep.oracle_count;
        j["oracle_agrees"] = rep.oracle_agrees;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (s.format == "csv") {
        std::cout << "lambda,residual,bracket\n";
        for (const fslp::Eigenvalue& ev : rep.eigenvalues)
            std::cout << fmt_real(ev.lambda, s.precision) << ','
                      << fmt_real(ev.residual, s.precision) << ','
                      << ev.bracket << "\n";
        return 0;
    }

    std::cout << "alpha = " << alpha_text << "\n"
              << "n_star = " << rep.n_star << "\n"
              << "eigen_count = " << rep.eigen_count << "\n"
              << "oracle_count = " << rep.oracle_count << "\n"
              << "oracle_agrees = " << (rep.oracle_agrees ? "true" : "false")
              << "\n";
    if (!rep.eigenvalues.empty()) {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"lambda", "residual", "bracket"});
        for (const fslp::Eigenvalue& ev : rep.eigenvalues)
            cells.push_back({fmt_real(ev.lambda, s.precision),
                             fmt_real(ev.residual, s.precision),
                             std::to_string(ev.bracket)});
        print_aligned(cells);
    }
    return 0;
}

int cmd_ml(const Settings& s, double delta, double theta, double z) {
    const fslp::MLParams params(delta, theta, s.ml_series_terms_max,
                                s.ml_asymptotic_terms, s.ml_switch_radius);
    double value;
    std::string branch;
    if (theta == 2.0 && delta > 1.0 && delta < 2.0 && z <= 0.0) {
        // This is the characteristic-function family: route through the f/g
        // split so large negative arguments stay accurate.
        const fslp::DecompositionContext ctx(
            fslp::FractionalOrder(delta / 2.0), s.quad);
        value = fslp::char_fn(ctx, -z);
        branch = -z > std::pow(fslp::DecompositionContext::rho_switch, delta)
                     ? "decomposition"
                     : "series";
    } else {
        switch (fslp::ml_branch(params, z)) {
        case fslp::MLBranch::series:
            branch = "series";
            break;
        case fslp::MLBranch::asymptotic:
            branch = "asymptotic";
            break;
        case fslp::MLBranch::closed_form:
            branch = "closed-form";
            break;
        }
        value = fslp::ml(params, z);
    }
    const int prec = s.precision_given ? s.precision : 17;
    if (s.format == "json") {
        ordered_json j;
        j["value"] = value;
        j["branch"] = branch;
        std::cout << j.dump(2) << "\n";
    } else if (s.format == "csv") {
        std::cout << "value,branch\n"
                  << fmt_real(value, prec) << ',' << branch << "\n";
    } else {
        std::cout << fmt_real(value, prec) << ", branch=" << branch << "\n";
    }
    return 0;
}

struct GridSpec {
    double start;
    double end;
    int count;
};

GridSpec parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        usage_error("grid must be start:end:count, got '" + text + "'");
    GridSpec g;
    g.start = parse_double(text.substr(0, c1), "grid start");
    g.end = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid end");
    const std::string count_text = text.substr(c2 + 1);
    std::size_t pos = 0;
    try {
        g.count = std::stoi(count_text, &pos);
    } catch (...) {
        usage_error("invalid grid count '" + count_text + "'");
    }
    if (pos != count_text.size())
        usage_error("invalid grid count '" + count_text + "'");
    if (g.count < 2) usage_error("grid count must be at least 2");
    if (!(g.start < g.end)) usage_error("grid requires start < end");
    return g;
}

fslp::Interval parse_interval(const std::string& text) {
    const auto c = text.find(':');
    if (c == std::string::npos)
        usage_error("interval must be a:b, got '" + text + "'");
    return fslp::Interval(parse_double(text.substr(0, c), "interval start"),
                          parse_double(text.substr(c + 1), "interval end"));
}

int cmd_fss(const Settings& s, const std::string& equation,
            const std::string& alpha_text, std::optional<double> lambda,
            const std::string& interval_text, const std::string& grid_text) {
    const fslp::FractionalOrder alpha = parse_order(alpha_text);
    const fslp::Interval interval = parse_interval(interval_text);
    const GridSpec grid = parse_grid(grid_text);
    if (equation == "fe3" && !lambda)
        usage_error("fss: fe3 requires --lambda");

    const bool pair_output = equation != "fe2";
    std::vector<std::array<std::string, 3>> rows;
    rows.reserve(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) {
        const double t =
            i == 0 ? grid.start
                   : (i == grid.count - 1
                          ? grid.end
                          : grid.start + (grid.end - grid.start) * i /
                                             (grid.count - 1));
        std::array<std::string, 3> row{fmt_real(t, s.precision), "", ""};
        try {
            if (equation == "fe1") {
                const fslp::SolutionPair p = fe1_fss(alpha, interval, t);
                row[1] = fmt_real(p.y1, s.precision);
                row[2] = fmt_real(p.y2, s.precision);
            } else if (equation == "fe3") {
                const fslp::SolutionPair p = fe3_fss(alpha, *lambda, t);
                row[1] = fmt_real(p.y1, s.precision);
                row[2] = fmt_real(p.y2, s.precision);
            } else {
                row[1] = fmt_real(psi(alpha, interval, t), s.precision);
            }
        } catch (const fslp::domain_error& e) {
            if (!s.quiet)
                std::cerr << "fss: row t = " << row[0]
                          << " rejected: " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
    }

    // The natural emission for plot-ready sampling is CSV; an explicit
    // --format still selects json or an aligned table.
    const std::string fmt = s.format_given ? s.format : "csv";
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json o;
            o["t"] = parse_double(row[0], "t");
            if (pair_output) {
                o["y1"] = row[1].empty() ? ordered_json(nullptr)
                                         : ordered_json(parse_double(row[1], "y1"));
                o["y2"] = row[2].empty() ? ordered_json(nullptr)
                                         : ordered_json(parse_double(row[2], "y2"));
            } else {
                o["psi"] = row[1].empty()
                               ? ordered_json(nullptr)
                               : ordered_json(parse_double(row[1], "psi"));
            }
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> cells;
    if (pair_output)
        cells.push_back({"t", "y1", "y2"});
    else
        cells.push_back({"t", "psi"});
    for (const auto& row : rows) {
        if (pair_output)
            cells.push_back({row[0], row[1], row[2]});
        else
            cells.push_back({row[0], row[1]});
    }
    if (fmt == "csv") {
        for (const auto& row : cells) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) line += ',';
                line += row[c];
            }
            std::cout << line << "\n";
        }
    } else {
        print_aligned(cells);
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Fractional Dirichlet eigenvalue toolkit"};
    app.name("fslp");

    Settings s;
    std::string config_path;
    auto* format_opt =
        app.add_option("--format", s.format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "table"}))
            ->capture_default_str();
    auto* prec_opt =
        app.add_option("--precision", s.precision,
                       "Significant digits for printed reals")
            ->check(CLI::Range(1, 17))
            ->capture_default_str();
    app.add_option("--config", config_path,
                   "key=value settings file (FSLP_CONFIG as fallback)");
    app.add_flag("--quiet", s.quiet, "Suppress diagnostics on stderr");
    app.require_subcommand(0, 1);

    auto* sw = app.add_subcommand(
        "sweep", "Eigenvalue count and first/last root intervals per alpha");
    std::vector<std::string> alphas;
    bool refine = false;
    sw->add_option("--alpha", alphas,
                   "Fractional order (repeatable; default: 18 built-ins)");
    sw->add_flag("--refine", refine, "Also refine all eigenvalues");
    sw->fallthrough();

    auto* eg =
        app.add_subcommand("eig", "Full spectrum report for one alpha");
    std::string eig_alpha;
    double tol = 1e-10;
    eg->add_option("--alpha", eig_alpha, "Fractional order")->required();
    eg->add_option("--tol", tol, "Eigenvalue refinement tolerance")
        ->capture_default_str();
    eg->fallthrough();

    auto* mlc =
        app.add_subcommand("ml", "Evaluate the Mittag-Leffler function");
    double delta = 0.0, theta = 0.0, z = 0.0;
    mlc->add_option("--delta", delta, "First parameter, in (0, 2]")
        ->required();
    mlc->add_option("--theta", theta, "Second parameter")->required();
    mlc->add_option("--z", z, "Argument")->required();
    mlc->fallthrough();

    auto* fs = app.add_subcommand(
        "fss", "Sample a fundamental solution set on a grid");
    std::string equation, fss_alpha, grid_text;
    std::string interval_text = "0:1";
    double fss_lambda = 0.0;
    fs->add_option("--equation", equation, "One of fe1, fe2, fe3")
        ->required()
        ->check(CLI::IsMember({"fe1", "fe2", "fe3"}));
    fs->add_option("--alpha", fss_alpha, "Fractional order")->required();
    auto* lam_opt = fs->add_option("--lambda", fss_lambda,
                                   "Eigenvalue parameter (fe3 only)");
    fs->add_option("--interval", interval_text, "a:b (fe1/fe2)")
        ->capture_default_str();
    fs->add_option("--grid", grid_text, "start:end:count")->required();
    fs->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    s.format_given = format_opt->count() > 0;
    s.precision_given = prec_opt->count() > 0;
    if (config_path.empty()) {
        const char* env = std::getenv("FSLP_CONFIG");
        if (env && *env) config_path = env;
    }
    if (!config_path.empty()) apply_config_file(config_path, s);

    if (sw->parsed()) return cmd_sweep(s, alphas, refine);
    if (eg->parsed()) return cmd_eig(s, eig_alpha, tol);
    if (mlc->parsed()) return cmd_ml(s, delta, theta, z);
    if (fs->parsed())
        return cmd_fss(s, equation, fss_alpha,
                       lam_opt->count() ? std::optional<double>(fss_lambda)
                                        : std::nullopt,
                       interval_text, grid_text);
    return cmd_sweep(s, {}, false);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fslp::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fslp::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
