#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fslp/decomposition.hpp"
#include "fslp/spectrum.hpp"

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string err_path = "/tmp/fslp_test_cli_stderr.txt";
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(FSLP_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

constexpr const char* kHeader =
    "alpha,eigen_count,I0_lo,I0_hi,Ilast_lo,Ilast_hi,oracle_agrees";

} // namespace

TEST_CASE("table row for a single order") {
    const RunResult r = run_cli("sweep --alpha 0.90 --format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == kHeader);
    CHECK(ls[1] == "0.90,8,3.36728,6.55734,22.5076,25.6977,true");
}

TEST_CASE("empty spectrum leaves the interval cells blank") {
    const RunResult r = run_cli("sweep --alpha 0.78 --format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1] == "0.78,0,,,,,true");
}

TEST_CASE("alpha is echoed exactly as written") {
    const RunResult r = run_cli("sweep --alpha 0.9800 --format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1].rfind("0.9800,84,", 0) == 0);
}

TEST_CASE("runs are byte-identical") {
    const std::string args = "sweep --alpha 0.86 --alpha 0.92 --format csv";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    const auto ls = lines(a.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1] == "0.86,4,3.51148,6.75866,10.0058,13.253,true");
    CHECK(ls[2] == "0.92,10,3.309,6.48013,28.678,31.8492,true");
}

TEST_CASE("out-of-range orders exit with usage failure") {
    CHECK(run_cli("sweep --alpha 1.2").code == 2);
    CHECK(run_cli("sweep --alpha 0.3").code == 2);
    CHECK(run_cli("sweep --alpha 0.5").code == 2);
    CHECK(run_cli("sweep --alpha 1").code == 2);
    CHECK(run_cli("eig --alpha 1.0").code == 2);
}

TEST_CASE("parser errors and help") {
    CHECK(run_cli("bogus_subcommand").code == 2);
    CHECK(run_cli("sweep --format yaml").code == 2);
    CHECK(run_cli("--precision 0 sweep --alpha 0.8").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("sweep --help").code == 0);
}

TEST_CASE("table json carries numbers and nulls") {
    const RunResult r = run_cli("sweep --alpha 0.86 --alpha 0.78 --format json");
    REQUIRE(r.code == 0);
    const ordered_json arr = ordered_json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["alpha"] == "0.86");
    CHECK(arr[0]["eigen_count"] == 4);
    CHECK(arr[0]["I0_lo"].get<double>() == doctest::Approx(3.51148).epsilon(1e-5));
    CHECK(arr[0]["Ilast_hi"].get<double>() == doctest::Approx(13.253).epsilon(1e-5));
    CHECK(arr[0]["oracle_agrees"] == true);
    CHECK(arr[1]["alpha"] == "0.78");
    CHECK(arr[1]["eigen_count"] == 0);
    CHECK(arr[1]["I0_lo"].is_null());
    CHECK(arr[1]["Ilast_hi"].is_null());
}

TEST_CASE("eigenvalue report json has the fixed field layout") {
    const RunResult r = run_cli("eig --alpha 0.84 --format json");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> want = {
        "alpha",       "n_star",       "eigen_count", "brackets",
        "eigenvalues", "oracle_count", "oracle_agrees"};
    CHECK(keys == want);
    CHECK(j["alpha"].get<double>() == doctest::Approx(0.84).epsilon(1e-12));
    CHECK(j["n_star"] == 1);
    CHECK(j["eigen_count"] == 2);
    REQUIRE(j["brackets"].size() == 1);
    const ordered_json& b = j["brackets"][0];
    CHECK(b["n"] == 0);
    CHECK(b["lambda_lo"].get<double>() < b["lambda_hi"].get<double>());
    CHECK(b["rho_lo"].get<double>() == doctest::Approx(3.60076).epsilon(1e-5));
    CHECK(b["rho_hi"].get<double>() == doctest::Approx(6.88842).epsilon(1e-5));
    REQUIRE(j["eigenvalues"].size() == 2);
    for (const auto& ev : j["eigenvalues"]) {
        CHECK(ev["residual"].get<double>() <= 1e-10);
        CHECK(ev["bracket"] == 0);
        CHECK(ev["lambda"].get<double>() > b["lambda_lo"].get<double>());
        CHECK(ev["lambda"].get<double>() < b["lambda_hi"].get<double>());
    }
    CHECK(j["oracle_count"] == 2);
    CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("eigenvalue report csv") {
    const RunResult r = run_cli("eig --alpha 0.84 --format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "lambda,residual,bracket");
    CHECK(ls[1].back() == '0');
    CHECK(ls[2].back() == '0');
}

TEST_CASE("ml evaluation picks the documented branch") {
    const RunResult series = run_cli("ml --delta 1.8 --theta 2 --z -50");
    REQUIRE(series.code == 0);
    CHECK(series.out.find("branch=series") != std::string::npos);
    {
        const double got = std::strtod(series.out.c_str(), nullptr);
        CHECK(std::fabs(got - 0.026486761460130643) < 1e-12);
    }

    const RunResult split = run_cli("ml --delta 1.2 --theta 2 --z -100");
    REQUIRE(split.code == 0);
    CHECK(split.out.find("branch=decomposition") != std::string::npos);
    {
        const double got = std::strtod(split.out.c_str(), nullptr);
        CHECK(std::fabs(got - 0.0086166719281482264559) < 1e-10);
    }

    const RunResult closed = run_cli("ml --delta 2 --theta 2 --z -100");
    REQUIRE(closed.code == 0);
    CHECK(closed.out.find("branch=closed-form") != std::string::npos);
    {
        const double got = std::strtod(closed.out.c_str(), nullptr);
        CHECK(std::fabs(got - -0.0544021110889369813) < 1e-15);
    }

    const RunResult asym = run_cli("ml --delta 0.9 --theta 1 --z -45");
    REQUIRE(asym.code == 0);
    CHECK(asym.out.find("branch=asymptotic") != std::string::npos);

    CHECK(run_cli("ml --delta 3 --theta 1 --z 1").code == 2);
    CHECK(run_cli("ml --delta 1.5 --theta 2").code == 2);
}

TEST_CASE("ml csv and json formats") {
    const RunResult csv = run_cli("ml --delta 1.8 --theta 2 --z -5 --format csv");
    REQUIRE(csv.code == 0);
    const auto ls = lines(csv.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "value,branch");
    CHECK(ls[1].find(",series") != std::string::npos);

    const RunResult js = run_cli("ml --delta 1.8 --theta 2 --z -5 --format json");
    REQUIRE(js.code == 0);
    const ordered_json j = ordered_json::parse(js.out);
    CHECK(j["value"].get<double>() ==
          doctest::Approx(0.269168672242330801).epsilon(1e-12));
    CHECK(j["branch"] == "series");
}

TEST_CASE("solution sampling emits csv by default") {
    const RunResult r =
        run_cli("fss --equation fe1 --alpha 0.5 --interval 0:1 --grid 0:1:5");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "t,y1,y2");
    // t = 0 sits outside the domain of the singular branch: cells stay
    // blank and the row is reported on stderr.
    CHECK(ls[1] == "0,,");
    CHECK(r.err.find("rejected") != std::string::npos);
    CHECK(ls[5] == "1,0.56419,1.12838");
}

TEST_CASE("solution sampling stays quiet when asked") {
    const RunResult r = run_cli(
        "--quiet fss --equation fe1 --alpha 0.5 --interval 0:1 --grid 0:1:3");
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
}

TEST_CASE("eigenparameter pair on a grid") {
    const RunResult r = run_cli(
        "fss --equation fe3 --alpha 0.75 --lambda 5 --grid 0.25:0.5:2");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "t,y1,y2");
    CHECK(ls[2].rfind("0.5,", 0) == 0);
    double t, y1, y2;
    REQUIRE(std::sscanf(ls[2].c_str(), "%lf,%lf,%lf", &t, &y1, &y2) == 3);
    CHECK(y1 == doctest::Approx(-0.208011870110059692).epsilon(1e-5));
    CHECK(y2 == doctest::Approx(0.330662407206122195).epsilon(1e-5));

    CHECK(run_cli("fss --equation fe3 --alpha 0.75 --grid 0:1:3").code == 2);
}

TEST_CASE("companion solution on a grid") {
    const RunResult r = run_cli(
        "fss --equation fe2 --alpha 0.75 --interval 1:2 --grid 1:2:3");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "t,psi");
    CHECK(ls[1] == "1,0");
    double t, p;
    REQUIRE(std::sscanf(ls[2].c_str(), "%lf,%lf", &t, &p) == 2);
    CHECK(p == doctest::Approx(0.578229309982714338).epsilon(1e-5));
    REQUIRE(std::sscanf(ls[3].c_str(), "%lf,%lf", &t, &p) == 2);
    CHECK(p == doctest::Approx(1.33187174200680105).epsilon(1e-5));
}

TEST_CASE("solution sampling as json marks rejected rows with null") {
    const RunResult r = run_cli(
        "--format json fss --equation fe1 --alpha 0.5 --interval 0:1 --grid 0:1:3");
    REQUIRE(r.code == 0);
    const ordered_json arr = ordered_json::parse(r.out);
    REQUIRE(arr.size() == 3);
    CHECK(arr[0]["t"] == 0.0);
    CHECK(arr[0]["y1"].is_null());
    CHECK(arr[0]["y2"].is_null());
    CHECK(arr[2]["y1"].get<double>() ==
          doctest::Approx(0.564189583547756287).epsilon(1e-5));
}

TEST_CASE("grid validation") {
    CHECK(run_cli("fss --equation fe1 --alpha 0.6 --grid 1:0:5").code == 2);
    CHECK(run_cli("fss --equation fe1 --alpha 0.6 --grid 0:1:1").code == 2);
    CHECK(run_cli("fss --equation fe1 --alpha 0.6 --grid 0:1").code == 2);
    CHECK(run_cli("fss --equation fe4 --alpha 0.6 --grid 0:1:4").code == 2);
}

TEST_CASE("config file adjusts evaluation settings") {
    const std::string path = "/tmp/fslp_test_config.txt";
    {
        std::ofstream cfg(path);
        cfg << "# evaluation overrides\n"
            << "ml_switch_radius = 50\n"
            << "quad_abs_tol = 1e-11\n";
    }
    // Radius 50 keeps |z| = 45 on the series side instead of asymptotic.
    const RunResult r =
        run_cli("--config " + path + " ml --delta 0.9 --theta 1 --z -45");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("branch=series") != std::string::npos);

    const RunResult env =
        run_cli("ml --delta 0.9 --theta 1 --z -45", "FSLP_CONFIG=" + path);
    REQUIRE(env.code == 0);
    CHECK(env.out.find("branch=series") != std::string::npos);

    {
        std::ofstream cfg(path);
        cfg << "unknown_knob = 1\n";
    }
    CHECK(run_cli("--config " + path + " sweep --alpha 0.8").code == 2);
    CHECK(run_cli("--config /tmp/does_not_exist_fslp sweep --alpha 0.8").code ==
          2);
    std::remove(path.c_str());
}

TEST_CASE("precision flag controls printed digits") {
    const RunResult r =
        run_cli("sweep --alpha 0.90 --precision 9 --format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    const fslp::DecompositionContext ctx{fslp::FractionalOrder(0.90)};
    const fslp::EigenvalueBracket b0 = fslp::negative_interval(ctx, 0);
    char want[32];
    std::snprintf(want, sizeof want, "%.9g", b0.rho_lo);
    CHECK(ls[1].find(std::string(",") + want + ",") != std::string::npos);
}

TEST_CASE("default invocation produces the full table") {
    const RunResult r = run_cli("--format csv");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 19);
    CHECK(ls[0] == kHeader);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        CAPTURE(ls[i]);
        CHECK(ls[i].substr(ls[i].rfind(',') + 1) == "true");
    }
    CHECK(ls[1].rfind("0.78,", 0) == 0);
    CHECK(ls[18] == "0.9898,200,3.15819,6.3002,625.275,628.417,true");
}
