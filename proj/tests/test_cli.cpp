// End-to-end checks of the command-line binary: exit codes, artifact
// creation, and byte-level determinism. The binary path is injected by the
// build as BALAW_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BALAW_CLI_PATH
#error "BALAW_CLI_PATH must be defined by the build"
#endif

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BALAW_CLI_PATH) + " " + args + " > cli_stdout.txt 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fresh_dir(const std::string& name) {
    fs::remove_all(name);
    return name;
}

const std::string small_run =
    "--set data.amplitude=0.02 --set data.power=2 "
    "--set mesh.h=0.04 --set mesh.X=4 --set mesh.T=0.2 ";

} // namespace

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("simulate --help") == 0);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--set a=1") == 2);
}

TEST_CASE("simulate runs and writes artifacts") {
    const std::string dir = fresh_dir("cli_sim");
    CHECK(run_cli("simulate " + small_run + "--out " + dir + " --quiet") == 0);
    CHECK(fs::exists(dir + "/diagnostics.csv"));
    CHECK(fs::exists(dir + "/snapshot_000.csv"));
    const std::string diag = slurp(dir + "/diagnostics.csv");
    CHECK(diag.find("# version: ") != std::string::npos);
    CHECK(diag.find("# config: mesh.h = 0.04") != std::string::npos);
}

TEST_CASE("equilibrium simulate yields an all-zero diagnostics table") {
    const std::string dir = fresh_dir("cli_equilibrium");
    CHECK(run_cli("simulate --set data.amplitude=0 --set mesh.h=0.05 --set mesh.X=2 "
                  "--set mesh.T=0.2 --out " +
                  dir + " --quiet") == 0);
    std::ifstream in(dir + "/diagnostics.csv");
    REQUIRE(in);
    std::string line;
    bool header_seen = false;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        ++rows;
        std::istringstream ls(line);
        std::string cell;
        int col = 0;
        while (std::getline(ls, cell, ',')) {
            if (col++ == 0) continue; // time column
            CHECK(std::strtod(cell.c_str(), nullptr) == 0.0);
        }
    }
    CHECK(rows == 8);
}

TEST_CASE("same config and seed give byte-identical outputs") {
    const std::string dir_a = fresh_dir("cli_det_a");
    const std::string dir_b = fresh_dir("cli_det_b");
    const std::string seeded = small_run + "--set sampling.kind=prng --seed 7 --quiet --out ";
    CHECK(run_cli("simulate " + seeded + dir_a) == 0);
    CHECK(run_cli("simulate " + seeded + dir_b) == 0);
    CHECK(slurp(dir_a + "/diagnostics.csv") == slurp(dir_b + "/diagnostics.csv"));
    CHECK(slurp(dir_a + "/snapshot_000.csv") == slurp(dir_b + "/snapshot_000.csv"));
}

TEST_CASE("config problems exit 2") {
    CHECK(run_cli("simulate --set mesh.unknown=1 --quiet --out " + fresh_dir("cli_e1")) == 2);
    CHECK(run_cli("simulate --set mesh.h=abc --quiet --out " + fresh_dir("cli_e2")) == 2);
    CHECK(run_cli("simulate --config /nonexistent.cfg --quiet --out " + fresh_dir("cli_e3")) ==
          2);
    CHECK(run_cli("simulate --set data.family=bogus --quiet --out " + fresh_dir("cli_e4")) == 2);
    CHECK(run_cli("simulate --set data.power=0.5 --quiet --out " + fresh_dir("cli_e5")) == 2);
}

TEST_CASE("amplitude guard aborts exit 3") {
    CHECK(run_cli("simulate --set data.amplitude=0.2 --set data.power=2 "
                  "--set model.rho0=0.05 --set mesh.h=0.05 --set mesh.X=2 --set mesh.T=0.1 "
                  "--set mesh.boundary_tol=1 --quiet --out " +
                  fresh_dir("cli_guard")) == 3);
}

TEST_CASE("unwritable output directory exits 4") {
    CHECK(run_cli("simulate " + small_run + "--quiet --out /proc/balaw_forbidden") == 4);
}

TEST_CASE("riemann subcommand writes the fan table") {
    const std::string dir = fresh_dir("cli_riemann");
    CHECK(run_cli("riemann --set data.left_v=0.04 --set data.right_v=-0.02 "
                  "--set data.right_u=1.06 --set riemann.samples=51 --out " +
                  dir + " --quiet") == 0);
    const std::string csv = slurp(dir + "/riemann_fan.csv");
    CHECK(csv.find("xi,w1,w2,v,u") != std::string::npos);
    CHECK(csv.find("# gamma_minus = ") != std::string::npos);
}

TEST_CASE("config file plus --set override") {
    const std::string cfg_path = "cli_file.cfg";
    {
        std::ofstream os(cfg_path);
        os << "data.amplitude = 0.02\ndata.power = 2\n"
           << "mesh.h = 0.04\nmesh.X = 4\nmesh.T = 0.2\n";
    }
    const std::string dir = fresh_dir("cli_cfgfile");
    CHECK(run_cli("simulate --config " + cfg_path + " --set mesh.T=0.1 --out " + dir +
                  " --quiet") == 0);
    const std::string diag = slurp(dir + "/diagnostics.csv");
    CHECK(diag.find("# config: mesh.T = 0.1") != std::string::npos);
}
