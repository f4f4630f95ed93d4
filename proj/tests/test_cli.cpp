#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string path = std::string(SPINLAB_BIN);
    const std::string outfile = "/tmp/spinlab_cli_test_out.txt";
    const int status = std::system((path + " " + args + " > " + outfile + " 2>&1").c_str());
    std::ifstream f(outfile);
    std::ostringstream os;
    os << f.rdbuf();
    return {WEXITSTATUS(status), os.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("algebra subcommand") {
    RunResult r = run("algebra \"(0,0,12,13)\" --check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "nilpotent"));

    r = run("algebra \"(0,0,0,0)\"");
    CHECK(r.exit_code == 0);

    r = run("algebra \"(0,0,1x)\"");  // malformed: parse error, exit 2
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "position"));

    r = run("algebra \"(0,0,12,34)\" --check");  // Jacobi failure: exit 1
    CHECK(r.exit_code == 1);

    r = run("algebra \"(0,0,12,13)\" --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"schema\":1"));
    CHECK(contains(r.out, "\"nilpotent_frame\":true"));

    // file input with param lines
    {
        std::ofstream f("/tmp/spinlab_cli_test_alg.txt");
        f << "dim 5\norientation +1\nparam s = sqrt(2)\nd e5 = s*e12 + s*e34\n";
    }
    r = run("invariants /tmp/spinlab_cli_test_alg.txt --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"harmonic\":true"));
}

TEST_CASE("dirac subcommand") {
    RunResult r = run("dirac N5,6 -p mu12=1 -p mu34=-1 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"kernel_dim\":4"));

    r = run("dirac L3+A1 -p mu12=1 --expect-kernel");
    CHECK(r.exit_code == 1);

    r = run("dirac \"(0,0,0,0,0)\" --json");
    CHECK(contains(r.out, "\"kernel_dim\":8"));

    r = run("dirac N5,6 -p mu12=1 -p mu34=-1 --squared --spectrum");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "16*D^2"));
}

TEST_CASE("invariants subcommand") {
    RunResult r = run("invariants N5,6 -p mu12=1 -p mu34=-1 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"mu\":2"));
    CHECK(contains(r.out, "\"harmonic\":true"));

    r = run("invariants \"(0,0,0,0,0,12)\" --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"gamma\""));
}

TEST_CASE("structure subcommand") {
    RunResult r = run("structure N5,6 -p mu12=1 -p mu34=-1 --su2 --torsion --hypo --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"hypo\":true"));

    r = run("structure \"(0,0,0,0,0,12)\" --su3 --vector 1,0,0,0,0,0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "theta_plus"));

    r = run("structure \"(0,0,0,0,0,12)\" --su3 --vector 2,0,0,0,0,0,0,0");
    CHECK(r.exit_code == 2);  // non-unit vector

    // kernel indexing
    r = run("structure N5,6 -p mu12=1 -p mu34=-1 --su2 --spinor 3");
    CHECK(r.exit_code == 0);
    r = run("structure N5,6 -p mu12=1 -p mu34=-1 --su2 --spinor 4");
    CHECK(r.exit_code == 2);  // kernel dimension is 4
    r = run("structure N5,6 -p mu12=1 -p mu34=2 --su2");  // trivial kernel
    CHECK(r.exit_code == 2);
}

TEST_CASE("lift subcommand") {
    RunResult r = run("lift N5,6 -p mu12=1 -p mu34=-1 --torus 3 --check-balanced --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"balanced\":true"));

    // abelian: parallel
    r = run("lift \"(0,0,0,0,0)\" --vector 1,0,0,0,0,0,0,0 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"parallel\":true"));

    // non-harmonic control: not balanced
    r = run("lift N5,6 -p mu12=1 -p mu34=2 --vector 1,0,0,0,0,0,0,0 --check-balanced --json");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "\"balanced\":false"));
}

TEST_CASE("scan subcommand") {
    RunResult r = run("scan N5,6 --grid mu12=-1:1:5,mu34=-1:1:5 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"hit_count\":8"));

    r = run("scan Nope --grid a=0:1:2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify-paper single claims") {
    RunResult r = run("verify-paper --claim Thm6.5/N5,3 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"id\":\"Thm6.5/N5,3\""));
    CHECK(contains(r.out, "\"status\":\"pass\""));
    CHECK(contains(r.out, "max_kernel_dim"));

    r = run("verify-paper --claim bogus");
    CHECK(r.exit_code == 2);
}
