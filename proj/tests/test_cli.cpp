#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

namespace {

std::string cli_path;
std::string work_dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_file = work_dir + "/out.txt";
    const std::string cmd = cli_path + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void write_file(const std::string& name, const std::string& content) {
    std::ofstream(work_dir + "/" + name) << content;
}

std::string path(const std::string& name) { return work_dir + "/" + name; }

nlohmann::json first_line_json(const std::string& s) {
    return nlohmann::json::parse(s.substr(0, s.find('\n')));
}

} // namespace

TEST_CASE("hom subcommand") {
    auto r = run("hom --H " + path("k3.json") + " --G " + path("k3.json"));
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out).at("hom") == "6");

    r = run("hom --H cycle:4 --G " + path("k3.json"));
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out).at("hom") == "18");

    r = run("hom --H kq:2 --G " + path("g0.json"));
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out).at("hom") == "6");

    CHECK(run("hom --H missing.json --G kq:3").exit_code == 2);
    CHECK(run("hom --H " + path("bad.json") + " --G kq:3").exit_code == 2);
}

TEST_CASE("certify subcommand") {
    auto r = run("certify afm --G " + path("g0.json"));
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out).at("positive_eigenvalue_count") == 1);

    CHECK(run("certify afm --G " + path("two_k2.json")).exit_code == 1);

    CHECK(run("certify lorentzian --chromatic multipartite:3,3 kq:3").exit_code == 1);
    CHECK(run("certify lorentzian --chromatic kq:4 kq:5").exit_code == 0);
    r = run("certify lorentzian --chromatic path:2 " + path("g0.json"));
    CHECK(r.exit_code == 1);
    CHECK(first_line_json(r.out).contains("failure"));
    CHECK(run("certify lorentzian").exit_code == 2);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify bipartite-swap --H kq:3 --G " + path("k3.json"));
    CHECK(r.exit_code == 0);
    const auto v = first_line_json(r.out);
    CHECK(v.at("lhs") == "36");
    CHECK(v.at("rhs") == "66");

    CHECK(run("verify cross-bipartite --H path:3 --Kq 4").exit_code == 0);

    r = run("verify bipartite-swap --H kq:3 --G " + path("two_k3.json"));
    CHECK(r.exit_code == 1);
    CHECK(first_line_json(r.out).contains("witness"));

    r = run("verify weighted-cross --H kq:3 --G " + path("g0.json") +
            " --trials 5 --seed 3 --out " + path("w.jsonl"));
    CHECK(r.exit_code == 0);
    std::ifstream w(path("w.jsonl"));
    std::string line;
    int lines = 0;
    while (std::getline(w, line))
        ++lines;
    CHECK(lines == 5);
}

TEST_CASE("search subcommand") {
    auto r = run("search zhao --n-max 3 --q 2..3 --out " + path("zhao.jsonl"));
    CHECK(r.exit_code == 0);

    // Resumable: a budgeted run plus a resumed run cover the same instances.
    const std::string ckpt = path("ckpt.json");
    std::remove(ckpt.c_str());
    r = run("search zhao --n-max 3 --q 2..3 --budget 3 --resume " + ckpt + " --out " +
            path("z1.jsonl"));
    CHECK(r.exit_code == 0);
    r = run("search zhao --n-max 3 --q 2..3 --resume " + ckpt + " --out " + path("z2.jsonl"));
    CHECK(r.exit_code == 0);
    std::ifstream a(path("zhao.jsonl")), b1(path("z1.jsonl")), b2(path("z2.jsonl"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b1.rdbuf() << b2.rdbuf();
    CHECK(sa.str() == sb.str());

    CHECK(run("search cross-bipartite --family cycles --q 2..3").exit_code == 0);
    CHECK(run("search afm-swap --n-max 3 --afm-seed 7 --budget 6").exit_code == 0);
}

TEST_CASE("formulas subcommand") {
    auto r = run("formulas cycle --d 2 --a 3 --b 3 --oracle");
    CHECK(r.exit_code == 0);
    auto j = first_line_json(r.out);
    CHECK(j.at("value") == "18");
    CHECK(j.at("delta") == "0");

    r = run("formulas multipartite --parts 2,1 --a 3 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(first_line_json(r.out).at("value") == "12");

    r = run("formulas path-odd --d 1 --a 2 --b 3");
    CHECK(r.exit_code == 0);
    j = first_line_json(r.out);
    CHECK(j.at("value") == "4");
    CHECK_FALSE(j.contains("delta"));

    CHECK(run("formulas path-even --d 2 --a 2 --b 4 --side ba --oracle").exit_code == 0);
    CHECK(run("formulas multipartite-first --s1 1 --parts 1 --a 2 --b 3 --oracle").exit_code ==
          0);
    CHECK(run("formulas cycle --d 2 --a 1 --b 3").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 2;
    }
    cli_path = argv[1];
    const char* tmp = std::getenv("TMPDIR");
    work_dir = std::string(tmp ? tmp : "/tmp") + "/homlor-cli-test";
    std::filesystem::create_directories(work_dir);
    write_file("k3.json", R"({"n":3,"weights":[[0,1,1],[1,0,1],[1,1,0]]})");
    write_file("g0.json", R"({"n":3,"weights":[["0","0","1"],["0","0","2"],["1","2","0"]]})");
    write_file("two_k3.json", R"({"n":6,"weights":[
        [0,1,1,0,0,0],[1,0,1,0,0,0],[1,1,0,0,0,0],
        [0,0,0,0,1,1],[0,0,0,1,0,1],[0,0,0,1,1,0]]})");
    write_file("two_k2.json", R"({"n":4,"weights":[[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]]})");
    write_file("bad.json", "{not json");

    doctest::Context ctx(argc - 1, argv + 1);
    return ctx.run();
}
