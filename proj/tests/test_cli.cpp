#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr goes to /dev/null unless the command redirects it.
Run zf(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" ZF_CLI_PATH "' " + args +
                            (args.find("2>&1") == std::string::npos ? " 2>/dev/null" : "");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++c;
    return c;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "zf_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("solve from a family spec") {
    auto r = zf("--family path:5");
    CHECK(r.code == 0);
    CHECK(r.out == "Z=1 witness=[0]\n");

    r = zf("--family complete:4");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Z=3 ", 0) == 0);

    r = zf("--family cycle:6 --trace");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Z=2 ", 0) == 0);
    CHECK(count(r.out, " -> ") == 4);
}

TEST_CASE("solve json output") {
    const auto r = zf("--family wheel:4 --output-format json --trace");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"Z\":3") != std::string::npos);
    CHECK(r.out.find("\"trace\"") != std::string::npos);
}

TEST_CASE("solve from stdin and files") {
    auto r = zf("--input - < /dev/null");
    CHECK(r.code == 2);

    const auto g6 = scratch("c5.g6");
    std::ofstream(g6) << "Dhc\n";
    r = zf("--input '" + g6.string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("Z=2 ", 0) == 0);

    const auto el = scratch("p3.txt");
    std::ofstream(el) << "# a path\n3 2\n0 1\n1 2\n";
    r = zf("--input - < '" + el.string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out == "Z=1 witness=[0]\n");
    r = zf("--format graph6 --input '" + el.string() + "'");
    CHECK(r.code == 2);
}

TEST_CASE("solve errors and budget") {
    CHECK(zf("--family bogus:3").code == 2);
    CHECK(zf("--family cycle:2").code == 2);
    CHECK(zf("").code == 2);
    CHECK(zf("--family path:3 --input x").code == 2);
    CHECK(zf("--family path:8", "ZF_BUDGET_VERTICES=5").code == 3);
    CHECK(zf("--family path:8 --cap 10", "ZF_BUDGET_VERTICES=5").code == 0);
    CHECK(zf("--family path:8", "ZF_BUDGET_VERTICES=abc").code == 2);
    CHECK(zf("--family path:25").code == 3);
}

TEST_CASE("product subcommand") {
    auto r = zf("product corona --g path:2 --h path:2");
    CHECK(r.code == 0);
    CHECK(r.out.size() == 5);
    CHECK(r.out[0] == 'E');

    r = zf("product lex --g path:3 --h path:2 --format edgelist");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("6 11\n", 0) == 0);

    r = zf("product corona --g path:2 --h path:2 -k 2 --format edgelist");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("18 ", 0) == 0);

    r = zf("product join --g path:2 --h empty:1 --format edgelist");
    CHECK(r.out.rfind("3 3\n", 0) == 0);

    r = zf("product corona --g path:2 --h path:2 --labels - --output /dev/null");
    CHECK(r.code == 0);
    CHECK(r.out.find("u^1_1") != std::string::npos);

    CHECK(zf("product corona --g path:2").code == 2);
    CHECK(zf("product cube --g path:2 --h path:2").code == 2);
    CHECK(zf("product corona --g path:4 --h path:4 -k 6").code == 3);
}

TEST_CASE("family subcommand round-trips through solve") {
    const auto f = scratch("w5.g6");
    CHECK(zf("family wheel:5 --output '" + f.string() + "'").code == 0);
    const auto r = zf("--input '" + f.string() + "'");
    CHECK(r.out.rfind("Z=3 ", 0) == 0);
}

TEST_CASE("verify subcommand") {
    auto r = zf("verify --claims C3 --grid 'G=path:2..3;H=path:2;k=1..1'");
    CHECK(r.code == 0);
    CHECK(count(r.out, "\"status\": \"EQUAL\"") == 2);

    r = zf("verify --claims C6,C7 --grid 'n=3..6' --format csv");
    CHECK(r.code == 0);
    CHECK(count(r.out, "\n") == 9);
    CHECK(count(r.out, ",EQUAL,") == 8);

    r = zf("verify --claims C99 2>&1");
    CHECK(r.code == 2);
    CHECK(r.out.find("unknown claim") != std::string::npos);

    r = zf("verify --claims C3 --grid 'G=path:2..3;H=path:2;k=1' --perturb-rhs C3=1 --format csv");
    CHECK(r.code == 1);
    CHECK(count(r.out, ",VIOLATION,") == 2);

    CHECK(zf("verify --claims C14 --grid 'G=path:3;H=path:2' --budget 4").code == 3);
    CHECK(zf("verify --claims C3 --grid 'G=path:2;H=bogus:2;k=1'").code == 2);
    CHECK(zf("verify --claims C3 --perturb-rhs C3").code == 2);
}

TEST_CASE("verify output is deterministic across runs and job counts") {
    const std::string args = "verify --claims C8,C13,C20 --grid 'G=path:2..3,cycle:3;H=path:2,empty:2;k=1'";
    const auto a = zf(args);
    const auto b = zf(args + " --jobs 3");
    const auto c = zf(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    const auto f = scratch("report.json");
    CHECK(zf(args + " --out '" + f.string() + "'").out.empty());
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
}
