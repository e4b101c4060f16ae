#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ascheme/fixtures.hpp"
#include "ascheme/io.hpp"
#include "ascheme/semidirect.hpp"

using namespace ascheme;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the built binary with stdout captured and stderr discarded; the
// contract under test is (exit code, stdout bytes).
CliRun run_cli(const std::string& args, const fs::path& dir) {
    static int seq = 0;
    fs::path outfile = dir / ("cli_out_" + std::to_string(seq++) + ".txt");
    std::string cmd = std::string(ASCHEME_CLI_PATH) + " " + args + " > " +
                      outfile.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    run.output = read_file(outfile);
    return run;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("ascheme_cli_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

// Generated example files shared by the following cases.
struct ExampleDir {
    TempDir dir;
    CliRun gen;
    ExampleDir() { gen = run_cli("example6 --outdir " + dir.path.string(), dir.path); }
};

} // namespace

TEST_CASE("example generation reports the product and writes every file") {
    ExampleDir ex;
    CHECK(ex.gen.exit_code == 0);
    CHECK(contains(ex.gen.output, "order: 12"));
    CHECK(contains(ex.gen.output, "rank: 6"));
    CHECK(contains(ex.gen.output, "valency multiset: 1 1 2 2 3 3"));
    CHECK(contains(ex.gen.output, "closed subsets: 5"));
    CHECK(contains(ex.gen.output, "reference isomorphic: true"));
    CHECK(contains(ex.gen.output, "round trip: true"));
    CHECK(contains(ex.gen.output, "verdict: true"));
    for (const char* name : {"t3.scm", "u4.scm", "s12.scm", "s12.labels",
                             "s12_reference.scm", "example.act", "example_u.scm",
                             "example_t.scm"})
        CHECK(fs::exists(ex.dir.path / name));

    // every generated scheme file reparses to the in-memory original
    CHECK(same_scheme(load_scheme(ex.dir.file("s12.scm")),
                      *fixtures::order12_product().scheme));
    CHECK(same_scheme(load_scheme(ex.dir.file("t3.scm")),
                      *fixtures::triangle_scheme()));
    CHECK(same_scheme(load_scheme(ex.dir.file("u4.scm")),
                      *fixtures::cyclic_scheme(4)));
    CHECK(same_scheme(load_scheme(ex.dir.file("s12_reference.scm")),
                      *fixtures::order12_reference_relabeling()));

    SUBCASE("repeated runs are byte-identical") {
        ExampleDir again;
        // strip the directory-dependent `wrote:` lines before comparing
        auto strip = [](const std::string& text) {
            std::istringstream in(text);
            std::string line, kept;
            while (std::getline(in, line))
                if (line.rfind("wrote:", 0) != 0) kept += line + "\n";
            return kept;
        };
        CHECK(strip(again.gen.output) == strip(ex.gen.output));
        CHECK(read_file(again.dir.path / "s12.scm") ==
              read_file(ex.dir.path / "s12.scm"));
        CHECK(read_file(again.dir.path / "example.act") ==
              read_file(ex.dir.path / "example.act"));
        CHECK(read_file(again.dir.path / "s12.labels") ==
              read_file(ex.dir.path / "s12.labels"));
    }
}

TEST_CASE("verify reports shape and uses the verdict exit codes") {
    ExampleDir ex;
    CliRun ok = run_cli("verify " + ex.dir.file("s12.scm"), ex.dir.path);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "order: 12"));
    CHECK(contains(ok.output, "thin: false"));
    CHECK(contains(ok.output, "symmetric: false"));
    CHECK(contains(ok.output, "valid: true"));

    // parseable but violating the regularity axiom: negative verdict
    std::ofstream(ex.dir.file("irr.scm")) << "3 3 0\n0 1 2\n1 0 1\n2 1 0\n";
    CHECK(run_cli("verify " + ex.dir.file("irr.scm"), ex.dir.path).exit_code == 1);

    // unreadable input
    std::ofstream(ex.dir.file("bad.scm")) << "garbage\n";
    CHECK(run_cli("verify " + ex.dir.file("bad.scm"), ex.dir.path).exit_code == 2);
    CHECK(run_cli("verify " + ex.dir.file("missing.scm"), ex.dir.path).exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    TempDir dir;
    CHECK(run_cli("bogusverb", dir.path).exit_code == 2);
    CHECK(run_cli("", dir.path).exit_code == 2);
    CHECK(run_cli("quotient", dir.path).exit_code == 2);   // missing file
    CHECK(run_cli("iso onlyone.scm", dir.path).exit_code == 2);
    CHECK(run_cli("--help", dir.path).exit_code == 0);
}

TEST_CASE("quotient closes the seed and emits a reparseable scheme") {
    ExampleDir ex;
    std::string out = ex.dir.file("q.scm");
    CliRun run = run_cli("quotient " + ex.dir.file("s12.scm") + " --subset 1 -o " + out,
                         ex.dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "closure: 0 1"));
    CHECK(contains(run.output, "relation map: 0 0 1 2 2 3"));
    CHECK(contains(run.output, "rank: 4"));
    CHECK(contains(run.output, "thin: true"));
    Scheme q = load_scheme(out);
    CHECK(q.n == 4);
    CHECK(is_thin(q));
}

TEST_CASE("subscheme reports the coset and the kept relations") {
    ExampleDir ex;
    CliRun run = run_cli("subscheme " + ex.dir.file("s12.scm") + " --subset 1",
                         ex.dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "coset: 0 1 2"));
    CHECK(contains(run.output, "relations kept: 0 1"));
    CHECK(contains(run.output, "rank: 2"));
    // a non-basepoint representative picks out another coset
    CliRun other = run_cli("subscheme " + ex.dir.file("s12.scm") +
                               " --subset 1 --point 4",
                           ex.dir.path);
    CHECK(other.exit_code == 0);
    CHECK(contains(other.output, "coset: 3 4 5"));
}

TEST_CASE("constants prints the nonzero intersection numbers") {
    ExampleDir ex;
    CliRun run = run_cli("constants " + ex.dir.file("t3.scm"), ex.dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "a(1,1,0): 2"));
    CHECK(contains(run.output, "a(1,1,1): 1"));
    CHECK_FALSE(contains(run.output, ": 0\n"));
}

TEST_CASE("iso finds witnesses and signals mismatches by exit code") {
    ExampleDir ex;
    CliRun yes = run_cli("iso " + ex.dir.file("s12.scm") + " " +
                             ex.dir.file("s12_reference.scm"),
                         ex.dir.path);
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.output, "isomorphic: true"));
    CHECK(contains(yes.output, "points: "));
    CHECK(contains(yes.output, "relations: "));

    CliRun based = run_cli("iso " + ex.dir.file("s12.scm") + " " +
                               ex.dir.file("s12_reference.scm") + " --based",
                           ex.dir.path);
    CHECK(based.exit_code == 0);
    CHECK(contains(based.output, "based: true"));

    CliRun no = run_cli("iso " + ex.dir.file("t3.scm") + " " + ex.dir.file("u4.scm"),
                        ex.dir.path);
    CHECK(no.exit_code == 1);
    CHECK(contains(no.output, "isomorphic: false"));
}

TEST_CASE("group tables become thin schemes") {
    TempDir dir;
    {
        std::ofstream out(dir.file("klein.grp"));
        out << "4\n";
        for (const auto& row : fixtures::klein_four_table()) {
            for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "\n";
        }
    }
    std::string out = dir.file("klein.scm");
    CliRun run = run_cli("thin " + dir.file("klein.grp") + " -o " + out, dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "rank: 4"));
    CHECK(contains(run.output, "thin: true"));
    Scheme s = load_scheme(out);
    CHECK(s.n == 4);
    CHECK(is_thin(s));
    CHECK(is_symmetric(s)); // every Klein element is its own inverse

    std::ofstream(dir.file("bad.grp")) << "2\n0 1\n1 1\n";
    CHECK(run_cli("thin " + dir.file("bad.grp"), dir.path).exit_code == 1);
}

TEST_CASE("degenerate products match the library constructions") {
    ExampleDir ex;
    std::string direct_out = ex.dir.file("direct.scm");
    CliRun direct = run_cli("direct " + ex.dir.file("u4.scm") + " " +
                                ex.dir.file("t3.scm") + " -o " + direct_out,
                            ex.dir.path);
    CHECK(direct.exit_code == 0);
    CHECK(contains(direct.output, "rank: 8"));
    CHECK(same_scheme(load_scheme(direct_out),
                      *semidirect_product(trivial_action(fixtures::cyclic_scheme(4),
                                                         fixtures::triangle_scheme()))
                           .scheme));

    std::string wreath_out = ex.dir.file("wreath.scm");
    CliRun wreath = run_cli("wreath " + ex.dir.file("u4.scm") + " " +
                                ex.dir.file("t3.scm") + " -o " + wreath_out,
                            ex.dir.path);
    CHECK(wreath.exit_code == 0);
    CHECK(contains(wreath.output, "rank: 5"));
    CHECK(same_scheme(load_scheme(wreath_out),
                      *semidirect_product(full_action(fixtures::cyclic_scheme(4),
                                                      fixtures::triangle_scheme()))
                           .scheme));
}

TEST_CASE("semidirect rebuilds the product from the action file") {
    ExampleDir ex;
    std::string out = ex.dir.file("sd.scm");
    std::string labels = ex.dir.file("sd.labels");
    CliRun run = run_cli("semidirect " + ex.dir.file("example.act") + " -o " + out +
                             " --labels " + labels,
                         ex.dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "rank: 6"));
    CHECK(contains(run.output, "label 2: 1 0 1"));
    CHECK(same_scheme(load_scheme(out), *fixtures::order12_product().scheme));
    // the emitted label table matches the one from example generation
    CHECK(read_file(labels) == read_file(ex.dir.path / "s12.labels"));
}

TEST_CASE("recover rebuilds the action and reports the relabeling") {
    ExampleDir ex;
    std::string out = ex.dir.file("rec.act");
    CliRun run = run_cli("recover " + ex.dir.file("s12.scm") + " " +
                             ex.dir.file("u4.scm") +
                             " --subset 0,1 --map 0,3,6,9 -o " + out,
                         ex.dir.path);
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "embedded relations: 0 2 3 5"));
    CHECK(contains(run.output, "round trip: true"));
    CHECK(contains(run.output, "eta points: 0 1 2 3 4 5 6 7 8 9 10 11"));
    CHECK(contains(run.output, "eta relations: 0 1 2 3 4 5"));

    // the emitted action file reparses and rebuilds the original product
    Action back = load_action(out);
    CHECK(same_scheme(*semidirect_product(back).scheme,
                      *fixtures::order12_product().scheme));

    // non-closed subset: a domain error, not a usage error
    CliRun bad = run_cli("recover " + ex.dir.file("s12.scm") + " " +
                             ex.dir.file("u4.scm") + " --subset 0,2 --map 0,3,6,9",
                         ex.dir.path);
    CHECK(bad.exit_code == 1);

    // malformed map list: unusable input
    CliRun worse = run_cli("recover " + ex.dir.file("s12.scm") + " " +
                               ex.dir.file("u4.scm") + " --subset 0,1 --map 0,x,6,9",
                           ex.dir.path);
    CHECK(worse.exit_code == 2);
}
