#include "liemod/cli.hpp"
#include "liemod/tables.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = liemod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("liemod_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("exit code matrix") {
  TempDir tmp;
  const std::string bad = tmp.write("bad.lie", "dim 3\npsi 1 2 -> 3 : 1\npsi 1 3 -> 1 : 1\n");
  const std::string mal = tmp.write("mal.lie", "dim 3\npsi 1 2 -> \n");
  const std::string id3 = tmp.write("id3.txt", "# identity\n1 0 0\n0 1 0\n0 0 1\n");
  const std::string s3 = tmp.write("s3.txt", "2 0 0\n0 1 0\n0 0 1\n");
  const std::string swap = tmp.write("swap.txt", "1 0 0\n-1 1 0\n0 0 1\n");

  struct Case {
    std::vector<std::string> args;
    int code;
    const char* expect;  // substring of stdout, or nullptr
  };
  const std::vector<Case> cases{
      {{"jacobi", "catalog:3/d1"}, 0, "jacobi: holds"},
      {{"jacobi", bad}, 1, "[d,d]\tpsi123->3\t-2"},
      {{"jacobi", mal}, 2, nullptr},
      {{"jacobi", (tmp.path / "missing.lie").string()}, 2, nullptr},
      {{}, 2, nullptr},
      {{"--help"}, 0, nullptr},
      {{"cohomology", "catalog:4/d6@0:0"}, 0, "betti\t(2,8,13,10,3)"},
      {{"cohomology", "catalog:5/d5"}, 0, "betti\t(0,1,2,1,0,0)"},
      {{"cohomology", "catalog:5/d5", "--at", "p=2"}, 2, nullptr},
      {{"tables", "3"}, 0, "3.d1"},
      {{"tables", "6"}, 2, nullptr},
      {{"nilpotent-table"}, 0, "nil.n8"},
      {{"versal", "catalog:5/d4"}, 0, "rigid: no deformation parameters"},
      {{"versal", "catalog:5/d4", "--order", "1"}, 2, nullptr},
      {{"iso-verify", "catalog:3/d1", "catalog:3/d1", id3}, 0, "iso: verified"},
      {{"iso-verify", "catalog:3/d2@2:3", "catalog:3/d2@2:3", s3}, 1, "iso: not verified"},
      {{"iso-verify", "catalog:3/d2@2:3", "catalog:3/d2@3:2", swap}, 0, "iso: verified"},
      {{"iso-search", "catalog:5/d5@0:0:0", "catalog:5/d15@0:0"}, 0, "status\tfound"},
      {{"iso-search", "catalog:3/d1", "catalog:3/d3"}, 1, "status\tinvariant-mismatch"},
      {{"iso-search", "catalog:5/d5@2:3:7", "catalog:5/d5@-98:-1323:-76", "--tries", "1"}, 3, "budget-exhausted"},
      {{"symmetry", "d6", "sigma", "1:2"}, 0, "-1:1\n"},
      {{"symmetry", "d5", "sigma", "2:3:2"}, 2, nullptr},
      {{"symmetry", "d7", "sigma", "1:2"}, 2, nullptr},
      {{"catalog", "list", "5"}, 0, "5.d24"},
      {{"catalog", "show", "catalog:5/d99"}, 2, nullptr},
      {{"invariants", "catalog:5/d19"}, 0, "center\t1"},
  };
  CHECK(cases.size() >= 12);
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    const Run r = run(c.args);
    CHECK(r.code == c.code);
    if (c.expect) CHECK(contains(r.out, c.expect));
    if (c.code == 2 && !c.args.empty()) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("tables write to a file") {
  TempDir tmp;
  const std::string path = (tmp.path / "t3.tsv").string();
  const Run r = run({"tables", "3", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "id\tpoint\tcomputed\texpected\tstatus\teuler_ok\tcenter_ok\texpected_euler_ok");
  int rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty();
  CHECK(rows == 6);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> invocations{
      {"tables", "5", "--seed", "7"},
      {"nilpotent-table"},
      {"cohomology", "catalog:5/d9", "--seed", "3"},
      {"iso-search", "catalog:5/d6@0:0", "catalog:5/d21@0:0:0", "--seed", "5"},
      {"versal", "catalog:3/d2@0:0", "--order", "3"},
      {"symmetry", "d5", "tau", "2:3:7"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args.front());
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("catalog export writes parseable files") {
  TempDir tmp;
  const Run r = run({"catalog", "export", tmp.path.string()});
  REQUIRE(r.code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    if (entry.path().extension() != ".lie") continue;
    ++files;
    const Run j = run({"jacobi", entry.path().string()});
    CAPTURE(entry.path().string());
    CHECK(j.code == 0);
  }
  CHECK(files >= 3 + 7 + 24 + 8);
}

TEST_CASE("table helpers") {
  using liemod::mix_seed;
  CHECK(liemod::alternating_sum({3, 14, 28, 13, 17, 4}) == 17);
  CHECK(liemod::alternating_sum({1, 4, 7, 8, 6, 2}) == 0);
  CHECK(mix_seed(0, 1) == 1);
  CHECK(mix_seed(1, 0) == 0x9E3779B97F4A7C15ULL);
  CHECK(mix_seed(2, 3) == 2 * 0x9E3779B97F4A7C15ULL + 3);
  const liemod::TableReport a = liemod::make_table(4, 9), b = liemod::make_table(4, 9);
  CHECK(a.to_tsv() == b.to_tsv());
  CHECK(a.consistent());
  for (const auto& r : a.rows) CHECK_FALSE(r.failed());
}

}
