#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using ecarm::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ecarm_test_" + name);
}

}  // namespace

TEST_CASE("ap") {
  CHECK(invoke({"ap", "--curve", "1,1", "--prime", "5"}).out == "-3\n");
  CHECK(invoke({"ap", "--curve", "1,1", "--prime", "7"}).out == "3\n");
  const Result bad = invoke({"ap", "--curve", "1,1", "--prime", "31"});
  CHECK(bad.status == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("bad reduction") != std::string::npos);
  CHECK(invoke({"ap", "--curve", "1,1", "--prime", "9"}).status == 1);
  CHECK(invoke({"ap", "--curve", "-1,1", "--prime", "5"}).status == 0);
}

TEST_CASE("exponent") {
  const Result r = invoke({"exponent", "--curve", "1,1", "--prime", "11"});
  CHECK(r.status == 0);
  CHECK(r.out == "N_p: 14\nt_p: 14\n");
  CHECK(invoke({"exponent", "--curve", "1,1", "--prime", "2"}).status == 2);
}

TEST_CASE("an") {
  CHECK(invoke({"an", "--curve", "1,1", "--n", "35"}).out == "-9\n");
  CHECK(invoke({"an", "--curve", "1,1", "--n", "1"}).out == "1\n");
  CHECK(invoke({"an", "--curve", "1,1", "--n", "6"}).status == 2);
  CHECK(invoke({"an", "--curve", "1,1", "--n", "0"}).status == 1);
}

TEST_CASE("verify") {
  const Result ok = invoke({"verify", "--curve", "1,1", "--n", "35"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("test_value: 45\n") != std::string::npos);
  CHECK(ok.out.find("verdict: accepted\n") != std::string::npos);
  const Result no = invoke({"verify", "--curve", "1,1", "--n", "55"});
  CHECK(no.status == 3);
  CHECK(no.out.find("reason: DivisibilityFails(5)\n") != std::string::npos);
  CHECK(invoke({"verify", "--curve", "1,1", "--n", "49"}).status == 3);
}

TEST_CASE("search") {
  const Result empty = invoke({"search", "--curve", "1,1", "--limit", "34"});
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());
  CHECK(invoke({"search", "--curve", "1,1", "--limit", "55"}).out == "35\n");
  const Result one = invoke({"search", "--curve", "1,1", "--limit", "100000"});
  const Result four = invoke({"search", "--curve", "1,1", "--limit", "100000", "--threads", "4"});
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
  CHECK(invoke({"search", "--curve", "1,1", "--limit", "2000000000"}).status == 2);
  CHECK(invoke({"search", "--curve", "1,1", "--limit", "10", "--threads", "0"}).status == 1);
}

TEST_CASE("stats") {
  const Result r = invoke({"stats", "--curve", "1,1", "--limit", "100000"});
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "x,N_E,bound,ratio");
  CHECK(lines[1].rfind("10,0,", 0) == 0);
  CHECK(lines[2].rfind("100,2,", 0) == 0);

  const Result custom =
      invoke({"stats", "--curve", "1,1", "--limit", "100", "--checkpoints", "50,100"});
  CHECK(custom.status == 0);
  CHECK(custom.out.find("\n50,1,") != std::string::npos);
  CHECK(invoke({"stats", "--curve", "1,1", "--limit", "100", "--checkpoints", "100,50"}).status == 1);
  CHECK(invoke({"stats", "--curve", "1,1", "--limit", "100", "--checkpoints", "x"}).status == 1);
}

TEST_CASE("counting subcommands") {
  CHECK(invoke({"pi-ea", "--curve", "1,1", "--limit", "10", "--a", "-3"}).out == "1\n");
  CHECK(invoke({"pi-eab", "--curve", "1,1", "--limit", "10", "--a", "0", "--b", "3"}).out == "1\n");
  CHECK(invoke({"pi-eab", "--curve", "1,1", "--limit", "10", "--a", "0", "--b", "0"}).status == 1);
  CHECK(invoke({"an-cong", "--curve", "1,1", "--limit", "10", "--a", "1", "--p", "5"}).out == "1\n");
  CHECK(invoke({"an-cong", "--curve", "1,1", "--limit", "10", "--a", "1", "--p", "4"}).status == 1);
}

TEST_CASE("usage and curve errors") {
  CHECK(invoke({}).status == 1);
  CHECK(invoke({"frobnicate"}).status == 1);
  CHECK(invoke({"ap", "--prime", "5"}).status == 1);
  CHECK(invoke({"ap", "--curve", "1", "--prime", "5"}).status == 1);
  CHECK(invoke({"ap", "--curve", "0,0", "--prime", "5"}).status == 2);
  CHECK(invoke({"ap", "--curve", "3000000000,1", "--prime", "5"}).status == 2);
  const Result help = invoke({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("search") != std::string::npos);
}

TEST_CASE("cache file round trip") {
  const auto path = temp_path("cache.csv");
  std::filesystem::remove(path);
  const Result first =
      invoke({"search", "--curve", "1,1", "--limit", "5000", "--cache", path.string()});
  REQUIRE(first.status == 0);
  REQUIRE(std::filesystem::exists(path));
  std::string header;
  std::getline(std::ifstream(path) >> std::ws, header);
  CHECK(header == "# curve 1,1");

  const Result second =
      invoke({"search", "--curve", "1,1", "--limit", "5000", "--cache", path.string()});
  CHECK(second.out == first.out);

  // the same cache cannot be reused for another curve
  CHECK(invoke({"ap", "--curve", "2,3", "--prime", "5", "--cache", path.string()}).status == 2);

  {
    std::ofstream corrupt(path, std::ios::app);
    corrupt << "5,1,10,-3,\n";
  }
  CHECK(invoke({"ap", "--curve", "1,1", "--prime", "5", "--cache", path.string()}).status == 2);
  std::filesystem::remove(path);
}
