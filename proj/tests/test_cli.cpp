#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rouquier/json_io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rouquier");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = rouquier::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("blocks for the spetsial B2 case") {
  const auto r = run({"blocks", "--d", "2", "--r", "2", "--spetsial", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = rouquier::Json::parse(r.out);
  CHECK(j["blocks"].dump() == R"([[[[2],[]]],[[[1,1],[]],[[1],[1]],[[],[2]]],[[[],[1,1]]]])");
  const auto text = run({"blocks", "--d", "2", "--r", "2", "--spetsial"});
  CHECK(text.out == "Rouquier blocks for d=2 r=2 n=1 m=(1,0): 3\n((2),-)\n((1,1),-) ((1),(1)) (-,(2))\n(-,(1,1))\n");
}

TEST_CASE("symbols accept negative weights") {
  const auto r = run({"symbols", "--d", "2", "--lambda", "[[2,1],[3]]", "--weights", "-1,2", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = rouquier::Json::parse(r.out);
  CHECK(j["rows"].dump() == "[[3,1],[7,3,2,1,0]]");
  CHECK(j["content"].dump() == "[0,1,1,2,3,3,7]");
  const auto eq = run({"symbols", "--lambda", "[[2,1],[3]]", "--weights=-1,2"});
  CHECK(eq.status == 0);
  CHECK(eq.out.find("content: {0,1,1,2,3,3,7}") != std::string::npos);
}

TEST_CASE("hyperplane listing") {
  const auto r = run({"hyperplanes", "--d", "6", "--r", "2", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(rouquier::Json::parse(r.out)["count"] == 28);
  const auto spets = run({"hyperplanes", "--d", "2", "--r", "2", "--spetsial", "--format", "json"});
  CHECK(rouquier::Json::parse(spets.out)["containing"].dump() == R"([{"type":"pair","k":-1,"s":0,"t":1}])");
}

TEST_CASE("schur and atlas") {
  const auto s = run({"schur", "--lambda", "[[1],[]]", "--spetsial", "--format", "json"});
  CHECK(s.status == 0);
  const auto j = rouquier::Json::parse(s.out);
  CHECK(j["specialized"]["a"] == 0);
  CHECK(j["specialized"]["A"] == 1);
  CHECK(rouquier::factored_schur_from_json(j["factored"]) ==
        rouquier::schur_factored(rouquier::parse_multipartition("[[1],[]]")));

  const auto a = run({"atlas", "--d", "2", "--r", "2", "--format", "json"});
  CHECK(a.status == 0);
  CHECK(rouquier::Json::parse(a.out)["atlas"].size() == 4);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--d", "3", "--r", "3", "--weights", "0,-2,1", "--n", "0"}).status == 0);
  const auto grid = run({"verify", "--grid", "--format", "json"});
  CHECK(grid.status == 0);
  CHECK(rouquier::Json::parse(grid.out)["specializations"] == 720);
}

TEST_CASE("validation errors name the flag") {
  auto expect = [](std::vector<std::string> args, const std::string& flag) {
    const auto r = run(std::move(args));
    CHECK(r.status == 2);
    CHECK(r.err.find(flag) != std::string::npos);
  };
  expect({"blocks", "--d", "2", "--r", "2", "--spetsial", "--n", "1"}, "--spetsial");
  expect({"blocks", "--d", "2", "--r", "2", "--spetsial", "--weights", "1,0"}, "--spetsial");
  expect({"blocks", "--d", "2", "--r", "2", "--weights", "1,0,0", "--n", "1"}, "--weights");
  expect({"blocks", "--d", "2", "--r", "2", "--weights", "1,x", "--n", "1"}, "--weights");
  expect({"blocks", "--d", "2", "--r", "2", "--weights", "1,0"}, "--n");
  expect({"blocks", "--d", "2", "--spetsial"}, "--r");
  expect({"blocks", "--d", "0", "--r", "2", "--spetsial"}, "--d");
  expect({"symbols", "--lambda", "[[2,1],[3"}, "--lambda");
  expect({"symbols", "--d", "3", "--lambda", "[[1],[1]]"}, "--d");
  expect({"blocks", "--d", "2", "--r", "2", "--spetsial", "--format", "xml"}, "--format");
  expect({"verify", "--grid", "--d", "2"}, "--grid");
  CHECK(run({}).status == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args{"atlas", "--d", "3", "--r", "3", "--format", "json"};
  const auto first = run(args);
  CHECK(first.out == run(args).out);

  const std::string path = "test_cli_output.json";
  auto with_file = args;
  with_file.insert(with_file.end(), {"--output", path});
  const auto r = run(with_file);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == first.out);
  std::remove(path.c_str());
}
