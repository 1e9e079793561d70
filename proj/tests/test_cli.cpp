#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = dc::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) {
  std::ifstream f(std::string(DC_TEST_DATA) + "/" + name);
  REQUIRE(f);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decompose golden") {
    auto r = run({"decompose", "--mode", "binary"}, data("bin_M.txt"));
    CHECK(r.status == 0);
    CHECK(r.out == data("decompose_binary.txt"));
  }

  TEST_CASE("growth renderings of growth diagrams of the running matrices") {
    struct Case {
      const char *orientation, *mode, *input, *golden;
    };
    for (const auto& c : {Case{"NW", "integral", "int_M.txt", "growth_int_nw.txt"},
                          Case{"NW", "binary", "bin_M.txt", "growth_bin_nw.txt"},
                          Case{"NE", "binary", "bin_M.txt", "growth_bin_ne.txt"},
                          Case{"SW", "integral", "int_M.txt", "growth_int_sw.txt"}}) {
      CAPTURE(c.golden);
      auto r = run({"growth", "--orientation", c.orientation, "--mode", c.mode, "--verify"},
                   data(c.input));
      CHECK(r.status == 0);
      CHECK(r.out == data(c.golden));
    }
  }

  TEST_CASE("scalar stages agree") {
    auto brute = run({"scalar", "--mode", "integral", "--stage", "brute", "--shape1", "2,1/0",
                      "--shape2", "2,1/0"});
    auto reduced = run({"scalar", "--mode", "integral", "--stage", "fully_reduced", "--shape1",
                        "2,1/0", "--shape2", "2,1/0"});
    CHECK(brute.status == 0);
    CHECK(brute.out == "1\n");
    CHECK(reduced.out == brute.out);
    auto traced = run({"scalar", "--mode", "binary", "--stage", "brute", "--shape1", "2,1",
                       "--shape2", "2,1", "--trace"});
    CHECK(traced.status == 0);
    CHECK(traced.out.find("survivors 1") != std::string::npos);
  }

  TEST_CASE("JSON output") {
    auto r = run({"decompose", "--mode", "integral", "--json"}, data("int_M.txt"));
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["shape"].size() == 5);
    auto g = run({"growth", "--orientation", "SE", "--json"}, data("int_M.txt"));
    REQUIRE(g.status == 0);
    CHECK(nlohmann::json::parse(g.out)["orientation"] == "SE");
  }

  TEST_CASE("JSON input") {
    auto r = run({"normal-form", "--mode", "binary"}, "[[0,1],[1,0]]");
    CHECK(r.status == 0);
    CHECK(r.out == "1,1\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).status == 2);
    CHECK(run({"scalar", "--stage", "quick", "--shape1", "1", "--shape2", "1"}).status == 2);
    auto bad = run({"decompose"}, "1 2\n3 x\n");
    CHECK(bad.status == 1);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"decompose", "--mode", "binary"}, "1 2\n").status == 1);
    CHECK(run({"move", "--dir", "up", "--index", "0"}, "1 0\n0 0\n").status == 1);
    CHECK(run({"verify", "nonsense"}).status == 2);
    CHECK(run({"verify", "decompose-binary"}).status == 0);
    CHECK(run({"--help"}).status == 0);
  }

  TEST_CASE("pictures") {
    auto r = run({"pictures", "enumerate", "--dom", "3,2/1", "--cod", "2,2", "--count"});
    CHECK(r.status == 0);
    auto s = run({"scalar", "--shape1", "3,2/1", "--shape2", "2,2"});
    CHECK(r.out == s.out);
    auto v = run({"pictures", "validate", "--dom", "2", "--cod", "2"}, "0,0 -> 0,0\n0,1 -> 0,1\n");
    auto w = run({"pictures", "validate", "--dom", "2", "--cod", "2"}, "0,0 -> 0,1\n0,1 -> 0,0\n");
    CHECK(v.status + w.status == 1);
  }
}
