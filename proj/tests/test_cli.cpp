#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gensol::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GENSOL_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("graph") {
  const Run r = run({"graph", "S4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 24);
  CHECK(j["isolated"] == 3);
  CHECK(j["diameter"] == 2);
  CHECK(j["connected"] == true);

  const Run dot = run({"graph", "C2xC2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph ", 0) == 0);
  CHECK(dot.out.find("--") != std::string::npos);

  const Run inline_spec = run({"graph", R"j({"type":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]})j"});
  CHECK(inline_spec.code == 0);
  CHECK(nlohmann::json::parse(inline_spec.out)["order"] == 6);

  CHECK(run({"graph", "NoSuchGroup"}).code == 2);
  CHECK(run({"graph", R"j({"type":"perm","degree":3,"gens":[[0,0,1]]})j"}).code == 2);
}

TEST_CASE("probability") {
  const Run r = run({"probability", "S3", "--normal", R"j(["(1 2 3)"])j", "--k", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["brute"] == "2/3");
  CHECK(j["moebius"] == "2/3");
  CHECK(j["equal"] == true);

  const Run text = run({"probability", "C2xC2", "--normal", R"j(["(1 2)(3 4)"])j", "--k", "2", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out == "P_{G,N}(X,2): brute 1/2 = moebius 1/2\n");

  CHECK(run({"probability", "S3", "--normal", R"j(["(1 2)"])j"}).code == 2);
  CHECK(run({"probability", "S3"}).code == 2);
}

TEST_CASE("lemma-que") {
  const Run refused = run({"lemma-que", data("remark.txt")});
  CHECK(refused.code == 1);
  CHECK(refused.out.find("refused") != std::string::npos);

  const Run exhaustive = run({"lemma-que", data("remark.txt"), "--exhaustive-que"});
  CHECK(exhaustive.code == 0);
  CHECK(exhaustive.out.find("no solution (exhaustively confirmed, 16 candidates)") != std::string::npos);

  const Run random = run({"lemma-que", "--random", "--q", "3", "--n", "2", "--seed", "4"});
  CHECK(random.code == 0);
  CHECK(random.out.find("det1 0") == std::string::npos);
  CHECK(random.out.find("det2 0") == std::string::npos);
  CHECK(run({"lemma-que", "--random", "--q", "3", "--n", "2", "--seed", "4"}).out == random.out);

  CHECK(run({"lemma-que"}).code == 2);
  CHECK(run({"lemma-que", data("missing.txt")}).code == 2);
}

TEST_CASE("bridge") {
  const Run r = run({"bridge", data("bridge_gl22.json")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(run({"bridge", "{}"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"graph", "S3", "--threads", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
