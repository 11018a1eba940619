#include <catch_amalgamated.hpp>

#include <sstream>

#include "elp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "elp");
  std::vector<const char*> argv;
  for (auto const& a : args) { argv.push_back(a.c_str()); }
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = elp::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve from stdin", "[cli]") {
  auto r = call({"solve", "-s", "g94", "-"}, "p :- K p.\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("2 world views") != std::string::npos);
}

TEST_CASE("json output is stable", "[cli]") {
  auto a = call({"solve", "-s", "k15", "-f", "json", "corpus:P6"});
  auto b = call({"solve", "-s", "k15", "-f", "json", "corpus:P6"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["semantics"] == "k15");
  CHECK(j["world_views"].size() == 2);
  CHECK(j["world_views"][0].contains("belief_sets"));
  CHECK(j["stats"]["world_views"] == 2);
}

TEST_CASE("compare lists every semantics", "[cli]") {
  auto r = call({"compare", "-f", "json", "corpus:P10"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("c19") != std::string::npos);
}

TEST_CASE("check reports counterexamples", "[cli]") {
  auto r = call({"check", "-p", "foundedness", "-s", "g94,c19", "corpus:P3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexample") != std::string::npos);
  auto t = call({"check", "-p", "tightness", "corpus:P7"});
  CHECK(t.code == 0);
  CHECK(t.out.find("tight") != std::string::npos);
}

TEST_CASE("translate and ground", "[cli]") {
  auto r = call({"translate", "--to", "k", "-"}, "p :- M q.\n");
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
  auto g = call({"ground", "-"}, "p(X) :- q(X).\n#const a, b.\n");
  CHECK(g.code == 0);
  CHECK(g.out.find("p(b) :- q(b).") != std::string::npos);
}

TEST_CASE("corpus listing", "[cli]") {
  auto r = call({"corpus", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P7") != std::string::npos);
  CHECK(call({"corpus", "emit"}).code == 2);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(call({}).code == 2);
  CHECK(call({"solve", "-s", "bogus", "-"}, "p.").code == 2);
  CHECK(call({"solve", "-"}, "p :- .").code == 10);
  CHECK(call({"solve", "-"}, "p(X) :- q(X).").code == 20);
  CHECK(call({"solve", "--max-atoms", "1", "-"}, "a | b | c.").code == 30);
  CHECK(call({"solve", "corpus:NOPE"}).code == 2);
}
