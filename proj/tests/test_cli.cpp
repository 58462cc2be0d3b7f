#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "valkit/cli/dispatch.hpp"
#include "valkit/valkit.hpp"

using nlohmann::json;
using namespace valkit;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return run(std::move(args));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hensel lift report") {
    const auto r = run_json({"hensel", "lift", "--poly", "x^2-2", "--prime", "7", "--seed", "3", "--prec", "3"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["root_digits"] == json({3, 1, 2}));
    CHECK(j["checked"] == true);
    CHECK(j["valuation"] == 0);
    CHECK(j["command"] == "hensel lift");
    CHECK(j.contains("elapsed_ms"));
    CHECK(j["version"] == kVersion);
    const auto lib = simple_zero_lift(parse_univariate("x^2-2"), 7, 3, 3);
    CHECK(j["representative"] == to_string(lib.representative));
  }

  TEST_CASE("ake compare report") {
    const auto r = run_json({"ake", "compare", "--sentence", "exists x. x*x = -1", "--n", "2", "--primes", "2..13"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["disagreement"] == json({2}));
    CHECK(j["results"].size() == 6);
    CHECK(j["results"][0] == json({{"p", 2}, {"zmod", false}, {"trunc", true}}));
    const auto text = run({"ake", "compare", "--sentence", "exists x. x*x = -1", "--primes", "2,3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("disagreement: [2]") != std::string::npos);
  }

  TEST_CASE("padic eval report") {
    const auto r = run_json({"padic", "eval", "--prime", "5", "--expr", "(-1)", "--prec", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["digits"] == json({4, 4, 4, 4}));
    const auto text = run({"padic", "eval", "--prime", "5", "--expr", "(-1)", "--prec", "4"});
    CHECK(text.out.find("5^0 * (4 + 4*5 + 4*5^2 + 4*5^3 + O(5^4))") != std::string::npos);
  }

  TEST_CASE("other subcommands") {
    CHECK(run_json({"series", "eval", "--expr", "1/(1 - t)", "--prec", "3"}).report()["value"] == "1 + t + t^2 + O(t^3)");
    CHECK(run_json({"forms", "count", "--poly", "x1^2 + x2^2 + x3^2", "--prime", "3"}).report()["count"] == 9);
    const auto cw = run_json({"forms", "chevalley", "--poly", "x1 + x2 + x3 + x4", "--prime", "5"}).report();
    CHECK(cw["holds"] == true);
    CHECK(cw["count"] == 125);
    const auto solve = run_json({"forms", "solve", "--form", "x1^2+x2^2+x3^2+x4^2+x5^2", "--prime", "3"});
    REQUIRE(solve.code == 0);
    CHECK(solve.report()["verified"] == true);
    const auto ter = run_json({"forms", "terjanian"}).report();
    CHECK(ter["lemma_checks"]["passed"] == true);
    const auto hahn = run_json({"hahn", "info", "--series", "3*t^(-1/2) + 1"}).report();
    CHECK(hahn["valuation"] == "(-1/2)");
    CHECK(hahn["angular_component"] == "3");
    const auto inv = run_json({"hahn", "invert", "--series", "1 - t", "--group", "Z", "--cap", "3"}).report();
    CHECK(inv["value"] == "1 + t + t^2 + O(t^3)");
    const auto half = run_json({"hahn", "invert", "--series", "1 - t^(1/2)", "--cap", "5/2"}).report();
    CHECK(half["product"] == "1 + O(t^(5/2))");
    CHECK(run_json({"hensel", "root", "--x", "441", "--n", "2", "--prime", "7"}).report()["check"] == true);
    CHECK(run_json({"hensel", "zp", "--a", "1/5", "--prime", "5"}).report()["claimed"] == false);
    CHECK(run_json({"ake", "eval", "--sentence", "exists x. x*x = -1", "--prime", "5"}).report()["value"] == true);
  }

  TEST_CASE("tree rendering") {
    const auto r = run_json({"tree", "--prime", "2", "--depth", "3", "--elements", "0,2"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["meets"] == json::array({{{"a", "0"}, {"b", "2"}, {"level", 1}}}));
    const auto t = cli::render_tree(2, 3, {Rational(1), Rational(3)});
    REQUIRE(t.meets.size() == 1);
    CHECK(t.meets[0].level == 1);
    const auto single = cli::render_tree(3, 4, {Rational(5)});
    CHECK(single.meets.empty());
    CHECK(single.diagram.find("+--") == std::string::npos);
    CHECK(run({"tree", "--prime", "7", "--elements", "1"}).code == 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"padic", "eval", "--prime", "5"}).code == 2);
    CHECK(run({"padic", "eval", "--prime", "5", "--expr", "1+"}).code == 2);
    const auto domain = run_json({"forms", "solve", "--form", "x^2 + y^2", "--prime", "3"});
    CHECK(domain.code == 1);
    CHECK(domain.report()["error"]["kind"] == "Unresolved");
    CHECK(run({"hensel", "lift", "--poly", "x^2-2", "--prime", "7", "--seed", "1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("budget override from the environment") {
    ::setenv("HF_BUDGET", "10", 1);
    const auto r = run_json({"forms", "count", "--poly", "x1 + x2 + x3", "--prime", "3"});
    ::unsetenv("HF_BUDGET");
    CHECK(r.code == 1);
    CHECK(r.report()["error"]["kind"] == "DomainTooLarge");
  }

  TEST_CASE("reports are deterministic apart from timing") {
    auto strip = [](json j) {
      j.erase("elapsed_ms");
      return j.dump();
    };
    const std::vector<std::string> args{"ake", "compare", "--sentence", "exists x. x+x = 1", "--primes", "2..20"};
    CHECK(strip(run_json(args).report()) == strip(run_json(args).report()));
  }
}
