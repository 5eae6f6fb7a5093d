#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "thetanull/cli/document.hpp"
#include "thetanull/cli/sampling.hpp"
#include "thetanull/cli/selftest.hpp"
#include "thetanull/errors.hpp"

using namespace thetanull;
using namespace thetanull::cli;

namespace {

std::string diagonal_document(int g, double im) {
  nlohmann::ordered_json tau = nlohmann::ordered_json::array();
  for (int i = 0; i < g; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < g; ++j) row.push_back({{"re", 0.0}, {"im", i == j ? im : 0.0}});
    tau.push_back(row);
  }
  return nlohmann::ordered_json{{"genus", g}, {"tau", tau}}.dump();
}

std::string parse_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("input round trip") {
    Sampler s(3);
    for (int g = 1; g <= 4; ++g) {
      InputDocument doc;
      doc.genus = g;
      doc.tau = s.tau(g).matrix();
      doc.tau(0, 0) += Complex(1.0 / 3.0, 0.1);
      if (g % 2) doc.options.vanish_tol = 1e-9;
      if (g > 2) doc.options.target_eps = 1.0 / 7.0 * 1e-12;
      const InputDocument back = parse_input(serialize_input(doc));
      CHECK(back == doc);
      CHECK(serialize_input(back) == serialize_input(doc));
    }
  }

  TEST_CASE("malformed documents name the problem") {
    CHECK(parse_error("{\"genus\": 1, ").find("line 1") != std::string::npos);
    CHECK(parse_error("[]").find("document") != std::string::npos);
    CHECK(parse_error("{\"tau\": []}").find("genus") != std::string::npos);
    CHECK(parse_error("{\"genus\": 2, \"tau\": [[{\"re\":0,\"im\":1}]]}").find("tau") != std::string::npos);
    CHECK(parse_error("{\"genus\": 1, \"tau\": [[{\"re\":0,\"im\":\"x\"}]]}").find("tau[0][0].im") != std::string::npos);
    CHECK(parse_error("{\"genus\": 1, \"tau\": [[{\"re\":0,\"im\":1}]], \"options\": {\"speed\": 1}}")
              .find("options.speed") != std::string::npos);
    CHECK(parse_error("{\"genus\": 1, \"tau\": [[{\"re\":0,\"im\":1}]], \"extra\": 1}").find("extra") !=
          std::string::npos);
    CHECK(parse_error("{\"genus\": 9, \"tau\": []}").find("genus") != std::string::npos);
  }

  TEST_CASE("mathematical validation is separate from parsing") {
    const InputDocument doc = parse_input(
        "{\"genus\": 2, \"tau\": [[{\"re\":0,\"im\":1},{\"re\":0,\"im\":5}],[{\"re\":0,\"im\":5},{\"re\":0,\"im\":1}]]}");
    CHECK_THROWS_AS(to_siegel(doc), Error);
  }

  TEST_CASE("report layout") {
    const InputDocument g1 = parse_input(diagonal_document(1, 1.0));
    const std::string text = render_report(g1, {}, stratum(to_siegel(g1)));
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"input", "settings", "vanishing", "stratum", "verdict", "certificates"});
    CHECK(j["vanishing"].empty());
    CHECK(j["stratum"].is_null());
    CHECK(j["verdict"].is_null());

    const InputDocument g4 = parse_input(diagonal_document(4, 1.0));
    const auto r4 = nlohmann::ordered_json::parse(render_report(g4, {}, stratum(to_siegel(g4))));
    CHECK(r4["verdict"] == "REDUCIBLE_CANDIDATE");
    CHECK(r4["vanishing"].size() == 55);
    CHECK(r4["vanishing"][0]["char"].get<std::string>().size() == 9);
    CHECK(r4["vanishing"][0]["singular_values"].size() == 4);
  }

  TEST_CASE("selftest filter and determinism") {
    SelftestFlags flags;
    flags.filter = "p-ident";
    std::ostringstream a, b, err;
    CHECK(run_selftest(flags, a, err) == 0);
    CHECK(run_selftest(flags, b, err) == 0);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("p-identities") != std::string::npos);
    CHECK(a.str().find("heat") == std::string::npos);
    flags.filter = "no-such-criterion";
    CHECK(run_selftest(flags, a, err) == 2);
    CHECK(criteria().size() == 12);
  }
}
