#include <catch_amalgamated.hpp>

#include "nilcohom/model_io.hpp"

using namespace nilcohom;

TEST_CASE("bundled model files parse and carry their blocks") {
  const ModelFile kt = resolve_model("kt");
  CHECK(kt.dimension == 4);
  CHECK(kt.d[3] == Form::monomial({1, 2}));
  for (int i = 0; i < 3; ++i) CHECK(kt.d[i].is_zero());
  CHECK(kt.J);
  CHECK(kt.omega);
  CHECK(kt.flags.nilpotent);
  CHECK(kt.flags.surface);
  CHECK(kt.flags.invariant_computes_full);
  CHECK(!kt.flags.provenance.empty());

  const ModelFile torus4 = resolve_model("torus4");
  for (const auto& f : torus4.d) CHECK(f.is_zero());

  const ModelFile g34 = resolve_model("g34");
  CHECK(!g34.flags.nilpotent);
  CHECK(g34.flags.completely_solvable);
  CHECK(!g34.J);
}

TEST_CASE("strict parsing rejects malformed input") {
  json good = {
      {"schema_version", 1},
      {"name", "t"},
      {"dimension", 2},
      {"d", json::array({json::array(), json::array()})},
  };
  CHECK(parse_model_json(good).dimension == 2);

  json unknown = good;
  unknown["extra"] = 1;
  CHECK_THROWS_AS(parse_model_json(unknown), ParseError);

  json bad_order = good;
  bad_order["d"][1] = json::array({json::array({"1", 2, 2})});
  CHECK_THROWS_AS(parse_model_json(bad_order), ParseError);  // i < j violated

  json out_of_range = good;
  out_of_range["d"][1] = json::array({json::array({"1", 1, 3})});
  CHECK_THROWS_AS(parse_model_json(out_of_range), ParseError);

  json bad_coef = good;
  bad_coef["d"][1] = json::array({json::array({"1/0", 1, 2})});
  CHECK_THROWS_AS(parse_model_json(bad_coef), ParseError);

  json numeric_coef = good;
  numeric_coef["d"][1] = json::array({json::array({1, 1, 2})});
  CHECK_THROWS_AS(parse_model_json(numeric_coef), ParseError);

  json bad_version = good;
  bad_version["schema_version"] = 2;
  CHECK_THROWS_AS(parse_model_json(bad_version), ParseError);

  json unknown_flag = good;
  unknown_flag["flags"] = {{"kaehler", true}};
  CHECK_THROWS_AS(parse_model_json(unknown_flag), ParseError);
}

TEST_CASE("Jacobi failures are caught at parse time") {
  json bad = {
      {"schema_version", 1},
      {"name", "broken"},
      {"dimension", 4},
      {"d", json::array({json::array({json::array({"1", 3, 4})}), json::array(),
                         json::array({json::array({"1", 1, 2})}), json::array()})},
  };
  CHECK_THROWS_AS(parse_model_json(bad), ParseError);
}

TEST_CASE("serialization round-trips every bundled model") {
  for (const std::string name :
       {"torus2", "torus4", "torus6", "kt", "g34", "g41", "iwasawa"}) {
    const ModelFile mf = resolve_model(name);
    const ModelFile back = parse_model_json(serialize_model(mf));
    CHECK(back.dimension == mf.dimension);
    for (int i = 0; i < mf.dimension; ++i) CHECK(back.d[i] == mf.d[i]);
    CHECK(back.J.has_value() == mf.J.has_value());
    if (mf.J) CHECK(*back.J == *mf.J);
    if (mf.omega) CHECK(*back.omega == *mf.omega);
    CHECK(back.flags.provenance == mf.flags.provenance);
  }
}

TEST_CASE("shorthand converter handles the classical notation") {
  const auto kt = parse_shorthand("(0,0,0,12)", 4);
  CHECK(kt[3] == Form::monomial({1, 2}));
  CHECK(kt[0].is_zero());
  const auto g34 = parse_shorthand("-13, 23, 0, 0", 4);
  CHECK(g34[0] == Form::monomial({1, 3}, Scalar(-1)));
  CHECK(g34[1] == Form::monomial({2, 3}));
  const auto iw = parse_shorthand("0,0,0,0,-13+24,-14-23", 6);
  CHECK(iw[4] == Form::monomial({1, 3}, Scalar(-1)) + Form::monomial({2, 4}));
  CHECK(iw[5] == Form::monomial({1, 4}, Scalar(-1)) + Form::monomial({2, 3}, Scalar(-1)));

  CHECK_THROWS_AS(parse_shorthand("0,0", 3), ParseError);
  CHECK_THROWS_AS(parse_shorthand("0,21", 2), ParseError);   // i >= j
  CHECK_THROWS_AS(parse_shorthand("0,123", 2), ParseError);  // not a pair
  CHECK_THROWS_AS(parse_shorthand("0,0", 12), ParseError);   // dimension too large
}

TEST_CASE("shorthand agrees with the bundled explicit files") {
  const auto kt_short = parse_shorthand("0,0,0,12", 4);
  const ModelFile kt = resolve_model("kt");
  for (int i = 0; i < 4; ++i) CHECK(kt_short[i] == kt.d[i]);
  const auto iw_short = parse_shorthand("0,0,0,0,-13+24,-14-23", 6);
  const ModelFile iw = resolve_model("iwasawa");
  for (int i = 0; i < 6; ++i) CHECK(iw_short[i] == iw.d[i]);
}

TEST_CASE("resolve_model rejects unknown names") {
  CHECK_THROWS_AS(resolve_model("no-such-model"), ParseError);
}
