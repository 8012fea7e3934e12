#include <doctest.h>

#include "dcoset/classify.hpp"
#include "dcoset/errors.hpp"
#include "dcoset/pairs.hpp"
#include "oracles.hpp"

using namespace dcoset;

TEST_CASE("parse_pair") {
  const auto p = parse_pair("so_so_in_so(2,3)");
  CHECK(p.family() == Family::so_so_in_so);
  CHECK(p.params() == std::vector<int>{2, 3});
  CHECK(p.name() == "so_so_in_so(2,3)");
  CHECK(parse_pair(" sp_in_sl_even ( 3 ) ").name() == "sp_in_sl_even(3)");
  CHECK(parse_pair("spin7_in_so8").params().empty());
  CHECK_THROWS_AS(parse_pair("nonsense(1)"), ParseError);
  CHECK_THROWS_AS(parse_pair("sp_in_sl_even(1,2)"), InvalidParameters);
  CHECK_THROWS_AS(parse_pair("sp_in_sl_even(x)"), ParseError);
  CHECK_THROWS_AS(parse_pair("sl_in_so_even(2)"), InvalidParameters);
  CHECK_THROWS_AS(parse_pair("so_odd_in_even(1)"), InvalidParameters);
  CHECK_THROWS_AS(parse_pair("so_so_in_so(1,3)"), InvalidParameters);
  try {
    parse_pair("nope");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("sgl_gl_in_sl") != std::string::npos);
  }
}

TEST_CASE("slice weight systems") {
  SUBCASE("Sp_2 x Sp_4 in Sp_6") {
    const auto ws = slice_weight_system(parse_pair("sp_sp_in_sp(1,2)"));
    CHECK(ws.rank() == 3);
    CHECK(ws.size() == 8);
    CHECK(oracle::sorted_weights(ws) == oracle::sorted_weights(appendix_case(6).system));
  }
  SUBCASE("GL_2 in Sp_4") {
    const auto ws = slice_weight_system(parse_pair("gl_in_sp(2)"));
    CHECK(ws.weights() == std::vector<Weight>{{1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}});
  }
  SUBCASE("Spin_7 in SO_8") {
    const auto ws = slice_weight_system(parse_pair("spin7_in_so8"));
    CHECK(ws.rank() == 3);
    CHECK(oracle::sorted_weights(ws) ==
          std::vector<Weight>{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  }
  SUBCASE("SL_4 / Sp_4 in its documented order") {
    const auto ws = slice_weight_system(parse_pair("sp_in_sl_even(2)"));
    CHECK(ws.weights() == std::vector<Weight>{{1, -1}, {-1, 1}, {1, 1}, {-1, -1}});
  }
  SUBCASE("SO_2m in SL_2m adds the weights +-2e_i to the Sp_2m slice") {
    for (int m = 1; m <= 4; ++m) {
      auto want = slice_weight_system(PairSpec(Family::sp_in_sl_even, {m})).weights();
      for (int i = 0; i < m; ++i) {
        Weight w(m, 0);
        w[i] = 2;
        want.push_back(w);
        w[i] = -2;
        want.push_back(w);
      }
      std::sort(want.begin(), want.end());
      CHECK(oracle::sorted_weights(slice_weight_system(PairSpec(Family::so_in_sl_even, {m}))) == want);
    }
    CHECK(oracle::sorted_weights(slice_weight_system(parse_pair("so_in_sl_even(2)"))) ==
          oracle::sorted_weights(appendix_case(4).system));
  }
  SUBCASE("k* . Sp_4 in SL_5 matches its appendix system") {
    CHECK(oracle::sorted_weights(slice_weight_system(parse_pair("kx_sp_in_sl(2)"))) ==
          oracle::sorted_weights(appendix_case(3).system));
  }
  SUBCASE("fixed pairs match their appendix systems") {
    const std::pair<const char*, int> fixed[] = {{"spin7_in_so9", 12}, {"spin7_so2_in_so10", 13},
                                                 {"g2_in_so7", 14},    {"b4_in_f4", 15},
                                                 {"a2_in_g2", 16},     {"gl_in_so_even(4)", 8}};
    for (const auto& [name, id] : fixed) {
      CAPTURE(name);
      CHECK(oracle::sorted_weights(slice_weight_system(parse_pair(name))) ==
            oracle::sorted_weights(appendix_case(id).system));
    }
  }
  SUBCASE("G_2 in SO_8 doubles G_2 in SO_7") {
    auto twice = slice_weight_system(parse_pair("g2_in_so7")).weights();
    const auto once = twice;
    twice.insert(twice.end(), once.begin(), once.end());
    std::sort(twice.begin(), twice.end());
    CHECK(oracle::sorted_weights(slice_weight_system(parse_pair("g2_in_so8"))) == twice);
  }
}

TEST_CASE("dimension_audit") {
  const auto a = dimension_audit(parse_pair("sp_in_sl_even(2)"));
  CHECK(a.dim_g == 15);
  CHECK(a.dim_h == 10);
  CHECK(a.rank_g == 3);
  CHECK(a.rank_h == 2);
  CHECK(a.dim_n == 4);
  const auto s = dimension_audit(parse_pair("spin7_in_so9"));
  CHECK(s.dim_n == 36 - 21 - 4 + 3);
  CHECK(s.dim_n == 14);
  const auto t = dimension_audit(parse_pair("spin7_in_so8"));
  CHECK(t.dim_n == 28 - 21 - 4 + 3);
}

TEST_CASE("catalogue") {
  SUBCASE("ambient cap 3") {
    CatalogueBounds b;
    b.max_sl = b.max_sp = b.max_so = 3;
    b.exceptional = false;
    b.families = std::set<Family>{Family::sgl_gl_in_sl};
    std::vector<std::string> names;
    for (const auto& p : catalogue(b)) names.push_back(p.name());
    CHECK(names == std::vector<std::string>{"sgl_gl_in_sl(1,1)", "sgl_gl_in_sl(2,1)"});
  }
  SUBCASE("zero bounds") {
    CatalogueBounds b;
    b.max_sl = b.max_sp = b.max_so = 0;
    b.exceptional = false;
    CHECK(catalogue(b).empty());
  }
  SUBCASE("no families") {
    CatalogueBounds b;
    b.families = std::set<Family>{};
    CHECK(catalogue(b).empty());
  }
  SUBCASE("default bounds are deterministic and audited") {
    const auto c = catalogue();
    CHECK(c == catalogue());
    for (const auto& p : c) {
      CAPTURE(p.name());
      const auto ws = slice_weight_system(p);
      CHECK(static_cast<std::size_t>(dimension_audit(p).dim_n) == ws.size());
      CHECK(closed_under_negation(ws));
    }
  }
}

TEST_CASE("parse_bounds") {
  const auto b = parse_bounds("max_ambient_rank=6,exceptional=0");
  CHECK(b.max_sl == 6);
  CHECK(b.max_sp == 6);
  CHECK(b.max_so == 6);
  CHECK_FALSE(b.exceptional);
  const auto f = parse_bounds("families=gl_in_sp+spin7_in_so8");
  REQUIRE(f.families);
  CHECK(f.families->size() == 2);
  const auto d = parse_bounds("");
  CHECK(d.max_sl == 8);
  CHECK(d.max_sp == 12);
  CHECK(d.max_so == 10);
  CHECK_THROWS_AS(parse_bounds("bogus=1"), ParseError);
  CHECK_THROWS_AS(parse_bounds("sl=x"), ParseError);
}
