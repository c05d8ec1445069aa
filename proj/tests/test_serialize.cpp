#include <catch2/catch.hpp>

#include "klein/molien.hpp"
#include "klein/serialize.hpp"

using namespace klein;

TEST_CASE("rational strings") {
  CHECK(rat_str(make_rat(1, 2)) == "1/2");
  CHECK(rat_str(make_rat(-3, 6)) == "-1/2");
  CHECK(rat_str(make_rat(4)) == "4");
  CHECK(parse_rat("7/3") == make_rat(7, 3));
  CHECK(parse_rat("-2") == make_rat(-2));
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("round trips") {
  SECTION("quiver") {
    for (const char* t : {"A2", "D4", "E6"}) {
      QuiverSpec q = double_quiver(build_extended_dynkin(t));
      QuiverSpec back = quiver_from_json(to_json(q));
      REQUIRE(back.vertex_count == q.vertex_count);
      REQUIRE(back.arrows.size() == q.arrows.size());
      for (size_t i = 0; i < q.arrows.size(); ++i)
        REQUIRE(back.arrows[i] == q.arrows[i]);
      CHECK(back.doubled);
    }
  }

  SECTION("roots") {
    QuiverSpec q = build_extended_dynkin("A2");
    auto roots = enumerate_roots(q, 2);
    auto back = roots_from_json(roots_to_json(roots));
    REQUIRE(back.size() == roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(back[i].coords == roots[i].coords);
      CHECK(back[i].is_real == roots[i].is_real);
      CHECK(back[i].is_dynkin == roots[i].is_dynkin);
      CHECK(back[i].is_positive == roots[i].is_positive);
    }
  }

  SECTION("parameters, real and complex") {
    ParamVector real = parse_param("1/2,-3,4/7");
    CHECK(param_from_json(to_json(real)) == real);
    ParamVector complex = parse_param("1/2,1/2", "1,-1");
    CHECK(param_from_json(to_json(complex)) == complex);
  }

  SECTION("parameter report") {
    QuiverSpec q = build_extended_dynkin("A1");
    ParamReport rep = analyze_param(q, parse_param("2,-1"));
    ParamReport back = param_report_from_json(to_json(rep));
    CHECK(back.regular == rep.regular);
    CHECK(back.no_findim == rep.no_findim);
    CHECK(back.dominant == rep.dominant);
    CHECK(back.simple_dims == rep.simple_dims);
    CHECK(back.annihilated.size() == rep.annihilated.size());
  }

  SECTION("weyl words") {
    QuiverSpec q = build_extended_dynkin("A2");
    TranslationWord t = decompose_translation(q, {-2, 1, 1});
    TranslationWord back = translation_from_json(to_json(t));
    CHECK(back.word.automorphism == t.word.automorphism);
    CHECK(back.word.reflections == t.word.reflections);
    CHECK(back.verified == t.verified);
    CHECK(back.walk_steps == t.walk_steps);
  }

  SECTION("weight class names") {
    for (WeightClass w :
         {WeightClass::NotInLambda, WeightClass::LambdaOnly,
          WeightClass::LambdaPlus, WeightClass::LambdaPlusPlus})
      CHECK(weight_class_from_name(weight_class_name(w)) == w);
  }

  SECTION("moment-fiber reports") {
    FiberRing r = build_fiber_ring(2);
    MultSurjReport mult = check_mult_surjective(r, {-1, 1}, 1, 1, 4);
    MultSurjReport mult_back = mult_report_from_json(to_json(mult));
    CHECK(mult_back.surjective == mult.surjective);
    CHECK(mult_back.m == mult.m);

    PowerReport power = check_power_stabilization(r, {-1, 1}, 1, 2, 4);
    PowerReport power_back = power_report_from_json(to_json(power));
    CHECK(power_back.holds == power.holds);
    CHECK(power_back.minimal_passing_n == power.minimal_passing_n);

    KleinianReport klein = verify_kleinian_presentation(r, 4);
    KleinianReport klein_back = kleinian_from_json(to_json(klein));
    CHECK(klein_back.product_relation == klein.product_relation);
    CHECK(klein_back.invariants_spanned == klein.invariants_spanned);
  }

  SECTION("filtration table") {
    QuiverSpec a1 = double_quiver(build_extended_dynkin("A1"));
    FiltrationTable t = truncated_dims(a1, parse_param("1/2,1/2"), 3);
    FiltrationTable back = filtration_from_json(to_json(t));
    CHECK(back.max_length == t.max_length);
    CHECK(back.buffer == t.buffer);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(back.dims[i][j] == t.dims[i][j]);
  }

  SECTION("witnesses survive the trip") {
    MultSurjReport rep;
    rep.m = 1;
    rep.k = 2;
    rep.d_max = 3;
    rep.surjective = false;
    rep.first_failure = BidegreeWitness{2, "a0.a1*"};
    MultSurjReport back = mult_report_from_json(to_json(rep));
    REQUIRE(back.first_failure.has_value());
    CHECK(back.first_failure->degree == 2);
    CHECK(back.first_failure->monomial == "a0.a1*");
  }
}
