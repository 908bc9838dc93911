#include <doctest.h>

#include "cforge/coherence.hpp"
#include "cforge/errors.hpp"
#include "cforge/experiments.hpp"
#include "cforge/measurement.hpp"
#include "cforge/povm_io.hpp"

using namespace cforge;

TEST_CASE("povm json round trip") {
  const Povm original = trine_cnm_povm(0.5);
  const std::string text = povm_to_json_text(original);
  const Povm reloaded = povm_from_json_text(text);
  REQUIRE(reloaded.size() == original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    CHECK(max_abs_diff(reloaded.effect(i), original.effect(i)) < 1e-12);
  }
}

TEST_CASE("povm json parsing errors") {
  CHECK_THROWS_AS(povm_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(povm_from_json_text("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(povm_from_json_text(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(povm_from_json_text(R"({"dim": 2, "effects": [], "extra": 1})"), ParseError);
  // wrong entry count
  CHECK_THROWS_AS(povm_from_json_text(R"({"dim": 2, "effects": [[[1,0],[0,0]]]})"), ParseError);
  // non-pair entries
  CHECK_THROWS_AS(
      povm_from_json_text(R"({"dim": 2, "effects": [[[1,0],[0,0],[0,0],3]]})"), ParseError);
  // parses but fails completeness
  CHECK_THROWS_AS(povm_from_json_text(
                      R"({"dim": 2, "effects": [[[0.5,0],[0,0],[0,0],[0.5,0]]]})"),
                  NotComplete);
}

TEST_CASE("schema layout is row-major [re, im] pairs") {
  const std::string text = R"({
    "dim": 2,
    "effects": [
      [[1, 0], [0, 0], [0, 0], [0, 0]],
      [[0, 0], [0, 0], [0, 0], [1, 0]]
    ]
  })";
  const Povm povm = povm_from_json_text(text);
  CHECK(povm.effect(0)(0, 0) == Complex(1, 0));
  CHECK(povm.effect(1)(1, 1) == Complex(1, 0));
  CHECK(is_free_measurement(povm));
}

TEST_CASE("inspect_povm reports the classification verdicts") {
  const PovmValidationReport trine = inspect_povm(trine_cnm_povm(0.5));
  CHECK(trine.dim == 2);
  CHECK(trine.n_effects == 3);
  CHECK(trine.completeness_deviation < 1e-10);
  CHECK(!trine.free_measurement);
  CHECK(trine.cnm);
  CHECK(trine.raw_quantumness[0] > 1e-3);

  const PovmValidationReport sharp =
      inspect_povm(one_param_povm({Complex(0.384, 0.0), 1.0}));
  CHECK(!sharp.cnm);
  CHECK(!sharp.free_measurement);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const PovmValidationReport computational = inspect_povm(validate_povm({p0, identity(2) - p0}));
  CHECK(computational.free_measurement);
  CHECK(computational.cnm);
}
