#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/cli/commands.hpp"
#include "pushcat/fuzz.hpp"
#include "pushcat/io.hpp"

namespace pushcat {
namespace {

using io::Json;
using namespace testing;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(Io, CategoryRoundTrip) {
  for (unsigned i = 0; i < 30; ++i) {
    std::seed_seq seq{11u, i};
    fuzz::Rng rng(seq);
    const CatPtr c = fuzz::random_category(rng);
    const Json j = io::to_json(*c);
    const CatPtr back = io::parse_category(Json::parse(io::dump(j)));
    EXPECT_EQ(io::to_json(*back), j) << i;
    EXPECT_EQ(back->num_morphisms(), c->num_morphisms());
  }
}

TEST(Io, ShorthandCategoryGetsIdentitiesAndComposites) {
  const Json j = Json::parse(R"({
    "objects": ["0", "1", "2"],
    "morphisms": [{"id": "a", "src": "0", "dst": "1"}, {"id": "b", "src": "1", "dst": "2"},
                  {"id": "ba", "src": "0", "dst": "2"}],
    "compose": [{"g": "b", "f": "a", "result": "ba"}]
  })");
  const CatPtr c = io::parse_category(j);
  EXPECT_EQ(c->num_morphisms(), 6u);
  EXPECT_EQ(c->morphism_id(c->compose(*c->find_morphism("b"), *c->find_morphism("a"))), "ba");
}

TEST(Io, SpanRoundTrip) {
  const Span s = example_span();
  const Json j = io::to_json(s);
  const Span back = io::parse_span(j);
  EXPECT_EQ(io::to_json(back), j);
  EXPECT_EQ(back.right.obj_map, s.right.obj_map);
}

TEST(Io, SetFunctorRoundTrip) {
  std::seed_seq seq{3u};
  fuzz::Rng rng(seq);
  const CatPtr c = poset({"0", "1", "2"}, {{0, 1}, {1, 2}});
  const SetFunctor f = fuzz::random_set_functor(rng, c, 3);
  const SetFunctor back = io::parse_set_functor(io::to_json(f), c);
  EXPECT_EQ(back.sizes, f.sizes);
  EXPECT_EQ(back.maps, f.maps);
}

TEST(Io, SetFunctorIdentityMapsMayBeOmitted) {
  const CatPtr c = poset({"0", "1"}, {{0, 1}});
  const auto f = io::parse_set_functor(Json::parse(R"({"sizes": {"0": 2, "1": 1}, "maps": {"0<=1": [0, 0]}})"), c);
  EXPECT_EQ(f.maps[*c->find_morphism("id_0")], (std::vector<std::size_t>{0, 1}));
}

TEST(Io, Errors) {
  const CatPtr c = poset({"0", "1"}, {{0, 1}});
  EXPECT_EQ(code_of([] { io::parse_category(Json::parse(R"({"morphisms": []})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_category(Json::parse(R"({"objects": ["x", 3]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              io::parse_category(Json::parse(R"({"objects": ["x"], "morphisms": [{"id": "m", "src": "x", "dst": "y"}]})"));
            }),
            ErrorCode::DanglingReference);
  EXPECT_EQ(code_of([&] { io::parse_set_functor(Json::parse(R"({"sizes": {"0": 1, "1": 1}})"), c); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_set_functor(Json::parse(R"({"sizes": {"0": 1, "1": 1}, "maps": {"zz": []}})"), c); }),
            ErrorCode::DanglingReference);
  EXPECT_EQ(code_of([&] { io::parse_set_functor(Json::parse(R"({"sizes": {"0": -1, "1": 1}})"), c); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::load("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli::exit_code_for(ErrorCode::ParseError), cli::kInputInvalid);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::NonAssociative), cli::kInputInvalid);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::NotDwyer), cli::kExpectationFailed);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::ExplosionGuard), cli::kBudgetExceeded);
}

TEST(Cli, CoveringRelationsOfGoldenPushout) {
  const auto p = dwyer_pushout(example_span());
  EXPECT_TRUE(cli::detail::is_poset(*p.d));
  EXPECT_EQ(cli::detail::covering_relations(*p.d), (std::vector<std::string>{"0<1", "1<2", "1<2′"}));
}

TEST(Cli, TableAlignsMultibyteNames) {
  EXPECT_EQ(cli::detail::table({{"2′", "x"}, {"10", "y"}}), "2′  x\n10  y\n");
}

TEST(Cli, FuzzIsIndependentOfWorkerCount) {
  cli::JobConfig one;
  one.jobs = 1;
  one.seed = 9;
  cli::JobConfig four = one;
  four.jobs = 4;
  const auto& suite = cli::fuzz_suites().at("pi0");
  const auto a = cli::run_suite(suite, 12, one);
  const auto b = cli::run_suite(suite, 12, four);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.unstabilized, b.unstabilized);
}

}  // namespace
}  // namespace pushcat
