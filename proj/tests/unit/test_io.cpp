#include "doctest.h"

#include <regex>

#include "fixtures.hpp"
#include "islands/errors.hpp"
#include "islands/generate.hpp"
#include "islands/instance_io.hpp"
#include "islands/planar.hpp"
#include "islands/predicates.hpp"
#include "islands/render.hpp"

using namespace islands;
using islands::testing::make_set;
using islands::testing::random_instance;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance round trip keeps exact coordinates") {
  const ColoredPointSet set(2, {{Rational(1, 3), Rational(-7, 2)}, {Rational(5), Rational(0)}, {Rational(2, 9), Rational(11, 4)}},
                            {0, 1, 1}, 2);
  const io::Instance inst{set, {3, 1, 42, "hand"}};
  const std::string text = io::serialize_instance(inst);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  const io::Instance back = io::parse_instance(text);
  CHECK(back.set.points() == set.points());
  CHECK(back.set.colors() == set.colors());
  CHECK(back.set.num_colors() == 2);
  CHECK(back.meta.k == 3);
  CHECK(back.meta.seed == 42);
  CHECK(back.meta.family == "hand");
  CHECK(io::serialize_instance(back) == text);
}

TEST_CASE("instance parsing rejects floats and malformed documents") {
  CHECK_THROWS_WITH_AS(io::parse_instance(R"({"dim":2,"colors":1,"points":[{"x":[0.5,"1"],"color":0}]})"),
                       doctest::Contains("exact rational strings"), PreconditionError);
  CHECK_THROWS_AS(io::parse_instance("{"), PreconditionError);
  CHECK_THROWS_AS(io::parse_instance(R"({"colors":1,"points":[]})"), PreconditionError);
  CHECK_THROWS_AS(io::parse_instance(R"({"dim":2,"colors":1,"points":[{"x":["1/0","1"],"color":0}]})"),
                  PreconditionError);
  CHECK_THROWS_AS(io::parse_instance(R"({"dim":2,"colors":1,"points":[{"x":["1"],"color":0}]})"), PreconditionError);
  CHECK_THROWS_AS(io::parse_instance(R"({"dim":2,"colors":1,"points":[{"x":["1","2"],"color":3}]})"),
                  PreconditionError);
}

TEST_CASE("solution round trip") {
  const auto set = random_instance(2, 3, 2);
  const auto solved = planar::partition_plane(planar::PlanarInstance(set, 3, 2));
  io::Solution sol;
  sol.mode = "plane";
  sol.partition = solved.partition;
  for (const auto& step : solved.steps) sol.cuts.insert(sol.cuts.end(), step.cuts.begin(), step.cuts.end());
  sol.verified = true;
  sol.status = "found";
  const std::string text = io::serialize_solution(sol);
  const io::Solution back = io::parse_solution(text);
  CHECK(back.partition.parts == sol.partition.parts);
  CHECK(back.verified);
  CHECK(back.mode == "plane");

  CHECK(io::parse_solution(R"({"parts":[[0,1],[2]]})").partition.parts == std::vector<IdList>{{0, 1}, {2}});
  CHECK_THROWS_AS(io::parse_solution(R"({"cuts":[]})"), PreconditionError);
  CHECK_THROWS_AS(io::parse_solution(R"({"parts":[[0,-1]]})"), PreconditionError);
}

TEST_CASE("generator is deterministic and valid for every family") {
  for (const std::string& family : gen::family_names()) {
    gen::GenParams p;
    p.family = family;
    p.seed = 12;
    p.k = family == "tightness" ? 3 : 4;
    p.n = family == "tightness" ? 5 : 3;
    p.dim = family == "tightness" ? 3 : 2;
    CAPTURE(family);
    const auto a = gen::generate(p);
    const auto b = gen::generate(p);
    CHECK(io::serialize_instance(a) == io::serialize_instance(b));
    CHECK(a.set.size() == static_cast<std::size_t>(p.k * p.n));
    CHECK(is_general_position(a.set));
    p.seed = 13;
    if (family != "rings") CHECK(io::serialize_instance(gen::generate(p)) != io::serialize_instance(a));
  }
  gen::GenParams bad;
  bad.family = "spiral";
  bad.k = 2;
  bad.n = 2;
  CHECK_THROWS_AS(gen::generate(bad), PreconditionError);
}

TEST_CASE("random sizes respect the floor") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto sizes = gen::random_sizes(seed, 20, 3, 4);
    CHECK(sizes.size() == 3);
    CHECK(sizes[0] + sizes[1] + sizes[2] == 20);
    for (auto s : sizes) CHECK(s >= 4);
  }
}

TEST_CASE("random instances in space") {
  const auto set = random_instance(5, 4, 3, 3);
  CHECK(set.dim() == 3);
  CHECK(set.num_colors() == 3);
  for (auto s : set.class_sizes()) CHECK(s >= 3);
  CHECK(is_general_position(set));
}

TEST_CASE("rings layout with 50 points") {
  gen::GenParams p;
  p.family = "rings";
  p.k = 5;
  p.n = 10;
  const auto inst = gen::generate(p);
  CHECK(inst.set.size() == 50);
  CHECK(inst.meta.k == 5);
  CHECK(inst.meta.n == 10);
  const auto solved = planar::partition_plane(planar::PlanarInstance(inst.set, 5, 10));
  const std::string svg = render::render_svg(inst.set, solved.partition);
  CHECK(count_of(svg, "class=\"island\"") == 10);
  CHECK(count_of(svg, "class=\"point\"") == 50);
  CHECK(svg == render::render_svg(inst.set, solved.partition));
}

TEST_CASE("rendering") {
  const auto set = random_instance(3, 3, 2);
  const std::string bare = render::render_svg(set, {});
  CHECK(bare.rfind("<svg", 0) == 0);
  CHECK(count_of(bare, "class=\"island\"") == 0);
  CHECK(count_of(bare, "class=\"point\"") == 6);

  const auto space = random_instance(3, 4, 2, 3);
  const std::string three = render::render_svg(space, {{{0, 1, 2, 3}, {4, 5, 6, 7}}});
  CHECK(count_of(three, "class=\"point\"") == 24);
  CHECK(count_of(three, "class=\"island\"") == 6);

  const auto four = random_instance(3, 5, 1, 4);
  CHECK_THROWS_AS(render::render_svg(four, {}), PreconditionError);
}
