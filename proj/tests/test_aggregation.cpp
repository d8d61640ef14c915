#include "doctest.h"

#include "fatcat/aggregation.hpp"
#include "fatcat/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace fatcat;
using fatcat::testing::contranominal;
using fatcat::testing::random_context;
using fatcat::testing::Rng;

namespace {

FormalContext with_paths(const std::vector<std::string>& paths, std::size_t n_attr,
                         const std::vector<std::vector<bool>>& rows) {
  std::vector<std::string> objects, attributes;
  for (const auto& p : paths) objects.push_back(p);
  for (std::size_t m = 0; m < n_attr; ++m) attributes.push_back("t" + std::to_string(m));
  return FormalContext(objects, attributes, rows, paths);
}

std::vector<bool> row(const FormalContext& ctx, std::size_t g) {
  std::vector<bool> out;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out.push_back(ctx.incident(g, m));
  return out;
}

} // namespace

TEST_CASE("split_by_directory examples") {
  const auto ctx = with_paths({"Military/a.pdf", "Military/b.pdf", "Spytech/c.pdf"}, 2,
                              {{true, false}, {false, true}, {true, true}});
  const auto parts = split_by_directory(ctx, 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at("Military").object_count() == 2);
  CHECK(parts.at("Spytech").object_count() == 1);
  CHECK(parts.at("Military").attributes() == ctx.attributes());
  CHECK(parts.at("Military").objects() == std::vector<std::string>{"Military/a.pdf", "Military/b.pdf"});
  CHECK(row(parts.at("Military"), 1) == std::vector<bool>{false, true});

  const auto one = split_by_directory(with_paths({"A/x", "A/y"}, 1, {{true}, {false}}), 1);
  CHECK(one.size() == 1);

  const auto deep = split_by_directory(with_paths({"A/B/x"}, 1, {{true}}), 2);
  CHECK(deep.contains("A/B"));

  CHECK_THROWS_AS(split_by_directory(FormalContext({"a"}, {"t"}, {{true}}), 1), InputError);
  CHECK_THROWS_WITH_AS(split_by_directory(with_paths({""}, 1, {{true}}), 1), doctest::Contains("empty path"),
                       InputError);
  CHECK_THROWS_AS(split_by_directory(ctx, 0), InputError);
}

TEST_CASE("directory_topic_context examples") {
  // d1 holds {t0, t1}, d2 holds {t0}
  const auto dir = with_paths({"D/d1", "D/d2"}, 2, {{true, true}, {true, false}});
  const auto other = with_paths({"E/e1", "E/e2", "E/e3"}, 2, {{false, false}, {false, false}, {false, false}});
  std::map<DirectoryId, FormalContext> parts{{"D", dir}, {"E", other}};

  const auto dtc = directory_topic_context(parts, Rate::parse("0.6"));
  CHECK(dtc.context.objects() == std::vector<std::string>{"D", "E"});
  CHECK(dtc.context.attributes() == std::vector<std::string>{"t0", "t1"});
  CHECK(row(dtc.context, 0) == std::vector<bool>{true, false});
  CHECK(row(dtc.context, 1) == std::vector<bool>{false, false});  // empty directory kept

  const auto zero = directory_topic_context(parts, Rate::ratio(0, 1));
  CHECK(row(zero.context, 0) == std::vector<bool>{true, true});
  CHECK(row(zero.context, 1) == std::vector<bool>{false, false});

  const auto full = directory_topic_context(parts, Rate::ratio(1, 1));
  CHECK(row(full.context, 0) == std::vector<bool>{true, false});

  std::map<DirectoryId, FormalContext> broken{{"Empty", FormalContext({}, {"t0", "t1"}, {}, {})}};
  CHECK_THROWS_WITH_AS(directory_topic_context(broken, Rate::ratio(1, 10)), doctest::Contains("Empty"), InputError);
}

TEST_CASE("directory_lattice examples") {
  SUBCASE("no shared topic") {
    DirectoryTopicContext dtc{FormalContext({"A", "B"}, {"1", "2"}, {{true, false}, {false, true}})};
    const auto cs = directory_lattice(dtc, std::nullopt);
    CHECK(cs.concepts.front().extent.count() == 2);
    CHECK(cs.concepts.front().intent.none());
  }
  SUBCASE("single incident cell") {
    DirectoryTopicContext dtc{FormalContext({"A"}, {"1"}, {{true}})};
    CHECK(directory_lattice(dtc, std::nullopt).concepts.size() == 1);
  }
  SUBCASE("contranominal") {
    DirectoryTopicContext dtc{contranominal(3)};
    CHECK(directory_lattice(dtc, std::nullopt).concepts.size() == 8);
    CHECK(directory_lattice(dtc, Rate::ratio(2, 3)).concepts.size() == 4);
  }
  SUBCASE("empty") {
    DirectoryTopicContext dtc{FormalContext({}, {"1"}, {})};
    CHECK_THROWS_AS(directory_lattice(dtc, std::nullopt), InputError);
  }
}

TEST_CASE("presence by frequent intents equals presence by frequent singletons") {
  Rng rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ctx = random_context(rng, rng.between(1, 30), rng.between(1, 12), rng.unit() * 0.6);
    const Rate minsupp = Rate::ratio(rng.between(0, 20), 20);
    CHECK(topics_in_frequent_intents(iceberg_concepts(ctx, minsupp)) == frequent_singletons(ctx, minsupp));
  }
}

TEST_CASE("raising the directory minsupp only removes topics") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> paths;
    const std::size_t n = rng.between(2, 30);
    for (std::size_t g = 0; g < n; ++g) paths.push_back("dir" + std::to_string(rng.between(0, 3)) + "/f" + std::to_string(g));
    auto base = random_context(rng, n, 8, 0.3);
    std::vector<std::vector<bool>> rows;
    for (std::size_t g = 0; g < n; ++g) rows.push_back(row(base, g));
    const auto ctx = with_paths(paths, 8, rows);
    const auto parts = split_by_directory(ctx, 1);
    const auto low = directory_topic_context(parts, Rate::ratio(1, 10));
    const auto high = directory_topic_context(parts, Rate::ratio(1, 2));
    CHECK(low.context.attributes() == ctx.attributes());
    for (std::size_t d = 0; d < low.context.object_count(); ++d)
      CHECK(high.context.row(d).is_subset_of(low.context.row(d)));
  }
}
