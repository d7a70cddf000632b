#include <doctest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "tdtk/eval/metrics.hpp"
#include "tdtk/eval/sweep.hpp"

using namespace tdtk;
using namespace tdtk::testing;

namespace {

Topic topic(std::vector<std::string> keywords, std::set<std::string> posts) {
  Topic t;
  t.keywords = std::move(keywords);
  t.post_ids = std::move(posts);
  return t;
}

GoldenStandard two_class_golden() {
  GoldenStandard g;
  g.classes["fire"] = {"fire", "smoke", "burn"};
  g.classes["vote"] = {"vote", "poll", "ballot"};
  g.assignments["p1"]["fire"] = 1.0;
  g.assignments["p2"]["fire"] = 1.0;
  g.assignments["p3"]["vote"] = 1.0;
  g.assignments["p4"]["vote"] = 1.0;
  return g;
}

}  // namespace

TEST_SUITE("topic precision recall") {
  TEST_CASE("hand example with partial matching") {
    GoldenStandard g;
    g.classes["c1"] = {"a", "b"};
    g.classes["c2"] = {"c", "d"};
    g.classes["c3"] = {"e", "f"};
    g.classes["c4"] = {"g", "h"};
    // 3 detected, 2 match (cover classes c1 and c2), one matches nothing
    std::vector<Topic> topics{topic({"a", "b"}, {}), topic({"c", "d"}, {}),
                              topic({"zz", "qq"}, {})};
    auto prf = topic_prf(topics, g);
    CHECK(prf.precision == doctest::Approx(2.0 / 3.0));
    CHECK(prf.recall == doctest::Approx(0.5));
    CHECK(prf.f == doctest::Approx(4.0 / 7.0).epsilon(1e-9));
  }

  TEST_CASE("perfect matching is all ones") {
    auto g = two_class_golden();
    std::vector<Topic> topics{topic({"fire", "smoke"}, {}), topic({"vote", "poll"}, {})};
    auto prf = topic_prf(topics, g);
    CHECK(prf.precision == doctest::Approx(1.0));
    CHECK(prf.recall == doctest::Approx(1.0));
    CHECK(prf.f == doctest::Approx(1.0));
  }

  TEST_CASE("no detections is all zeros") {
    auto prf = topic_prf({}, two_class_golden());
    CHECK(prf.precision == 0.0);
    CHECK(prf.recall == 0.0);
    CHECK(prf.f == 0.0);
  }

  TEST_CASE("the match rule needs half the title words") {
    GoldenStandard g;
    g.classes["c"] = {"a", "b"};
    // 1 of 4 title words known -> below 0.5, no match
    auto low = topic_prf({topic({"a", "x", "y", "z"}, {})}, g);
    CHECK(low.precision == 0.0);
    // 2 of 4 -> matches
    auto high = topic_prf({topic({"a", "b", "y", "z"}, {})}, g);
    CHECK(high.precision == doctest::Approx(1.0));
  }

  TEST_CASE("missing golden classes is an error") {
    GoldenStandard empty;
    CHECK_THROWS(topic_prf({topic({"a"}, {})}, empty));
  }
}

TEST_SUITE("fs metrics") {
  TEST_CASE("cluster aggregate weighs scores by column mass") {
    Eigen::MatrixXd sr(2, 2);
    sr << 4, 10, 6, 20;  // column sums 10 and 30
    CHECK(cluster_fs(sr, {0.2, 0.6}) == doctest::Approx(0.5));
  }

  TEST_CASE("class aggregate mirrors on rows") {
    Eigen::MatrixXd sc(2, 2);
    sc << 4, 6, 10, 20;  // row sums 10 and 30
    CHECK(class_fs(sc, {0.2, 0.6}) == doctest::Approx(0.5));
  }

  TEST_CASE("constant kernel scores pass through") {
    Eigen::MatrixXd sr(2, 3);
    sr << 1, 2, 3, 4, 5, 6;
    CHECK(cluster_fs(sr, {0.7, 0.7, 0.7}) == doctest::Approx(0.7));
  }

  TEST_CASE("mean is exact") {
    CHECK(mean_fs(0.4, 0.6) == doctest::Approx(0.5));
    CHECK(mean_fs(0.3, 0.3) == doctest::Approx(0.3));
  }

  TEST_CASE("entropy impurity is zero for pure and positive for mixed") {
    CHECK(entropy_impurity({5.0, 0.0}) == doctest::Approx(0.0));
    CHECK(entropy_impurity({5.0, 5.0}) > 0.0);
    CHECK(entropy_impurity({1.0, 1.0}) > entropy_impurity({9.0, 1.0}));
  }

  TEST_CASE("end-to-end fs from topics and golden labels") {
    auto g = two_class_golden();
    // one pure cluster, one mixed
    std::vector<Topic> topics{topic({"fire"}, {"p1", "p2"}), topic({"vote"}, {"p3", "p1"})};
    auto scores = compute_fs(topics, g);
    REQUIRE(scores.per_cluster.size() == 2);
    CHECK(scores.per_cluster[0] == doctest::Approx(0.0));
    CHECK(scores.per_cluster[1] > 0.0);
    CHECK(scores.mean_fs == doctest::Approx((scores.class_fs + scores.cluster_fs) / 2.0));
  }

  TEST_CASE("posts outside the golden labeling are counted") {
    auto g = two_class_golden();
    std::vector<Topic> topics{topic({"fire"}, {"p1", "stranger"})};
    auto scores = compute_fs(topics, g);
    CHECK(scores.unlabeled_posts == 1);
  }

  TEST_CASE("empty inputs are errors") {
    CHECK_THROWS(compute_fs({}, two_class_golden()));
  }
}

TEST_SUITE("golden files") {
  TEST_CASE("assignments and catalog load from jsonl") {
    TempDir dir("golden");
    write_file(dir.file("g.jsonl"),
               R"({"post_id":"p1","classes":["fire"]})" "\n"
               R"({"post_id":"p2","classes":["fire","vote"],"score":2.5})" "\n");
    write_file(dir.file("c.jsonl"), R"({"class":"fire","keywords":["fire","smoke"]})" "\n");
    GoldenStandard g;
    load_golden_assignments(dir.file("g.jsonl"), g);
    load_class_catalog(dir.file("c.jsonl"), g);
    CHECK(g.assignments.at("p1").at("fire") == doctest::Approx(1.0));
    CHECK(g.assignments.at("p2").at("vote") == doctest::Approx(2.5));
    CHECK(g.classes.at("fire").count("smoke"));
  }

  TEST_CASE("parse errors carry the line number") {
    TempDir dir("golden");
    write_file(dir.file("bad.jsonl"), R"({"post_id":"p1","classes":["a"]})" "\nnot json\n");
    GoldenStandard g;
    CHECK_THROWS_WITH(load_golden_assignments(dir.file("bad.jsonl"), g), doctest::Contains("2"));
  }
}

TEST_SUITE("range parsing") {
  TEST_CASE("two-part range steps by one") {
    auto values = parse_range("2:30");
    REQUIRE(values.size() == 29);
    CHECK(values.front() == doctest::Approx(2.0));
    CHECK(values.back() == doctest::Approx(30.0));
  }

  TEST_CASE("union of two stepped ranges") {
    auto values = parse_range("20:10:90&100:50:300");
    REQUIRE(values.size() == 13);
    CHECK(values[0] == doctest::Approx(20.0));
    CHECK(values[7] == doctest::Approx(90.0));
    CHECK(values[8] == doctest::Approx(100.0));
    CHECK(values.back() == doctest::Approx(300.0));
  }

  TEST_CASE("fractional steps") {
    auto values = parse_range("0.1:0.1:1");
    REQUIRE(values.size() == 10);
    CHECK(values.front() == doctest::Approx(0.1));
    CHECK(values.back() == doctest::Approx(1.0));
  }

  TEST_CASE("percent suffix scales by one hundred") {
    auto values = parse_range("5%:5:50%");
    REQUIRE(values.size() == 10);
    CHECK(values.front() == doctest::Approx(0.05));
    CHECK(values.back() == doctest::Approx(0.5));
  }

  TEST_CASE("symbolic endpoints resolve from context") {
    auto values = parse_range("5:5:k-5", {{"k", 20.0}});
    REQUIRE(values.size() == 3);
    CHECK(values.back() == doctest::Approx(15.0));
  }

  TEST_CASE("single values and unions of singletons") {
    CHECK(parse_range("7") == std::vector<double>{7.0});
    CHECK(parse_range("1&3&5").size() == 3);
  }

  TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_WITH(parse_range("2::5"), doctest::Contains("position"));
    CHECK_THROWS(parse_range(""));
    CHECK_THROWS(parse_range("a:b"));
  }
}

TEST_SUITE("parameter tuning") {
  TEST_CASE("argmax picks the best value") {
    auto result = tune_parameter(
        {{"c", {2.0, 3.0, 4.0}}},
        [](const std::vector<double>& v) -> std::optional<double> {
          if (v[0] == 2.0) return 0.1;
          if (v[0] == 3.0) return 0.9;
          return 0.4;
        },
        true);
    REQUIRE(result.best.size() == 1);
    CHECK(result.best[0] == doctest::Approx(3.0));
    CHECK(result.best_score == doctest::Approx(0.9));
    CHECK(result.rows.size() == 3);
  }

  TEST_CASE("ties keep the smallest tuple") {
    auto result = tune_parameter(
        {{"c", {2.0, 3.0}}},
        [](const std::vector<double>&) -> std::optional<double> { return 0.9; }, true);
    CHECK(result.best[0] == doctest::Approx(2.0));
  }

  TEST_CASE("argmin mode for lower-better criteria") {
    auto result = tune_parameter(
        {{"c", {2.0, 3.0}}},
        [](const std::vector<double>& v) -> std::optional<double> { return v[0]; }, false);
    CHECK(result.best[0] == doctest::Approx(2.0));
  }

  TEST_CASE("cross products cover every combination in order") {
    std::vector<std::vector<double>> seen;
    tune_parameter(
        {{"a", {1.0, 2.0}}, {"b", {10.0, 20.0}}},
        [&](const std::vector<double>& v) -> std::optional<double> {
          seen.push_back(v);
          return 0.0;
        },
        true);
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == std::vector<double>{1.0, 10.0});
    CHECK(seen[3] == std::vector<double>{2.0, 20.0});
  }

  TEST_CASE("failed runs are excluded, total failure throws") {
    auto result = tune_parameter(
        {{"c", {2.0, 3.0}}},
        [](const std::vector<double>& v) -> std::optional<double> {
          if (v[0] == 2.0) return std::nullopt;
          return 0.5;
        },
        true);
    CHECK(result.best[0] == doctest::Approx(3.0));
    CHECK_THROWS(tune_parameter(
        {{"c", {2.0}}},
        [](const std::vector<double>&) -> std::optional<double> { return std::nullopt; }, true));
  }

  TEST_CASE("csv report lists every row") {
    auto result = tune_parameter(
        {{"c", {2.0, 3.0}}},
        [](const std::vector<double>& v) -> std::optional<double> { return v[0]; }, true);
    std::ostringstream out;
    write_sweep_csv(out, result, "silhouette");
    const std::string text = out.str();
    CHECK(text.find("c,silhouette") != std::string::npos);
    CHECK(text.find("2") != std::string::npos);
    CHECK(text.find("3") != std::string::npos);
  }
}
