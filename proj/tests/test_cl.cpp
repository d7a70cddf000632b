#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tdtk/cl/pipelines.hpp"

using namespace tdtk;
using namespace tdtk::testing;

namespace {

// Three disjoint vocabularies whose vectors sit at distant corners, plus a
// batch of posts drawn from them.
struct Planted {
  EmbeddingTable table{3, "test"};
  WindowBatch batch;
};

Planted make_planted(int posts_per_topic = 8) {
  Planted p;
  const std::vector<Eigen::Vector3d> centers{
      {10, 0, 0}, {0, 10, 0}, {0, 0, 10}};
  std::vector<std::vector<std::string>> vocab{{"aa", "ab", "ac"}, {"ba", "bb", "bc"},
                                              {"ca", "cb", "cc"}};
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t i = 0; i < 3; ++i) {
      Eigen::Vector3d v = centers[t];
      v[(t + 1) % 3] += 0.1 * static_cast<double>(i);  // keep word vectors distinct
      p.table.insert(vocab[t][i], v);
    }
  std::vector<Post> posts;
  int id = 0;
  for (std::size_t t = 0; t < 3; ++t)
    for (int i = 0; i < posts_per_topic; ++i) {
      auto words = vocab[t];
      words.push_back(vocab[t][static_cast<std::size_t>(i) % 3]);
      posts.push_back(make_post("p" + std::to_string(id++), i, words));
    }
  p.batch = make_batch(std::move(posts));
  return p;
}

}  // namespace

TEST_SUITE("cl pipelines") {
  TEST_CASE("planted topics with optics keep vocabularies separate") {
    auto planted = make_planted();
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::Optics;
    cfg.distance = DistanceKind::Cosine;
    cfg.min_pts = 3;
    auto topics = cl_detect(planted.batch, planted.table, cfg);
    REQUIRE(topics.size() == 3);
    for (const auto& t : topics) {
      REQUIRE(!t.keywords.empty());
      const char prefix = t.keywords[0][0];
      for (const auto& w : t.keywords) CHECK(w[0] == prefix);
    }
  }

  TEST_CASE("single post with optics is all noise, no topics") {
    auto planted = make_planted();
    WindowBatch batch = make_batch({planted.batch.posts[0]});
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::Optics;
    cfg.min_pts = 3;
    CHECK(cl_detect(batch, planted.table, cfg).empty());
  }

  TEST_CASE("gk and cmeans agree on spherical planted data") {
    auto planted = make_planted();
    ClPipelineConfig gk_cfg, cm_cfg;
    gk_cfg.cluster = ClusterKind::Gk;
    gk_cfg.distance = DistanceKind::Euclidean;
    gk_cfg.c = 3;
    cm_cfg.cluster = ClusterKind::CMeans;
    cm_cfg.distance = DistanceKind::Euclidean;
    cm_cfg.c = 3;
    auto gk_topics = cl_detect(planted.batch, planted.table, gk_cfg);
    auto cm_topics = cl_detect(planted.batch, planted.table, cm_cfg);
    REQUIRE(gk_topics.size() == cm_topics.size());
    std::set<std::set<std::string>> gk_sets, cm_sets;
    for (const auto& t : gk_topics) gk_sets.insert(t.post_ids);
    for (const auto& t : cm_topics) cm_sets.insert(t.post_ids);
    CHECK(gk_sets == cm_sets);
  }

  TEST_CASE("unset cluster count is swept by silhouette") {
    auto planted = make_planted();
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::CMeans;
    cfg.distance = DistanceKind::Euclidean;
    auto topics = cl_detect(planted.batch, planted.table, cfg);
    CHECK(topics.size() == 3);
  }

  TEST_CASE("topic post sets are disjoint and cover no noise") {
    auto planted = make_planted();
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::Optics;
    cfg.min_pts = 3;
    auto topics = cl_detect(planted.batch, planted.table, cfg);
    std::set<std::string> seen;
    for (const auto& t : topics)
      for (const auto& id : t.post_ids) {
        CHECK(!seen.count(id));
        seen.insert(id);
      }
  }

  TEST_CASE("titles are deterministic") {
    auto planted = make_planted();
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::CMeans;
    cfg.c = 3;
    cfg.distance = DistanceKind::Euclidean;
    auto a = cl_detect(planted.batch, planted.table, cfg);
    auto b = cl_detect(planted.batch, planted.table, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].keywords == b[i].keywords);
      CHECK(a[i].post_ids == b[i].post_ids);
    }
  }

  TEST_CASE("compound lexicon joins title words") {
    auto planted = make_planted();
    CompoundLexicon lexicon(std::set<std::string>{"aa ab"});
    ClPipelineConfig cfg;
    cfg.cluster = ClusterKind::Optics;
    cfg.min_pts = 3;
    auto topics = cl_detect(planted.batch, planted.table, cfg, &lexicon);
    bool joined = false;
    for (const auto& t : topics)
      for (const auto& w : t.keywords)
        if (w == "aa_ab") joined = true;
    CHECK(joined);
  }
}

TEST_SUITE("membership hardening") {
  TEST_CASE("argmax with low-index tie break") {
    Eigen::MatrixXd mu(3, 2);
    mu << 0.9, 0.1, 0.5, 0.5, 0.2, 0.8;
    auto labels = harden_memberships(mu);
    CHECK(labels == std::vector<int>{0, 0, 1});
  }
}
