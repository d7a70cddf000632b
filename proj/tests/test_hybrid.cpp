#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "helpers.hpp"
#include "tdtk/hybrid/catt.hpp"
#include "tdtk/hybrid/fhkn.hpp"
#include "tdtk/hybrid/segments.hpp"
#include "tdtk/hybrid/sgjp.hpp"

using namespace tdtk;
using namespace tdtk::testing;

namespace {

// Model with exact pinned probabilities: counts over a fixed total per order.
NgramModel pinned_ngrams(std::map<std::string, std::uint64_t> unigrams, std::uint64_t total1,
                         std::map<std::string, std::uint64_t> bigrams, std::uint64_t total2,
                         std::uint64_t distinct) {
  std::vector<std::shared_ptr<CountTable>> tables{
      std::make_shared<MemoryCountTable>(std::move(unigrams)),
      std::make_shared<MemoryCountTable>(std::move(bigrams))};
  return NgramModel(std::move(tables), {total1, total2}, distinct);
}

}  // namespace

TEST_SUITE("segment scoring") {
  TEST_CASE("scp hand value") {
    auto model = pinned_ngrams({{"w1", 10}, {"w2", 5}}, 100, {{"w1 w2", 1}}, 100, 1000);
    CHECK(scp({"w1", "w2"}, model) == doctest::Approx(std::log(0.02)).epsilon(1e-9));
  }

  TEST_CASE("scp is zero when the phrase square equals its split product") {
    auto model = pinned_ngrams({{"a", 2}, {"b", 2}}, 4, {{"a b", 2}}, 4, 1000);
    CHECK(scp({"a", "b"}, model) == doctest::Approx(0.0));
  }

  TEST_CASE("doubling the phrase probability adds two log two") {
    auto low = pinned_ngrams({{"a", 10}, {"b", 10}}, 100, {{"a b", 1}}, 100, 1000);
    auto high = pinned_ngrams({{"a", 10}, {"b", 10}}, 100, {{"a b", 2}}, 100, 1000);
    CHECK(scp({"a", "b"}, high) - scp({"a", "b"}, low) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-9));
  }

  TEST_CASE("scp rejects unigrams") {
    auto model = pinned_ngrams({{"a", 1}}, 1, {}, 0, 10);
    CHECK_THROWS(scp({"a"}, model));
  }

  TEST_CASE("length preference fixed values") {
    CHECK(segment_length_factor(1) == doctest::Approx(1.0 / 3.0));
    CHECK(segment_length_factor(2) == doctest::Approx(0.5));
    CHECK(segment_length_factor(4) == doctest::Approx(0.75));
  }

  TEST_CASE("neutral factors give stickiness one quarter") {
    auto model = pinned_ngrams({{"a", 2}, {"b", 2}}, 4, {{"a b", 2}}, 4, 1000);
    AnchorModel anchors;  // Q = 0 everywhere
    CHECK(segment_stickiness({"a", "b"}, anchors, model) == doctest::Approx(0.25));
  }

  TEST_CASE("anchor presence raises stickiness") {
    auto model = pinned_ngrams({{"a", 2}, {"b", 2}}, 4, {{"a b", 2}}, 4, 1000);
    AnchorModel anchors(std::make_shared<MemoryCountTable>(
                            std::map<std::string, std::uint64_t>{{"a b", 5}}),
                        10);
    AnchorModel empty;
    CHECK(segment_stickiness({"a", "b"}, anchors, model) >
          segment_stickiness({"a", "b"}, empty, model));
  }
}

TEST_SUITE("post segmentation") {
  TEST_CASE("h of one forces singleton segments") {
    auto counts = count_ngrams_lines({"a b c a b"}, 3);
    auto model = NgramModel::from_counts(counts);
    AnchorModel anchors;
    auto segments = segment_tokens({"a", "b", "c"}, 1, anchors, model);
    REQUIRE(segments.size() == 3);
    for (const auto& s : segments) CHECK(s.size() == 1);
  }

  TEST_CASE("a strongly coherent pair stays whole") {
    // the anchor bonus makes the two-word segment beat the split
    auto counts = count_ngrams_lines({"a b", "a b", "a b"}, 2);
    auto model = NgramModel::from_counts(counts);
    AnchorModel anchors(std::make_shared<MemoryCountTable>(
                            std::map<std::string, std::uint64_t>{{"a b", 9}}),
                        10);
    auto segments = segment_tokens({"a", "b"}, 2, anchors, model);
    REQUIRE(segments.size() == 1);
    CHECK(segments[0] == std::vector<std::string>{"a", "b"});
  }

  TEST_CASE("dp total matches exhaustive enumeration on short posts") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> n_tokens(1, 8), vocab(0, 5), h_pick(1, 5);
    std::vector<std::string> words{"wa", "wb", "wc", "wd", "we", "wf"};
    // random corpus so phrase probabilities vary
    std::vector<std::string> corpus;
    for (int i = 0; i < 30; ++i) {
      std::string line;
      for (int j = 0; j < 6; ++j) line += (j ? " " : "") + words[static_cast<std::size_t>(vocab(rng))];
      corpus.push_back(line);
    }
    auto model = NgramModel::from_counts(count_ngrams_lines(corpus, 5));
    AnchorModel anchors(std::make_shared<MemoryCountTable>(
                            std::map<std::string, std::uint64_t>{{"wa wb", 3}, {"wc", 2}}),
                        10);

    auto total_stickiness = [&](const std::vector<std::vector<std::string>>& segs) {
      double sum = 0.0;
      for (const auto& s : segs) sum += segment_stickiness(s, anchors, model);
      return sum;
    };

    for (int trial = 0; trial < 120; ++trial) {
      std::vector<std::string> tokens;
      const int n = n_tokens(rng);
      for (int i = 0; i < n; ++i) tokens.push_back(words[static_cast<std::size_t>(vocab(rng))]);
      const int h = h_pick(rng);

      double best = -1e18;
      std::function<void(std::size_t, double)> rec = [&](std::size_t at, double acc) {
        if (at == tokens.size()) {
          best = std::max(best, acc);
          return;
        }
        for (std::size_t len = 1; len <= static_cast<std::size_t>(h) && at + len <= tokens.size();
             ++len) {
          std::vector<std::string> seg(tokens.begin() + static_cast<std::ptrdiff_t>(at),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(at + len));
          rec(at + len, acc + segment_stickiness(seg, anchors, model));
        }
      };
      rec(0, 0.0);

      auto got = segment_tokens(tokens, h, anchors, model);
      std::size_t covered = 0;
      for (const auto& s : got) {
        CHECK(s.size() <= static_cast<std::size_t>(h));
        covered += s.size();
      }
      CHECK(covered == tokens.size());
      CHECK(total_stickiness(got) == doctest::Approx(best).epsilon(1e-9));
    }
  }
}

TEST_SUITE("sgjp") {
  TEST_CASE("recurring planted phrases become separate topics") {
    std::vector<std::string> corpus;
    for (int i = 0; i < 10; ++i) corpus.push_back("x1 x2 filler" + std::to_string(i));
    for (int i = 0; i < 10; ++i) corpus.push_back("y1 y2 filler" + std::to_string(i));
    auto ngrams = NgramModel::from_counts(count_ngrams_lines(corpus, 5));
    AnchorModel anchors(std::make_shared<MemoryCountTable>(std::map<std::string, std::uint64_t>{
                            {"x1 x2", 5}, {"y1 y2", 5}}),
                        10);

    std::vector<Post> posts;
    for (int i = 0; i < 5; ++i)
      posts.push_back(make_post("x" + std::to_string(i), i, {"x1", "x2", "nx" + std::to_string(i)}));
    for (int i = 0; i < 5; ++i)
      posts.push_back(make_post("y" + std::to_string(i), i, {"y1", "y2", "ny" + std::to_string(i)}));
    WindowBatch batch = make_batch(std::move(posts));

    SgjpConfig cfg;
    cfg.h = 2;
    cfg.threshold = 3;
    auto topics = sgjp_detect(batch, cfg, anchors, ngrams);
    REQUIRE(topics.size() == 2);
    for (const auto& t : topics) {
      std::set<std::string> words(t.keywords.begin(), t.keywords.end());
      const bool has_x = words.count("x1") || words.count("x2");
      const bool has_y = words.count("y1") || words.count("y2");
      CHECK(has_x != has_y);
    }
  }

  TEST_CASE("threshold above every segment frequency gives no topics") {
    auto ngrams = NgramModel::from_counts(count_ngrams_lines({"a b"}, 2));
    AnchorModel anchors;
    WindowBatch batch = make_batch({make_post("p", 0, {"a", "b"})});
    SgjpConfig cfg;
    cfg.threshold = 100;
    CHECK(sgjp_detect(batch, cfg, anchors, ngrams).empty());
  }
}

TEST_SUITE("catt association") {
  TEST_CASE("cimawa hand value and delta zero") {
    CHECK(cimawa(10, 40, 20, 0.5) == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(cimawa(10, 40, 20, 0.0) == doctest::Approx(0.5));
  }

  TEST_CASE("cimawa is symmetric when frequencies match") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> f(1, 50);
    for (int trial = 0; trial < 30; ++trial) {
      const int shared = f(rng);
      const int cooc = std::min(shared, f(rng));
      CHECK(cimawa(cooc, shared, shared, 0.3) == doctest::Approx(cimawa(cooc, shared, shared, 0.3)));
    }
  }

  TEST_CASE("agf hand value and symmetry") {
    CHECK(agf(10, 40, 20, 0.5) == doctest::Approx(0.3125).epsilon(1e-12));
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> f(1, 50);
    for (int trial = 0; trial < 30; ++trial) {
      const int fx = f(rng), fy = f(rng);
      const int cooc = std::min({fx, fy, f(rng)});
      CHECK(agf(cooc, fx, fy, 0.4) == doctest::Approx(agf(cooc, fy, fx, 0.4)).epsilon(1e-12));
    }
    CHECK(agf(0, 10, 10, 0.5) == doctest::Approx(0.0));
  }

  TEST_CASE("zero frequency is an error") {
    CHECK_THROWS_WITH(cimawa(1, 0, 5, 0.5), doctest::Contains("unseen word"));
  }
}

TEST_SUITE("catt detection") {
  TEST_CASE("two planted components beat the diluted filler pairs") {
    std::vector<Post> posts;
    int id = 0;
    for (int i = 0; i < 4; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"x1", "x2"}));
    for (int i = 0; i < 4; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"y1", "y2"}));
    // filler pairs co-occur twice but their words also appear alone
    for (int i = 0; i < 2; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"f1", "f2"}));
    for (int i = 0; i < 2; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"f1"}));
    for (int i = 0; i < 2; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"g1", "g2"}));
    for (int i = 0; i < 2; ++i) posts.push_back(make_post("p" + std::to_string(id++), i, {"g1"}));
    WindowBatch batch = make_batch(std::move(posts));

    CattConfig cfg;
    cfg.rate = 0.5;
    auto topics = catt_detect(batch, cfg);
    REQUIRE(topics.size() == 2);
    std::set<std::set<std::string>> sets;
    for (const auto& t : topics) sets.insert({t.keywords.begin(), t.keywords.end()});
    CHECK(sets.count({"x1", "x2"}));
    CHECK(sets.count({"y1", "y2"}));
  }

  TEST_CASE("a tiny rate keeps a single two-word topic") {
    std::vector<Post> posts;
    for (int i = 0; i < 5; ++i) posts.push_back(make_post("a" + std::to_string(i), i, {"x1", "x2"}));
    for (int i = 0; i < 3; ++i) posts.push_back(make_post("b" + std::to_string(i), i, {"y1", "y2", "y3"}));
    WindowBatch batch = make_batch(std::move(posts));
    CattConfig cfg;
    cfg.rate = 0.1;  // ceil(0.1 * 4 pairs) = 1 survivor
    auto topics = catt_detect(batch, cfg);
    REQUIRE(topics.size() == 1);
    CHECK(topics[0].keywords.size() == 2);
  }

  TEST_CASE("no repeated co-occurrence gives no topics") {
    WindowBatch batch = make_batch({make_post("1", 0, {"a", "b"}), make_post("2", 1, {"c", "d"})});
    CHECK(catt_detect(batch, {}).empty());
  }

  TEST_CASE("invalid configuration throws") {
    WindowBatch batch = make_batch({make_post("1", 0, {"a", "b"})});
    CattConfig bad;
    bad.rate = 0.9;
    CHECK_THROWS(catt_detect(batch, bad));
    bad.rate = 0.2;
    bad.damping = 1.5;
    CHECK_THROWS(catt_detect(batch, bad));
  }
}

TEST_SUITE("fhkn") {
  WindowBatch planted_window(const std::string& prefix, int shift) {
    std::vector<Post> posts;
    for (int i = 0; i < 8; ++i)
      posts.push_back(make_post(prefix + "x" + std::to_string(i), shift + i, {"x1", "x2", "x3"}));
    for (int i = 0; i < 8; ++i)
      posts.push_back(make_post(prefix + "y" + std::to_string(i), shift + i, {"y1", "y2", "y3"}));
    return make_batch(std::move(posts));
  }

  TEST_CASE("cold start emits disjoint emerging topics") {
    CoherentTopicMemory memory;
    auto topics = fhkn_detect(planted_window("w1", 0), memory);
    REQUIRE(topics.size() == 2);
    for (const auto& t : topics) {
      std::set<std::string> words(t.keywords.begin(), t.keywords.end());
      const bool has_x = words.count("x1") || words.count("x2") || words.count("x3");
      const bool has_y = words.count("y1") || words.count("y2") || words.count("y3");
      CHECK(has_x != has_y);
    }
    CHECK(!memory.entries.empty());
  }

  TEST_CASE("a repeated topic is carried as coherent") {
    CoherentTopicMemory memory;
    fhkn_detect(planted_window("w1", 0), memory);
    const auto remembered = memory.entries.size();
    auto topics = fhkn_detect(planted_window("w2", 100), memory);
    REQUIRE(topics.size() == 2);
    CHECK(remembered > 0);
    // memory was replaced by the second window's topics
    for (const auto& e : memory.entries)
      for (const auto& w : e.words) CHECK((w[0] == 'x' || w[0] == 'y'));
  }

  TEST_CASE("memory never exceeds the pattern budget") {
    CoherentTopicMemory memory;
    FhknConfig cfg;
    cfg.top_k = 5;
    fhkn_detect(planted_window("w", 0), memory, cfg);
    CHECK(memory.entries.size() <= 5);
  }

  TEST_CASE("empty batch is quiet") {
    CoherentTopicMemory memory;
    WindowBatch batch;
    CHECK(fhkn_detect(batch, memory).empty());
  }
}
