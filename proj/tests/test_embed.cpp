#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "tdtk/embed/vectors.hpp"

using namespace tdtk;
using namespace tdtk::testing;

TEST_SUITE("vector loading") {
  TEST_CASE("headerless file") {
    TempDir dir("vec");
    write_file(dir.file("a.vec"), "cat 1 0 0\ndog 0 1 0\n");
    auto table = EmbeddingTable::load(dir.file("a.vec"));
    CHECK(table.dimension() == 3);
    CHECK(table.size() == 2);
    REQUIRE(table.find("cat"));
    CHECK((*table.find("cat"))[0] == doctest::Approx(1.0));
    CHECK(!table.find("bird"));
  }

  TEST_CASE("count-dim header gives the same result") {
    TempDir dir("vec");
    write_file(dir.file("h.vec"), "2 3\ncat 1 0 0\ndog 0 1 0\n");
    write_file(dir.file("n.vec"), "cat 1 0 0\ndog 0 1 0\n");
    auto with = EmbeddingTable::load(dir.file("h.vec"));
    auto without = EmbeddingTable::load(dir.file("n.vec"));
    CHECK(with.size() == without.size());
    CHECK(with.dimension() == without.dimension());
    CHECK((*with.find("dog") - *without.find("dog")).norm() == doctest::Approx(0.0));
  }

  TEST_CASE("short line is fatal") {
    TempDir dir("vec");
    write_file(dir.file("bad.vec"), "cat 1 0 0\ndog 0 1\n");
    CHECK_THROWS(EmbeddingTable::load(dir.file("bad.vec")));
  }

  TEST_CASE("empty file is fatal") {
    TempDir dir("vec");
    write_file(dir.file("e.vec"), "");
    CHECK_THROWS(EmbeddingTable::load(dir.file("e.vec")));
  }

  TEST_CASE("duplicate word keeps the last vector") {
    TempDir dir("vec");
    write_file(dir.file("d.vec"), "w 1 0\nw 0 1\n");
    auto table = EmbeddingTable::load(dir.file("d.vec"));
    CHECK(table.size() == 1);
    CHECK((*table.find("w"))[1] == doctest::Approx(1.0));
  }
}

TEST_SUITE("document embedding") {
  EmbeddingTable small_table() {
    EmbeddingTable t(2, "test");
    t.insert("a", Eigen::Vector2d(1.0, 0.0));
    t.insert("b", Eigen::Vector2d(0.0, 1.0));
    t.insert("neg", Eigen::Vector2d(-1.0, 0.0));
    return t;
  }

  TEST_CASE("one known word returns its vector") {
    auto doc = embed_document({"a"}, small_table());
    CHECK(doc.vec.isApprox(Eigen::Vector2d(1.0, 0.0)));
    CHECK(doc.oov_count == 0);
  }

  TEST_CASE("opposite vectors average to zero") {
    auto doc = embed_document({"a", "neg"}, small_table());
    CHECK(doc.vec.norm() == doctest::Approx(0.0));
  }

  TEST_CASE("skip policy averages only the found words") {
    auto doc = embed_document({"a", "b", "missing"}, small_table(), OovPolicy::Skip);
    CHECK(doc.oov_count == 1);
    CHECK(doc.vec.isApprox(Eigen::Vector2d(0.5, 0.5)));
  }

  TEST_CASE("zero policy divides by the full word count") {
    auto doc = embed_document({"a", "b", "missing"}, small_table(), OovPolicy::Zero);
    CHECK(doc.vec.isApprox(Eigen::Vector2d(1.0 / 3.0, 1.0 / 3.0)));
  }

  TEST_CASE("all words unknown under skip is an error") {
    CHECK_THROWS(embed_document({"x", "y"}, small_table(), OovPolicy::Skip));
  }
}

TEST_SUITE("distances") {
  TEST_CASE("cosine distance fixed values") {
    Eigen::Vector2d a(1.0, 1.0), b(1.0, 0.0);
    CHECK(cosine_distance(a, a) == doctest::Approx(0.0));
    CHECK(cosine_distance(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) == doctest::Approx(1.0));
    CHECK(cosine_distance(a, b) == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0));
  }

  TEST_CASE("cosine distance ignores positive scaling") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-1.0, 1.0), scale(0.1, 10.0);
    for (int trial = 0; trial < 30; ++trial) {
      Eigen::Vector3d a(coord(rng), coord(rng), coord(rng));
      Eigen::Vector3d b(coord(rng), coord(rng), coord(rng));
      if (a.norm() < 1e-6 || b.norm() < 1e-6) continue;
      CHECK(cosine_distance(a * scale(rng), b * scale(rng)) ==
            doctest::Approx(cosine_distance(a, b)));
    }
  }

  TEST_CASE("zero vector in cosine is an error") {
    CHECK_THROWS(cosine_distance(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)));
  }

  TEST_CASE("euclidean distance fixed values and symmetry") {
    CHECK(euclidean_distance(Eigen::Vector2d(0, 0), Eigen::Vector2d(3, 4)) == doctest::Approx(5.0));
    Eigen::Vector2d a(1, 2), b(4, 6);
    CHECK(euclidean_distance(a, b) == doctest::Approx(euclidean_distance(b, a)));
    CHECK(euclidean_distance(a, a) == doctest::Approx(0.0));
  }

  TEST_CASE("euclidean triangle inequality on random vectors") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Vector3d a(coord(rng), coord(rng), coord(rng));
      Eigen::Vector3d b(coord(rng), coord(rng), coord(rng));
      Eigen::Vector3d c(coord(rng), coord(rng), coord(rng));
      CHECK(euclidean_distance(a, c) <=
            euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    }
  }

  TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS(euclidean_distance(Eigen::Vector2d(0, 0), Eigen::Vector3d(1, 2, 3)));
  }
}
