#include "tdtk/synth/generator.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include <Eigen/Dense>

namespace tdtk {
namespace {

// lowercase base-26 suffix of fixed width 2 ("aa".."zz")
std::string suffix26(int n) {
  std::string s(2, 'a');
  s[0] = static_cast<char>('a' + (n / 26) % 26);
  s[1] = static_cast<char>('a' + n % 26);
  return s;
}

Eigen::VectorXd random_unit(std::mt19937& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
  return v.normalized();
}

void write_vector(std::ofstream& out, const std::string& word, const Eigen::VectorXd& v) {
  out << word;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << v[i];
  out << '\n';
}

}  // namespace

void generate_stream(const SynthSpec& spec, const std::string& out_dir) {
  if (spec.topics < 1 || spec.posts_per_topic < 1 || spec.windows < 1)
    throw std::invalid_argument("generate_stream: counts must be positive");
  if (spec.noise < 0.0 || spec.noise >= 1.0)
    throw std::invalid_argument("generate_stream: noise must be in [0,1)");
  if (spec.core_words < 2 || spec.words_per_post < 2)
    throw std::invalid_argument("generate_stream: need at least two core words per topic and post");
  if (spec.topics * spec.core_words > 676 || spec.noise_vocab > 676)
    throw std::invalid_argument("generate_stream: vocabulary too large for name scheme");

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::mt19937 rng(spec.seed);

  std::vector<std::vector<std::string>> core(static_cast<std::size_t>(spec.topics));
  for (int t = 0; t < spec.topics; ++t)
    for (int i = 0; i < spec.core_words; ++i)
      core[static_cast<std::size_t>(t)].push_back("q" + suffix26(t * spec.core_words + i));
  std::vector<std::string> noise_words;
  for (int i = 0; i < spec.noise_vocab; ++i) noise_words.push_back("z" + suffix26(i));

  std::ofstream posts(out_dir + "/posts.jsonl", std::ios::binary);
  std::ofstream golden(out_dir + "/golden.jsonl", std::ios::binary);
  if (!posts || !golden) throw std::runtime_error("generate_stream: cannot write to " + out_dir);

  const int topic_posts = spec.topics * spec.posts_per_topic;
  const int noise_posts = static_cast<int>(
      std::lround(spec.noise / (1.0 - spec.noise) * static_cast<double>(topic_posts)));
  std::uniform_int_distribution<int> pick_noise(0, spec.noise_vocab - 1);

  int next_id = 0;
  for (int w = 0; w < spec.windows; ++w) {
    const std::int64_t window_start =
        static_cast<std::int64_t>(w) * static_cast<std::int64_t>(spec.batch_seconds);
    int offset = 0;
    auto emit = [&](const std::vector<std::string>& tokens, int topic) {
      std::string text = tokens[0];
      for (std::size_t i = 1; i < tokens.size(); ++i) text += ' ' + tokens[i];
      nlohmann::ordered_json jp;
      const std::string id = "p" + std::to_string(next_id++);
      jp["id"] = id;
      jp["ts"] = window_start + offset++ % spec.batch_seconds;
      jp["channel"] = "synth";
      jp["text"] = text;
      posts << jp.dump() << '\n';
      nlohmann::ordered_json jg;
      jg["post_id"] = id;
      jg["classes"] = nlohmann::json::array();
      if (topic >= 0) jg["classes"].push_back("topic" + suffix26(topic));
      golden << jg.dump() << '\n';
    };

    for (int t = 0; t < spec.topics; ++t) {
      const auto& vocab = core[static_cast<std::size_t>(t)];
      std::uniform_int_distribution<int> pick_core(0, spec.core_words - 1);
      for (int p = 0; p < spec.posts_per_topic; ++p) {
        // a recurring leading bigram anchors every topic post; one noise
        // word keeps post vectors distinct
        std::vector<std::string> tokens{vocab[0], vocab[1]};
        while (static_cast<int>(tokens.size()) < spec.words_per_post - 1)
          tokens.push_back(vocab[static_cast<std::size_t>(pick_core(rng))]);
        tokens.push_back(noise_words[static_cast<std::size_t>(pick_noise(rng))]);
        emit(tokens, t);
      }
    }
    for (int p = 0; p < noise_posts; ++p) {
      std::vector<std::string> tokens;
      for (int i = 0; i < spec.words_per_post; ++i)
        tokens.push_back(noise_words[static_cast<std::size_t>(pick_noise(rng))]);
      emit(tokens, -1);
    }
  }
  posts.close();
  golden.close();

  std::ofstream classes(out_dir + "/classes.jsonl", std::ios::binary);
  for (int t = 0; t < spec.topics; ++t) {
    nlohmann::ordered_json jc;
    jc["class"] = "topic" + suffix26(t);
    jc["keywords"] = core[static_cast<std::size_t>(t)];
    classes << jc.dump() << '\n';
  }
  classes.close();

  // embeddings: core words tightly grouped per topic, noise words scattered
  std::ofstream vec(out_dir + "/vectors.vec", std::ios::binary);
  vec << spec.topics * spec.core_words + spec.noise_vocab << ' ' << spec.dim << '\n';
  for (int t = 0; t < spec.topics; ++t) {
    const Eigen::VectorXd center = random_unit(rng, spec.dim);
    for (const auto& w : core[static_cast<std::size_t>(t)])
      write_vector(vec, w, (center + 0.1 * random_unit(rng, spec.dim)).normalized());
  }
  for (const auto& w : noise_words) write_vector(vec, w, random_unit(rng, spec.dim));
  vec.close();

  // reference corpus: mostly noise text, with each core bigram seen enough
  // to carry n-gram mass
  std::ofstream background(out_dir + "/background.txt", std::ios::binary);
  for (int line = 0; line < 200; ++line) {
    for (int i = 0; i < 8; ++i)
      background << (i ? " " : "") << noise_words[static_cast<std::size_t>(pick_noise(rng))];
    background << '\n';
  }
  for (int t = 0; t < spec.topics; ++t)
    for (int r = 0; r < 20; ++r)
      background << core[static_cast<std::size_t>(t)][0] << ' '
                 << core[static_cast<std::size_t>(t)][1] << '\n';
  background.close();

  std::ofstream anchors(out_dir + "/anchors.tsv", std::ios::binary);
  for (int t = 0; t < spec.topics; ++t)
    anchors << core[static_cast<std::size_t>(t)][0] << ' ' << core[static_cast<std::size_t>(t)][1]
            << "\t50\n";
  anchors.close();
}

}  // namespace tdtk
