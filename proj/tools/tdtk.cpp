#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdtk/cl/pipelines.hpp"
#include "tdtk/eval/metrics.hpp"
#include "tdtk/eval/sweep.hpp"
#include "tdtk/run.hpp"
#include "tdtk/synth/generator.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// key=value lines, '#' comments; keys prefixed "param." become method
// parameters
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

struct LoadedRun {
  tdtk::RunConfig run;
  tdtk::Resources res;
  std::string posts_path;
};

LoadedRun load_run(const std::string& config_path) {
  auto kv = read_config(config_path);
  LoadedRun out;

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  const auto method = take("method");
  if (!method) throw std::runtime_error("config missing 'method'");
  out.run.method = tdtk::method_from_name(*method);
  const auto posts = take("posts");
  if (!posts) throw std::runtime_error("config missing 'posts'");
  out.posts_path = *posts;
  if (auto v = take("window_seconds")) out.run.window_seconds = std::stoll(*v);
  if (auto v = take("seed")) out.run.seed = static_cast<unsigned>(std::stoul(*v));
  if (auto v = take("script")) {
    if (*v == "latin")
      out.run.script = tdtk::TargetScript::Latin;
    else if (*v == "arabic")
      out.run.script = tdtk::TargetScript::ArabicScript;
    else
      throw std::runtime_error("script must be 'latin' or 'arabic'");
  }

  std::optional<std::string> model_dir = take("model_dir");
  if (const char* env = std::getenv("TDTK_MODEL_DIR")) model_dir = std::string(env);
  if (model_dir)
    out.res.background =
        std::make_shared<tdtk::BackgroundModel>(tdtk::load_background(*model_dir));
  if (auto v = take("embeddings"))
    out.res.embeddings = std::make_shared<tdtk::EmbeddingTable>(tdtk::EmbeddingTable::load(*v));
  if (auto v = take("stopwords")) out.res.stopwords = tdtk::load_stopwords(*v);
  if (auto v = take("lexicon")) out.res.lexicon = tdtk::CompoundLexicon::load(*v);

  for (const auto& [key, value] : kv) {
    if (key.rfind("param.", 0) == 0) {
      out.run.params[key.substr(6)] = std::stod(value);
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
  return out;
}

ordered_json topic_to_json(const tdtk::Topic& t) {
  ordered_json j;
  j["keywords"] = t.keywords;
  j["post_ids"] = t.post_ids;
  j["score"] = t.score;
  return j;
}

int cmd_build_bk(const std::vector<std::string>& corpus, const std::string& anchors,
                 const std::string& out_dir) {
  auto counts = tdtk::count_ngrams_files(corpus, tdtk::kMaxNgramOrder);
  std::map<std::string, std::uint64_t> anchor_counts;
  const std::map<std::string, std::uint64_t>* anchors_ptr = nullptr;
  if (!anchors.empty()) {
    if (std::filesystem::exists(anchors)) {
      anchor_counts = tdtk::read_anchor_tsv(anchors);
      anchors_ptr = &anchor_counts;
    } else {
      std::cerr << "warning: anchor file missing, anchors skipped: " << anchors << "\n";
    }
  }
  const auto report = tdtk::save_background(out_dir, counts, anchors_ptr);

  ordered_json j;
  j["ngram_totals"] = report.ngram_totals;
  j["ngram_distinct"] = report.ngram_distinct;
  j["distinct_tokens"] = report.distinct_tokens;
  j["anchor_total"] = report.anchor_total;
  j["anchor_distinct"] = report.anchor_distinct;
  j["has_anchors"] = report.has_anchors;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_detect(const std::string& config_path, const std::string& out_path) {
  auto loaded = load_run(config_path);
  auto posts = tdtk::ingest_posts(loaded.posts_path);
  const auto windows = tdtk::run_detection(std::move(posts), loaded.run, loaded.res);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  ordered_json header;
  header["method"] = tdtk::method_name(loaded.run.method);
  header["window_seconds"] = loaded.run.window_seconds;
  header["seed"] = loaded.run.seed;
  out << header.dump() << "\n";
  for (const auto& w : windows) {
    ordered_json j;
    j["window"] = w.window;
    j["method"] = tdtk::method_name(loaded.run.method);
    j["start"] = w.start;
    j["end"] = w.end;
    j["topics"] = ordered_json::array();
    for (const auto& t : w.topics) j["topics"].push_back(topic_to_json(t));
    out << j.dump() << "\n";
  }
  return 0;
}

// mean silhouette of the topic partition in embedding space, averaged over
// windows that yield at least two topics
std::optional<double> run_silhouette(const std::vector<tdtk::WindowTopics>& windows,
                                     const std::vector<tdtk::Post>& posts,
                                     const tdtk::Resources& res) {
  if (!res.embeddings) throw std::runtime_error("silhouette criterion requires embeddings");
  std::map<std::string, const tdtk::Post*> by_id;
  for (const auto& p : posts) by_id[p.id] = &p;

  double acc = 0.0;
  int used = 0;
  for (const auto& w : windows) {
    std::vector<Eigen::VectorXd> vecs;
    std::vector<int> labels;
    for (std::size_t t = 0; t < w.topics.size(); ++t)
      for (const auto& id : w.topics[t].post_ids) {
        auto it = by_id.find(id);
        if (it == by_id.end() || !it->second->tokens) continue;
        try {
          vecs.push_back(tdtk::embed_document(*it->second->tokens, *res.embeddings).vec);
          labels.push_back(static_cast<int>(t));
        } catch (const std::exception&) {
        }
      }
    std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() < 2) continue;
    tdtk::PointMatrix points(static_cast<Eigen::Index>(vecs.size()), res.embeddings->dimension());
    for (std::size_t i = 0; i < vecs.size(); ++i)
      points.row(static_cast<Eigen::Index>(i)) = vecs[i];
    acc += tdtk::silhouette(points, labels, tdtk::cosine_dist);
    ++used;
  }
  if (used == 0) return std::nullopt;
  return acc / used;
}

std::optional<double> run_mean_fs(const std::vector<tdtk::WindowTopics>& windows,
                                  const tdtk::GoldenStandard& golden) {
  double acc = 0.0;
  int used = 0;
  for (const auto& w : windows) {
    if (w.topics.empty()) continue;
    try {
      acc += tdtk::compute_fs(w.topics, golden).mean_fs;
      ++used;
    } catch (const std::exception&) {
    }
  }
  if (used == 0) return std::nullopt;
  return acc / used;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& param_specs,
              const std::string& criterion, const std::string& golden_path,
              const std::string& report_path) {
  auto loaded = load_run(config_path);
  const auto posts = tdtk::ingest_posts(loaded.posts_path);

  if (criterion != "silhouette" && criterion != "meanfs")
    throw std::runtime_error("criterion must be 'silhouette' or 'meanfs'");
  tdtk::GoldenStandard golden;
  if (criterion == "meanfs") {
    if (golden_path.empty()) throw std::runtime_error("meanfs criterion requires --golden");
    tdtk::load_golden_assignments(golden_path, golden);
  }

  // symbolic range endpoints resolve against the configured parameters
  std::map<std::string, double> context(loaded.run.params.begin(), loaded.run.params.end());
  std::vector<std::pair<std::string, std::vector<double>>> params;
  for (const auto& spec : param_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("expected NAME=RANGE in --param, got: " + spec);
    params.emplace_back(spec.substr(0, eq), tdtk::parse_range(spec.substr(eq + 1), context));
  }
  if (params.empty()) throw std::runtime_error("sweep needs at least one --param");

  auto evaluate = [&](const std::vector<double>& values) -> std::optional<double> {
    tdtk::RunConfig cfg = loaded.run;
    for (std::size_t i = 0; i < params.size(); ++i) cfg.params[params[i].first] = values[i];
    try {
      const auto windows = tdtk::run_detection(posts, cfg, loaded.res);
      return criterion == "meanfs" ? run_mean_fs(windows, golden)
                                   : run_silhouette(windows, posts, loaded.res);
    } catch (const std::exception& e) {
      std::cerr << "sweep run failed: " << e.what() << "\n";
      return std::nullopt;
    }
  };

  const bool maximize = criterion == "silhouette";
  const auto result = tdtk::tune_parameter(params, evaluate, maximize);

  if (!report_path.empty()) {
    std::ofstream report(report_path, std::ios::binary);
    if (!report) throw std::runtime_error("cannot write " + report_path);
    tdtk::write_sweep_csv(report, result, criterion);
  } else {
    tdtk::write_sweep_csv(std::cout, result, criterion);
  }

  ordered_json best;
  for (std::size_t i = 0; i < result.names.size(); ++i) best[result.names[i]] = result.best[i];
  best[criterion] = result.best_score;
  std::cout << best.dump() << "\n";
  return 0;
}

int cmd_eval(const std::string& topics_path, const std::string& golden_path,
             const std::string& classes_path, const std::string& out_path) {
  tdtk::GoldenStandard golden;
  tdtk::load_golden_assignments(golden_path, golden);
  tdtk::load_class_catalog(classes_path, golden);

  std::ifstream in(topics_path);
  if (!in) throw std::runtime_error("cannot open topics: " + topics_path);
  std::map<std::size_t, std::vector<tdtk::Topic>> windows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = json::parse(line);
    if (!j.contains("window")) continue;  // header record
    auto& topics = windows[j.at("window").get<std::size_t>()];
    for (const auto& jt : j.at("topics")) {
      tdtk::Topic t;
      t.keywords = jt.at("keywords").get<std::vector<std::string>>();
      for (const auto& id : jt.at("post_ids")) t.post_ids.insert(id.get<std::string>());
      t.score = jt.at("score").get<double>();
      topics.push_back(std::move(t));
    }
  }

  ordered_json out;
  out["windows"] = ordered_json::array();
  double p = 0, r = 0, f = 0, class_fs = 0, cluster_fs = 0, mean = 0;
  int prf_n = 0, fs_n = 0;
  std::size_t unlabeled = 0;
  for (const auto& [index, topics] : windows) {
    ordered_json jw;
    jw["window"] = index;
    const auto prf = tdtk::topic_prf(topics, golden);
    jw["topic_precision"] = prf.precision;
    jw["topic_recall"] = prf.recall;
    jw["topic_f"] = prf.f;
    p += prf.precision;
    r += prf.recall;
    f += prf.f;
    ++prf_n;
    if (!topics.empty()) {
      try {
        const auto fs = tdtk::compute_fs(topics, golden);
        jw["class_fs"] = fs.class_fs;
        jw["cluster_fs"] = fs.cluster_fs;
        jw["mean_fs"] = fs.mean_fs;
        jw["unlabeled_posts"] = fs.unlabeled_posts;
        class_fs += fs.class_fs;
        cluster_fs += fs.cluster_fs;
        mean += fs.mean_fs;
        unlabeled += fs.unlabeled_posts;
        ++fs_n;
      } catch (const std::exception& e) {
        jw["fs_error"] = e.what();
      }
    }
    out["windows"].push_back(std::move(jw));
  }
  ordered_json agg;
  if (prf_n > 0) {
    agg["topic_precision"] = p / prf_n;
    agg["topic_recall"] = r / prf_n;
    agg["topic_f"] = f / prf_n;
  }
  if (fs_n > 0) {
    agg["class_fs"] = class_fs / fs_n;
    agg["cluster_fs"] = cluster_fs / fs_n;
    agg["mean_fs"] = mean / fs_n;
    agg["unlabeled_posts"] = unlabeled;
  }
  out["aggregate"] = std::move(agg);

  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << out.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming topic-detection toolkit"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build-bk", "build background knowledge stores");
  std::vector<std::string> corpus;
  std::string anchors, bk_out;
  build->add_option("--corpus", corpus, "reference corpus text files")->required();
  build->add_option("--anchors", anchors, "anchor phrase TSV (phrase<TAB>count)");
  build->add_option("--out", bk_out, "output model directory")->required();

  auto* detect = app.add_subcommand("detect", "run a detector over a post stream");
  std::string detect_config, detect_out;
  detect->add_option("--config", detect_config, "run config (key=value lines)")->required();
  detect->add_option("--out", detect_out, "topics JSONL output")->required();

  auto* sweep = app.add_subcommand("sweep", "tune parameters over value ranges");
  std::string sweep_config, sweep_criterion = "meanfs", sweep_golden, sweep_report;
  std::vector<std::string> sweep_params;
  sweep->add_option("--config", sweep_config, "run config")->required();
  sweep->add_option("--param", sweep_params, "NAME=RANGE, e.g. k=20:10:90&100:50:300")->required();
  sweep->add_option("--criterion", sweep_criterion, "silhouette or meanfs");
  sweep->add_option("--golden", sweep_golden, "golden assignments JSONL (meanfs)");
  sweep->add_option("--report", sweep_report, "score table CSV path");

  auto* eval = app.add_subcommand("eval", "score a topics file against a golden standard");
  std::string eval_topics, eval_golden, eval_classes, eval_out;
  eval->add_option("--topics", eval_topics, "topics JSONL from detect")->required();
  eval->add_option("--golden", eval_golden, "golden assignments JSONL")->required();
  eval->add_option("--classes", eval_classes, "class keyword catalog JSONL")->required();
  eval->add_option("--out", eval_out, "metrics JSON path (default stdout)");

  auto* synth = app.add_subcommand("synth", "generate a planted-topic stream");
  tdtk::SynthSpec spec;
  std::string synth_out;
  synth->add_option("--out", synth_out, "output directory")->required();
  synth->add_option("--topics", spec.topics, "planted topic count");
  synth->add_option("--posts-per-topic", spec.posts_per_topic, "posts per topic per window");
  synth->add_option("--windows", spec.windows, "window count");
  synth->add_option("--noise", spec.noise, "noise post fraction");
  synth->add_option("--core-words", spec.core_words, "core vocabulary size per topic");
  synth->add_option("--words-per-post", spec.words_per_post, "tokens per post");
  synth->add_option("--noise-vocab", spec.noise_vocab, "noise vocabulary size");
  synth->add_option("--dim", spec.dim, "embedding dimension");
  synth->add_option("--batch-seconds", spec.batch_seconds, "window length in seconds");
  synth->add_option("--seed", spec.seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build_bk(corpus, anchors, bk_out);
    if (detect->parsed()) return cmd_detect(detect_config, detect_out);
    if (sweep->parsed())
      return cmd_sweep(sweep_config, sweep_params, sweep_criterion, sweep_golden, sweep_report);
    if (eval->parsed()) return cmd_eval(eval_topics, eval_golden, eval_classes, eval_out);
    if (synth->parsed()) {
      tdtk::generate_stream(spec, synth_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
