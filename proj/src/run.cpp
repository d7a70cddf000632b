#include "tdtk/run.hpp"

#include <stdexcept>

#include "tdtk/cl/pipelines.hpp"
#include "tdtk/fp/detectors.hpp"
#include "tdtk/hybrid/catt.hpp"
#include "tdtk/hybrid/fhkn.hpp"
#include "tdtk/hybrid/sgjp.hpp"

namespace tdtk {
namespace {

double param(const std::map<std::string, double>& params, const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

Method method_from_name(const std::string& name) {
  static const std::map<std::string, Method> table = {
      {"TSCV", Method::Tscv}, {"DSFG", Method::Dsfg}, {"UFPT", Method::Ufpt},
      {"WVOP", Method::Wvop}, {"FTOP", Method::Ftop}, {"GLCM", Method::Glcm},
      {"GLGK", Method::Glgk}, {"SGJP", Method::Sgjp}, {"CATT", Method::Catt},
      {"FHKN", Method::Fhkn}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown method: " + name);
  return it->second;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Tscv: return "TSCV";
    case Method::Dsfg: return "DSFG";
    case Method::Ufpt: return "UFPT";
    case Method::Wvop: return "WVOP";
    case Method::Ftop: return "FTOP";
    case Method::Glcm: return "GLCM";
    case Method::Glgk: return "GLGK";
    case Method::Sgjp: return "SGJP";
    case Method::Catt: return "CATT";
    case Method::Fhkn: return "FHKN";
  }
  return "?";
}

bool method_needs_background(Method m) { return m == Method::Tscv || m == Method::Sgjp; }

bool method_needs_embeddings(Method m) {
  return m == Method::Wvop || m == Method::Ftop || m == Method::Glcm || m == Method::Glgk;
}

std::vector<std::string> preprocess_text(const std::string& text, TargetScript script,
                                         const StopwordList& stopwords) {
  TokenizerConfig cfg;
  cfg.target = script;
  return filter_tokens(tokenize(text, cfg), stopwords);
}

std::vector<WindowTopics> run_detection(std::vector<Post> posts, const RunConfig& cfg,
                                        const Resources& res) {
  if (method_needs_background(cfg.method) && !res.background)
    throw std::runtime_error(std::string(method_name(cfg.method)) +
                             " requires a background model directory");
  if (method_needs_embeddings(cfg.method) && !res.embeddings)
    throw std::runtime_error(std::string(method_name(cfg.method)) +
                             " requires an embedding table");

  for (auto& p : posts)
    if (!p.tokens) p.tokens = preprocess_text(p.text, cfg.script, res.stopwords);

  WindowSpec spec;
  spec.batch_duration = cfg.window_seconds;
  auto batches = window_stream(std::move(posts), spec);

  // state threaded across windows
  std::vector<std::size_t> dsfg_history;
  std::map<std::string, int> ufpt_prev_tf;
  CoherentTopicMemory fhkn_memory;

  std::vector<WindowTopics> out;
  for (const auto& batch : batches) {
    WindowTopics wt;
    wt.window = batch.index;
    wt.start = batch.start;
    wt.end = batch.end;

    if (!batch.posts.empty()) {
      switch (cfg.method) {
        case Method::Tscv: {
          TscvConfig tc;
          tc.k = static_cast<int>(param(cfg.params, "k", tc.k));
          tc.b = param(cfg.params, "b", tc.b);
          tc.c = param(cfg.params, "c", tc.c);
          wt.topics = tscv_detect(batch, *res.background->ref, tc);
          break;
        }
        case Method::Dsfg:
          wt.topics = dsfg_detect(batch, dsfg_history);
          break;
        case Method::Ufpt: {
          UfptOptions opts;
          opts.min_util_fraction = param(cfg.params, "min_util_fraction", opts.min_util_fraction);
          if (cfg.params.count("min_util")) opts.min_util = cfg.params.at("min_util");
          wt.topics = ufpt_detect(batch, ufpt_prev_tf, opts);
          break;
        }
        case Method::Wvop:
        case Method::Ftop:
        case Method::Glcm:
        case Method::Glgk: {
          ClPipelineConfig cc;
          if (cfg.method == Method::Wvop || cfg.method == Method::Ftop) {
            cc.cluster = ClusterKind::Optics;
            cc.distance = DistanceKind::Cosine;
          } else {
            cc.cluster = cfg.method == Method::Glcm ? ClusterKind::CMeans : ClusterKind::Gk;
            cc.distance = DistanceKind::Euclidean;
          }
          cc.min_pts = static_cast<int>(param(cfg.params, "min_pts", cc.min_pts));
          cc.xi = param(cfg.params, "xi", cc.xi);
          if (cfg.params.count("c")) cc.c = static_cast<int>(cfg.params.at("c"));
          cc.m = param(cfg.params, "m", cc.m);
          cc.eps = param(cfg.params, "eps", cc.eps);
          cc.title_words = static_cast<int>(param(cfg.params, "title_words", cc.title_words));
          cc.seed = cfg.seed;
          wt.topics = cl_detect(batch, *res.embeddings, cc,
                                res.lexicon.empty() ? nullptr : &res.lexicon);
          break;
        }
        case Method::Sgjp: {
          SgjpConfig sc;
          sc.h = static_cast<int>(param(cfg.params, "h", sc.h));
          sc.threshold = static_cast<int>(param(cfg.params, "threshold", sc.threshold));
          sc.k = static_cast<int>(param(cfg.params, "k", sc.k));
          sc.k_min = static_cast<int>(param(cfg.params, "k_min", sc.k_min));
          wt.topics =
              sgjp_detect(batch, sc, *res.background->anchors, *res.background->ngrams);
          break;
        }
        case Method::Catt: {
          CattConfig catt;
          catt.damping = param(cfg.params, "damping", catt.damping);
          catt.rate = param(cfg.params, "rate", catt.rate);
          wt.topics = catt_detect(batch, catt);
          break;
        }
        case Method::Fhkn: {
          FhknConfig fc;
          fc.top_k = static_cast<int>(param(cfg.params, "top_k", fc.top_k));
          fc.knn_k = static_cast<int>(param(cfg.params, "knn_k", fc.knn_k));
          fc.tau = param(cfg.params, "tau", fc.tau);
          wt.topics = fhkn_detect(batch, fhkn_memory, fc);
          break;
        }
      }
    }

    dsfg_history.push_back(batch.posts.size());
    ufpt_prev_tf = batch.tf;
    out.push_back(std::move(wt));
  }
  return out;
}

}  // namespace tdtk
