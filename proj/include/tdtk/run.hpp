#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tdtk/bk/models.hpp"
#include "tdtk/core/post.hpp"
#include "tdtk/core/stream.hpp"
#include "tdtk/embed/vectors.hpp"
#include "tdtk/text/compounds.hpp"
#include "tdtk/text/tokenize.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

enum class Method { Tscv, Dsfg, Ufpt, Wvop, Ftop, Glcm, Glgk, Sgjp, Catt, Fhkn };

// Accepts the uppercase wire names (TSCV, DSFG, ...); throws on unknown.
Method method_from_name(const std::string& name);
const char* method_name(Method m);

bool method_needs_background(Method m);  // reference corpus or ngram/anchor models
bool method_needs_embeddings(Method m);  // word-vector table

struct RunConfig {
  Method method = Method::Tscv;
  std::int64_t window_seconds = 3600;
  TargetScript script = TargetScript::ArabicScript;
  unsigned seed = 42;
  std::map<std::string, double> params;  // method parameter overrides by name
};

struct Resources {
  std::shared_ptr<BackgroundModel> background;
  std::shared_ptr<EmbeddingTable> embeddings;
  StopwordList stopwords;
  CompoundLexicon lexicon;
};

struct WindowTopics {
  std::size_t window = 0;
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::vector<Topic> topics;
};

std::vector<std::string> preprocess_text(const std::string& text, TargetScript script,
                                         const StopwordList& stopwords);

// Tokenizes any posts still lacking tokens, batches them into landmark
// windows, and runs the configured detector per window. Stateful methods
// (DSFG history, UFPT previous frequencies, FHKN topic memory) are threaded
// across windows in order.
std::vector<WindowTopics> run_detection(std::vector<Post> posts, const RunConfig& cfg,
                                        const Resources& res);

}  // namespace tdtk
