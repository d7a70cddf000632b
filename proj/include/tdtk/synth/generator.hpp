#pragma once

#include <string>

namespace tdtk {

// Planted-topic stream generator. Emits into `out_dir`:
//   posts.jsonl     stream posts (lowercase Latin words)
//   golden.jsonl    per-post class assignments (noise posts get none)
//   classes.jsonl   class keyword catalog (the core vocabularies)
//   vectors.vec     word embeddings clustered by planted topic
//   background.txt  reference corpus (noise vocabulary plus core bigrams)
//   anchors.tsv     core bigrams as anchor phrases
struct SynthSpec {
  int topics = 3;
  int posts_per_topic = 30;  // per window
  int windows = 5;
  double noise = 0.1;        // fraction of all posts drawn from noise vocab
  int core_words = 6;        // per topic, mutually disjoint
  int words_per_post = 6;
  int noise_vocab = 100;
  int dim = 16;
  int batch_seconds = 3600;
  unsigned seed = 42;
};

void generate_stream(const SynthSpec& spec, const std::string& out_dir);

}  // namespace tdtk
