#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mmambig/classify.hpp"
#include "mmambig/grammar.hpp"
#include "mmambig/lexicon.hpp"

namespace mmambig {

struct CorpusLabel {
  std::string path;
  AmbiguityClass expected = AmbiguityClass::Unambiguous;
};

// Requested file count per class, indexed by AmbiguityClass order.
struct CorpusCounts {
  std::array<int, kClassCount> per_class{};

  int& operator[](AmbiguityClass cls) { return per_class[static_cast<int>(cls)]; }
  int operator[](AmbiguityClass cls) const { return per_class[static_cast<int>(cls)]; }
  int total() const;
};

// Writes count[c] XML files per class under out_dir plus a labels.tsv
// (`<path>\t<class>` per line). Each file instantiates that class's
// template with seeded vocabulary, modalities, and time offsets so that
// exactly the intended rule fires. Byte-deterministic for a fixed seed.
std::vector<CorpusLabel> generate_corpus(std::uint64_t seed,
                                         const CorpusCounts& counts,
                                         const std::string& out_dir);

std::vector<CorpusLabel> read_labels_file(const std::string& path,
                                          const std::string& base_dir);

struct EvalMetrics {
  // Rows: expected class. Columns: predicted class, plus a final error
  // column for files that failed to classify.
  std::array<std::array<int, kClassCount + 1>, kClassCount> confusion{};
  std::array<int, kClassCount> totals{};
  double overall_accuracy = 0.0;
  // Accuracy over {lexical, temporal-semantic, target, unambiguous} files.
  double semantic_accuracy = 0.0;
  // Accuracy over {gap, analytic, attachment, unambiguous} files.
  double syntactic_accuracy = 0.0;
};

EvalMetrics eval_corpus(const std::vector<CorpusLabel>& labels,
                        const Grammar& grammar,
                        const Lexicon& lexicon,
                        std::int64_t threshold = kDefaultThreshold);

std::string metrics_to_text(const EvalMetrics& metrics);

}  // namespace mmambig
