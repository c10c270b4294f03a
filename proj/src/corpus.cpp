#include "mmambig/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "mmambig/build.hpp"
#include "mmambig/xml_io.hpp"

namespace mmambig {

namespace fs = std::filesystem;

int CorpusCounts::total() const {
  int sum = 0;
  for (int n : per_class) sum += n;
  return sum;
}

namespace {

const std::vector<std::string> kVerbs = {"show", "find", "see", "select", "locate", "mark"};
const std::vector<std::string> kPreps = {"in", "near", "with", "at", "on"};
const std::vector<std::string> kAdjectives = {"italian", "red", "big", "small", "new", "old"};
const std::vector<std::string> kNouns = {
    "lake",    "river",   "road",    "street",  "school",  "garden",  "hotel",
    "restaurant", "house", "park",   "church",  "museum",  "station", "bridge",
    "tower",   "square",  "harbor",  "castle",  "library", "theater", "market",
    "fountain", "farm",   "beach",   "forest",  "hill",    "valley",  "island"};
const std::vector<std::string> kSecondaryMods = {"sketch", "handwriting"};

class Picker {
 public:
  explicit Picker(std::mt19937& rng) : rng_(rng) {}

  const std::string& one(const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    return pool[dist(rng_)];
  }

  // n distinct entries from the pool, in draw order.
  std::vector<std::string> distinct(const std::vector<std::string>& pool, std::size_t n) {
    std::vector<std::string> out;
    while (out.size() < n) {
      const std::string& candidate = one(pool);
      if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(candidate);
    }
    return out;
  }

  std::int64_t offset() {
    std::uniform_int_distribution<std::int64_t> dist(0, 40);
    return dist(rng_);
  }

 private:
  std::mt19937& rng_;
};

RawEntry entry(const std::string& mod, const std::string& repr, std::int64_t ts,
               std::int64_t te, const std::string& conc) {
  RawEntry e;
  e.mod = mod;
  e.repr = repr;
  e.ts = ts;
  e.te = te;
  e.conc = conc;
  return e;
}

// Each template mirrors one validated sentence skeleton; the interval
// pattern is fixed and the whole sentence shifts by a random offset, so the
// pairwise temporal relations (and therefore the fired rule) never change.
RawInput make_sentence(AmbiguityClass cls, std::mt19937& rng) {
  Picker pick(rng);
  const std::int64_t o = pick.offset();
  const std::string mod2 = pick.one(kSecondaryMods);
  RawInput input;

  switch (cls) {
    case AmbiguityClass::Unambiguous: {
      auto nouns = pick.distinct(kNouns, 2);
      const std::string& spoken = nouns[0];
      const std::string& drawn = nouns[1];
      const std::string verb = pick.one(kVerbs);
      const std::string prep = pick.one(kPreps);
      input.entries = {
          entry("speech", verb, o + 0, o + 2, verb),
          entry("speech", "this", o + 4, o + 6, "deictic"),
          entry("speech", prep, o + 8, o + 10, prep),
          entry("speech", spoken, o + 12, o + 15, spoken),
          entry(mod2, mod2 + "_" + drawn, o + 5, o + 9, drawn),
          entry(mod2, mod2 + "_" + spoken, o + 11, o + 14, spoken),
      };
      input.sentences = {verb + " this " + drawn + " " + prep + " the " + spoken};
      break;
    }
    case AmbiguityClass::Lexical: {
      auto nouns = pick.distinct(kNouns, 3);
      const std::string verb = pick.one(kVerbs);
      const std::string prep = pick.one(kPreps);
      const std::string repr = mod2 + "_" + nouns[0] + "_" + nouns[1];
      input.entries = {
          entry("speech", verb, o + 0, o + 3, verb),
          entry("speech", "this", o + 6, o + 8, "deictic"),
          entry("speech", prep, o + 12, o + 15, prep),
          entry("speech", nouns[2], o + 17, o + 20, nouns[2]),
          entry(mod2, repr, o + 7, o + 13, nouns[0]),
          entry(mod2, repr, o + 7, o + 13, nouns[1]),
      };
      input.sentences = {verb + " this " + nouns[0] + " " + prep + " " + nouns[2],
                         verb + " this " + nouns[1] + " " + prep + " " + nouns[2]};
      break;
    }
    case AmbiguityClass::TemporalSemantic: {
      auto nouns = pick.distinct(kNouns, 2);
      input.entries = {
          entry("speech", "this", o + 5, o + 7, "deictic"),
          entry("speech", "is", o + 8, o + 9, "is"),
          entry("speech", "a", o + 10, o + 11, "a"),
          entry("speech", nouns[0], o + 12, o + 14, nouns[0]),
          entry(mod2, mod2 + "_" + nouns[1], o + 10, o + 13, nouns[1]),
      };
      input.sentences = {"this is a " + nouns[0], "this is a " + nouns[1]};
      break;
    }
    case AmbiguityClass::Target: {
      auto nouns = pick.distinct(kNouns, 3);
      const std::string verb = pick.one(kVerbs);
      const std::string prep = pick.one(kPreps);
      input.entries = {
          entry("speech", verb, o + 0, o + 3, verb),
          entry("speech", "this", o + 6, o + 8, "deictic"),
          entry("speech", prep, o + 12, o + 15, prep),
          entry("speech", nouns[2], o + 17, o + 20, nouns[2]),
          entry(mod2, mod2 + "_" + nouns[0], o + 9, o + 11, nouns[0]),
          entry(mod2, mod2 + "_" + nouns[1], o + 9, o + 11, nouns[1]),
      };
      input.sentences = {verb + " the " + nouns[0] + " " + prep + " " + nouns[2],
                         verb + " the " + nouns[1] + " " + prep + " " + nouns[2]};
      break;
    }
    case AmbiguityClass::Gap: {
      auto nouns = pick.distinct(kNouns, 1);
      const std::string verb = pick.one(kVerbs);
      const std::string prep = pick.one(kPreps);
      input.entries = {
          entry("speech", verb, o + 1, o + 3, verb),
          entry("speech", "this", o + 5, o + 7, "deictic"),
          entry("speech", prep, o + 8, o + 9, prep),
          entry("speech", "this", o + 10, o + 12, "deictic"),
          entry(mod2, mod2 + "_" + nouns[0], o + 10, o + 13, nouns[0]),
      };
      input.sentences = {verb + " this " + prep + " this " + nouns[0]};
      break;
    }
    case AmbiguityClass::Analytic: {
      auto nouns = pick.distinct(kNouns, 2);
      const std::string verb = pick.one(kVerbs);
      const std::string adjective = pick.one(kAdjectives);
      input.entries = {
          entry("speech", verb, o + 1, o + 3, verb),
          entry("speech", adjective, o + 5, o + 8, adjective),
          entry("speech", nouns[0], o + 10, o + 12, nouns[0]),
          entry(mod2, mod2 + "_" + nouns[1], o + 13, o + 15, nouns[1]),
      };
      input.sentences = {verb + " the " + adjective + " " + nouns[1] + " of the " + nouns[0],
                         verb + " the " + nouns[1] + " of the " + adjective + " " + nouns[0]};
      break;
    }
    case AmbiguityClass::Attachment: {
      auto nouns = pick.distinct(kNouns, 3);
      const std::string verb = pick.one(kVerbs);
      auto preps = pick.distinct(kPreps, 2);
      input.entries = {
          entry("speech", verb, o + 0, o + 3, verb),
          entry("speech", "this", o + 6, o + 8, "deictic"),
          entry("speech", preps[0], o + 12, o + 15, preps[0]),
          entry("speech", nouns[0], o + 17, o + 20, nouns[0]),
          entry("speech", preps[1], o + 22, o + 24, preps[1]),
          entry("speech", nouns[1], o + 26, o + 30, nouns[1]),
          entry(mod2, mod2 + "_" + nouns[2], o + 6, o + 18, nouns[2]),
      };
      input.sentences = {
          verb + " this " + nouns[2] + " " + preps[1] + " " + nouns[1] + " and " + preps[0] +
              " the " + nouns[0],
          verb + " this " + nouns[2] + " " + preps[0] + " the " + nouns[0] + " " + preps[1] +
              " " + nouns[1]};
      break;
    }
  }
  return input;
}

std::string class_file_stem(AmbiguityClass cls) {
  std::string stem = to_string(cls);
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return stem;
}

}  // namespace

std::vector<CorpusLabel> generate_corpus(std::uint64_t seed, const CorpusCounts& counts,
                                         const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + out_dir + ": " + ec.message());

  std::vector<CorpusLabel> labels;
  std::ostringstream tsv;
  for (int c = 0; c < kClassCount; ++c) {
    auto cls = static_cast<AmbiguityClass>(c);
    for (int k = 0; k < counts.per_class[static_cast<std::size_t>(c)]; ++k) {
      std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(c),
                        static_cast<std::uint64_t>(k)};
      std::mt19937 rng(seq);
      RawInput input = make_sentence(cls, rng);

      std::ostringstream name;
      name << class_file_stem(cls) << "_" << std::setfill('0') << std::setw(4) << k << ".xml";
      std::string path = (fs::path(out_dir) / name.str()).string();
      write_text_file(path, write_sentence_xml(input));
      labels.push_back(CorpusLabel{path, cls});
      tsv << name.str() << '\t' << to_string(cls) << '\n';
    }
  }
  write_text_file((fs::path(out_dir) / "labels.tsv").string(), tsv.str());
  return labels;
}

std::vector<CorpusLabel> read_labels_file(const std::string& path, const std::string& base_dir) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open labels file: " + path);
  std::vector<CorpusLabel> labels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::IoFailure,
                  "labels line " + std::to_string(line_no) + ": expected <path>\\t<class>");
    CorpusLabel label;
    fs::path file(line.substr(0, tab));
    label.path = file.is_absolute() ? file.string() : (fs::path(base_dir) / file).string();
    label.expected = ambiguity_class_from_string(line.substr(tab + 1));
    labels.push_back(std::move(label));
  }
  return labels;
}

EvalMetrics eval_corpus(const std::vector<CorpusLabel>& labels, const Grammar& grammar,
                        const Lexicon& lexicon, std::int64_t threshold) {
  EvalMetrics metrics;
  auto in_set = [](AmbiguityClass cls, std::initializer_list<AmbiguityClass> set) {
    return std::find(set.begin(), set.end(), cls) != set.end();
  };

  int semantic_total = 0, semantic_hit = 0;
  int syntactic_total = 0, syntactic_hit = 0;
  int overall_hit = 0;

  for (const auto& label : labels) {
    const int row = static_cast<int>(label.expected);
    ++metrics.totals[static_cast<std::size_t>(row)];
    int column = kClassCount;  // error column unless classification succeeds
    try {
      RawInput raw = read_sentence_file(label.path);
      MultimodalSentence sentence = build_sentence(raw, lexicon, grammar, threshold);
      ClassificationReport report = classify(sentence, threshold);
      column = static_cast<int>(report.primary);
    } catch (const Error&) {
      column = kClassCount;
    }
    ++metrics.confusion[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)];

    const bool hit = column == row;
    if (hit) ++overall_hit;
    if (in_set(label.expected, {AmbiguityClass::Lexical, AmbiguityClass::TemporalSemantic,
                                AmbiguityClass::Target, AmbiguityClass::Unambiguous})) {
      ++semantic_total;
      if (hit) ++semantic_hit;
    }
    if (in_set(label.expected, {AmbiguityClass::Gap, AmbiguityClass::Analytic,
                                AmbiguityClass::Attachment, AmbiguityClass::Unambiguous})) {
      ++syntactic_total;
      if (hit) ++syntactic_hit;
    }
  }

  auto ratio = [](int hit, int total) { return total == 0 ? 0.0 : double(hit) / total; };
  metrics.overall_accuracy = ratio(overall_hit, static_cast<int>(labels.size()));
  metrics.semantic_accuracy = ratio(semantic_hit, semantic_total);
  metrics.syntactic_accuracy = ratio(syntactic_hit, syntactic_total);
  return metrics;
}

std::string metrics_to_text(const EvalMetrics& metrics) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "class            n     correct  accuracy\n";
  for (int c = 0; c < kClassCount; ++c) {
    int n = metrics.totals[static_cast<std::size_t>(c)];
    int correct = metrics.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    out << std::left << std::setw(17) << to_string(static_cast<AmbiguityClass>(c))
        << std::setw(6) << n << std::setw(9) << correct
        << (n == 0 ? 0.0 : double(correct) / n) << "\n";
  }
  out << "overall=" << metrics.overall_accuracy << " semantic=" << metrics.semantic_accuracy
      << " syntactic=" << metrics.syntactic_accuracy << "\n";
  out << "confusion (rows expected, columns predicted + error):\n";
  for (int r = 0; r < kClassCount; ++r) {
    out << std::left << std::setw(17) << to_string(static_cast<AmbiguityClass>(r));
    for (int c = 0; c <= kClassCount; ++c)
      out << std::setw(6) << metrics.confusion[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    out << "\n";
  }
  return out.str();
}

}  // namespace mmambig
