#include "mmambig/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mmambig/build.hpp"
#include "mmambig/classify.hpp"
#include "mmambig/corpus.hpp"
#include "mmambig/graph.hpp"
#include "mmambig/xml_io.hpp"

#ifndef MMAMBIG_DATA_DIR
#define MMAMBIG_DATA_DIR "data"
#endif

namespace mmambig {

namespace {

// Input-side problems exit 1; caps and internal invariants exit 2.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml:
    case ErrorCode::SchemaViolation:
    case ErrorCode::UnknownWord:
    case ErrorCode::ConflictingRole:
    case ErrorCode::Unparseable:
    case ErrorCode::MissingStartSymbol:
    case ErrorCode::MalformedProduction:
    case ErrorCode::UnknownTag:
    case ErrorCode::IoFailure:
      return 1;
    case ErrorCode::TooManyParses:
    case ErrorCode::PathLimitExceeded:
    case ErrorCode::EmptyForest:
    case ErrorCode::NodeNotFound:
      return 2;
  }
  return 2;
}

std::string default_grammar_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("MMAMBIG_GRAMMAR"); env && *env) return env;
  return std::string(MMAMBIG_DATA_DIR) + "/default.grammar";
}

std::string default_lexicon_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  return std::string(MMAMBIG_DATA_DIR) + "/default.lexicon";
}

struct CommonOptions {
  std::string grammar_path;
  std::string lexicon_path;
  std::int64_t threshold = kDefaultThreshold;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--grammar", options.grammar_path, "grammar file (default: bundled)");
  cmd->add_option("--lexicon", options.lexicon_path, "lexicon file (default: bundled)");
  cmd->add_option("--threshold", options.threshold, "CloseBy separation threshold")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multimodal sentence ambiguity classifier"};
  app.require_subcommand(1);

  CommonOptions classify_opts;
  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "classify one sentence XML file");
  classify_cmd->add_option("file", classify_file, "sentence XML file")->required();
  add_common(classify_cmd, classify_opts);

  CommonOptions graph_opts;
  std::string graph_file, dot_out;
  auto* graph_cmd = app.add_subcommand("graph", "export the syntax-graph as DOT");
  graph_cmd->add_option("file", graph_file, "sentence XML file")->required();
  graph_cmd->add_option("--dot", dot_out, "output path ('-' for stdout)")->required();
  add_common(graph_cmd, graph_opts);

  std::uint64_t gen_seed = 0;
  std::vector<int> gen_counts;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a labeled synthetic corpus");
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
  gen_cmd
      ->add_option("--counts", gen_counts,
                   "files per class: lexical,temporal-semantic,target,gap,analytic,"
                   "attachment,unambiguous")
      ->delimiter(',')
      ->expected(kClassCount);
  gen_cmd->add_option("--out", gen_out, "output directory")->required();

  CommonOptions eval_opts;
  std::string eval_labels, eval_dir;
  auto* eval_cmd = app.add_subcommand("eval", "classify a labeled corpus and report accuracy");
  eval_cmd->add_option("--labels", eval_labels, "labels TSV (<path>\\t<class>)")->required();
  eval_cmd->add_option("--dir", eval_dir, "base directory for relative paths");
  add_common(eval_cmd, eval_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (classify_cmd->parsed()) {
      Grammar grammar = load_grammar_file(default_grammar_path(classify_opts.grammar_path));
      Lexicon lexicon = load_lexicon_file(default_lexicon_path(classify_opts.lexicon_path));
      RawInput raw = read_sentence_file(classify_file);
      MultimodalSentence sentence =
          build_sentence(raw, lexicon, grammar, classify_opts.threshold);
      ClassificationReport report = classify(sentence, classify_opts.threshold);
      out << report_to_text(report);
      return 0;
    }
    if (graph_cmd->parsed()) {
      Grammar grammar = load_grammar_file(default_grammar_path(graph_opts.grammar_path));
      Lexicon lexicon = load_lexicon_file(default_lexicon_path(graph_opts.lexicon_path));
      RawInput raw = read_sentence_file(graph_file);
      MultimodalSentence sentence = build_sentence(raw, lexicon, grammar, graph_opts.threshold);
      std::string dot = to_dot(sentence.graph);
      if (dot_out == "-")
        out << dot;
      else
        write_text_file(dot_out, dot);
      return 0;
    }
    if (gen_cmd->parsed()) {
      CorpusCounts counts;
      if (gen_counts.empty()) {
        counts.per_class = {80, 80, 80, 80, 80, 80, 40};
      } else {
        for (int c = 0; c < kClassCount; ++c) {
          if (gen_counts[static_cast<std::size_t>(c)] < 0)
            throw Error(ErrorCode::IoFailure, "counts must be nonnegative");
          counts.per_class[static_cast<std::size_t>(c)] = gen_counts[static_cast<std::size_t>(c)];
        }
      }
      auto labels = generate_corpus(gen_seed, counts, gen_out);
      out << "generated " << labels.size() << " files under " << gen_out << "\n";
      return 0;
    }
    if (eval_cmd->parsed()) {
      Grammar grammar = load_grammar_file(default_grammar_path(eval_opts.grammar_path));
      Lexicon lexicon = load_lexicon_file(default_lexicon_path(eval_opts.lexicon_path));
      std::string base = eval_dir;
      if (base.empty()) {
        auto slash = eval_labels.find_last_of('/');
        base = slash == std::string::npos ? "." : eval_labels.substr(0, slash);
      }
      auto labels = read_labels_file(eval_labels, base);
      EvalMetrics metrics = eval_corpus(labels, grammar, lexicon, eval_opts.threshold);
      out << metrics_to_text(metrics);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mmambig
