// Command-line front end: preprocess, disambiguate, learn, eval, stats and
// synth subcommands.
//
// Exit codes: 0 success, 1 usage, 2 format error, 3 stage or I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphdis/collocation.h"
#include "morphdis/corpus_io.h"
#include "morphdis/eval.h"
#include "morphdis/morphology.h"
#include "morphdis/pipeline.h"
#include "morphdis/preprocess.h"
#include "morphdis/projection.h"
#include "morphdis/rule.h"
#include "morphdis/stats.h"
#include "morphdis/synthetic.h"
#include "morphdis/term.h"

namespace {

using namespace morphdis;

constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitStage = 3;

struct Common {
  std::string config;
  std::string output;
};

PipelineConfig BaseConfig(const std::string& path) {
  return path.empty() ? PipelineConfig{} : PipelineConfig::Load(path);
}

void Emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    WriteTextFile(output, text);
  }
}

// --- preprocess -----------------------------------------------------------

struct PreprocessArgs {
  Common common;
  std::string input;
  std::string lexicon, collocations, suffixes;
  bool no_collocations = false;
  bool no_guess = false;
};

int RunPreprocess(const PreprocessArgs& a) {
  PipelineConfig cfg = BaseConfig(a.common.config);
  std::string lexicon_path = a.lexicon.empty() ? cfg.lexicon : a.lexicon;
  std::string colloc_path = a.collocations.empty() ? cfg.collocations : a.collocations;
  std::string suffix_path = a.suffixes.empty() ? cfg.suffixes : a.suffixes;

  std::optional<Lexicon> lexicon;
  std::optional<CollocationDb> db;
  std::optional<SuffixInventory> inventory;
  PreprocessOptions opts;
  if (!lexicon_path.empty()) opts.lexicon = &lexicon.emplace(Lexicon::Load(lexicon_path));
  if (!colloc_path.empty()) opts.collocations = &db.emplace(CollocationDb::Load(colloc_path));
  if (!suffix_path.empty()) opts.inventory = &inventory.emplace(SuffixInventory::Load(suffix_path));
  opts.pack_collocations = !a.no_collocations;
  opts.guess_unknown = !a.no_guess;

  Corpus corpus = Preprocess(ReadTextFile(a.input), opts);
  if (a.common.output.empty()) {
    std::cout << SerializeCorpus(corpus);
  } else {
    WriteCorpusFile(a.common.output, corpus);
    std::cout << FormatCorpusStats(ComputeCorpusStats(corpus));
  }
  return 0;
}

// --- disambiguate ---------------------------------------------------------

struct DisambiguateArgs {
  Common common;
  std::string input;
  std::vector<std::string> rules;
  std::string learned_choose, learned_delete, gold, templ, root_stats;
  std::vector<std::string> stages;
  bool trace = false;
};

std::vector<Stage> ParseStages(const std::vector<std::string>& names) {
  std::vector<Stage> out;
  for (const std::string& n : names) {
    std::optional<Stage> s = StageFromName(n);
    if (!s) throw CLI::ValidationError("--stages", "unknown stage '" + n + "'");
    out.push_back(*s);
  }
  return out;
}

// Without an explicit stage list, stages whose rule files are missing are
// left out instead of failing.
std::vector<Stage> AvailableStages(const PipelineConfig& c) {
  std::vector<Stage> out;
  for (Stage s : c.stages) {
    if ((s == Stage::kInitialChoose || s == Stage::kInitialDelete) && c.rule_files.empty()) {
      continue;
    }
    if (s == Stage::kLearnedChoose && c.learned_choose.empty()) continue;
    if (s == Stage::kLearnedDelete && c.learned_delete.empty()) continue;
    out.push_back(s);
  }
  return out;
}

int RunDisambiguate(const DisambiguateArgs& a) {
  PipelineConfig cfg = BaseConfig(a.common.config);
  for (const std::string& r : a.rules) cfg.rule_files.push_back(r);
  if (!a.learned_choose.empty()) cfg.learned_choose = a.learned_choose;
  if (!a.learned_delete.empty()) cfg.learned_delete = a.learned_delete;
  if (!a.templ.empty()) cfg.template_stage1 = a.templ;
  if (!a.root_stats.empty()) cfg.root_stats = a.root_stats;
  if (!a.stages.empty()) {
    cfg.stages = ParseStages(a.stages);
  } else if (!cfg.stages_explicit) {
    cfg.stages = AvailableStages(cfg);
  }

  PipelineResources res = LoadResources(cfg);
  Corpus corpus = ReadCorpusFile(a.input);
  std::optional<Corpus> gold;
  if (!a.gold.empty()) gold = ReadCorpusFile(a.gold);
  PipelineReport report = RunPipeline(&corpus, cfg, res, gold ? &*gold : nullptr);

  if (a.common.output.empty()) {
    std::cout << SerializeCorpus(corpus);
    return 0;
  }
  WriteCorpusFile(a.common.output, corpus);
  std::cout << FormatStageTable(report.Rows());
  if (a.trace) {
    for (const StageResult& s : report.stages) {
      for (const auto& [rule, n] : s.fired) {
        std::cout << s.label << "\t" << n << "\t" << rule.ToString() << "\n";
      }
    }
  }
  return 0;
}

// --- learn ----------------------------------------------------------------

struct LearnArgs {
  Common common;
  std::string input;
  std::vector<std::string> rules;
  std::string templ, templ2;
};

int RunLearn(const LearnArgs& a) {
  PipelineConfig cfg = BaseConfig(a.common.config);
  for (const std::string& r : a.rules) cfg.rule_files.push_back(r);
  if (!a.templ.empty()) cfg.template_stage1 = a.templ;
  if (!a.templ2.empty()) cfg.template_stage2 = a.templ2;
  cfg.stages.clear();  // learning loads rule files without enabling stages
  PipelineResources res = LoadResources(cfg);
  LearnResult learned = RunLearning(ReadCorpusFile(a.input), cfg, res);
  std::string prefix = a.common.output.empty() ? "learned" : a.common.output;
  WriteRuleFile(prefix + ".choose.rules", RuleSet{learned.choose, {}});
  WriteRuleFile(prefix + ".delete.rules", RuleSet{learned.del, {}});
  std::cout << FormatLearnReport(learned);
  return 0;
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string system, gold, templ;
  bool projected = false;
  bool sentences = false;
  bool unknown = false;
  bool include_unknown = false;
};

int RunEval(const EvalArgs& a) {
  Corpus system = ReadCorpusFile(a.system);
  Corpus gold = ReadCorpusFile(a.gold);
  std::optional<ProjectionTemplate> tpl;
  EvalOptions opts;
  opts.ignore_unknown = !a.include_unknown;
  if (a.projected) {
    tpl = a.templ.empty() ? ProjectionTemplate::Stage1() : ProjectionTemplate::Load(a.templ);
    opts.projection = &*tpl;
  }
  EvalCounts c = Evaluate(system, gold, opts);
  StageRow row{"system", c.ambiguity(), c};
  std::cout << FormatStageTable({row}) << "\n" << FormatEvalKeyValues(c);
  if (a.sentences) std::cout << "\n" << FormatSentenceReport(EvaluateSentences(system, gold, opts));
  if (a.unknown) std::cout << "\n" << FormatUnknownReport(EvaluateUnknown(system, gold, opts));
  return 0;
}

// --- stats ----------------------------------------------------------------

struct StatsArgs {
  std::string input, root_table;
};

int RunStats(const StatsArgs& a) {
  Corpus corpus = ReadCorpusFile(a.input);
  std::cout << FormatCorpusStats(ComputeCorpusStats(corpus));
  if (!a.root_table.empty()) {
    WriteTextFile(a.root_table, RootStatsTable::Build(corpus).ToString());
  }
  return 0;
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
  Common common;
  std::string gold_out;
  size_t tokens = 5000;
  size_t sentences = 20;
  bool random = false;
};

int RunSynth(const SynthArgs& a, uint64_t seed) {
  if (a.random) {
    RandomCorpusOptions o;
    o.seed = seed;
    o.sentences = a.sentences;
    Emit(a.common.output, SerializeCorpus(RandomCorpus(o)));
    return 0;
  }
  PlantedGrammarOptions o;
  o.seed = seed;
  o.min_tokens = a.tokens;
  PlantedCorpus p = PlantedDeterminerCorpus(o);
  Emit(a.common.output, SerializeCorpus(p.corpus));
  if (!a.gold_out.empty()) WriteCorpusFile(a.gold_out, p.gold);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based and statistically learned morphological disambiguation"};
  app.require_subcommand(1);
  uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for the synthetic corpus generators")
      ->capture_default_str();

  PreprocessArgs pre;
  CLI::App* cpre = app.add_subcommand("preprocess", "Raw text to an ambiguous corpus");
  cpre->add_option("input", pre.input, "UTF-8 or transliterated text")->required();
  cpre->add_option("-o,--output", pre.common.output, "Corpus file (stdout when absent)");
  cpre->add_option("--config", pre.common.config, "key:value configuration file");
  cpre->add_option("--lexicon", pre.lexicon, "surface<TAB>parse analyzer table");
  cpre->add_option("--collocations", pre.collocations, "Collocation database");
  cpre->add_option("--suffixes", pre.suffixes, "Suffix inventory");
  cpre->add_flag("--no-collocations", pre.no_collocations, "Skip collocation packing");
  cpre->add_flag("--no-guess", pre.no_guess, "Leave unknown words without parses");

  DisambiguateArgs dis;
  CLI::App* cdis = app.add_subcommand("disambiguate", "Apply the staged pipeline");
  cdis->add_option("input", dis.input, "Ambiguous corpus")->required();
  cdis->add_option("-o,--output", dis.common.output,
                   "Output corpus; the stage report is printed only with this");
  cdis->add_option("--config", dis.common.config, "key:value configuration file");
  cdis->add_option("--rules", dis.rules, "Hand-crafted rule file (repeatable)");
  cdis->add_option("--learned-choose", dis.learned_choose, "Learned choose rules");
  cdis->add_option("--learned-delete", dis.learned_delete, "Learned delete rules");
  cdis->add_option("--gold", dis.gold, "Gold corpus for recall/precision rows");
  cdis->add_option("--template", dis.templ, "Projection template for context statistics");
  cdis->add_option("--root-stats", dis.root_stats, "Prebuilt root statistics table");
  cdis->add_option("--stages", dis.stages, "Stage names in order")->delimiter(',');
  cdis->add_flag("--trace", dis.trace, "List the rules that removed parses");

  LearnArgs lrn;
  CLI::App* clrn = app.add_subcommand("learn", "Learn choose and delete rules");
  clrn->add_option("input", lrn.input, "Ambiguous corpus")->required();
  clrn->add_option("-o,--output", lrn.common.output,
                   "Output prefix for PREFIX.choose.rules and PREFIX.delete.rules");
  clrn->add_option("--config", lrn.common.config, "key:value configuration file");
  clrn->add_option("--rules", lrn.rules, "Hand-crafted rules applied first (repeatable)");
  clrn->add_option("--template", lrn.templ, "Projection for choose learning");
  clrn->add_option("--delete-template", lrn.templ2, "Projection for delete learning");

  EvalArgs ev;
  CLI::App* cev = app.add_subcommand("eval", "Compare a corpus with a gold standard");
  cev->add_option("system", ev.system, "Disambiguated corpus")->required();
  cev->add_option("gold", ev.gold, "Gold corpus")->required();
  cev->add_flag("--projected", ev.projected, "Compare projected parses");
  cev->add_option("--template", ev.templ, "Projection used with --projected");
  cev->add_flag("--sentences", ev.sentences, "Add the sentence-level report");
  cev->add_flag("--unknown", ev.unknown, "Add the unknown-word report");
  cev->add_flag("--include-unknown", ev.include_unknown,
                "Count analyzer-unknown tokens in recall and precision");

  StatsArgs st;
  CLI::App* cst = app.add_subcommand("stats", "Token, parse and ambiguity counts");
  cst->add_option("input", st.input, "Corpus")->required();
  cst->add_option("--root-table", st.root_table, "Write root statistics to this file");

  SynthArgs syn;
  CLI::App* csyn = app.add_subcommand("synth", "Generate a synthetic corpus");
  csyn->add_option("-o,--output", syn.common.output, "Corpus file (stdout when absent)");
  csyn->add_option("--gold-out", syn.gold_out, "Gold corpus of the planted grammar");
  csyn->add_option("--tokens", syn.tokens, "Minimum token count")->capture_default_str();
  csyn->add_flag("--random", syn.random, "Random toy corpus instead of the planted grammar");
  csyn->add_option("--sentences", syn.sentences, "Sentences for --random")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cpre->parsed()) return RunPreprocess(pre);
    if (cdis->parsed()) return RunDisambiguate(dis);
    if (clrn->parsed()) return RunLearn(lrn);
    if (cev->parsed()) return RunEval(ev);
    if (cst->parsed()) return RunStats(st);
    if (csyn->parsed()) return RunSynth(syn, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
  return kExitUsage;
}
