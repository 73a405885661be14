#include "morphdis/pipeline.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include "morphdis/corpus_io.h"
#include "morphdis/rule_engine.h"
#include "morphdis/term.h"

namespace morphdis {

namespace {

constexpr std::array<std::pair<Stage, std::string_view>, 6> kStageNames = {{
    {Stage::kInitialChoose, "initial-choose"},
    {Stage::kInitialDelete, "initial-delete"},
    {Stage::kContextStats, "context-stats"},
    {Stage::kRootStats, "root-stats"},
    {Stage::kLearnedChoose, "learned-choose"},
    {Stage::kLearnedDelete, "learned-delete"},
}};

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> SplitList(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : v) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double ToDouble(const std::string& v, int line) {
  try {
    size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw FormatError("not a number: '" + v + "'", {line, 1});
}

template <size_t N>
std::array<double, N> ToArray(const std::string& v, int line) {
  std::vector<std::string> parts = SplitList(v);
  if (parts.size() != N) {
    throw FormatError("expected " + std::to_string(N) + " numbers", {line, 1});
  }
  std::array<double, N> out{};
  for (size_t i = 0; i < N; ++i) out[i] = ToDouble(parts[i], line);
  return out;
}

bool ToBool(const std::string& v, int line) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw FormatError("expected true or false, got '" + v + "'", {line, 1});
}

std::string Resolve(const std::string& base, const std::string& path) {
  if (base.empty() || path.empty() || std::filesystem::path(path).is_absolute()) {
    return path;
  }
  return (std::filesystem::path(base) / path).string();
}

RuleSet LoadRules(const std::string& path, const char* what) {
  try {
    return ReadRuleFile(path);
  } catch (const std::exception& e) {
    throw StageError(std::string(what) + " '" + path + "': " + e.what());
  }
}

bool Enabled(const PipelineConfig& c, Stage s) {
  for (Stage t : c.stages) {
    if (t == s) return true;
  }
  return false;
}

StageRow MakeRow(const std::string& label, const Corpus& corpus, const Corpus* gold) {
  StageRow row;
  row.label = label;
  row.ambiguity = Ambiguity(corpus);
  if (gold != nullptr) row.counts = Evaluate(corpus, *gold);
  return row;
}

void DedupeCorpus(Corpus* corpus) {
  for (Sentence& s : corpus->sentences) {
    for (AmbiguousToken& t : s.tokens) DedupeParses(&t.parses);
  }
}

}  // namespace

std::string_view StageName(Stage stage) {
  for (const auto& [s, name] : kStageNames) {
    if (s == stage) return name;
  }
  return "?";
}

std::optional<Stage> StageFromName(std::string_view name) {
  for (const auto& [s, n] : kStageNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::vector<Stage> DefaultStageOrder() {
  std::vector<Stage> out;
  for (const auto& entry : kStageNames) out.push_back(entry.first);
  return out;
}

PipelineConfig PipelineConfig::Parse(std::string_view text, const std::string& base_dir) {
  PipelineConfig c;
  std::map<long, std::pair<std::string, bool>> stages;
  std::stringstream ss{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string l = Trim(raw);
    if (l.empty() || l[0] == '#') continue;
    size_t colon = l.find(':');
    if (colon == std::string::npos) throw FormatError("expected key: value", {line, 1});
    std::string key = Trim(std::string_view(l).substr(0, colon));
    std::string value = Trim(std::string_view(l).substr(colon + 1));
    auto path = [&] { return Resolve(base_dir, value); };

    if (key.rfind("stage.", 0) == 0) {
      size_t dot = key.find('.', 6);
      std::string num = key.substr(6, dot == std::string::npos ? std::string::npos : dot - 6);
      std::string field = dot == std::string::npos ? "" : key.substr(dot + 1);
      long n = 0;
      try {
        size_t used = 0;
        n = std::stol(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw FormatError("bad stage index in '" + key + "'", {line, 1});
      }
      auto& entry = stages.try_emplace(n, "", true).first->second;
      if (field == "name") {
        if (!StageFromName(value)) {
          throw FormatError("unknown stage '" + value + "'", {line, 1});
        }
        entry.first = value;
      } else if (field == "enabled") {
        entry.second = ToBool(value, line);
      } else {
        throw FormatError("unknown key '" + key + "'", {line, 1});
      }
    } else if (key == "rules") {
      for (const std::string& f : SplitList(value)) c.rule_files.push_back(Resolve(base_dir, f));
    } else if (key == "learned_choose") {
      c.learned_choose = path();
    } else if (key == "learned_delete") {
      c.learned_delete = path();
    } else if (key == "root_stats") {
      c.root_stats = path();
    } else if (key == "collocations") {
      c.collocations = path();
    } else if (key == "suffixes") {
      c.suffixes = path();
    } else if (key == "lexicon") {
      c.lexicon = path();
    } else if (key == "template.stage1") {
      c.template_stage1 = path();
    } else if (key == "template.stage2") {
      c.template_stage2 = path();
    } else if (key == "context_stats.weights") {
      auto w = ToArray<3>(value, line);
      c.context_stats.w_both = w[0];
      c.context_stats.w_left = w[1];
      c.context_stats.w_right = w[2];
    } else if (key == "context_stats.fractions") {
      c.context_stats.fractions = ToArray<3>(value, line);
    } else if (key == "root_stats.ratio") {
      c.root_ratio = ToDouble(value, line);
    } else if (key == "learner.thresholds") {
      c.learner.thresholds = ToArray<kNumGroups>(value, line);
    } else if (key == "learner.damping") {
      c.learner.damping = ToDouble(value, line);
    } else if (key == "learner.lower_limit") {
      c.learner.lower_limit = ToDouble(value, line);
    } else if (key == "learner.delete_fraction") {
      c.learner.delete_fraction = ToDouble(value, line);
    } else if (key == "learner.delete_method") {
      if (value == "fraction") {
        c.learner.delete_method = DeleteMethod::kFraction;
      } else if (value == "choose_scores") {
        c.learner.delete_method = DeleteMethod::kChooseScores;
      } else {
        throw FormatError("delete_method must be fraction or choose_scores", {line, 1});
      }
    } else if (key == "learner.max_rules") {
      double d = ToDouble(value, line);
      if (d < 0) throw FormatError("max_rules must be >= 0", {line, 1});
      c.learner.max_rules = static_cast<size_t>(d);
    } else {
      throw FormatError("unknown key '" + key + "'", {line, 1});
    }
  }
  if (!stages.empty()) {
    c.stages.clear();
    c.stages_explicit = true;
    for (const auto& [n, entry] : stages) {
      if (entry.first.empty()) {
        throw FormatError("stage." + std::to_string(n) + " has no name");
      }
      if (entry.second) c.stages.push_back(*StageFromName(entry.first));
    }
  }
  return c;
}

PipelineConfig PipelineConfig::Load(const std::string& path) {
  std::string base = std::filesystem::path(path).parent_path().string();
  return Parse(ReadTextFile(path), base);
}

PipelineResources LoadResources(const PipelineConfig& config) {
  PipelineResources r;
  for (const std::string& f : config.rule_files) {
    RuleSet rs = LoadRules(f, "rule file");
    for (ConstraintRule& rule : rs.rules) r.hand.rules.push_back(std::move(rule));
  }
  bool hand_needed = Enabled(config, Stage::kInitialChoose) ||
                     Enabled(config, Stage::kInitialDelete);
  if (hand_needed && config.rule_files.empty()) {
    throw StageError("initial-choose/initial-delete enabled but no hand-crafted rule file given");
  }
  if (!config.learned_choose.empty()) {
    r.learned_choose = LoadRules(config.learned_choose, "learned choose rules");
  } else if (Enabled(config, Stage::kLearnedChoose)) {
    throw StageError("learned-choose enabled but no learned choose rule file given");
  }
  if (!config.learned_delete.empty()) {
    r.learned_delete = LoadRules(config.learned_delete, "learned delete rules");
  } else if (Enabled(config, Stage::kLearnedDelete)) {
    throw StageError("learned-delete enabled but no learned delete rule file given");
  }
  try {
    if (!config.root_stats.empty()) r.root_stats = RootStatsTable::Load(config.root_stats);
    if (!config.template_stage1.empty()) {
      r.stage1 = ProjectionTemplate::Load(config.template_stage1);
    }
    if (!config.template_stage2.empty()) {
      r.stage2 = ProjectionTemplate::Load(config.template_stage2);
    }
  } catch (const FormatError& e) {
    throw StageError(e.what());
  }
  return r;
}

std::vector<StageRow> PipelineReport::Rows() const {
  std::vector<StageRow> rows;
  for (const StageResult& s : stages) rows.push_back(s.row);
  return rows;
}

double Ambiguity(const Corpus& corpus) {
  size_t tokens = corpus.BodyTokenCount();
  return tokens == 0 ? 0.0
                     : static_cast<double>(corpus.BodyParseCount()) /
                           static_cast<double>(tokens);
}

PipelineReport RunPipeline(Corpus* corpus, const PipelineConfig& config,
                           const PipelineResources& resources, const Corpus* gold) {
  PipelineReport report;
  DedupeCorpus(corpus);
  StageResult base;
  base.label = "BASE";
  base.row = MakeRow("BASE", *corpus, gold);
  report.stages.push_back(std::move(base));
  for (Stage stage : config.stages) {
    StageResult result;
    result.label = std::string(StageName(stage));
    size_t before = corpus->BodyParseCount();
    auto apply = [&](const std::vector<ConstraintRule>& rules, ApplicationMode mode) {
      ApplyReport ar = ApplyRuleset(rules, corpus, mode);
      result.sweeps = ar.sweeps;
      for (size_t k = 0; k < rules.size(); ++k) {
        if (ar.fired[k] > 0) result.fired.emplace_back(rules[k], ar.fired[k]);
        if (ar.matched[k] > 0) result.matched.emplace_back(rules[k], ar.matched[k]);
      }
    };
    switch (stage) {
      case Stage::kInitialChoose:
        apply(resources.hand.OfKind(RuleKind::kChoose), ApplicationMode::kHandCrafted);
        break;
      case Stage::kInitialDelete:
        apply(resources.hand.OfKind(RuleKind::kDelete), ApplicationMode::kHandCrafted);
        break;
      case Stage::kContextStats:
        try {
          RunContextStats(corpus, resources.stage1, config.context_stats);
        } catch (const FormatError& e) {
          throw StageError(std::string("context-stats: ") + e.what());
        }
        break;
      case Stage::kRootStats: {
        RootStatsTable table = resources.root_stats ? *resources.root_stats
                                                    : RootStatsTable::Build(*corpus);
        RootStatsPrune(corpus, table, config.root_ratio);
        break;
      }
      case Stage::kLearnedChoose:
        if (!resources.learned_choose) throw StageError("learned-choose: no rules loaded");
        apply(resources.learned_choose->rules, ApplicationMode::kStrict);
        break;
      case Stage::kLearnedDelete:
        if (!resources.learned_delete) throw StageError("learned-delete: no rules loaded");
        apply(resources.learned_delete->rules, ApplicationMode::kStrict);
        break;
    }
    result.removed = before - corpus->BodyParseCount();
    result.row = MakeRow(result.label, *corpus, gold);
    report.stages.push_back(std::move(result));
  }
  return report;
}

LearnResult RunLearning(const Corpus& corpus, const PipelineConfig& config,
                        const PipelineResources& resources) {
  Corpus work = corpus;
  DedupeCorpus(&work);
  ApplyRuleset(resources.hand.OfKind(RuleKind::kChoose), &work,
               ApplicationMode::kHandCrafted);
  ApplyRuleset(resources.hand.OfKind(RuleKind::kDelete), &work,
               ApplicationMode::kHandCrafted);
  LearnResult out;
  try {
    out.choose = LearnChoose(ProjectCorpus(work, resources.stage1), config.learner);
    ApplyRuleset(out.choose, &work, ApplicationMode::kStrict);
    out.del = LearnDelete(ProjectCorpus(work, resources.stage2), config.learner);
  } catch (const FormatError& e) {
    throw StageError(std::string("learn: ") + e.what());
  }
  return out;
}

std::string FormatLearnReport(const LearnResult& result) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-14s%s\n%-14zu%zu\n", "Choose Rules", "Delete Rules",
                result.choose.size(), result.del.size());
  return buf;
}

}  // namespace morphdis
