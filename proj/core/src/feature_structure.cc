#include "morphdis/feature_structure.h"

#include <algorithm>
#include <array>

#include "morphdis/term.h"

namespace morphdis {

namespace {

constexpr std::array<std::string_view, 13> kLeadingAttributes = {
    "cat",  "root",  "word", "type", "subcat", "voice", "sense",
    "tam1", "tam2",  "copula", "agr", "poss", "case"};

constexpr int kUnknownRank = 100;

}  // namespace

FeatureValue::FeatureValue() = default;
FeatureValue::FeatureValue(std::string atom) : atom_(std::move(atom)) {}
FeatureValue::FeatureValue(const char* atom) : atom_(atom) {}
FeatureValue::FeatureValue(FeatureStructure nested)
    : nested_(std::make_shared<const FeatureStructure>(std::move(nested))) {}

bool operator==(const FeatureValue& a, const FeatureValue& b) {
  if (a.is_nested() != b.is_nested()) return false;
  if (a.is_nested()) {
    return a.nested_ == b.nested_ || *a.nested_ == *b.nested_;
  }
  return a.atom_ == b.atom_;
}

int AttributeRank(std::string_view name) {
  for (size_t i = 0; i < kLeadingAttributes.size(); ++i) {
    if (kLeadingAttributes[i] == name) return static_cast<int>(i);
  }
  if (name == "stem") return kUnknownRank + 1;
  if (name == "suffix") return kUnknownRank + 2;
  return kUnknownRank;
}

bool AttributeLess(std::string_view a, std::string_view b) {
  int ra = AttributeRank(a);
  int rb = AttributeRank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool IsKnownAttribute(std::string_view name) {
  return AttributeRank(name) != kUnknownRank;
}

FeatureStructure::FeatureStructure(
    std::initializer_list<std::pair<std::string, FeatureValue>> features) {
  for (const auto& [name, value] : features) Set(name, value);
}

void FeatureStructure::Set(std::string name, FeatureValue value) {
  auto it = std::lower_bound(
      features_.begin(), features_.end(), name,
      [](const Feature& f, const std::string& n) {
        return AttributeLess(f.name, n);
      });
  if (it != features_.end() && it->name == name) {
    it->value = std::move(value);
    return;
  }
  features_.insert(it, Feature{std::move(name), std::move(value)});
}

bool FeatureStructure::Erase(std::string_view name) {
  for (auto it = features_.begin(); it != features_.end(); ++it) {
    if (it->name == name) {
      features_.erase(it);
      return true;
    }
  }
  return false;
}

const FeatureValue* FeatureStructure::Find(std::string_view name) const {
  for (const Feature& f : features_) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

const std::string* FeatureStructure::FindAtom(std::string_view name) const {
  const FeatureValue* v = Find(name);
  return v != nullptr && v->is_atom() ? &v->atom() : nullptr;
}

const FeatureStructure* FeatureStructure::FindNested(
    std::string_view name) const {
  const FeatureValue* v = Find(name);
  return v != nullptr && v->is_nested() ? &v->nested() : nullptr;
}

size_t FeatureStructure::TotalSize() const {
  size_t n = 0;
  for (const Feature& f : features_) {
    n += f.value.is_nested() ? 1 + f.value.nested().TotalSize() : 1;
  }
  return n;
}

std::string FeatureStructure::ToString() const {
  std::string out = "[";
  for (size_t i = 0; i < features_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += QuoteAtom(features_[i].name);
    out.push_back(':');
    const FeatureValue& v = features_[i].value;
    out += v.is_nested() ? v.nested().ToString() : QuoteAtom(v.atom());
  }
  out.push_back(']');
  return out;
}

bool operator==(const FeatureStructure& a, const FeatureStructure& b) {
  if (a.features_.size() != b.features_.size()) return false;
  for (size_t i = 0; i < a.features_.size(); ++i) {
    if (a.features_[i].name != b.features_[i].name ||
        !(a.features_[i].value == b.features_[i].value)) {
      return false;
    }
  }
  return true;
}

const std::string* InnermostRoot(const FeatureStructure& fs) {
  const FeatureStructure* cur = &fs;
  while (const FeatureStructure* stem = cur->FindNested("stem")) cur = stem;
  return cur->FindAtom("root");
}

}  // namespace morphdis
