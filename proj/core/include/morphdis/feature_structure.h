// Hierarchical morphological parses: ordered attribute/value maps whose
// values are atoms, except `stem`, which may hold a nested structure.

#ifndef MORPHDIS_FEATURE_STRUCTURE_H_
#define MORPHDIS_FEATURE_STRUCTURE_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace morphdis {

class FeatureStructure;

class FeatureValue {
 public:
  FeatureValue();
  FeatureValue(std::string atom);        // NOLINT(runtime/explicit)
  FeatureValue(const char* atom);        // NOLINT(runtime/explicit)
  FeatureValue(FeatureStructure nested);  // NOLINT(runtime/explicit)

  bool is_atom() const { return nested_ == nullptr; }
  bool is_nested() const { return nested_ != nullptr; }
  const std::string& atom() const { return atom_; }
  const FeatureStructure& nested() const { return *nested_; }

  friend bool operator==(const FeatureValue& a, const FeatureValue& b);

 private:
  std::string atom_;
  std::shared_ptr<const FeatureStructure> nested_;
};

class FeatureStructure {
 public:
  struct Feature {
    std::string name;
    FeatureValue value;
  };

  FeatureStructure() = default;
  FeatureStructure(
      std::initializer_list<std::pair<std::string, FeatureValue>> features);

  // Inserts or replaces `name`, keeping canonical attribute order.
  void Set(std::string name, FeatureValue value);
  bool Erase(std::string_view name);

  const FeatureValue* Find(std::string_view name) const;
  // Atom value of `name`, or nullptr when absent or nested.
  const std::string* FindAtom(std::string_view name) const;
  // Nested value of `name`, or nullptr.
  const FeatureStructure* FindNested(std::string_view name) const;
  bool Has(std::string_view name) const { return Find(name) != nullptr; }

  const std::vector<Feature>& features() const { return features_; }
  bool empty() const { return features_.empty(); }
  size_t size() const { return features_.size(); }

  // Number of attributes including those of nested structures.
  size_t TotalSize() const;

  // Canonical text form, e.g. [cat:noun,agr:'3SG'].
  std::string ToString() const;

  friend bool operator==(const FeatureStructure& a, const FeatureStructure& b);
  friend bool operator!=(const FeatureStructure& a,
                         const FeatureStructure& b) {
    return !(a == b);
  }

 private:
  std::vector<Feature> features_;
};

// Position of an attribute in the canonical order: cat first, stem and
// suffix last, unknown attributes sorted by name in between.
int AttributeRank(std::string_view name);
bool AttributeLess(std::string_view a, std::string_view b);
bool IsKnownAttribute(std::string_view name);

// Innermost root of a possibly derived parse, or nullptr.
const std::string* InnermostRoot(const FeatureStructure& fs);

// Total order on structures by canonical text.
struct FeatureStructureLess {
  bool operator()(const FeatureStructure& a, const FeatureStructure& b) const {
    return a.ToString() < b.ToString();
  }
};

}  // namespace morphdis

#endif  // MORPHDIS_FEATURE_STRUCTURE_H_
