// Text form of corpora: one bracketed record per sentence.

#ifndef MORPHDIS_CORPUS_IO_H_
#define MORPHDIS_CORPUS_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/term.h"

namespace morphdis {

// Parses a corpus. Unknown attribute names are kept and reported through
// `warnings`; structural problems throw FormatError with line and column.
Corpus ParseCorpusText(std::string_view text,
                       std::vector<std::string>* warnings = nullptr);

std::string SerializeCorpus(const Corpus& corpus);
std::string SerializeSentence(const Sentence& sentence);

// Converts `[a:v, stem:[...], ...]` to a structure.
FeatureStructure FeatureStructureFromTerm(const Term& term,
                                          std::vector<std::string>* warnings);

Corpus ReadCorpusFile(const std::string& path,
                      std::vector<std::string>* warnings = nullptr);
void WriteCorpusFile(const std::string& path, const Corpus& corpus);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace morphdis

#endif  // MORPHDIS_CORPUS_IO_H_
