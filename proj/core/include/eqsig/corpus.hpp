#pragma once

#include <string>
#include <vector>

#include "eqsig/document.hpp"

namespace eqsig {

/// Embedded reference document. Matrix-level entries carry their expected
/// values in `document.expected`; diagram-level entries are reconstructions
/// whose Goeritz form must match the matrix entry named in `matches`.
struct CorpusEntry {
  std::string name;
  std::string source;  // reference equation for the expected values
  Document document;
  std::string matches;  // diagram entries only
};

const std::vector<CorpusEntry>& corpus();

/// nullptr when absent.
const CorpusEntry* find_corpus_entry(const std::string& name);

}  // namespace eqsig
