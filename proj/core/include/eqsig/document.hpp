#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "eqsig/bounds.hpp"
#include "eqsig/diagram.hpp"
#include "eqsig/goeritz.hpp"

namespace eqsig {

enum class DocumentKind { SymmetricDiagram, EquivariantGoeritz, BoundReport };

/// "symmetric-diagram", "equivariant-goeritz", "bound-report".
std::string to_string(DocumentKind kind);

/// Reference values carried by corpus documents. `stated_sigma_tilde` records a
/// published value that disagrees with the one computed from the matrices.
struct Expectation {
  std::optional<long> sigma_plus;
  std::optional<long> sigma_minus;
  std::optional<Integer> e;
  std::optional<long> sigma_tilde;
  std::optional<long> stated_sigma_tilde;
  std::optional<Integer> det_full;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct Document {
  std::variant<SymmetricDiagram, EquivariantGoeritz, BoundReport> payload;
  std::optional<std::string> notes;
  std::optional<Expectation> expected;  // equivariant-goeritz documents only

  DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }

  friend bool operator==(const Document&, const Document&) = default;
};

/// Strict JSON parsing: unknown fields are rejected, integers may be JSON
/// numbers or decimal strings of any length. Throws SyntaxError (line/column)
/// or SchemaError (field path such as "$.A[1][0]").
Document parse_document(std::string_view text);

/// JSON text with stable key order. `indent` < 0 gives a single line.
std::string serialize_document(const Document& doc, int indent = 2);

}  // namespace eqsig
