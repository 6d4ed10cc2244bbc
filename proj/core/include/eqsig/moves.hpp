#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "eqsig/diagram.hpp"
#include "eqsig/goeritz.hpp"

namespace eqsig {

// Matrix-level moves. Pair indices are 1-based, as in move scripts.

/// On-axis crossing change between a_k and a'_k.
struct TypeB {
  std::size_t k = 1;
  int delta = 1;
  friend bool operator==(const TypeB&, const TypeB&) = default;
};

/// Paired off-axis crossing change between a_k (resp. a'_k) and the fixed region.
struct TypeA1 {
  std::size_t k = 1;
  int delta = 1;
  CrossingColor color = CrossingColor::Unicolored;
  std::optional<int> old_epsilon;  // required iff bicolored
  friend bool operator==(const TypeA1&, const TypeA1&) = default;
};

/// Paired off-axis crossing change between a_i and a_j (and a'_i, a'_j).
/// With `mixed`, the crossings join a_i with a'_j (and a'_i with a_j); then
/// i == j is allowed.
struct TypeA2 {
  std::size_t i = 1;
  std::size_t j = 2;
  int delta = 1;
  CrossingColor color = CrossingColor::Unicolored;
  std::optional<int> old_epsilon;
  bool mixed = false;
  friend bool operator==(const TypeA2&, const TypeA2&) = default;
};

/// Contraction of an axis sub-arc creating a new region pair a_{n+1}, a'_{n+1}.
struct TypeC {
  int s = 1;
  CrossingColor color = CrossingColor::Unicolored;
  friend bool operator==(const TypeC&, const TypeC&) = default;
};

using MoveSpec = std::variant<TypeB, TypeA1, TypeA2, TypeC>;

enum class MoveKind { B, A1, A2, C };
MoveKind kind_of(const MoveSpec& m);
std::string to_string(MoveKind k);

/// Change of e(D) for a type A move: 0 when unicolored, 4 * old epsilon when
/// bicolored.
Integer correction_change_type_a(CrossingColor color, std::optional<int> old_epsilon);

/// Throws DomainError when sign/color/epsilon fields are malformed
/// or indices are outside 1..n (n = current pair count).
void check_move(const MoveSpec& m, std::size_t n);

/// Applies a move to the Goeritz blocks. The result carries type C provenance
/// only when `m` is a type C move.
EquivariantGoeritz apply_move_matrix(const EquivariantGoeritz& g, const MoveSpec& m);

/// Full 2(n+1) matrix of the split-link resolution of a type C output: the two
/// new diagonal entries s - S become -S. Throws DomainError without provenance.
SymIntMatrix resolution_matrix(const EquivariantGoeritz& g_c);

// Diagram-level moves.

struct FlipB {
  std::string crossing;
};
struct FlipA {
  std::string crossing;
};
struct ContractC {
  int s = 1;
  CrossingColor color = CrossingColor::Unicolored;
};

using DiagramMove = std::variant<FlipB, FlipA, ContractC>;

/// Throws DomainError when the target is missing, has the wrong locus or has no
/// Goeritz contribution, and InvalidDiagram for invalid/non-admissible input.
SymmetricDiagram apply_move_diagram(const SymmetricDiagram& d, const DiagramMove& m);

/// Matrix-level move whose effect on goeritz(d) equals the diagram move.
MoveSpec move_projection(const SymmetricDiagram& d, const DiagramMove& m);

}  // namespace eqsig
