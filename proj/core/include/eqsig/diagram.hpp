#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqsig/goeritz.hpp"
#include "eqsig/integer.hpp"
#include "eqsig/matrix.hpp"

namespace eqsig {

enum class RegionSide { Plus, Minus, Fixed };

/// A white region of a symmetric checkerboard diagram: a_i, a'_i (1-based i)
/// or the single rho-invariant region containing h'.
struct RegionRef {
  RegionSide side = RegionSide::Fixed;
  std::size_t index = 0;  // 1..n for paired regions, 0 for Fixed

  static RegionRef plus(std::size_t i) { return {RegionSide::Plus, i}; }
  static RegionRef minus(std::size_t i) { return {RegionSide::Minus, i}; }
  static RegionRef fixed() { return {RegionSide::Fixed, 0}; }

  bool is_fixed() const { return side == RegionSide::Fixed; }
  /// Image under the involution: a_i <-> a'_i, Fixed -> Fixed.
  RegionRef rho() const;

  friend auto operator<=>(const RegionRef&, const RegionRef&) = default;
};

/// "a3", "a3'" or "fixed".
std::string to_token(const RegionRef& r);
std::optional<RegionRef> region_from_token(const std::string& token);

enum class CrossingColor { Unicolored, Bicolored };
enum class Locus { OffAxis, OnAxisH, OnAxisHPrime };

std::string to_token(CrossingColor c);
std::string to_token(Locus l);
std::optional<CrossingColor> color_from_token(const std::string& token);
std::optional<Locus> locus_from_token(const std::string& token);

struct Crossing {
  std::string id;
  std::array<RegionRef, 2> regions;  // unordered; may coincide
  int eta = 1;
  CrossingColor color = CrossingColor::Unicolored;
  std::optional<int> epsilon;  // present iff bicolored
  Locus locus = Locus::OffAxis;
  std::string partner;  // id of the rho-image; equals id for on-axis crossings

  bool on_axis() const { return locus != Locus::OffAxis; }
  /// True when both white corners lie in the same region.
  bool degenerate() const { return regions[0] == regions[1]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Incidence model of an involution-symmetric checkerboard diagram.
struct SymmetricDiagram {
  std::size_t n = 0;
  std::vector<Crossing> crossings;
  std::string label;

  const Crossing* find(const std::string& id) const;

  friend bool operator==(const SymmetricDiagram&, const SymmetricDiagram&) = default;
};

struct Violation {
  std::string crossing;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const SymmetricDiagram& d);

/// No crossing lies on h'. Throws InvalidDiagram if `d` fails validation.
bool is_admissible(const SymmetricDiagram& d);

/// e(D) = -sum of epsilon over bicolored off-axis crossings.
/// Throws InvalidDiagram for invalid or non-admissible diagrams.
Integer correction_term(const SymmetricDiagram& d);

/// Unreduced Goeritz matrix G' over regions a_1..a_n, a'_1..a'_n, fixed
/// (fixed last). Off-diagonal entries are -sum(eta) over shared crossings;
/// each diagonal entry makes its row sum to zero.
SymIntMatrix unreduced_goeritz(const SymmetricDiagram& d);

/// Reduced equivariant Goeritz form (fixed region deleted) with e = e(D).
/// Throws InvalidDiagram for invalid/non-admissible input or n == 0.
EquivariantGoeritz goeritz(const SymmetricDiagram& d);

}  // namespace eqsig
