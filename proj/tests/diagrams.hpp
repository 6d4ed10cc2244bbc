#pragma once

#include <string>
#include <vector>

#include "eqsig/diagram.hpp"
#include "eqsig/moves.hpp"

namespace eqsig::testkit {

/// Small builder for symmetric incidence data.
class DiagramBuilder {
 public:
  DiagramBuilder(std::string label, std::size_t n);

  /// Off-axis rho-pair `id` / `id'` between the regions named by tokens.
  DiagramBuilder& pair(const std::string& id, const std::string& r0, const std::string& r1, int eta,
                       std::optional<int> eps = std::nullopt);
  /// On-axis crossing on h between a_k and a'_k.
  DiagramBuilder& axis(const std::string& id, std::size_t k, int eta);

  SymmetricDiagram build() const { return d_; }

 private:
  SymmetricDiagram d_;
};

/// Hand-built admissible diagrams, including reconstructions of 6_1, 5_1 and 9_40.
std::vector<SymmetricDiagram> hand_built_diagrams();

/// Every diagram move applicable to `d`: FlipB on non-degenerate h crossings,
/// FlipA on non-degenerate off-axis crossings, and the four ContractC variants.
std::vector<DiagramMove> applicable_moves(const SymmetricDiagram& d);

std::string describe(const DiagramMove& m);

}  // namespace eqsig::testkit
