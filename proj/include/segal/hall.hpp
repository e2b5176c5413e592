#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segal/graph_segal.hpp"
#include "segal/simplicial.hpp"

namespace segal {

/// Integer structure constants of the Hall algebra of a reduced, level-finite
/// 2-Segal set: c(b, b', b'') counts the level-2 elements with d0 = b,
/// d2 = b', d1 = b''. The unit is the degenerate element s0 of the point.
struct HallTable {
  std::vector<std::string> basis;  // level-1 codes
  int unit = -1;
  std::map<std::pair<int, int>, std::map<int, long>> products;  // (b,b') -> b'' -> c

  long constant(int b, int bp, int bpp) const;
  std::map<int, long> multiply(int b, int bp) const;  // sparse product of basis vectors
};

HallTable build_hall(const LevelwiseSimplicialSet& x);

struct CommutativityReport {
  bool commutative = true;
  std::optional<std::pair<int, int>> witness;  // lexicographically least by code
};
CommutativityReport is_commutative(const HallTable& h);

struct AlgebraLawReport {
  bool associative = true;
  bool unital = true;
  std::string detail;
};
AlgebraLawReport check_algebra_laws(const HallTable& h);

bool coefficients_within(const HallTable& h, long max_coeff);

struct GraphHallReport {
  bool unit_ok = true;            // 1_{empty} is a two-sided unit
  bool disjointness_ok = true;    // overlapping supports multiply to zero
  bool vertex_rule_ok = true;     // 1_a * 1_b has 2^n summands, n parallel edges
  bool general_rule_ok = true;    // products are sums over fillings by cross edges
  bool commutative = true;
  std::string detail;
  bool ok() const {
    return unit_ok && disjointness_ok && vertex_rule_ok && general_rule_ok && commutative;
  }
};
/// Verifies the characterization of the Hall algebra of a labelled graph
/// against the computed table.
GraphHallReport graph_hall_rules(const Graph& g);

struct InducedHomReport {
  bool precondition = true;   // CULF (pullback) or relatively Segal (pushforward)
  bool multiplicative = true;
  bool unital = true;
  std::string detail;
  bool homomorphism() const { return multiplicative && unital; }
};

/// F^*(1_y) = sum of 1_x over F_1(x) = y; a Hall algebra homomorphism
/// H(Y) -> H(X) whenever F is CULF.
InducedHomReport pullback_hom_check(const SimplicialMap& f, const HallTable& hx,
                                    const HallTable& hy, bool culf_holds);
/// F_*(1_x) = 1_{F_1(x)}; a homomorphism H(X) -> H(Y) whenever F is
/// relatively Segal.
InducedHomReport pushforward_hom_check(const SimplicialMap& f, const HallTable& hx,
                                       const HallTable& hy, bool rel_segal_holds);

}  // namespace segal
