#pragma once

#include "segal/forest.hpp"
#include "segal/simplicial.hpp"

namespace segal {

/// X^T as a levelwise simplicial set plus one concrete layering per
/// isomorphism class (face and degeneracy maps are computed on the retained
/// representatives and re-canonicalized).
struct TreeSegalSet {
  RootedForest tree;
  Flavour flavour = Flavour::plain;
  LevelwiseSimplicialSet x;
  std::vector<std::vector<Layering>> reps;  // aligned with x.levels
};

int default_truncation(const RootedForest& t);

/// Level n holds the layerings of n-1 cuts of admissible subforests (their
/// isomorphism classes in the unlabelled flavours); d_0 removes the first
/// cut and restricts the subforest, d_n removes the last cut, inner d_i
/// merge layers, s_i repeats a cut.
TreeSegalSet build_xt(const RootedForest& t, Flavour flavour, int truncation);

Layering layering_face(const Layering& lay, int i);
Layering layering_degeneracy(const Layering& lay, int i);

struct TreeCensus {
  std::vector<long> total;              // per level
  std::vector<long> nondeg;             // not hit by any degeneracy
  std::vector<long> strict_chain;       // all inclusions strict
  std::vector<long> strict_connected;   // strict with connected host
  std::vector<long> strict_full_host;   // strict with host the whole tree
  std::vector<long> nondeg_connected;   // nondegenerate with connected host
  long level1_nonempty = 0;
};
TreeCensus census(const TreeSegalSet& s);

}  // namespace segal
