#pragma once

#include "tropcurve/model_map.hpp"

namespace trop {

struct DerivedModel {
  ModelPtr model;
  ModelIso iso;  // input ⇄ derived
};

struct Refinement : DerivedModel {
  // Per input edge: sorted interior cut offsets and the child edges, in
  // order along the input orientation (children.size() == cuts.size() + 1).
  std::vector<std::vector<Rat>> cuts;
  std::vector<std::vector<EId>> children;
};

// Subdivides m so that every given finite point becomes a vertex. Points
// that already are vertices are ignored. Throws PointNotOnCurve /
// CannotSubdivideAtInfinity.
Refinement refine_at(const ModelPtr& m, const std::vector<Point>& pts);

// The canonical model: vertices are the points of valence ≠ 2, except for
// the circle (a single arbitrary point; we take the lexicographically least
// vertex) and the doubly infinite path (both points at infinity plus the
// finite vertex nearest the midpoint of the finite core). May contain loops.
DerivedModel canonical_model(const ModelPtr& m);

// Canonical model with every loop subdivided at its midpoint.
DerivedModel canonical_loopless_model(const ModelPtr& m);

}  // namespace trop
