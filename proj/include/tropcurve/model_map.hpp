#pragma once

#include "tropcurve/curve.hpp"

namespace trop {

// One affine piece of an edge parametrization: as the offset on the `from`
// edge sweeps [x_lo, x_hi], the image sweeps [y_lo, y_hi] on y_edge at unit
// speed (decreasing when reversed). x_hi/y_hi are +∞ exactly for the final
// piece of an infinite edge mapped onto an infinite edge.
struct IsoSeg {
  Rat x_lo;
  ExtRat x_hi;
  EId y_edge = -1;
  Rat y_lo;
  ExtRat y_hi;
  bool reversed = false;

  ExtRat x_len() const { return x_hi - ExtRat(x_lo); }
};

// Half of an isometric correspondence between two models of the same
// curve: maps points of `from` to points of `to`.
struct HalfIso {
  ModelPtr from;
  ModelPtr to;
  std::vector<Point> vertex_image;             // per `from` vertex
  std::vector<std::vector<IsoSeg>> edge_pieces;  // per `from` edge, ordered by x offset

  Point map_point(const Point& p) const;

  // Sub-pieces of `edge_pieces[edge]` covering [lo, hi] in traversal order;
  // when reversed, the interval is swept from hi down to lo.
  std::vector<IsoSeg> slice(EId edge, const Rat& lo, const ExtRat& hi, bool reversed) const;
};

// A two-way isometric correspondence A ⇄ B.
struct ModelIso {
  HalfIso fwd;  // A → B
  HalfIso bwd;  // B → A

  ModelIso inverse() const { return {bwd, fwd}; }
};

ModelIso identity_iso(const ModelPtr& m);
HalfIso compose(const HalfIso& xy, const HalfIso& yz);
ModelIso compose(const ModelIso& ab, const ModelIso& bc);

// Internal consistency checks (piece coverage, isometry of lengths);
// throws Internal on violation. Used by tests and construction sites.
void check_half_iso(const HalfIso& h);

}  // namespace trop
