#include "tropcurve/model_map.hpp"

#include <algorithm>

namespace trop {

namespace {

ExtRat seg_end_offset(const IsoSeg& s, const ExtRat& x) {
  // Image offset on y_edge of position x within [x_lo, x_hi].
  if (x.is_pos_inf()) return s.y_hi;
  ExtRat delta = x - ExtRat(s.x_lo);
  if (s.reversed) return ExtRat(s.y_lo) - delta;
  return ExtRat(s.y_lo) + delta;
}

}  // namespace

Point HalfIso::map_point(const Point& p) const {
  if (p.is_vertex()) return vertex_image[p.vertex];
  const auto& pieces = edge_pieces[p.edge];
  for (const IsoSeg& s : pieces) {
    if (ExtRat(p.offset) < ExtRat(s.x_lo) || ExtRat(p.offset) > s.x_hi) continue;
    ExtRat y = seg_end_offset(s, ExtRat(p.offset));
    return edge_point(*to, s.y_edge, y);
  }
  throw Error(ErrorCode::Internal, "point not covered by iso pieces");
}

std::vector<IsoSeg> HalfIso::slice(EId edge, const Rat& lo, const ExtRat& hi,
                                   bool reversed) const {
  // Collect intersecting cuts in forward order first; x fields still refer
  // to the source edge parametrization here.
  std::vector<IsoSeg> cuts;
  for (const IsoSeg& s : edge_pieces[edge]) {
    ExtRat a = max(ExtRat(s.x_lo), ExtRat(lo));
    ExtRat b = min(s.x_hi, hi);
    if (a >= b) continue;
    IsoSeg cut;
    cut.x_lo = a.value();
    cut.x_hi = b;
    cut.y_edge = s.y_edge;
    cut.y_lo = seg_end_offset(s, a).value();
    cut.y_hi = seg_end_offset(s, b);
    cut.reversed = s.reversed;
    cuts.push_back(cut);
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const IsoSeg& a, const IsoSeg& b) { return a.x_lo < b.x_lo; });
  if (reversed) {
    if (!hi.is_finite())
      throw Error(ErrorCode::Internal, "cannot traverse an infinite interval in reverse");
    std::reverse(cuts.begin(), cuts.end());
    for (IsoSeg& s : cuts) {
      Rat ylo = s.y_lo;
      s.y_lo = s.y_hi.value();
      s.y_hi = ExtRat(ylo);
      s.reversed = !s.reversed;
    }
  }
  // Rebase x offsets so the traversal starts at 0.
  Rat pos = 0;
  for (IsoSeg& s : cuts) {
    ExtRat len = s.x_hi - ExtRat(s.x_lo);
    s.x_lo = pos;
    s.x_hi = ExtRat(pos) + len;
    if (len.is_finite()) pos = pos + len.value();
  }
  return cuts;
}

ModelIso identity_iso(const ModelPtr& m) {
  HalfIso h;
  h.from = m;
  h.to = m;
  for (VId v = 0; v < m->vertex_count(); ++v) h.vertex_image.push_back(vertex_point(v));
  h.edge_pieces.resize(m->edge_count());
  for (EId e = 0; e < m->edge_count(); ++e) {
    IsoSeg s;
    s.x_lo = 0;
    s.x_hi = m->edge(e).length;
    s.y_edge = e;
    s.y_lo = 0;
    s.y_hi = m->edge(e).length;
    h.edge_pieces[e] = {s};
  }
  return {h, h};
}

HalfIso compose(const HalfIso& xy, const HalfIso& yz) {
  if (xy.to.get() != yz.from.get() && !xy.to->same_structure(*yz.from))
    throw Error(ErrorCode::Internal, "compose: mismatched middle model");
  HalfIso out;
  out.from = xy.from;
  out.to = yz.to;
  out.vertex_image.reserve(xy.vertex_image.size());
  for (const Point& p : xy.vertex_image) out.vertex_image.push_back(yz.map_point(p));
  out.edge_pieces.resize(xy.edge_pieces.size());
  for (EId e = 0; e < static_cast<EId>(xy.edge_pieces.size()); ++e) {
    std::vector<IsoSeg> pieces;
    for (const IsoSeg& s : xy.edge_pieces[e]) {
      Rat y_lo;
      ExtRat y_hi;
      if (s.reversed) {
        if (!s.y_hi.is_finite()) throw Error(ErrorCode::Internal, "reversed infinite piece");
        y_lo = s.y_hi.value();
        y_hi = ExtRat(s.y_lo);
      } else {
        y_lo = s.y_lo;
        y_hi = s.y_hi;
      }
      auto sub = yz.slice(s.y_edge, y_lo, y_hi, s.reversed);
      for (IsoSeg& t : sub) {
        // Shift the 0-based slice offsets to this piece's position.
        IsoSeg piece = t;
        piece.x_lo = s.x_lo + t.x_lo;
        piece.x_hi = t.x_hi + ExtRat(s.x_lo);
        pieces.push_back(piece);
      }
    }
    out.edge_pieces[e] = std::move(pieces);
  }
  return out;
}

ModelIso compose(const ModelIso& ab, const ModelIso& bc) {
  return {compose(ab.fwd, bc.fwd), compose(bc.bwd, ab.bwd)};
}

void check_half_iso(const HalfIso& h) {
  if (static_cast<int>(h.vertex_image.size()) != h.from->vertex_count())
    throw Error(ErrorCode::Internal, "iso: vertex image size mismatch");
  if (static_cast<int>(h.edge_pieces.size()) != h.from->edge_count())
    throw Error(ErrorCode::Internal, "iso: edge pieces size mismatch");
  for (EId e = 0; e < h.from->edge_count(); ++e) {
    const auto& pieces = h.edge_pieces[e];
    if (pieces.empty()) throw Error(ErrorCode::Internal, "iso: empty edge path");
    if (!(pieces.front().x_lo == Rat(0)))
      throw Error(ErrorCode::Internal, "iso: path does not start at 0");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const IsoSeg& s = pieces[i];
      ExtRat xlen = s.x_hi - ExtRat(s.x_lo);
      ExtRat ylen = s.reversed ? (ExtRat(s.y_lo) - s.y_hi) : (s.y_hi - ExtRat(s.y_lo));
      if (!(xlen == ylen) || xlen <= ExtRat(0))
        throw Error(ErrorCode::Internal, "iso: piece is not an isometry");
      if (i + 1 < pieces.size() && !(ExtRat(pieces[i + 1].x_lo) == s.x_hi))
        throw Error(ErrorCode::Internal, "iso: pieces not contiguous");
    }
    if (!(pieces.back().x_hi == h.from->edge(e).length))
      throw Error(ErrorCode::Internal, "iso: path does not cover the edge");
  }
}

}  // namespace trop
