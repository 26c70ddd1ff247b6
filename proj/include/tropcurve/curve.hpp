#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropcurve/scalar.hpp"

namespace trop {

using VId = int;
using EId = int;

// One edge of a model. Edges are stored with a fixed orientation (tail →
// head); offsets are measured from the tail. Infinite edges are normalized
// at construction so that the head is the end identified with ∞.
struct Edge {
  std::string name;
  VId tail = -1;
  VId head = -1;
  ExtRat length;                  // finite positive, or +∞
  bool infinite_end_valid = false;  // length == ∞ and a proper end was designated
  std::string raw_infinite_end;   // as given, for validation messages

  bool is_infinite() const { return length.is_pos_inf(); }
  bool is_loop() const { return tail == head; }
};

struct IncidentSlot {
  EId edge;
  bool at_tail;  // this slot sits at the tail end of the edge
};

// A model (G, l): finite connected multigraph with positive rational edge
// lengths, ∞ allowed on leaf edges only. The underlying tropical curve is
// the metric realization; points at infinity are the designated leaf ends
// of infinite edges.
class Model {
 public:
  VId add_vertex(const std::string& name);
  EId add_edge(const std::string& name, const std::string& tail, const std::string& head,
               const ExtRat& length, const std::optional<std::string>& infinite_end = {});

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(VId v) const { return vertex_names_[v]; }
  const Edge& edge(EId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<IncidentSlot>& incident(VId v) const { return incident_[v]; }

  std::optional<VId> find_vertex(const std::string& name) const;
  std::optional<EId> find_edge(const std::string& name) const;

  // Number of incident edge ends (a loop counts twice).
  int vertex_degree(VId v) const { return static_cast<int>(incident_[v].size()); }
  // True iff v is the designated ∞ end of an infinite edge.
  bool is_infinity_vertex(VId v) const;

  bool same_structure(const Model& other) const;

  // Fresh names for synthesized vertices/edges during subdivision.
  std::string fresh_vertex_name(const std::string& base) const;
  std::string fresh_edge_name(const std::string& base) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidentSlot>> incident_;
  std::map<std::string, VId> vertex_index_;
  std::map<std::string, EId> edge_index_;
};

using ModelPtr = std::shared_ptr<const Model>;

// A point of the curve, in normal form: either a vertex of the model or a
// point strictly inside an edge (0 < offset < length). The point at
// infinity of an infinite edge is its head vertex.
struct Point {
  VId vertex = -1;
  EId edge = -1;
  Rat offset;

  bool is_vertex() const { return vertex >= 0; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.is_vertex() != b.is_vertex()) return false;
    if (a.is_vertex()) return a.vertex == b.vertex;
    return a.edge == b.edge && a.offset == b.offset;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
    if (a.is_vertex()) return a.vertex < b.vertex;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.offset < b.offset;
  }
};

Point vertex_point(VId v);
// Normalizes offsets 0 / length(e) / ∞ to vertex points. Throws
// PointNotOnCurve for offsets outside [0, length].
Point edge_point(const Model& m, EId e, const ExtRat& offset);

bool point_on_model(const Model& m, const Point& p);
bool is_point_at_infinity(const Model& m, const Point& p);
std::string point_to_string(const Model& m, const Point& p);

// Offset of p along edge e, if p lies on e (interior, or one of its ends).
std::optional<ExtRat> offset_on_edge(const Model& m, const Point& p, EId e);

// Lists every violated model invariant; empty report iff m is a valid
// tropical-curve model.
ValidationReport validate_model(const Model& m);
void require_valid_model(const Model& m);  // throws InvalidModel

// Number of connected components of a small punctured neighborhood of x;
// 1 for points at infinity. Throws PointNotOnCurve.
int valence(const Model& m, const Point& x);

// Exact shortest-path distance in the metric realization. ∞ iff exactly
// one of x, y is at infinity or they are distinct points at infinity.
ExtRat distance(const Model& m, const Point& x, const Point& y);

// ---------------------------------------------------------------------------
// Internal helper shared by distance, chip firing and trilateration: the
// model graph with extra interior points materialized as nodes, with exact
// rational weights. Infinite edge tails are kept; the segment reaching a
// point at infinity is not relaxed (its weight is infinite).

struct AuxNode {
  Point point;
};

class AuxGraph {
 public:
  AuxGraph(const Model& m, const std::vector<Point>& extras);

  int node_of(const Point& p) const;  // -1 if absent
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Point& node_point(int id) const { return nodes_[id].point; }

  // Nodes on edge e sorted by offset, including its end vertices.
  // Pairs (node id, offset); the final entry of an infinite edge is the
  // infinity vertex with offset +∞.
  struct EdgeStop {
    int node;
    ExtRat offset;
  };
  const std::vector<EdgeStop>& stops(EId e) const { return stops_[e]; }

  // Multi-source exact Dijkstra; sources get distance 0. Unreachable nodes
  // (points at infinity) get +∞.
  std::vector<ExtRat> distances(const std::vector<int>& sources) const;

 private:
  const Model& model_;
  std::vector<AuxNode> nodes_;
  std::map<std::pair<EId, Rat>, int> interior_index_;
  std::vector<std::vector<std::pair<int, Rat>>> adj_;  // finite-weight arcs only
  std::vector<std::vector<EdgeStop>> stops_;
};

}  // namespace trop
