#include "tropcurve/curve.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace trop {

VId Model::add_vertex(const std::string& name) {
  auto it = vertex_index_.find(name);
  if (it != vertex_index_.end())
    throw Error(ErrorCode::ParseError, "duplicate vertex '" + name + "'");
  VId id = static_cast<VId>(vertex_names_.size());
  vertex_names_.push_back(name);
  incident_.emplace_back();
  vertex_index_[name] = id;
  return id;
}

EId Model::add_edge(const std::string& name, const std::string& tail, const std::string& head,
                    const ExtRat& length, const std::optional<std::string>& infinite_end) {
  if (edge_index_.count(name))
    throw Error(ErrorCode::ParseError, "duplicate edge '" + name + "'");
  auto t = find_vertex(tail);
  auto h = find_vertex(head);
  if (!t || !h)
    throw Error(ErrorCode::ParseError, "edge '" + name + "' references unknown vertex");
  Edge e;
  e.name = name;
  e.tail = *t;
  e.head = *h;
  e.length = length;
  if (infinite_end) e.raw_infinite_end = *infinite_end;
  if (length.is_pos_inf() && infinite_end) {
    if (*infinite_end == head && tail != head) {
      e.infinite_end_valid = true;
    } else if (*infinite_end == tail && tail != head) {
      std::swap(e.tail, e.head);
      e.infinite_end_valid = true;
    }
  }
  EId id = static_cast<EId>(edges_.size());
  edges_.push_back(e);
  incident_[e.tail].push_back({id, true});
  incident_[e.head].push_back({id, false});
  edge_index_[name] = id;
  return id;
}

std::optional<VId> Model::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EId> Model::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Model::is_infinity_vertex(VId v) const {
  for (const auto& slot : incident_[v]) {
    const Edge& e = edges_[slot.edge];
    if (e.is_infinite() && e.infinite_end_valid && !slot.at_tail) return true;
  }
  return false;
}

bool Model::same_structure(const Model& other) const {
  if (vertex_names_ != other.vertex_names_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.name != b.name || a.tail != b.tail || a.head != b.head || !(a.length == b.length))
      return false;
  }
  return true;
}

std::string Model::fresh_vertex_name(const std::string& base) const {
  std::string name = base;
  while (vertex_index_.count(name)) name += "'";
  return name;
}

std::string Model::fresh_edge_name(const std::string& base) const {
  std::string name = base;
  while (edge_index_.count(name)) name += "'";
  return name;
}

Point vertex_point(VId v) {
  Point p;
  p.vertex = v;
  return p;
}

Point edge_point(const Model& m, EId e, const ExtRat& offset) {
  if (e < 0 || e >= m.edge_count()) throw Error(ErrorCode::PointNotOnCurve, "bad edge id");
  const Edge& ed = m.edge(e);
  if (offset < ExtRat(0) || offset > ed.length)
    throw Error(ErrorCode::PointNotOnCurve,
                "offset " + offset.str() + " outside [0, " + ed.length.str() + "] on edge '" +
                    ed.name + "'");
  if (offset == ExtRat(0)) return vertex_point(ed.tail);
  if (offset == ed.length) return vertex_point(ed.head);  // handles ∞ end too
  Point p;
  p.edge = e;
  p.offset = offset.value();
  return p;
}

bool point_on_model(const Model& m, const Point& p) {
  if (p.is_vertex()) return p.vertex < m.vertex_count();
  if (p.edge < 0 || p.edge >= m.edge_count()) return false;
  return Rat(0) < p.offset && ExtRat(p.offset) < m.edge(p.edge).length;
}

bool is_point_at_infinity(const Model& m, const Point& p) {
  return p.is_vertex() && m.is_infinity_vertex(p.vertex);
}

std::string point_to_string(const Model& m, const Point& p) {
  if (p.is_vertex()) return m.vertex_name(p.vertex);
  return m.edge(p.edge).name + "@" + rat_to_string(p.offset);
}

std::optional<ExtRat> offset_on_edge(const Model& m, const Point& p, EId e) {
  const Edge& ed = m.edge(e);
  if (!p.is_vertex()) {
    if (p.edge == e) return ExtRat(p.offset);
    return std::nullopt;
  }
  if (p.vertex == ed.tail) return ExtRat(0);
  if (p.vertex == ed.head) return ed.length;
  return std::nullopt;
}

ValidationReport validate_model(const Model& m) {
  ValidationReport report;
  if (m.vertex_count() == 0) {
    report.add("empty", "model has no vertices");
    return report;
  }
  if (m.edge_count() == 0) {
    report.add("no_edges", "model has no edges; the smallest curve is a single edge");
    return report;
  }
  // Connectivity.
  std::vector<int> comp(m.vertex_count(), -1);
  std::vector<VId> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    VId v = stack.back();
    stack.pop_back();
    for (const auto& slot : m.incident(v)) {
      const Edge& e = m.edge(slot.edge);
      VId w = slot.at_tail ? e.head : e.tail;
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  for (VId v = 0; v < m.vertex_count(); ++v)
    if (comp[v] < 0) {
      report.add("disconnected", "vertex '" + m.vertex_name(v) + "' unreachable");
      break;
    }
  for (EId i = 0; i < m.edge_count(); ++i) {
    const Edge& e = m.edge(i);
    if (e.length.is_neg_inf() || (e.length.is_finite() && e.length.value() <= 0)) {
      report.add("nonpositive_length", "edge '" + e.name + "' has nonpositive length");
      continue;
    }
    if (e.is_infinite()) {
      if (!e.infinite_end_valid) {
        report.add("dangling_infinite_end",
                   "infinite edge '" + e.name + "' lacks a valid infinite_end ('" +
                       e.raw_infinite_end + "')");
        continue;
      }
      if (m.vertex_degree(e.head) != 1)
        report.add("infinity_on_non_leaf",
                   "infinite edge '" + e.name + "' has its infinite end at '" +
                       m.vertex_name(e.head) + "', which is not a leaf end");
    } else if (!e.raw_infinite_end.empty()) {
      report.add("finite_edge_with_infinite_end",
                 "finite edge '" + e.name + "' declares an infinite_end");
    }
  }
  return report;
}

void require_valid_model(const Model& m) {
  ValidationReport r = validate_model(m);
  if (!r.ok()) throw Error(ErrorCode::InvalidModel, r.items.front().message);
}

int valence(const Model& m, const Point& x) {
  if (!point_on_model(m, x)) throw Error(ErrorCode::PointNotOnCurve, "point not on model");
  if (!x.is_vertex()) return 2;
  if (m.is_infinity_vertex(x.vertex)) return 1;
  return m.vertex_degree(x.vertex);
}

// --------------------------------------------------------------------------
// AuxGraph

AuxGraph::AuxGraph(const Model& m, const std::vector<Point>& extras) : model_(m) {
  nodes_.reserve(m.vertex_count() + extras.size());
  for (VId v = 0; v < m.vertex_count(); ++v) nodes_.push_back({vertex_point(v)});
  for (const Point& p : extras) {
    if (p.is_vertex()) continue;
    auto key = std::make_pair(p.edge, p.offset);
    if (!interior_index_.count(key)) {
      interior_index_[key] = static_cast<int>(nodes_.size());
      nodes_.push_back({p});
    }
  }
  adj_.assign(nodes_.size(), {});
  stops_.assign(m.edge_count(), {});
  for (EId e = 0; e < m.edge_count(); ++e) {
    const Edge& ed = m.edge(e);
    std::vector<EdgeStop> stops;
    stops.push_back({ed.tail, ExtRat(0)});
    std::vector<std::pair<Rat, int>> inner;
    for (const auto& [key, node] : interior_index_)
      if (key.first == e) inner.push_back({key.second, node});
    std::sort(inner.begin(), inner.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [off, node] : inner) stops.push_back({node, ExtRat(off)});
    stops.push_back({ed.head, ed.length});
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
      ExtRat w = stops[i + 1].offset - stops[i].offset;
      if (!w.is_finite()) continue;  // segment reaching a point at infinity
      adj_[stops[i].node].push_back({stops[i + 1].node, w.value()});
      adj_[stops[i + 1].node].push_back({stops[i].node, w.value()});
    }
    stops_[e] = std::move(stops);
  }
}

int AuxGraph::node_of(const Point& p) const {
  if (p.is_vertex()) return p.vertex;
  auto it = interior_index_.find({p.edge, p.offset});
  if (it == interior_index_.end()) return -1;
  return it->second;
}

std::vector<ExtRat> AuxGraph::distances(const std::vector<int>& sources) const {
  std::vector<ExtRat> dist(nodes_.size(), ExtRat::pos_inf());
  using Item = std::pair<Rat, int>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  for (int s : sources) {
    dist[s] = ExtRat(0);
    queue.push({Rat(0), s});
  }
  std::vector<char> done(nodes_.size(), 0);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& [v, w] : adj_[u]) {
      Rat nd = d + w;
      if (dist[v].is_pos_inf() || nd < dist[v].value()) {
        dist[v] = ExtRat(nd);
        queue.push({nd, v});
      }
    }
  }
  return dist;
}

ExtRat distance(const Model& m, const Point& x, const Point& y) {
  if (!point_on_model(m, x) || !point_on_model(m, y))
    throw Error(ErrorCode::PointNotOnCurve, "distance: point not on model");
  if (x == y) return ExtRat(0);
  if (is_point_at_infinity(m, x) || is_point_at_infinity(m, y)) return ExtRat::pos_inf();
  AuxGraph aux(m, {x, y});
  auto dist = aux.distances({aux.node_of(x)});
  return dist[aux.node_of(y)];
}

}  // namespace trop
