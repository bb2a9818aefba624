// Copyright (c) 2026 The lspace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lspace/tree.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lspace/errors.hpp"

namespace lspace {

using nlohmann::json;

CompanionKnot CompanionKnot::lspace_knot(int genus) {
  if (genus < 1) fail(ErrorKind::InvalidArgument, "L-space knot genus must be >= 1");
  CompanionKnot k;
  k.kind = CompanionKind::PositiveLSpaceKnot;
  k.genus = genus;
  return k;
}

CompanionKnot CompanionKnot::floer_simple(const SlopeInterval& s3_interval) {
  CompanionKnot k;
  k.kind = CompanionKind::FloerSimple;
  k.interval = s3_interval;
  return k;
}

SlopeInterval CompanionKnot::s3_interval() const {
  switch (kind) {
    case CompanionKind::Unknot: return SlopeInterval::longitude_complement(Slope(0));
    case CompanionKind::PositiveLSpaceKnot:
      return SlopeInterval::arc(Slope(2 * genus - 1), Slope::infinity());
    case CompanionKind::FloerSimple: return interval;
  }
  return interval;
}

std::string CompanionKnot::str() const {
  switch (kind) {
    case CompanionKind::Unknot: return "unknot";
    case CompanionKind::PositiveLSpaceKnot: return "lspace_knot(genus " + std::to_string(genus) + ")";
    case CompanionKind::FloerSimple: return "floer_simple" + interval.str();
  }
  return "?";
}

int SatelliteTree::index_of(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> SatelliteTree::incoming(int v) const {
  std::vector<int> out;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].to == v) out.push_back(static_cast<int>(e));
  }
  return out;
}

int SatelliteTree::outgoing(int v) const {
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].from == v) return static_cast<int>(e);
  }
  return -1;
}

int SatelliteTree::exceptional_child_edge(int v) const {
  for (int e : incoming(v)) {
    if (edges[e].j == -1) return e;
  }
  return -1;
}

std::vector<int> SatelliteTree::J(int v) const {
  std::set<int> s;
  for (int e : incoming(v)) {
    if (edges[e].j >= 1) s.insert(edges[e].j);
  }
  return {s.begin(), s.end()};
}

std::vector<int> SatelliteTree::I(int v) const {
  std::set<int> j;
  for (int x : J(v)) j.insert(x);
  std::vector<int> out;
  for (int i = 1; i <= sv(v).n; ++i) {
    if (!j.count(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> SatelliteTree::subtree(int v) const {
  std::vector<int> out;
  std::set<int> seen;
  // Iterative post-order; `seen` guards against cycles in unvalidated input.
  std::vector<std::pair<int, bool>> stack{{v, false}};
  while (!stack.empty()) {
    auto [u, done] = stack.back();
    stack.pop_back();
    if (done) {
      out.push_back(u);
      continue;
    }
    if (!seen.insert(u).second) continue;
    stack.push_back({u, true});
    auto in = incoming(u);
    for (auto it = in.rbegin(); it != in.rend(); ++it) stack.push_back({edges[*it].from, false});
  }
  return out;
}

bool SatelliteTree::has_exceptional_edges() const {
  for (const auto& e : edges) {
    if (e.j == -1) return true;
  }
  return false;
}

SatelliteTree SatelliteTree::single_vertex(const Int& p, const Int& q, int n,
                                           const CompanionKnot& companion, const std::string& id) {
  SatelliteTree t;
  t.vertices.push_back({id, SeifertVertex::make(p, q, n)});
  t.root = 0;
  t.companion = companion;
  return t;
}

const Slope* SlopeAssignment::get(const std::string& vertex, int slot) const {
  auto it = values_.find(vertex);
  if (it == values_.end()) return nullptr;
  auto jt = it->second.find(slot);
  return jt == it->second.end() ? nullptr : &jt->second;
}

std::string SlopeAssignment::key_for(const SatelliteTree& t, const std::vector<int>& vertices) const {
  std::string key;
  for (int v : vertices) {
    const std::string& id = t.vertex(v).id;
    key += id;
    key += ':';
    auto it = values_.find(id);
    if (it != values_.end()) {
      for (const auto& [slot, s] : it->second) {
        key += std::to_string(slot);
        key += '=';
        key += s.str();
        key += ',';
      }
    }
    key += ';';
  }
  return key;
}

namespace {

Int json_int(const json& j, const char* field) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  fail(ErrorKind::Parse, std::string("field '") + field + "' must be an integer");
}

Slope json_slope(const json& j) {
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  if (j.is_number_integer()) return Slope(Int(std::to_string(j.get<long long>())));
  fail(ErrorKind::Parse, "slope must be a string or an integer");
}

CompanionKnot companion_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) fail(ErrorKind::Parse, "companion needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "unknot") return CompanionKnot::unknot();
  if (kind == "lspace_knot") {
    if (!j.contains("genus")) fail(ErrorKind::Parse, "lspace_knot companion needs 'genus'");
    return CompanionKnot::lspace_knot(j.at("genus").get<int>());
  }
  if (kind == "floer_simple") {
    if (j.contains("longitude")) {
      return CompanionKnot::floer_simple(SlopeInterval::longitude_complement(json_slope(j.at("longitude"))));
    }
    if (!j.contains("lo") || !j.contains("hi")) {
      fail(ErrorKind::Parse, "floer_simple companion needs 'lo' and 'hi' or 'longitude'");
    }
    return CompanionKnot::floer_simple(SlopeInterval::arc(json_slope(j.at("lo")), json_slope(j.at("hi"))));
  }
  fail(ErrorKind::Parse, "unknown companion kind '" + kind + "'");
}

}  // namespace

SatelliteTree tree_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("tree JSON: ") + e.what());
  }
  SatelliteTree t;
  try {
    if (doc.contains("companion")) t.companion = companion_from_json(doc.at("companion"));
    if (!doc.contains("vertices") || !doc.at("vertices").is_array()) {
      fail(ErrorKind::Parse, "tree needs a 'vertices' array");
    }
    for (const auto& jv : doc.at("vertices")) {
      TreeVertex tv;
      tv.id = jv.at("id").get<std::string>();
      Int p = json_int(jv.at("p"), "p"), q = json_int(jv.at("q"), "q");
      int n = jv.contains("n") ? jv.at("n").get<int>() : 1;
      // Raw weights are kept so validate_tree can report them; p*, q* are
      // derived only when they exist.
      tv.sv.p = p;
      tv.sv.q = q;
      tv.sv.n = n;
      if (p > 0 && q != 0 && gcd(p, q) == 1) std::tie(tv.sv.p_star, tv.sv.q_star) = pstar_qstar(p, q);
      if (t.index_of(tv.id) != -1) fail(ErrorKind::Parse, "duplicate vertex id '" + tv.id + "'");
      t.vertices.push_back(tv);
    }
    std::string root = doc.contains("root") ? doc.at("root").get<std::string>()
                                            : (t.vertices.empty() ? "" : t.vertices.front().id);
    t.root = t.index_of(root);
    if (t.root < 0) fail(ErrorKind::Parse, "root '" + root + "' is not a vertex");
    if (doc.contains("edges")) {
      for (const auto& je : doc.at("edges")) {
        TreeEdge e;
        std::string from = je.at("from").get<std::string>();
        e.from = t.index_of(from);
        if (e.from < 0) fail(ErrorKind::Parse, "edge from unknown vertex '" + from + "'");
        if (je.at("to").is_null()) fail(ErrorKind::Parse, "the root edge is implicit; drop edges to null");
        std::string to = je.at("to").get<std::string>();
        e.to = t.index_of(to);
        if (e.to < 0) fail(ErrorKind::Parse, "edge to unknown vertex '" + to + "'");
        e.j = je.at("j").get<int>();
        t.edges.push_back(e);
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("tree JSON: ") + e.what());
  }
  return t;
}

SatelliteTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open tree file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return tree_from_json_text(ss.str());
}

std::string tree_to_json_text(const SatelliteTree& t) {
  json doc;
  json c;
  switch (t.companion.kind) {
    case CompanionKind::Unknot: c["kind"] = "unknot"; break;
    case CompanionKind::PositiveLSpaceKnot:
      c["kind"] = "lspace_knot";
      c["genus"] = t.companion.genus;
      break;
    case CompanionKind::FloerSimple:
      c["kind"] = "floer_simple";
      if (t.companion.interval.kind() == IntervalKind::LongitudeComplement) {
        c["longitude"] = t.companion.interval.lo().str();
      } else {
        c["lo"] = t.companion.interval.lo().str();
        c["hi"] = t.companion.interval.hi().str();
      }
      break;
  }
  doc["companion"] = c;
  json vs = json::array();
  for (const auto& v : t.vertices) {
    vs.push_back({{"id", v.id}, {"p", v.sv.p.get_si()}, {"q", v.sv.q.get_si()}, {"n", v.sv.n}});
  }
  doc["vertices"] = vs;
  doc["root"] = t.vertex(t.root).id;
  json es = json::array();
  for (const auto& e : t.edges) {
    es.push_back({{"from", t.vertex(e.from).id}, {"to", t.vertex(e.to).id}, {"j", e.j}});
  }
  doc["edges"] = es;
  return doc.dump(2);
}

SlopeAssignment assignment_from_json_text(const std::string& text) {
  SlopeAssignment a;
  try {
    json doc = json::parse(text);
    for (const auto& [vid, slots] : doc.items()) {
      for (const auto& [slot, val] : slots.items()) a.set(vid, std::stoi(slot), json_slope(val));
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("slope JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "slope JSON: slot keys must be integers");
  }
  return a;
}

std::vector<Diagnostic> validate_tree(const SatelliteTree& t) {
  std::vector<Diagnostic> out;
  auto vname = [&](int v) { return "vertex " + t.vertex(v).id; };
  auto ename = [&](size_t e) {
    return "edge " + t.vertex(t.edges[e].from).id + "->" + t.vertex(t.edges[e].to).id;
  };
  if (t.vertices.empty()) {
    out.push_back({"tree", "no vertices"});
    return out;
  }
  for (size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& sv = t.vertices[v].sv;
    int vi = static_cast<int>(v);
    if (sv.p <= 0) out.push_back({vname(vi), "p must be positive"});
    if (sv.q == 0) out.push_back({vname(vi), "q must be nonzero"});
    if (sv.n <= 0) out.push_back({vname(vi), "n must be positive"});
    if (sv.p > 0 && sv.q != 0 && gcd(sv.p, sv.q) != 1) out.push_back({vname(vi), "p and q must be coprime"});
  }
  std::vector<int> out_degree(t.vertices.size(), 0);
  for (size_t e = 0; e < t.edges.size(); ++e) {
    const auto& ed = t.edges[e];
    ++out_degree[ed.from];
    if (ed.from == ed.to) out.push_back({ename(e), "self loop"});
    if (ed.from == t.root) out.push_back({ename(e), "root must not have an internal outgoing edge"});
    if (ed.j == -1) {
      if (t.sv(ed.to).p <= 1) out.push_back({ename(e), "exceptional splice needs p > 1 at the target"});
    } else if (ed.j < 1 || ed.j > t.sv(ed.to).n) {
      out.push_back({ename(e), "slot " + std::to_string(ed.j) + " out of range 1.." + std::to_string(t.sv(ed.to).n)});
    }
  }
  for (size_t v = 0; v < t.vertices.size(); ++v) {
    int vi = static_cast<int>(v);
    if (vi != t.root && out_degree[v] != 1) out.push_back({vname(vi), "needs exactly one outgoing edge"});
    std::set<int> used;
    int exceptional = 0;
    for (int e : t.incoming(vi)) {
      int j = t.edges[e].j;
      if (j == -1) {
        ++exceptional;
      } else if (!used.insert(j).second) {
        out.push_back({vname(vi), "slot " + std::to_string(j) + " used by two incoming edges"});
      }
    }
    if (exceptional > 1) out.push_back({vname(vi), "more than one exceptional incoming edge"});
  }
  // Connectivity: every vertex must reach the root.
  std::vector<int> reach = t.subtree(t.root);
  if (reach.size() != t.vertices.size()) {
    std::set<int> r(reach.begin(), reach.end());
    for (size_t v = 0; v < t.vertices.size(); ++v) {
      if (!r.count(static_cast<int>(v))) out.push_back({vname(static_cast<int>(v)), "not connected to the root"});
    }
  }
  return out;
}

std::vector<Diagnostic> validate_assignment(const SatelliteTree& t, const SlopeAssignment& a) {
  std::vector<Diagnostic> out;
  for (size_t v = 0; v < t.vertices.size(); ++v) {
    const std::string& id = t.vertices[v].id;
    for (int i : t.I(static_cast<int>(v))) {
      if (!a.get(id, i)) out.push_back({"vertex " + id, "slot " + std::to_string(i) + " has no slope"});
    }
  }
  for (const auto& [id, slots] : a.values()) {
    int v = t.index_of(id);
    if (v < 0) {
      out.push_back({"vertex " + id, "unknown vertex in assignment"});
      continue;
    }
    auto J = t.J(v);
    for (const auto& [slot, s] : slots) {
      if (slot < 1 || slot > t.sv(v).n) {
        out.push_back({"vertex " + id, "slot " + std::to_string(slot) + " out of range"});
      } else if (std::find(J.begin(), J.end(), slot) != J.end()) {
        out.push_back({"vertex " + id, "slot " + std::to_string(slot) + " is spliced, not free"});
      }
    }
  }
  return out;
}

Int edge_delta(const SatelliteTree& t, int e) {
  const auto& ed = t.edges.at(e);
  const auto& parent = t.sv(ed.to);
  const auto& child = t.sv(ed.from);
  if (ed.j == -1) return parent.p * child.q - child.p * parent.q;
  return child.q - parent.p * child.p * parent.q;
}

AlgebraicityReport algebraicity_check(const SatelliteTree& t) {
  AlgebraicityReport r;
  r.is_algebraic = true;
  for (const auto& v : t.vertices) {
    if (v.sv.q <= 0) r.is_algebraic = false;
  }
  for (size_t e = 0; e < t.edges.size(); ++e) {
    Int d = edge_delta(t, static_cast<int>(e));
    r.deltas[static_cast<int>(e)] = d;
    if (d <= 0) r.is_algebraic = false;
  }
  return r;
}

IntMatrix2 smooth_splice_matrix(const SeifertVertex& c) {
  return IntMatrix2(c.p, -c.q_star, c.q, -c.p_star);
}

IntMatrix2 exceptional_splice_matrix(const SeifertVertex& parent, const SeifertVertex& child) {
  IntMatrix2 outer(parent.p_star, -parent.q_star, -parent.q, parent.p);
  return outer * smooth_splice_matrix(child);
}

IntMatrix2 splice_matrix(const SatelliteTree& t, int e) {
  const auto& ed = t.edges.at(e);
  if (ed.j == -1) return exceptional_splice_matrix(t.sv(ed.to), t.sv(ed.from));
  return smooth_splice_matrix(t.sv(ed.from));
}

IntMatrix2 outgoing_matrix(const SatelliteTree& t, int v) {
  int e = t.outgoing(v);
  if (e < 0) return smooth_splice_matrix(t.sv(v));
  return splice_matrix(t, e);
}

Asymptotes asymptotes(const SatelliteTree& t, int e) {
  IntMatrix2 m = splice_matrix(t, e);
  return {lft_apply(m, Slope::infinity()), lft_apply(m.inverse(), Slope::infinity())};
}

Asymptotes asymptotes_closed_form(const SatelliteTree& t, int e) {
  const auto& ed = t.edges.at(e);
  const auto& parent = t.sv(ed.to);
  const auto& child = t.sv(ed.from);
  if (ed.j != -1) return {Slope(child.p, child.q), Slope(child.p_star, child.q)};
  Int d = edge_delta(t, e);
  if (d == 0) return {Slope::infinity(), Slope::infinity()};
  Rat xi = ratio(-parent.q_star, parent.p) + ratio(child.p, parent.p * d);
  Rat eta = ratio(child.q_star, child.p) + ratio(parent.p, child.p * d);
  return {Slope(xi), Slope(eta)};
}

}  // namespace lspace
