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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lspace/interval.hpp"
#include "lspace/matrix.hpp"
#include "lspace/seifert.hpp"

namespace lspace {

enum class CompanionKind { Unknot, PositiveLSpaceKnot, FloerSimple };

struct CompanionKnot {
  CompanionKind kind = CompanionKind::Unknot;
  int genus = 0;
  SlopeInterval interval;  // S3 basis; FloerSimple only

  static CompanionKnot unknot() { return {}; }
  static CompanionKnot lspace_knot(int genus);
  static CompanionKnot floer_simple(const SlopeInterval& s3_interval);

  // L-space surgery slopes of the companion in the S3 basis.
  SlopeInterval s3_interval() const;
  std::string str() const;
};

struct TreeVertex {
  std::string id;
  SeifertVertex sv;
};

// Splice edge from a child vertex into a parent; j = -1 marks an exceptional
// splice onto the parent's multiplicity-p fiber.
struct TreeEdge {
  int from = -1;
  int to = -1;
  int j = 1;
};

struct Diagnostic {
  std::string where;
  std::string message;
};

class SatelliteTree {
 public:
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;  // internal edges only; the root edge is implicit
  int root = 0;
  CompanionKnot companion;

  int index_of(const std::string& id) const;  // -1 when absent
  const TreeVertex& vertex(int v) const { return vertices.at(v); }
  const SeifertVertex& sv(int v) const { return vertices.at(v).sv; }

  // Incoming edge indices of v, in file order.
  std::vector<int> incoming(int v) const;
  // Edge index leaving v, or -1 for the root.
  int outgoing(int v) const;
  // Exceptional incoming edge of v, or -1.
  int exceptional_child_edge(int v) const;
  std::vector<int> J(int v) const;  // smooth incoming slots, ascending
  std::vector<int> I(int v) const;  // free slots, ascending

  // Post-order vertex list rooted at v.
  std::vector<int> subtree(int v) const;
  bool has_exceptional_edges() const;

  static SatelliteTree single_vertex(const Int& p, const Int& q, int n,
                                     const CompanionKnot& companion, const std::string& id = "v1");
};

// Slopes on the free boundary slots, in each vertex's SF basis.
class SlopeAssignment {
 public:
  void set(const std::string& vertex, int slot, const Slope& s) { values_[vertex][slot] = s; }
  const Slope* get(const std::string& vertex, int slot) const;
  const std::map<std::string, std::map<int, Slope>>& values() const { return values_; }
  // Canonical text of the slopes assigned inside the given vertices.
  std::string key_for(const SatelliteTree& t, const std::vector<int>& vertices) const;

 private:
  std::map<std::string, std::map<int, Slope>> values_;
};

SatelliteTree tree_from_json_text(const std::string& text);
SatelliteTree load_tree(const std::string& path);
std::string tree_to_json_text(const SatelliteTree& t);
SlopeAssignment assignment_from_json_text(const std::string& text);

std::vector<Diagnostic> validate_tree(const SatelliteTree& t);
// Checks that exactly the free slots are assigned.
std::vector<Diagnostic> validate_assignment(const SatelliteTree& t, const SlopeAssignment& a);

struct AlgebraicityReport {
  bool is_algebraic = false;
  std::map<int, Int> deltas;  // edge index -> Delta_e
};

Int edge_delta(const SatelliteTree& t, int e);
AlgebraicityReport algebraicity_check(const SatelliteTree& t);

// Matrix of the splice map on slopes, child SF basis -> parent SF basis.
IntMatrix2 splice_matrix(const SatelliteTree& t, int e);
// Smooth splice map of v's own fiber data: [[p, -q*], [q, -p*]].
IntMatrix2 smooth_splice_matrix(const SeifertVertex& child);
IntMatrix2 exceptional_splice_matrix(const SeifertVertex& parent, const SeifertVertex& child);
// Splice map of the edge leaving v; the root uses its own smooth map.
IntMatrix2 outgoing_matrix(const SatelliteTree& t, int v);

struct Asymptotes {
  Slope xi;   // image of inf
  Slope eta;  // preimage of inf
};

Asymptotes asymptotes(const SatelliteTree& t, int e);
// Closed-form values of the asymptotes, independent of the matrix.
Asymptotes asymptotes_closed_form(const SatelliteTree& t, int e);

}  // namespace lspace
