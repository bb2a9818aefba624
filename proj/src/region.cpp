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

#include "lspace/region.hpp"

#include <algorithm>
#include <sstream>

#include "lspace/errors.hpp"
#include "lspace/seifert.hpp"

namespace lspace {

Slope psi(const Slope& y, const Int& pq) {
  if (y.is_infinite()) return Slope(pq);
  if (y.num() == 0) return Slope::infinity();
  return Slope(Rat(Rat(pq) + 1 / y.value()));
}

Slope psi_inv(const Slope& alpha, const Int& pq) {
  if (alpha.is_infinite()) return Slope(0);
  Rat d = alpha.value() - Rat(pq);
  if (d == 0) return Slope::infinity();
  return Slope(Rat(1 / d));
}

void TorusSatelliteSpec::validate() const {
  if (genus < 0) fail(ErrorKind::InvalidArgument, "genus must be >= 0");
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be >= 1");
  if (p <= 0) fail(ErrorKind::InvalidArgument, "p must be positive");
  if (q == 0) fail(ErrorKind::InvalidArgument, "q must be nonzero");
  if (gcd(p, q) != 1) fail(ErrorKind::InvalidArgument, "p and q must be coprime");
}

SatelliteTree TorusSatelliteSpec::tree() const {
  validate();
  CompanionKnot k = genus == 0 ? CompanionKnot::unknot() : CompanionKnot::lspace_knot(genus);
  return SatelliteTree::single_vertex(p, q, n, k);
}

Int n_pq(const TorusSatelliteSpec& spec) {
  return spec.pq() - spec.p - spec.q + Int(2 * spec.genus) * spec.p;
}

TorusCase torus_case(const TorusSatelliteSpec& spec) {
  spec.validate();
  if (spec.genus >= 1) {
    if (spec.N() * spec.p > spec.q) return spec.p > 1 ? TorusCase::LatticeOnly : TorusCase::LatticePlusArc;
    return TorusCase::Generic;
  }
  if (spec.p == 1) return spec.q > 0 ? TorusCase::UnknotCable : TorusCase::MirrorUnknotCable;
  if (spec.q > 1) return TorusCase::Generic;
  if (spec.q < -1) return TorusCase::MirrorGeneric;
  return TorusCase::OracleOnly;
}

const char* torus_case_name(TorusCase c) {
  switch (c) {
    case TorusCase::LatticeOnly: return "lattice";
    case TorusCase::LatticePlusArc: return "lattice+arc";
    case TorusCase::Generic: return "generic";
    case TorusCase::UnknotCable: return "unknot-cable";
    case TorusCase::MirrorGeneric: return "mirror-generic";
    case TorusCase::MirrorUnknotCable: return "mirror-unknot-cable";
    case TorusCase::OracleOnly: return "oracle";
  }
  return "?";
}

namespace {

int count_infinite(const std::vector<Slope>& y) {
  return static_cast<int>(std::count_if(y.begin(), y.end(), [](const Slope& s) { return s.is_infinite(); }));
}

Int sum_floor(const std::vector<Slope>& y) {
  Int s = 0;
  for (const auto& x : y) s += floor_of(x.value());
  return s;
}

Int sum_ceil(const std::vector<Slope>& y) {
  Int s = 0;
  for (const auto& x : y) s += ceil_of(x.value());
  return s;
}

// sum floor([x_i] r) with x_i = sign * y_i.
Int sum_frac_floor(const std::vector<Slope>& y, int sign, const Int& r) {
  Int s = 0;
  for (const auto& x : y) s += floor_of(frac(sign * x.value()) * Rat(r));
  return s;
}

std::vector<Slope> negated(const std::vector<Slope>& y) {
  std::vector<Slope> out;
  for (const auto& x : y) out.push_back(x.is_infinite() ? x : Slope(Rat(-x.value())));
  return out;
}

TorusSatelliteSpec mirrored(const TorusSatelliteSpec& s) {
  TorusSatelliteSpec m = s;
  m.q = -s.q;
  return m;
}

bool generic_lspace(const TorusSatelliteSpec& spec, const std::vector<Slope>& y) {
  int n_inf = count_infinite(y);
  if (n_inf >= 2) return false;
  if (n_inf == 1) return true;
  Rat y_minus = Rat(-sum_floor(y));
  Int c = spec.c1();
  if (c == 0) return !(0 < y_minus);
  Rat y_plus = Rat(-sum_ceil(y));
  if (sum_frac_floor(y, -1, c) == 0) y_plus -= ratio(1, c);
  return !(y_plus < 0 && 0 < y_minus);
}

bool unknot_cable_lspace(const TorusSatelliteSpec& spec, const std::vector<Slope>& y) {
  int n_inf = count_infinite(y);
  if (n_inf >= 2) return false;
  if (n_inf == 1) return true;
  FiberExteriorInput in;
  in.seifert_slopes.push_back(Slope(Int(1), spec.q));
  for (const auto& x : y) in.seifert_slopes.push_back(x);
  return contains(fiber_exterior_interval(in).interval, Slope(0));
}

SlopeAssignment single_vertex_assignment(const std::vector<Slope>& y) {
  SlopeAssignment a;
  for (size_t i = 0; i < y.size(); ++i) a.set("v1", static_cast<int>(i) + 1, y[i]);
  return a;
}

}  // namespace

bool torus_lspace_sf(const TorusSatelliteSpec& spec, const std::vector<Slope>& y) {
  if (static_cast<int>(y.size()) != spec.n) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(spec.n) + " slopes, got " + std::to_string(y.size()));
  }
  switch (torus_case(spec)) {
    case TorusCase::LatticeOnly: {
      for (const auto& x : y) {
        if (!x.is_integer()) return false;
      }
      return sum_floor(y) == 0;
    }
    case TorusCase::LatticePlusArc: {
      if (count_infinite(y) > 0) return false;
      int non_integer = 0;
      Rat total = 0;
      for (const auto& x : y) {
        non_integer += x.is_integer() ? 0 : 1;
        total += x.value();
      }
      return non_integer <= 1 && total >= 0 && total <= ratio(1, spec.N() - spec.q);
    }
    case TorusCase::Generic: return generic_lspace(spec, y);
    case TorusCase::UnknotCable: return unknot_cable_lspace(spec, y);
    case TorusCase::MirrorGeneric: return generic_lspace(mirrored(spec), negated(y));
    case TorusCase::MirrorUnknotCable: return unknot_cable_lspace(mirrored(spec), negated(y));
    case TorusCase::OracleOnly: return is_lspace_filling(spec.tree(), single_vertex_assignment(y)).lspace;
  }
  return false;
}

RegionLabel torus_region_label_sf(const TorusSatelliteSpec& spec, const std::vector<Slope>& y) {
  RegionLabel l;
  l.lspace = torus_lspace_sf(spec, y);
  int n_inf = count_infinite(y);
  l.in_R = n_inf >= 1;
  l.in_Z = n_inf >= 2;
  if (l.in_Z) {
    l.in_B = true;
  } else if (n_inf == 0) {
    Rat total = 0;
    for (const auto& x : y) total += x.value();
    l.in_B = total == ratio(-1, spec.pq());
  }

  TorusCase c = torus_case(spec);
  if (c == TorusCase::LatticeOnly || c == TorusCase::LatticePlusArc) {
    l.in_lambda_orbit_of_Lstar = l.lspace;
  } else if (c == TorusCase::Generic) {
    Int c1 = spec.c1();
    if (n_inf == 0) {
      bool all_nonneg = true, all_nonpos = true, deep = false;
      for (const auto& x : y) {
        if (x.value() < 0) all_nonneg = false;
        if (x.value() > 0) all_nonpos = false;
        if (c1 > 0 && x.value() <= ratio(-1, c1)) deep = true;
      }
      l.in_L_plus = all_nonneg;
      l.in_L_minus = all_nonpos && deep;
      l.in_orbit_L_plus = sum_floor(y) >= 0;
      if (c1 > 0) {
        Int sc = sum_ceil(y);
        l.in_orbit_L_minus = sc < 0 || (sc == 0 && sum_frac_floor(y, -1, c1) > 0);
      }
    }
    l.in_lambda_orbit_of_Lstar = l.in_orbit_L_minus || l.in_orbit_L_plus || (l.in_R && !l.in_Z);
  }
  return l;
}

RegionLabel torus_region_label(const TorusSatelliteSpec& spec, const std::vector<Slope>& alpha) {
  std::vector<Slope> y;
  for (const auto& a : alpha) y.push_back(psi_inv(a, spec.pq()));
  return torus_region_label_sf(spec, y);
}

bool VertexInnerRegion::in_L_min_plus(const std::vector<Slope>& y) const {
  if (count_infinite(y) > 0) return false;
  Int s = sum_floor(y);
  if (s < m_plus) return false;
  if (plus_cut && s == 0 && sum_frac_floor(y, 1, plus_r) == 0) return false;
  return true;
}

bool VertexInnerRegion::in_L_min_minus(const std::vector<Slope>& y) const {
  if (count_infinite(y) > 0) return false;
  Int s = sum_ceil(y);
  if (s > m_minus) return false;
  if (minus_cut && s == 0 && sum_frac_floor(y, -1, minus_r) == 0) return false;
  return true;
}

bool VertexInnerRegion::in_R_minus_Z(const std::vector<Slope>& y) {
  return count_infinite(y) == 1;
}

bool VertexInnerRegion::member(const std::vector<Slope>& y) const {
  return in_R_minus_Z(y) || in_L_min_plus(y) || in_L_min_minus(y);
}

std::string VertexInnerRegion::str() const {
  std::ostringstream os;
  os << "m+=" << m_plus << " m-=" << m_minus;
  if (plus_cut) os << " cut+ r=" << plus_r;
  if (minus_cut) os << " cut- r=" << minus_r;
  return os.str();
}

std::vector<Slope> InnerRegions::tuple(const SatelliteTree& t, int v, const SlopeAssignment& a) {
  std::vector<Slope> out;
  for (int i : t.I(v)) {
    const Slope* s = a.get(t.vertex(v).id, i);
    if (!s) fail(ErrorKind::InvalidArgument, "vertex " + t.vertex(v).id + " slot " + std::to_string(i) + " has no slope");
    out.push_back(*s);
  }
  return out;
}

bool InnerRegions::contains(const SatelliteTree& t, const SlopeAssignment& a) const {
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (!vertices[v].member(tuple(t, static_cast<int>(v), a))) return false;
  }
  if (drop_root_minus && vertices[t.root].in_L_min_minus(tuple(t, t.root, a))) return false;
  if (root_exact_minus) {
    const VertexInnerRegion& r = vertices[t.root];
    auto y = tuple(t, t.root, a);
    if (!VertexInnerRegion::in_R_minus_Z(y) && !r.in_L_min_plus(y) && !torus_lspace_sf(*root_exact_minus, y)) {
      return false;
    }
  }
  return true;
}

namespace {

VertexInnerRegion iterated_vertex(const SatelliteTree& t, int v) {
  VertexInnerRegion r;
  r.vertex = v;
  const SeifertVertex& s = t.sv(v);
  bool leaf = t.J(v).empty();
  for (int e : t.incoming(v)) {
    const SeifertVertex& c = t.sv(t.edges[e].from);
    Rat x(c.p, c.q);
    x.canonicalize();
    r.m_plus -= ceil_of(x) - 1;
    r.m_minus -= floor_of(x) + 1;
  }
  bool ratio_above = s.q > 0 && s.p > s.q;    // p/q > 1
  bool ratio_below = s.q < 0 && s.p > -s.q;   // p/q < -1
  if (s.q == -1) {
    r.m_plus += 2;
  } else if (!leaf && (s.q < -1 || ratio_above)) {
    r.m_plus += 1;
  }
  if (s.q == 1) {
    r.m_minus -= 2;
  } else if (!leaf && (s.q > 1 || ratio_below)) {
    r.m_minus -= 1;
  }
  if (leaf) {
    if (ratio_above) {
      r.plus_cut = true;
      r.plus_r = mod_abs(s.p, s.q);
    } else if (s.q < -1) {
      r.plus_cut = true;
      r.plus_r = mod_abs(-s.p, s.q);
    }
    if (ratio_below) {
      r.minus_cut = true;
      r.minus_r = mod_abs(s.p, s.q);
    } else if (s.q > 1) {
      r.minus_cut = true;
      r.minus_r = mod_abs(-s.p, s.q);
    }
  }
  return r;
}

Int exceptional_term(const SeifertVertex& other, const SeifertVertex& self, const Int& delta) {
  return ceil_of(ratio(other.p, self.p * delta)) + 1;
}

VertexInnerRegion algebraic_vertex(const SatelliteTree& t, int v, const AlgebraicityReport& rep) {
  VertexInnerRegion r;
  r.vertex = v;
  const SeifertVertex& s = t.sv(v);
  bool leaf = t.J(v).empty();
  for (int e : t.incoming(v)) {
    if (t.edges[e].j == -1) {
      r.m_minus -= exceptional_term(t.sv(t.edges[e].from), s, rep.deltas.at(e));
    } else {
      r.m_minus -= 1;
    }
  }
  int out = t.outgoing(v);
  bool out_exceptional = out >= 0 && t.edges[out].j == -1;
  if (out_exceptional) {
    r.m_minus -= exceptional_term(t.sv(t.edges[out].to), s, rep.deltas.at(out));
  } else if (!leaf) {
    r.m_minus -= 1;
  }
  if (leaf && !out_exceptional) {
    r.minus_cut = true;
    r.minus_r = s.q - s.p;
  }
  return r;
}

}  // namespace

InnerRegions inner_min_regions(const SatelliteTree& t, InnerVariant variant, bool allow_boundary_fallback) {
  InnerRegions out;
  if (variant == InnerVariant::Auto) {
    variant = t.has_exceptional_edges() ? InnerVariant::Algebraic : InnerVariant::Iterated;
  }
  out.variant = variant;

  const SeifertVertex& root = t.sv(t.root);
  switch (t.companion.kind) {
    case CompanionKind::Unknot: break;
    case CompanionKind::PositiveLSpaceKnot: {
      Int N = 2 * t.companion.genus - 1;
      bool ok = root.q >= N * root.p && root.q > N;
      if (!ok) {
        if (allow_boundary_fallback && root.p == 1 && root.q == N) {
          out.drop_root_minus = true;
        } else {
          fail(ErrorKind::Hypothesis, "inner approximation needs q_r/p_r >= 2g-1 and q_r > 2g-1; root has p=" +
                                          root.p.get_str() + " q=" + root.q.get_str() + ", 2g-1=" + N.get_str());
        }
      }
      break;
    }
    case CompanionKind::FloerSimple:
      fail(ErrorKind::Hypothesis, "inner approximation needs an unknot or positive L-space knot companion");
  }

  if (t.companion.kind == CompanionKind::PositiveLSpaceKnot && t.J(t.root).empty() && root.q > 1) {
    TorusSatelliteSpec spec;
    spec.genus = t.companion.genus;
    spec.p = root.p;
    spec.q = root.q;
    spec.n = root.n;
    out.root_exact_minus = spec;
  }

  if (variant == InnerVariant::Iterated) {
    if (t.has_exceptional_edges()) fail(ErrorKind::Hypothesis, "iterated variant does not allow exceptional edges");
    for (const auto& v : t.vertices) {
      if (v.sv.q == 0) fail(ErrorKind::Hypothesis, "iterated variant needs q_v != 0");
    }
    for (size_t v = 0; v < t.vertices.size(); ++v) out.vertices.push_back(iterated_vertex(t, static_cast<int>(v)));
  } else {
    AlgebraicityReport rep = algebraicity_check(t);
    if (!rep.is_algebraic) fail(ErrorKind::Hypothesis, "algebraic variant needs q_v > 0 and positive edge determinants");
    for (size_t v = 0; v < t.vertices.size(); ++v) {
      out.vertices.push_back(algebraic_vertex(t, static_cast<int>(v), rep));
    }
  }
  return out;
}

namespace {

bool usable(const VertexIntervalState& s) {
  return !s.degenerate && !s.interval.is_empty();
}

bool interior_image_has_infinity(const IntMatrix2& m, const SlopeInterval& i) {
  return contains(map_interval(m, interval_interior(i)), Slope::infinity());
}

}  // namespace

bool monotone_at(const SatelliteTree& t, int v, const SlopeAssignment& a, OracleCache* cache) {
  VertexIntervalState st = vertex_interval(t, v, a, cache);
  if (!usable(st)) return false;
  for (int e : t.incoming(v)) {
    VertexIntervalState child = vertex_interval(t, t.edges[e].from, a, cache);
    if (!usable(child)) return false;
    if (!interior_image_has_infinity(splice_matrix(t, e), child.interval)) return false;
  }
  return interior_image_has_infinity(outgoing_matrix(t, v), st.interval);
}

bool monotone_stratum_member(const SatelliteTree& t, const SlopeAssignment& a, OracleCache* cache) {
  if (!is_lspace_filling(t, a, cache).lspace) return false;
  for (size_t v = 0; v < t.vertices.size(); ++v) {
    if (!monotone_at(t, static_cast<int>(v), a, cache)) return false;
  }
  return true;
}

const char* retract_name(Retract r) {
  switch (r) {
    case Retract::Lattice: return "lattice";
    case Retract::Torus: return "torus";
    case Retract::ContractibleDim1: return "contractible-dim-1";
    case Retract::ContractibleDimN: return "contractible-dim-n";
  }
  return "?";
}

TopologyReport topology_classify(const TorusSatelliteSpec& spec) {
  spec.validate();
  if (spec.q <= 0) fail(ErrorKind::Hypothesis, "topology classification needs q > 0");
  TopologyReport r;
  r.n = spec.n;
  const long n = spec.n;
  // Compare N with q/p via N p against q.
  Int Np = spec.N() * spec.p;
  auto torus = [&](const char* label) {
    r.case_label = label;
    r.retract = Retract::Torus;
    r.h1_rank = n - 1;
  };
  if (spec.genus == 0) {
    torus("ii.b");
  } else if (Np < spec.q) {
    torus("ii.a");
  } else if (Np == spec.q) {
    r.case_label = "i.c";
    r.retract = Retract::ContractibleDimN;
    r.h1_rank = 0;
  } else if (spec.p > 1 || Np > spec.q + spec.p) {
    r.case_label = "i.a";
    r.retract = Retract::Lattice;
    r.h1_rank = 0;
  } else if (n > 2) {
    // p = 1 and N = q + 1.
    r.case_label = "i.b";
    r.h1_rank = n * (n - 1) / 2 - 1;
    r.epsilon_generators = "e_i - e_j for 1 <= i < j <= " + std::to_string(n) +
                           ", with e_i the standard basis of Z^n in SF coordinates";
  } else {
    r.case_label = "i.c";
    r.retract = Retract::ContractibleDim1;
    r.h1_rank = 0;
  }
  return r;
}

bool in_rectangle_difference_orbit(const TorusSatelliteSpec& spec, const std::vector<Slope>& y) {
  if (count_infinite(y) > 0) return false;
  Int c1 = spec.c1();
  if (c1 <= 0) return false;
  Int c2 = c1 + spec.p;
  if (sum_ceil(y) != 0) return false;
  bool outside_inner = false;
  for (const auto& x : y) {
    Rat d = x.value() - Rat(ceil_of(x.value()));
    if (d <= ratio(-1, c1)) return false;
    if (d <= ratio(-1, c2)) outside_inner = true;
  }
  return outside_inner;
}

LoCtfRegions lo_ctf_regions(const TorusSatelliteSpec& spec) {
  spec.validate();
  if (spec.genus == 0) fail(ErrorKind::Hypothesis, "LO/CTF regions need a nontrivial companion");
  if (spec.p <= 1) fail(ErrorKind::Hypothesis, "LO/CTF regions need p > 1");
  Int Np = spec.N() * spec.p;
  LoCtfRegions out;
  auto to_sf = [spec](const std::vector<Slope>& alpha) {
    std::vector<Slope> y;
    for (const auto& a : alpha) y.push_back(psi_inv(a, spec.pq()));
    return y;
  };
  if (Np > spec.q + 1) {
    out.kind = LoCtfCase::Exact;
    out.lo_lower_bound = [spec, to_sf](const std::vector<Slope>& alpha) {
      return !torus_lspace_sf(spec, to_sf(alpha));
    };
    out.f_region = [spec, to_sf](const std::vector<Slope>& alpha) {
      auto y = to_sf(alpha);
      return !torus_lspace_sf(spec, y) && count_infinite(y) == 0;
    };
  } else if (Np < spec.q) {
    out.kind = LoCtfCase::LowerBound;
    out.lo_lower_bound = [spec, to_sf](const std::vector<Slope>& alpha) {
      auto y = to_sf(alpha);
      return !torus_lspace_sf(spec, y) && !in_rectangle_difference_orbit(spec, y);
    };
    out.f_region = [spec, to_sf](const std::vector<Slope>& alpha) {
      auto y = to_sf(alpha);
      return !torus_lspace_sf(spec, y) && count_infinite(y) == 0 && !in_rectangle_difference_orbit(spec, y);
    };
  } else {
    fail(ErrorKind::OpenCase, "no LO/CTF description when q/p <= 2g-1 <= (q+1)/p");
  }
  return out;
}

}  // namespace lspace
