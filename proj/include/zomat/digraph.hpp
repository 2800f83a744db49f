#pragma once

// A {0,1}-matrix read as a digraph on {1, ..., b} with an edge i -> j iff
// M_ij = 1, and the cycle-structure sets built on it.

#include <map>
#include <optional>
#include <vector>

#include "zomat/matrix.hpp"

namespace zomat {

/// Sorted list of 1-based vertices.
using VertexSet = std::vector<int>;

enum class ComponentKind { trivial, simple_cycle, complex };

const char* to_string(ComponentKind kind);

struct Component {
  VertexSet vertices;
  ComponentKind kind = ComponentKind::trivial;

  bool operator==(const Component&) const = default;
};

/// Strongly connected components, ordered by smallest vertex.
std::vector<Component> sccs(const BitMatrix& m);

/// (M^k)_ii <= 1 for all i and k, decided structurally: every component is
/// trivial or a simple cycle.
bool satisfies_P2(const BitMatrix& m);

/// Brute-force reading of P2 over k <= max_k. Cross-check oracle only.
bool p2_power_oracle(const BitMatrix& m, unsigned max_k);

/// Vertices j with a path of length >= 1 from i.
VertexSet reachable_from(const BitMatrix& m, int i);

/// M^b == 0.
bool is_nilpotent(const BitMatrix& m);

std::size_t out_degree(const BitMatrix& m, int i);

/// 0-based bitmask form of path-of-length->=1 reachability; entry i0 holds
/// the targets reachable from vertex i0 + 1.
std::vector<BitMatrix::Row> reachability(const BitMatrix& m);

/// Bitmask of vertices lying on a cycle (0-based bits).
BitMatrix::Row cycle_vertex_mask(const BitMatrix& m);

struct Cycle {
  /// D_{M,i}: the letters of the periodic word of head i.
  VertexSet vertices;
  /// The period starting at i, e.g. {2, 3, 1} for J_3 and i = 2.
  std::vector<int> word;

  bool operator==(const Cycle&) const = default;
};

/// D_M and its refinements. The cycle-dependent fields (D_{M,i}, D_M^0,
/// D_M^00) only exist when the matrix satisfies P2; asking for them
/// otherwise throws PreconditionError.
class CycleStructure {
 public:
  CycleStructure(VertexSet d_set, std::vector<Component> components,
                 std::optional<std::map<int, Cycle>> cycles,
                 std::optional<VertexSet> d0, std::optional<VertexSet> d00);

  const VertexSet& d_set() const { return d_set_; }
  const std::vector<Component>& components() const { return components_; }

  bool has_cycles() const { return cycles_.has_value(); }
  const std::map<int, Cycle>& cycles() const;
  const Cycle& cycle(int i) const;
  const VertexSet& d0_set() const;
  const VertexSet& d00_set() const;

 private:
  VertexSet d_set_;
  std::vector<Component> components_;
  std::optional<std::map<int, Cycle>> cycles_;
  std::optional<VertexSet> d0_;
  std::optional<VertexSet> d00_;
};

CycleStructure cycle_structure(const BitMatrix& m);

/// Mask <-> vertex-set conversions (bit i0 <-> vertex i0 + 1).
VertexSet to_vertex_set(BitMatrix::Row mask);
BitMatrix::Row to_mask(const VertexSet& set);

}  // namespace zomat
