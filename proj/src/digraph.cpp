#include "zomat/digraph.hpp"

#include <bit>
#include <stdexcept>

namespace zomat {

namespace {

using Row = BitMatrix::Row;

constexpr Row bit(std::size_t i0) { return Row{1} << i0; }

void check_vertex(const BitMatrix& m, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > m.side()) {
    throw std::out_of_range("vertex " + std::to_string(i) +
                            " outside 1.." + std::to_string(m.side()));
  }
}

// Members of each component as 0-based masks, ordered by smallest vertex.
std::vector<Row> component_masks(const BitMatrix& m,
                                 const std::vector<Row>& reach) {
  const std::size_t b = m.side();
  std::vector<Row> comps;
  Row assigned = 0;
  for (std::size_t i = 0; i < b; ++i) {
    if (assigned & bit(i)) continue;
    Row comp = bit(i);
    for (std::size_t j = i + 1; j < b; ++j) {
      if ((reach[i] & bit(j)) && (reach[j] & bit(i))) comp |= bit(j);
    }
    assigned |= comp;
    comps.push_back(comp);
  }
  return comps;
}

ComponentKind classify_component(const BitMatrix& m, Row comp) {
  const int size = std::popcount(comp);
  int edges = 0;
  for (Row rest = comp; rest; rest &= rest - 1) {
    edges += std::popcount(m.row_mask(std::countr_zero(rest)) & comp);
  }
  if (edges == 0) return ComponentKind::trivial;
  // A strongly connected digraph on s vertices has at least s edges, with
  // equality exactly for a single Hamiltonian cycle.
  return edges == size ? ComponentKind::simple_cycle : ComponentKind::complex;
}

}  // namespace

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::trivial: return "trivial";
    case ComponentKind::simple_cycle: return "simple-cycle";
    case ComponentKind::complex: return "complex";
  }
  return "?";
}

VertexSet to_vertex_set(Row mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

Row to_mask(const VertexSet& set) {
  Row mask = 0;
  for (int v : set) mask |= bit(static_cast<std::size_t>(v - 1));
  return mask;
}

std::vector<Row> reachability(const BitMatrix& m) {
  const std::size_t b = m.side();
  std::vector<Row> reach(b);
  for (std::size_t i = 0; i < b; ++i) reach[i] = m.row_mask(i);
  // Warshall closure on bitmasks.
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t i = 0; i < b; ++i) {
      if (reach[i] & bit(k)) reach[i] |= reach[k];
    }
  }
  return reach;
}

Row cycle_vertex_mask(const BitMatrix& m) {
  const auto reach = reachability(m);
  Row d = 0;
  for (std::size_t i = 0; i < m.side(); ++i) {
    if (reach[i] & bit(i)) d |= bit(i);
  }
  return d;
}

std::vector<Component> sccs(const BitMatrix& m) {
  const auto reach = reachability(m);
  std::vector<Component> out;
  for (Row comp : component_masks(m, reach)) {
    out.push_back({to_vertex_set(comp), classify_component(m, comp)});
  }
  return out;
}

bool satisfies_P2(const BitMatrix& m) {
  const auto reach = reachability(m);
  for (Row comp : component_masks(m, reach)) {
    if (classify_component(m, comp) == ComponentKind::complex) return false;
  }
  return true;
}

bool p2_power_oracle(const BitMatrix& m, unsigned max_k) {
  if (max_k == 0) throw std::invalid_argument("max_k must be >= 1");
  NatMatrix acc(m);
  for (unsigned k = 1;; ++k) {
    for (std::size_t i = 1; i <= m.side(); ++i) {
      if (acc.at(i, i) > 1) return false;
    }
    if (k == max_k) return true;
    acc = multiply(acc, m);
  }
}

VertexSet reachable_from(const BitMatrix& m, int i) {
  check_vertex(m, i);
  return to_vertex_set(reachability(m)[static_cast<std::size_t>(i - 1)]);
}

bool is_nilpotent(const BitMatrix& m) {
  return power(m, static_cast<unsigned>(m.side())).is_zero();
}

std::size_t out_degree(const BitMatrix& m, int i) {
  check_vertex(m, i);
  return std::popcount(m.row_mask(static_cast<std::size_t>(i - 1)));
}

CycleStructure::CycleStructure(VertexSet d_set,
                               std::vector<Component> components,
                               std::optional<std::map<int, Cycle>> cycles,
                               std::optional<VertexSet> d0,
                               std::optional<VertexSet> d00)
    : d_set_(std::move(d_set)),
      components_(std::move(components)),
      cycles_(std::move(cycles)),
      d0_(std::move(d0)),
      d00_(std::move(d00)) {}

namespace {

[[noreturn]] void no_cycles() {
  throw PreconditionError(
      "cycle sets are only defined for matrices satisfying P2");
}

}  // namespace

const std::map<int, Cycle>& CycleStructure::cycles() const {
  if (!cycles_) no_cycles();
  return *cycles_;
}

const Cycle& CycleStructure::cycle(int i) const {
  const auto& all = cycles();
  const auto it = all.find(i);
  if (it == all.end()) {
    throw PreconditionError("vertex " + std::to_string(i) + " is not in D_M",
                            i);
  }
  return it->second;
}

const VertexSet& CycleStructure::d0_set() const {
  if (!d0_) no_cycles();
  return *d0_;
}

const VertexSet& CycleStructure::d00_set() const {
  if (!d00_) no_cycles();
  return *d00_;
}

CycleStructure cycle_structure(const BitMatrix& m) {
  const std::size_t b = m.side();
  const auto reach = reachability(m);
  const auto masks = component_masks(m, reach);

  Row d = 0;
  std::vector<Component> components;
  bool p2 = true;
  for (Row comp : masks) {
    const auto kind = classify_component(m, comp);
    if (kind != ComponentKind::trivial) d |= comp;
    if (kind == ComponentKind::complex) p2 = false;
    components.push_back({to_vertex_set(comp), kind});
  }
  if (!p2) {
    return CycleStructure(to_vertex_set(d), std::move(components),
                          std::nullopt, std::nullopt, std::nullopt);
  }

  // Under P2 each cycle vertex has exactly one successor inside its
  // component, so the periodic word of head i is read off by following it.
  std::map<int, Cycle> cycles;
  std::vector<Row> cycle_of(b, 0);
  for (Row comp : masks) {
    if (!(comp & d)) continue;
    for (Row rest = comp; rest; rest &= rest - 1) {
      const std::size_t start = std::countr_zero(rest);
      cycle_of[start] = comp;
      Cycle c{to_vertex_set(comp), {}};
      std::size_t v = start;
      do {
        c.word.push_back(static_cast<int>(v + 1));
        v = std::countr_zero(m.row_mask(v) & comp);
      } while (v != start);
      cycles.emplace(static_cast<int>(start + 1), std::move(c));
    }
  }

  Row d0 = 0;
  for (Row rest = d; rest; rest &= rest - 1) {
    const std::size_t i = std::countr_zero(rest);
    // Every j in D_{M,i} reaches exactly what i reaches.
    if ((reach[i] & ~d) == 0) d0 |= bit(i);
  }
  Row d00 = 0;
  for (Row rest = d0; rest; rest &= rest - 1) {
    const std::size_t i = std::countr_zero(rest);
    const Row own = cycle_of[i];
    const Row other_cycles = d & ~own;
    bool isolated = true;
    for (Row js = own; js; js &= js - 1) {
      if (m.row_mask(std::countr_zero(js)) & other_cycles) isolated = false;
    }
    if (isolated) d00 |= bit(i);
  }

  return CycleStructure(to_vertex_set(d), std::move(components),
                        std::move(cycles), to_vertex_set(d0),
                        to_vertex_set(d00));
}

}  // namespace zomat
