#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hyperkey/hypergraph.hpp"

namespace fixtures {

using hyperkey::Edge;
using hyperkey::Hypergraph;
using hyperkey::Rational;
using hyperkey::VertexSet;

inline Edge edge(std::string id, VertexSet members, long long weight = 1) {
  return {std::move(id), std::move(members), Rational(weight)};
}

inline VertexSet range(int from, int to) {
  VertexSet out;
  for (int i = from; i <= to; ++i) out.insert(std::to_string(i));
  return out;
}

inline Hypergraph h1() {
  return Hypergraph(range(1, 6), {edge("a", {"1", "2", "4"}, 1), edge("b", {"2", "3", "5"}, 3),
                                  edge("c", {"1", "3", "6"}, 2)});
}

inline Hypergraph h2() {
  return Hypergraph(range(1, 5), {edge("a", {"1", "2", "3"}, 2), edge("b", {"3", "4"}), edge("c", {"1", "5"})});
}

inline Hypergraph h3() {
  return Hypergraph(range(1, 9), {edge("a", {"1", "2", "5"}), edge("b", {"1", "2", "6"}), edge("c", {"2", "3"}),
                                  edge("d", {"3", "4", "7", "8"}), edge("e", {"3", "4", "8", "9"})});
}

inline Hypergraph h4() {
  return Hypergraph(range(1, 5), {edge("a", {"1", "2", "3"}), edge("b", {"3", "4"}), edge("c", {"1", "5"}),
                                  edge("d", {"2"}), edge("e", {"5"})});
}

inline Hypergraph h5() {
  VertexSet v = range(1, 5);
  for (int i = 1; i <= 6; ++i) v.insert("v" + std::to_string(i));
  return Hypergraph(v, {edge("e1", {"1", "2", "v1"}), edge("e2", {"2", "3", "v2"}), edge("e3", {"1", "3", "v3"}),
                        edge("e4", {"3", "5", "v4"}), edge("e5", {"3", "4", "v5"}), edge("e6", {"4", "5", "v6"})});
}

inline Hypergraph path3() { return Hypergraph(range(1, 3), {edge("x", {"1", "2"}), edge("y", {"2", "3"})}); }

inline Hypergraph single_edge() { return Hypergraph(range(1, 2), {edge("a", {"1", "2"}, 2)}); }

inline VertexSet h5_block() { return range(1, 5); }

}  // namespace fixtures
