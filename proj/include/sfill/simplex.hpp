#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sfill {

constexpr int kMaxVertex = 63;

// Vertex sets are bitmasks: bit v is vertex v (labels are 1-based).
using VertexSet = std::uint64_t;

inline int vertex_count(VertexSet s) { return std::popcount(s); }
inline bool has_vertex(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline VertexSet vertex_range(int n) {  // {1..n}
  return n >= kMaxVertex ? ~VertexSet{1} : ((VertexSet{1} << (n + 1)) - 2);
}
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline int highest_vertex(VertexSet s) { return 63 - std::countl_zero(s); }
std::vector<int> vertices_of(VertexSet s);

// A simplex is a strictly increasing list of vertex labels; stored as the
// set of its vertices. The empty simplex has dimension -1.
class Simplex {
 public:
  constexpr Simplex() = default;
  explicit constexpr Simplex(VertexSet mask) : mask_(mask) {}

  // Throws std::invalid_argument on unsorted, repeated or out-of-range labels.
  static Simplex from_vertices(std::span<const int> vs);
  static Simplex from_vertices(std::initializer_list<int> vs) {
    return from_vertices(std::span<const int>(vs.begin(), vs.size()));
  }

  VertexSet mask() const { return mask_; }
  int dim() const { return std::popcount(mask_) - 1; }
  int size() const { return std::popcount(mask_); }
  bool contains(int v) const { return has_vertex(mask_, v); }
  Simplex without(int v) const { return Simplex(mask_ & ~vertex_bit(v)); }
  Simplex with(int v) const { return Simplex(mask_ | vertex_bit(v)); }
  std::vector<int> vertices() const { return vertices_of(mask_); }

  // [sigma : sigma \ v] for v in sigma, i.e. (-1)^(position of v).
  int incidence_sign(int v) const {
    return (std::popcount(mask_ & (vertex_bit(v) - 1)) & 1) ? -1 : 1;
  }

  std::string to_string() const;

  // Numeric order of the masks is colex order for simplices of equal dimension.
  friend constexpr auto operator<=>(Simplex a, Simplex b) = default;

 private:
  VertexSet mask_ = 0;
};

}  // namespace sfill
