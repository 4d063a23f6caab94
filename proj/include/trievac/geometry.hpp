#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace trievac {

struct DegenerateTriangle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ObtuseTriangle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Canonical edge labels after sorting: a is the largest edge.
enum class Edge : int { a = 0, b = 1, c = 2 };

/// Vertex A is opposite edge a, B opposite b, C opposite c.
enum class Vertex : int { A = 0, B = 1, C = 2 };

enum class Orientation { CCW, CW };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dist(const Vec2& p, const Vec2& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

/// Reduce an arc length into [0, perimeter).
double wrap_arc(double s, double perimeter);

/// Validated non-obtuse triangle with edges sorted descending, a >= b >= c > 0.
///
/// label_map()[i] records which constructor argument (0, 1, 2) became canonical
/// edge i, so callers can keep addressing edges in their original order.
class Triangle {
 public:
  Triangle(double x, double y, double z);

  double a() const { return e_[0]; }
  double b() const { return e_[1]; }
  double c() const { return e_[2]; }
  double edge(Edge e) const { return e_[static_cast<int>(e)]; }
  double perimeter() const { return e_[0] + e_[1] + e_[2]; }

  const std::array<int, 3>& label_map() const { return label_map_; }
  Edge canonical_of_input(int input_pos) const;

 private:
  std::array<double, 3> e_;
  std::array<int, 3> label_map_;
};

Triangle make_triangle(double x, double y, double z);

/// Cosine-Law cosine of the interior angle at a vertex, clamped to [0, 1].
double angle_cos(const Triangle& t, Vertex v);

/// Heron area.
double area(const Triangle& t);

/// Deterministic planar embedding: B at the origin, C at (a, 0), A in the
/// upper half-plane. Walking counterclockwise from B visits B -> C -> A -> B.
struct Embedding {
  explicit Embedding(const Triangle& t);

  Vec2 va, vb, vc;
  double ea, eb, ec;

  double perimeter() const { return ea + eb + ec; }
  Vec2 point_at(double s) const;  // s = ccw arc length from B, any real
};

/// Boundary position: ccw arc length from B plus its embedded point.
struct PerimeterPos {
  double s = 0.0;
  Vec2 point;
};

PerimeterPos perimeter_point(const Embedding& emb, double s,
                             Orientation dir = Orientation::CCW);
PerimeterPos perimeter_point(const Triangle& t, double s,
                             Orientation dir = Orientation::CCW);

/// Straight-line distance between two boundary points (shortest path by convexity).
double chord(const PerimeterPos& p, const PerimeterPos& q);

}  // namespace trievac
