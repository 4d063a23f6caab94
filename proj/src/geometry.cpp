#include "trievac/geometry.hpp"

#include <algorithm>

namespace trievac {

double wrap_arc(double s, double perimeter) {
  double r = std::fmod(s, perimeter);
  if (r < 0.0) r += perimeter;
  return r == perimeter ? 0.0 : r;
}

Triangle::Triangle(double x, double y, double z) {
  const std::array<double, 3> in = {x, y, z};
  std::array<int, 3> idx = {0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return in[i] > in[j]; });
  for (int i = 0; i < 3; ++i) {
    e_[i] = in[idx[i]];
    label_map_[i] = idx[i];
  }
  if (!(e_[2] > 0.0))
    throw DegenerateTriangle("triangle edges must be positive");
  if (!(e_[1] + e_[2] > e_[0]))
    throw DegenerateTriangle("strict triangle inequality violated");
  // Non-obtuse: cos(A) >= 0 up to a relative tolerance on the largest edge.
  if (e_[1] * e_[1] + e_[2] * e_[2] - e_[0] * e_[0] < -1e-12 * e_[0] * e_[0])
    throw ObtuseTriangle("largest angle exceeds pi/2");
}

Edge Triangle::canonical_of_input(int input_pos) const {
  for (int i = 0; i < 3; ++i)
    if (label_map_[i] == input_pos) return static_cast<Edge>(i);
  throw std::invalid_argument("input edge position must be 0, 1 or 2");
}

Triangle make_triangle(double x, double y, double z) { return Triangle(x, y, z); }

double angle_cos(const Triangle& t, Vertex v) {
  const double a = t.a(), b = t.b(), c = t.c();
  double raw = 0.0;
  switch (v) {
    case Vertex::A: raw = (b * b + c * c - a * a) / (2.0 * b * c); break;
    case Vertex::B: raw = (a * a + c * c - b * b) / (2.0 * a * c); break;
    case Vertex::C: raw = (a * a + b * b - c * c) / (2.0 * a * b); break;
  }
  return std::clamp(raw, 0.0, 1.0);
}

double area(const Triangle& t) {
  const double p = t.perimeter() / 2.0;
  const double prod = p * (p - t.a()) * (p - t.b()) * (p - t.c());
  return std::sqrt(std::max(0.0, prod));
}

Embedding::Embedding(const Triangle& t)
    : ea(t.a()), eb(t.b()), ec(t.c()) {
  const double ax = (ea * ea + ec * ec - eb * eb) / (2.0 * ea);
  const double ay = std::sqrt(std::max(0.0, ec * ec - ax * ax));
  va = {ax, ay};
  vb = {0.0, 0.0};
  vc = {ea, 0.0};
}

Vec2 Embedding::point_at(double s) const {
  s = wrap_arc(s, perimeter());
  if (s <= ea) {
    const double u = s / ea;
    return {vb.x + u * (vc.x - vb.x), vb.y + u * (vc.y - vb.y)};
  }
  s -= ea;
  if (s <= eb) {
    const double u = s / eb;
    return {vc.x + u * (va.x - vc.x), vc.y + u * (va.y - vc.y)};
  }
  s -= eb;
  const double u = s / ec;
  return {va.x + u * (vb.x - va.x), va.y + u * (vb.y - va.y)};
}

PerimeterPos perimeter_point(const Embedding& emb, double s, Orientation dir) {
  const double p = emb.perimeter();
  const double ccw = dir == Orientation::CCW ? s : -s;
  const double r = wrap_arc(ccw, p);
  return {r, emb.point_at(r)};
}

PerimeterPos perimeter_point(const Triangle& t, double s, Orientation dir) {
  return perimeter_point(Embedding(t), s, dir);
}

double chord(const PerimeterPos& p, const PerimeterPos& q) {
  return dist(p.point, q.point);
}

}  // namespace trievac
