#include "esgame/arrangement.hpp"

#include <stdexcept>

#include "esgame/error.hpp"
#include "esgame/hull.hpp"
#include "esgame/order_type.hpp"

namespace esg {

namespace {

// Homogeneous coordinates (x : y : w) with w > 0. Lines and their
// intersections are formed by cross products, so every vertex is a fixed-degree
// polynomial in the input coordinates and no size growth happens while faces
// are split.
struct HPoint {
  mpz_class x, y, w;
};

// a*x + b*y + c*w = 0
struct HLine {
  mpz_class a, b, c;
};

HPoint to_homogeneous(const Point& p) {
  HPoint h;
  mpz_lcm(h.w.get_mpz_t(), p.x.get_den_mpz_t(), p.y.get_den_mpz_t());
  h.x = p.x.get_num() * (h.w / p.x.get_den());
  h.y = p.y.get_num() * (h.w / p.y.get_den());
  return h;
}

HLine join(const HPoint& p, const HPoint& q) {
  HLine l;
  l.a = p.y * q.w - p.w * q.y;
  l.b = p.w * q.x - p.x * q.w;
  l.c = p.x * q.y - p.y * q.x;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), l.a.get_mpz_t(), l.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.c.get_mpz_t());
  if (g > 1) {
    mpz_divexact(l.a.get_mpz_t(), l.a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(l.b.get_mpz_t(), l.b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(l.c.get_mpz_t(), l.c.get_mpz_t(), g.get_mpz_t());
  }
  return l;
}

// False for parallel lines.
bool meet(const HLine& l, const HLine& m, HPoint& out) {
  out.w = l.a * m.b - l.b * m.a;
  if (out.w == 0) return false;
  out.x = l.b * m.c - l.c * m.b;
  out.y = l.c * m.a - l.a * m.c;
  if (out.w < 0) {
    out.x = -out.x;
    out.y = -out.y;
    out.w = -out.w;
  }
  return true;
}

class SideEvaluator {
 public:
  int operator()(const HLine& l, const HPoint& p) {
    mpz_mul(acc_.get_mpz_t(), l.a.get_mpz_t(), p.x.get_mpz_t());
    mpz_addmul(acc_.get_mpz_t(), l.b.get_mpz_t(), p.y.get_mpz_t());
    mpz_addmul(acc_.get_mpz_t(), l.c.get_mpz_t(), p.w.get_mpz_t());
    return sgn(acc_);
  }

 private:
  mpz_class acc_;
};

struct Face {
  std::vector<HPoint> vertices;
  // edge_line[k] carries the edge from vertex k to vertex k+1.
  std::vector<int> edge_line;
  std::vector<std::int8_t> sides;
};

// Part of a convex face on the side `keep` of line `id`. Vertices on the line
// belong to both parts; the new edge runs along the line.
Face clip(const Face& f, const std::vector<int>& vertex_side, const HLine& line, int id,
          const std::vector<HLine>& lines, int keep) {
  Face out;
  out.sides = f.sides;
  out.sides[id] = static_cast<std::int8_t>(keep);
  const std::size_t m = f.vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t next = (k + 1) % m;
    const int a = vertex_side[k] * keep;
    const int b = vertex_side[next] * keep;
    const int e = f.edge_line[k];
    if (a > 0) {
      out.vertices.push_back(f.vertices[k]);
      out.edge_line.push_back(e);
      if (b < 0) {
        HPoint cut;
        meet(lines[e], line, cut);
        out.vertices.push_back(std::move(cut));
        out.edge_line.push_back(id);
      }
    } else if (a == 0) {
      out.vertices.push_back(f.vertices[k]);
      out.edge_line.push_back(b < 0 ? id : e);
    } else if (b > 0) {
      HPoint cut;
      meet(lines[e], line, cut);
      out.vertices.push_back(std::move(cut));
      out.edge_line.push_back(e);
    }
  }
  return out;
}

Point to_point(const HPoint& h) {
  Rational x(h.x, h.w), y(h.y, h.w);
  x.canonicalize();
  y.canonicalize();
  return Point(std::move(x), std::move(y));
}

// Rounds the vertex centroid to successively finer dyadic grids until the
// rounded point is strictly inside every edge line of the face.
Point representative(const Face& f, const std::vector<HLine>& lines,
                     const std::vector<int>& interior_side) {
  const std::size_t m = f.vertices.size();
  mpz_class num_x = 0, num_y = 0, den = 1;
  for (const HPoint& v : f.vertices) {
    num_x = num_x * v.w + v.x * den;
    num_y = num_y * v.w + v.y * den;
    den *= v.w;
  }
  den *= static_cast<unsigned long>(m);

  SideEvaluator side;
  HPoint cand;
  const mpz_class two_den = 2 * den;
  for (unsigned t = 0; t < 1u << 16; ++t) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, t);
    // round(num / den * scale) = floor((2 * num * scale + den) / (2 * den))
    mpz_class tx = 2 * num_x * scale + den;
    mpz_class ty = 2 * num_y * scale + den;
    mpz_fdiv_q(cand.x.get_mpz_t(), tx.get_mpz_t(), two_den.get_mpz_t());
    mpz_fdiv_q(cand.y.get_mpz_t(), ty.get_mpz_t(), two_den.get_mpz_t());
    cand.w = scale;
    bool inside = true;
    for (std::size_t k = 0; k < m && inside; ++k) {
      const int e = f.edge_line[k];
      const int want = interior_side[e] != 0 ? interior_side[e] : f.sides[e];
      inside = side(lines[e], cand) == want;
    }
    if (inside) return to_point(cand);
  }
  throw std::logic_error("arrangement: no interior representative found");
}

std::vector<Cell> trivial_cells(std::span<const Point> points) {
  Cell cell;
  cell.bounded = false;
  Point centre = points.empty() ? Point(0, 0) : points[0];
  const Rational one(1);
  const Rational r(4);
  cell.polygon = {Point(Rational(centre.x - r), Rational(centre.y - r)),
                  Point(Rational(centre.x + r), Rational(centre.y - r)),
                  Point(Rational(centre.x + r), Rational(centre.y + r)),
                  Point(Rational(centre.x - r), Rational(centre.y + r))};
  cell.representative = points.empty() ? centre : Point(Rational(centre.x + one), centre.y);
  return {std::move(cell)};
}

}  // namespace

std::vector<Cell> arrangement_cells(std::span<const Point> points) {
  require_distinct(points);
  if (points.size() < 2) return trivial_cells(points);
  const int n = static_cast<int>(points.size());
  if (OrderType(points).has_collinear_triple()) {
    throw Error(ErrorCode::DegenerateInput, "arrangement input has a collinear triple");
  }

  std::vector<HPoint> hp;
  hp.reserve(n);
  for (const Point& p : points) hp.push_back(to_homogeneous(p));

  const auto pairs = point_pairs(n);
  const int num_lines = static_cast<int>(pairs.size());
  std::vector<HLine> lines;
  lines.reserve(num_lines + 4);
  for (auto [i, j] : pairs) lines.push_back(join(hp[i], hp[j]));

  // Integer box around the input points and all pairwise intersections.
  mpz_class xmin, xmax, ymin, ymax;
  bool first = true;
  auto include = [&](const HPoint& h) {
    mpz_class lo_x, hi_x, lo_y, hi_y;
    mpz_fdiv_q(lo_x.get_mpz_t(), h.x.get_mpz_t(), h.w.get_mpz_t());
    mpz_cdiv_q(hi_x.get_mpz_t(), h.x.get_mpz_t(), h.w.get_mpz_t());
    mpz_fdiv_q(lo_y.get_mpz_t(), h.y.get_mpz_t(), h.w.get_mpz_t());
    mpz_cdiv_q(hi_y.get_mpz_t(), h.y.get_mpz_t(), h.w.get_mpz_t());
    if (first || lo_x < xmin) xmin = lo_x;
    if (first || hi_x > xmax) xmax = hi_x;
    if (first || lo_y < ymin) ymin = lo_y;
    if (first || hi_y > ymax) ymax = hi_y;
    first = false;
  };
  for (const HPoint& h : hp) include(h);
  HPoint v;
  for (int a = 0; a < num_lines; ++a) {
    for (int b = a + 1; b < num_lines; ++b) {
      if (meet(lines[a], lines[b], v)) include(v);
    }
  }
  // Width plus height bounds the diagonal from above.
  const mpz_class margin = 10 * ((xmax - xmin) + (ymax - ymin)) + 1;
  xmin -= margin;
  ymin -= margin;
  xmax += margin;
  ymax += margin;

  const int box = num_lines;
  lines.push_back(HLine{0, 1, -ymin});  // bottom
  lines.push_back(HLine{1, 0, -xmax});  // right
  lines.push_back(HLine{0, 1, -ymax});  // top
  lines.push_back(HLine{1, 0, -xmin});  // left
  // Sign of the box interior for each box line; arrangement lines use the
  // per-face side instead (marked 0 here).
  std::vector<int> interior_side(num_lines + 4, 0);
  interior_side[box + 0] = 1;
  interior_side[box + 1] = -1;
  interior_side[box + 2] = -1;
  interior_side[box + 3] = 1;

  Face start;
  start.vertices = {HPoint{xmin, ymin, 1}, HPoint{xmax, ymin, 1}, HPoint{xmax, ymax, 1},
                    HPoint{xmin, ymax, 1}};
  start.edge_line = {box + 0, box + 1, box + 2, box + 3};
  start.sides.assign(num_lines, 0);

  std::vector<Face> faces{std::move(start)};
  SideEvaluator side;
  std::vector<int> vertex_side;
  for (int id = 0; id < num_lines; ++id) {
    std::vector<Face> next;
    next.reserve(faces.size() * 2);
    for (Face& f : faces) {
      vertex_side.resize(f.vertices.size());
      bool pos = false, neg = false;
      for (std::size_t k = 0; k < f.vertices.size(); ++k) {
        vertex_side[k] = side(lines[id], f.vertices[k]);
        pos |= vertex_side[k] > 0;
        neg |= vertex_side[k] < 0;
      }
      if (pos && neg) {
        next.push_back(clip(f, vertex_side, lines[id], id, lines, 1));
        next.push_back(clip(f, vertex_side, lines[id], id, lines, -1));
      } else {
        f.sides[id] = static_cast<std::int8_t>(pos ? 1 : -1);
        next.push_back(std::move(f));
      }
    }
    faces = std::move(next);
  }

  std::vector<Cell> cells;
  cells.reserve(faces.size());
  for (const Face& f : faces) {
    Cell cell;
    cell.representative = representative(f, lines, interior_side);
    cell.signs = f.sides;
    cell.polygon.reserve(f.vertices.size());
    for (const HPoint& h : f.vertices) cell.polygon.push_back(to_point(h));
    for (int e : f.edge_line) {
      if (e >= box) {
        cell.bounded = false;
      } else {
        cell.bounds.push_back(Halfplane{pairs[e].first, pairs[e].second,
                                        static_cast<Orientation>(f.sides[e])});
      }
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

Point dyadic_point_inside(std::span<const Point> ccw_polygon, const Point& target) {
  if (!strictly_inside_convex(ccw_polygon, target)) {
    throw Error(ErrorCode::InvalidArgument, "target is not strictly inside the polygon");
  }
  Rational scale(1);
  while (true) {
    mpz_class rx, ry;
    Rational sx = target.x * scale + Rational(1, 2);
    Rational sy = target.y * scale + Rational(1, 2);
    mpz_fdiv_q(rx.get_mpz_t(), sx.get_num_mpz_t(), sx.get_den_mpz_t());
    mpz_fdiv_q(ry.get_mpz_t(), sy.get_num_mpz_t(), sy.get_den_mpz_t());
    Point cand(Rational(Rational(rx) / scale), Rational(Rational(ry) / scale));
    if (strictly_inside_convex(ccw_polygon, cand)) return cand;
    scale *= 2;
  }
}

}  // namespace esg
