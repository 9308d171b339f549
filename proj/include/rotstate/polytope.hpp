#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rotstate/sqrt_sum.hpp"

namespace rotstate {

/// Exact scalar policy: signs and comparisons are decided in the field
/// Q(sqrt d1, sqrt d2, ...).
struct ExactOps {
  using Scalar = SqrtSum;
  int sign(const Scalar& x) const { return x.sign(); }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  bool less(const Scalar& a, const Scalar& b) const { return (a - b).sign() < 0; }
  static double to_double(const Scalar& x) { return x.to_double(); }
};

/// Float fallback for dimensions where exact enumeration is not required;
/// eps doubles as the vertex dedup radius.
struct FloatOps {
  using Scalar = double;
  double eps = 1e-10;
  int sign(double x) const { return x > eps ? 1 : (x < -eps ? -1 : 0); }
  bool eq(double a, double b) const { return std::abs(a - b) <= eps; }
  bool less(double a, double b) const { return a < b - eps; }
  static double to_double(double x) { return x + 0.0; }  // flushes -0
};

/// Halfspace {x : <normal, x> <= offset}.
template <class Ops>
struct HalfspaceT {
  std::vector<typename Ops::Scalar> normal;
  typename Ops::Scalar offset;
};

namespace detail {

/// Gaussian elimination with exact (or tolerance) pivoting; nullopt when the
/// system is singular.
template <class Ops>
std::optional<std::vector<typename Ops::Scalar>> solve_linear(
    std::vector<std::vector<typename Ops::Scalar>> m,
    std::vector<typename Ops::Scalar> rhs, const Ops& ops) {
  int d = static_cast<int>(rhs.size());
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    double best = 0;
    for (int r = col; r < d; ++r)
      if (ops.sign(m[r][col]) != 0) {
        double mag = std::abs(Ops::to_double(m[r][col]));
        if (pivot < 0 || mag > best) {
          pivot = r;
          best = mag;
        }
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = 0; r < d; ++r) {
      if (r == col || ops.sign(m[r][col]) == 0) continue;
      auto factor = m[r][col] / m[col][col];
      for (int c = col; c < d; ++c) m[r][c] = m[r][c] - factor * m[col][c];
      rhs[r] = rhs[r] - factor * rhs[col];
    }
  }
  std::vector<typename Ops::Scalar> x(d);
  for (int i = 0; i < d; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

/// Dimension of the affine hull of a point set (-1 for the empty set).
template <class Ops>
int affine_dimension(const std::vector<std::vector<typename Ops::Scalar>>& pts,
                     const Ops& ops) {
  if (pts.empty()) return -1;
  int d = static_cast<int>(pts[0].size());
  std::vector<std::vector<typename Ops::Scalar>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<typename Ops::Scalar> row(d);
    for (int c = 0; c < d; ++c) row[c] = pts[i][c] - pts[0][c];
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (ops.sign(rows[r][col]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || ops.sign(rows[r][col]) == 0) continue;
      auto factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < d; ++c)
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Convex polytope in R^dim with both descriptions: an irredundant vertex
/// list and a halfspace list every vertex satisfies (exactly, in exact mode).
/// Degenerate intersections are kept and reported through affine_dim.
template <class Ops>
class PolytopeT {
 public:
  using Scalar = typename Ops::Scalar;
  using Point = std::vector<Scalar>;
  using Halfspace = HalfspaceT<Ops>;

  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool is_empty() const { return vertices_.empty(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const Point& p, const Ops& ops = {}) const {
    for (const auto& h : halfspaces_)
      if (ops.sign(dot(h.normal, p) - h.offset) > 0) return false;
    return true;
  }

  /// Vertex enumeration: solve every dim-subset of boundary hyperplanes and
  /// keep the feasible solutions. Vertices of a bounded polyhedron are
  /// exactly the feasible basic solutions, so dedup yields an irredundant
  /// list.
  static PolytopeT from_halfspaces(int dim, std::vector<Halfspace> halfspaces,
                                   const Ops& ops = {}) {
    PolytopeT p;
    p.dim_ = dim;
    p.halfspaces_ = std::move(halfspaces);
    int m = static_cast<int>(p.halfspaces_.size());
    std::vector<int> subset(dim);
    auto try_subset = [&](const std::vector<int>& idx) {
      std::vector<std::vector<Scalar>> mat;
      std::vector<Scalar> rhs;
      for (int i : idx) {
        mat.push_back(p.halfspaces_[i].normal);
        rhs.push_back(p.halfspaces_[i].offset);
      }
      auto x = detail::solve_linear<Ops>(mat, rhs, ops);
      if (!x) return;
      if (!p.contains(*x, ops)) return;
      for (const auto& v : p.vertices_) {
        bool same = true;
        for (int c = 0; c < dim; ++c)
          if (!ops.eq(v[c], (*x)[c])) {
            same = false;
            break;
          }
        if (same) return;
      }
      p.vertices_.push_back(std::move(*x));
    };
    enumerate_subsets(m, dim, subset, 0, 0, try_subset);
    p.sort_vertices(ops);
    p.affine_dim_ = detail::affine_dimension<Ops>(p.vertices_, ops);
    if (p.affine_dim_ == p.dim_) p.prune_non_facets(ops);
    return p;
  }

  /// Convex hull: halfspaces from all (dim-1)-subsets of vertices that
  /// support the set, then a re-enumeration for the canonical vertex list.
  /// Supports dim <= 3; requires a full-dimensional input.
  static PolytopeT from_vertices(int dim, const std::vector<Point>& points,
                                 const Ops& ops = {}) {
    if (dim < 1 || dim > 3)
      throw std::domain_error("hull construction supports dim 1..3");
    if (detail::affine_dimension<Ops>(points, ops) != dim)
      throw std::domain_error("vertex set is degenerate for this dimension");
    std::vector<Halfspace> halfspaces;
    auto add_candidate = [&](std::vector<Scalar> normal, const Point& base) {
      bool zero = true;
      for (const auto& c : normal)
        if (ops.sign(c) != 0) zero = false;
      if (zero) return;
      Scalar offset = dot(normal, base);
      int side = 0;
      for (const auto& q : points) {
        int s = ops.sign(dot(normal, q) - offset);
        if (s == 0) continue;
        if (side == 0) side = s;
        else if (side != s) return;  // cuts through the set
      }
      if (side > 0) {
        for (auto& c : normal) c = Scalar{} - c;
        offset = Scalar{} - offset;
      }
      canonicalize(normal, offset, ops);
      for (const auto& h : halfspaces) {
        bool same = ops.eq(h.offset, offset);
        for (int c = 0; c < dim && same; ++c) same = ops.eq(h.normal[c], normal[c]);
        if (same) return;
      }
      halfspaces.push_back({std::move(normal), std::move(offset)});
    };

    int v = static_cast<int>(points.size());
    if (dim == 1) {
      for (const auto& q : points) {
        add_candidate({Scalar{} + make_one()}, q);
        add_candidate({Scalar{} - make_one()}, q);
      }
    } else if (dim == 2) {
      for (int i = 0; i < v; ++i)
        for (int k = i + 1; k < v; ++k) {
          Scalar dx = points[k][0] - points[i][0];
          Scalar dy = points[k][1] - points[i][1];
          add_candidate({Scalar{} - dy, dx}, points[i]);
        }
    } else {
      for (int i = 0; i < v; ++i)
        for (int k = i + 1; k < v; ++k)
          for (int l = k + 1; l < v; ++l) {
            std::vector<Scalar> u(3), w(3);
            for (int c = 0; c < 3; ++c) {
              u[c] = points[k][c] - points[i][c];
              w[c] = points[l][c] - points[i][c];
            }
            std::vector<Scalar> normal{u[1] * w[2] - u[2] * w[1],
                                       u[2] * w[0] - u[0] * w[2],
                                       u[0] * w[1] - u[1] * w[0]};
            add_candidate(std::move(normal), points[i]);
          }
    }
    return from_halfspaces(dim, std::move(halfspaces), ops);
  }

  /// Intersection: pool the halfspaces and re-enumerate.
  friend PolytopeT intersect(const PolytopeT& a, const PolytopeT& b) {
    if (a.dim_ != b.dim_) throw std::domain_error("dimension mismatch");
    std::vector<Halfspace> pooled = a.halfspaces_;
    pooled.insert(pooled.end(), b.halfspaces_.begin(), b.halfspaces_.end());
    return from_halfspaces(a.dim_, std::move(pooled));
  }

  PolytopeT cut_with(Halfspace h, const Ops& ops = {}) const {
    std::vector<Halfspace> pooled = halfspaces_;
    pooled.push_back(std::move(h));
    return from_halfspaces(dim_, std::move(pooled), ops);
  }

  /// Set equality of the vertex lists.
  bool same_vertices(const std::vector<Point>& expected, const Ops& ops = {}) const {
    if (vertices_.size() != expected.size()) return false;
    for (const auto& e : expected) {
      bool found = false;
      for (const auto& v : vertices_) {
        bool same = true;
        for (size_t c = 0; c < e.size() && same; ++c) same = ops.eq(v[c], e[c]);
        if (same) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  static Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar sum{};
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
  }

 private:
  static Scalar make_one() {
    if constexpr (std::is_same_v<Scalar, double>) return 1.0;
    else return Scalar(1);
  }

  template <class F>
  static void enumerate_subsets(int m, int k, std::vector<int>& subset,
                                int pos, int start, const F& f) {
    if (pos == k) {
      f(subset);
      return;
    }
    for (int i = start; i <= m - (k - pos); ++i) {
      subset[pos] = i;
      enumerate_subsets(m, k, subset, pos + 1, i + 1, f);
    }
  }

  /// Scale so the first nonzero normal component is +-1; fixes a canonical
  /// representative for dedup.
  static void canonicalize(std::vector<Scalar>& normal, Scalar& offset,
                           const Ops& ops) {
    for (const auto& c : normal) {
      int s = ops.sign(c);
      if (s == 0) continue;
      Scalar scale = s > 0 ? c : Scalar{} - c;
      for (auto& x : normal) x = x / scale;
      offset = offset / scale;
      return;
    }
  }

  void sort_vertices(const Ops& ops) {
    std::sort(vertices_.begin(), vertices_.end(),
              [&](const Point& a, const Point& b) {
                for (size_t c = 0; c < a.size(); ++c) {
                  if (ops.less(a[c], b[c])) return true;
                  if (ops.less(b[c], a[c])) return false;
                }
                return false;
              });
  }

  /// Keep only halfspaces whose incidence set spans a facet; applies to
  /// full-dimensional polytopes.
  void prune_non_facets(const Ops& ops) {
    std::vector<Halfspace> kept;
    for (auto& h : halfspaces_) {
      std::vector<Point> incident;
      for (const auto& v : vertices_)
        if (ops.sign(dot(h.normal, v) - h.offset) == 0) incident.push_back(v);
      if (detail::affine_dimension<Ops>(incident, ops) == dim_ - 1)
        kept.push_back(std::move(h));
    }
    halfspaces_ = std::move(kept);
  }

  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<Halfspace> halfspaces_;
};

using Polytope = PolytopeT<ExactOps>;
using PolytopeF = PolytopeT<FloatOps>;

}  // namespace rotstate
