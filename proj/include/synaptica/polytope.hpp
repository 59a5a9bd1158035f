#pragma once

// Exact rational H-polytopes {x : A x = b, G x <= h}. Feasibility goes
// through a phase-1 simplex with Bland's rule, and an infeasible system comes
// back with a Farkas certificate. Vertices are enumerated over square
// subsystems of active inequalities after the equalities are eliminated.

#include <synaptica/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synaptica {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

struct HPolytope {
  std::size_t dim = 0;
  RationalMatrix eq_lhs;
  RationalVector eq_rhs;
  RationalMatrix le_lhs;
  RationalVector le_rhs;

  HPolytope() = default;
  explicit HPolytope(std::size_t d) : dim(d) {}

  void add_equality(RationalVector row, Rational rhs) {
    check_row(row);
    eq_lhs.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
  }
  void add_inequality(RationalVector row, Rational rhs) {
    check_row(row);
    le_lhs.push_back(std::move(row));
    le_rhs.push_back(std::move(rhs));
  }

  static Rational dot(const RationalVector& row, const RationalVector& x) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) s += row[j] * x[j];
    return s;
  }

  bool contains(const RationalVector& x) const {
    if (x.size() != dim) return false;
    for (std::size_t i = 0; i < eq_lhs.size(); ++i)
      if (dot(eq_lhs[i], x) != eq_rhs[i]) return false;
    for (std::size_t i = 0; i < le_lhs.size(); ++i)
      if (dot(le_lhs[i], x) > le_rhs[i]) return false;
    return true;
  }

 private:
  void check_row(const RationalVector& row) const {
    if (row.size() != dim) throw std::invalid_argument("constraint has wrong dimension");
  }
};

/// Multipliers y (equalities) and z >= 0 (inequalities) with
/// y'A + z'G = 0 and y'b + z'h < 0.
struct FarkasCertificate {
  RationalVector eq_multipliers;
  RationalVector le_multipliers;
  Rational value;  // y'b + z'h
};

inline bool verify_certificate(const HPolytope& p, const FarkasCertificate& c) {
  if (c.eq_multipliers.size() != p.eq_lhs.size() || c.le_multipliers.size() != p.le_lhs.size()) return false;
  RationalVector combo(p.dim, Rational(0));
  Rational value = 0;
  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) combo[j] += c.eq_multipliers[i] * p.eq_lhs[i][j];
    value += c.eq_multipliers[i] * p.eq_rhs[i];
  }
  for (std::size_t i = 0; i < p.le_lhs.size(); ++i) {
    if (c.le_multipliers[i] < 0) return false;
    for (std::size_t j = 0; j < p.dim; ++j) combo[j] += c.le_multipliers[i] * p.le_lhs[i][j];
    value += c.le_multipliers[i] * p.le_rhs[i];
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rational& q) { return q == 0; }) && value < 0 &&
         value == c.value;
}

namespace detail {

/// A point of {z >= 0 : M z = r}, or nothing. Phase-1 simplex with one
/// artificial per row; Bland's rule rules out cycling.
inline std::optional<RationalVector> standard_form_point(const RationalMatrix& M, const RationalVector& r,
                                                         std::size_t n) {
  const std::size_t m = M.size();
  const std::size_t cols = n + m;
  RationalMatrix T(m, RationalVector(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = r[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-M[i][j]) : M[i][j];
    T[i][n + i] = 1;
    T[i][cols] = flip ? Rational(-r[i]) : r[i];
    basis[i] = n + i;
  }
  // reduced costs of min sum(artificials); last entry is -objective
  RationalVector d(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[j] -= T[i][j];
    d[cols] -= T[i][cols];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot occur in phase 1
    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (d[enter] != 0) {
      const Rational f = d[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (T[leave][j] != 0) d[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (d[cols] != 0) return std::nullopt;
  RationalVector z(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = T[i][cols];
  return z;
}

struct Rref {
  RationalMatrix rows;               // reduced rows, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form of the first `cols` columns; trailing columns
/// ride along.
inline Rref rref(RationalMatrix rows, std::size_t cols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational piv = rows[r][c];
    for (auto& x : rows[r]) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank(const RationalMatrix& rows, std::size_t cols) { return rref(rows, cols).pivots.size(); }

/// Unique solution of the square system M y = r, if M is nonsingular.
inline std::optional<RationalVector> solve_square(const RationalMatrix& M, const RationalVector& r) {
  const std::size_t k = M.size();
  RationalMatrix aug(k);
  for (std::size_t i = 0; i < k; ++i) {
    aug[i] = M[i];
    aug[i].push_back(r[i]);
  }
  const auto red = rref(std::move(aug), k);
  if (red.pivots.size() != k) return std::nullopt;
  RationalVector y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = red.rows[i][k];
  return y;
}

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

}  // namespace detail

struct Feasibility {
  std::optional<RationalVector> point;
  std::optional<FarkasCertificate> certificate;
  bool feasible() const { return point.has_value(); }
};

/// A feasible point, or a Farkas certificate of infeasibility.
inline Feasibility feasibility(const HPolytope& p) {
  const std::size_t d = p.dim, me = p.eq_lhs.size(), mi = p.le_lhs.size();
  // x = u - w, slack s:  A u - A w = b,  G u - G w + s = h
  {
    RationalMatrix M;
    RationalVector r;
    const std::size_t n = 2 * d + mi;
    for (std::size_t i = 0; i < me; ++i) {
      RationalVector row(n, Rational(0));
      for (std::size_t j = 0; j < d; ++j) {
        row[j] = p.eq_lhs[i][j];
        row[d + j] = -p.eq_lhs[i][j];
      }
      M.push_back(std::move(row));
      r.push_back(p.eq_rhs[i]);
    }
    for (std::size_t i = 0; i < mi; ++i) {
      RationalVector row(n, Rational(0));
      for (std::size_t j = 0; j < d; ++j) {
        row[j] = p.le_lhs[i][j];
        row[d + j] = -p.le_lhs[i][j];
      }
      row[2 * d + i] = 1;
      M.push_back(std::move(row));
      r.push_back(p.le_rhs[i]);
    }
    if (auto z = detail::standard_form_point(M, r, n)) {
      RationalVector x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = (*z)[j] - (*z)[d + j];
      return {std::move(x), std::nullopt};
    }
  }
  // y = y+ - y-, z >= 0:  A'y + G'z = 0,  b'y + h'z = -1
  const std::size_t n = 2 * me + mi;
  RationalMatrix M;
  RationalVector r;
  for (std::size_t j = 0; j <= d; ++j) {
    RationalVector row(n, Rational(0));
    for (std::size_t i = 0; i < me; ++i) {
      const Rational& a = j < d ? p.eq_lhs[i][j] : p.eq_rhs[i];
      row[i] = a;
      row[me + i] = -a;
    }
    for (std::size_t i = 0; i < mi; ++i) row[2 * me + i] = j < d ? p.le_lhs[i][j] : p.le_rhs[i];
    M.push_back(std::move(row));
    r.push_back(j < d ? Rational(0) : Rational(-1));
  }
  const auto z = detail::standard_form_point(M, r, n);
  if (!z) throw std::logic_error("neither a feasible point nor a Farkas certificate");
  FarkasCertificate c;
  for (std::size_t i = 0; i < me; ++i) c.eq_multipliers.push_back((*z)[i] - (*z)[me + i]);
  for (std::size_t i = 0; i < mi; ++i) c.le_multipliers.push_back((*z)[2 * me + i]);
  c.value = -1;
  return {std::nullopt, std::move(c)};
}

/// dim - rank(A): dimension of the affine hull of the equality system.
inline std::size_t free_dimension(const HPolytope& p) { return p.dim - detail::rank(p.eq_lhs, p.dim); }

/// Rank of the equalities together with the inequalities tight at x.
inline std::size_t active_rank(const HPolytope& p, const RationalVector& x) {
  RationalMatrix rows = p.eq_lhs;
  for (std::size_t i = 0; i < p.le_lhs.size(); ++i)
    if (HPolytope::dot(p.le_lhs[i], x) == p.le_rhs[i]) rows.push_back(p.le_lhs[i]);
  return detail::rank(rows, p.dim);
}

inline bool is_vertex(const HPolytope& p, const RationalVector& x) {
  return p.contains(x) && active_rank(p, x) == p.dim;
}

/// All vertices, sorted lexicographically. Throws std::length_error when the
/// number of candidate bases exceeds `max_bases`.
inline std::vector<RationalVector> enumerate_vertices(const HPolytope& p, double max_bases = 5e6) {
  const std::size_t d = p.dim;
  RationalMatrix aug;
  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i) {
    aug.push_back(p.eq_lhs[i]);
    aug.back().push_back(p.eq_rhs[i]);
  }
  const auto red = detail::rref(std::move(aug), d);
  for (const auto& row : red.rows)
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d), [](const Rational& q) { return q == 0; }))
      return {};  // 0 = c with c != 0
  // x = x0 + N y over the free columns
  std::vector<char> is_pivot(d, 0);
  for (auto c : red.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) free.push_back(j);
  const std::size_t k = free.size();
  RationalVector x0(d, Rational(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x0[red.pivots[i]] = red.rows[i][d];
  RationalMatrix N(d, RationalVector(k, Rational(0)));
  for (std::size_t f = 0; f < k; ++f) {
    N[free[f]][f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) N[red.pivots[i]][f] = -red.rows[i][free[f]];
  }
  const std::size_t mi = p.le_lhs.size();
  RationalMatrix G(mi, RationalVector(k, Rational(0)));
  RationalVector h(mi);
  for (std::size_t i = 0; i < mi; ++i) {
    h[i] = p.le_rhs[i] - HPolytope::dot(p.le_lhs[i], x0);
    for (std::size_t f = 0; f < k; ++f)
      for (std::size_t j = 0; j < d; ++j)
        if (p.le_lhs[i][j] != 0 && N[j][f] != 0) G[i][f] += p.le_lhs[i][j] * N[j][f];
  }
  auto lift = [&](const RationalVector& y) {
    RationalVector x = x0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t f = 0; f < k; ++f)
        if (N[j][f] != 0) x[j] += N[j][f] * y[f];
    return x;
  };
  auto inside = [&](const RationalVector& y) {
    for (std::size_t i = 0; i < mi; ++i)
      if (HPolytope::dot(G[i], y) > h[i]) return false;
    return true;
  };
  if (k == 0) {
    if (inside({})) return {x0};
    return {};
  }
  // distinct nonzero rows are the only candidates for a basis
  std::vector<std::size_t> candidates;
  std::set<std::pair<RationalVector, Rational>> seen_rows;
  for (std::size_t i = 0; i < mi; ++i) {
    if (std::all_of(G[i].begin(), G[i].end(), [](const Rational& q) { return q == 0; })) continue;
    if (seen_rows.insert({G[i], h[i]}).second) candidates.push_back(i);
  }
  if (candidates.size() < k) return {};
  if (detail::binomial(candidates.size(), k) > max_bases) throw std::length_error("vertex enumeration too large");
  std::set<RationalVector> found;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    RationalMatrix M(k);
    RationalVector r(k);
    for (std::size_t i = 0; i < k; ++i) {
      M[i] = G[candidates[pick[i]]];
      r[i] = h[candidates[pick[i]]];
    }
    if (auto y = detail::solve_square(M, r); y && inside(*y)) found.insert(lift(*y));
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace synaptica
