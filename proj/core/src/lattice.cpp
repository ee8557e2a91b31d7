#include "toriclab/lattice.hpp"

#include <algorithm>

namespace toriclab {

RowEchelon row_echelon(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a(i, c) != 0) a.add_row_multiple(i, r, -a(i, c));
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) reduced(i, k) = a(i, k);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).pivots.size(); }
std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<IntVector> nullspace(const RatMatrix& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      x[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(primitive(std::span<const Rational>(x)));
  }
  return basis;
}

std::vector<IntVector> nullspace(const IntMatrix& m) {
  return nullspace(to_rational(m));
}

std::vector<IntVector> row_space_basis(const IntMatrix& m) {
  const auto ech = row_echelon(to_rational(m));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < ech.reduced.rows(); ++i)
    out.push_back(primitive(ech.reduced.row(i)));
  return out;
}

std::optional<RatVector> solve_rational(const RatMatrix& m,
                                        std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InputError("solve_rational shape mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ech = row_echelon(aug);
  RatVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool found = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      found = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t j = 0; j < r; ++j) {
      const Integer q = floor_div(h(j, c), h(r, c));
      h.add_row_multiple(j, r, -q);
      u.add_row_multiple(j, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

namespace {

// Moves the smallest nonzero entry of row t / column t (from t onwards) into
// position (t, t). Returns false if both are zero.
bool bring_min_to_pivot(SmithForm& s, std::size_t t) {
  IntMatrix& d = s.d;
  std::size_t br = d.rows(), bc = d.cols();
  Integer best = -1;
  for (std::size_t i = t; i < d.rows(); ++i)
    if (d(i, t) != 0 && (best < 0 || abs(d(i, t)) < best)) {
      best = abs(d(i, t));
      br = i;
      bc = t;
    }
  for (std::size_t j = t + 1; j < d.cols(); ++j)
    if (d(t, j) != 0 && (best < 0 || abs(d(t, j)) < best)) {
      best = abs(d(t, j));
      br = t;
      bc = j;
    }
  if (best < 0) return false;
  d.swap_rows(t, br);
  s.u.swap_rows(t, br);
  d.swap_columns(t, bc);
  s.v.swap_columns(t, bc);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Global minimum of the trailing block as the first pivot.
    std::size_t br = d.rows(), bc = d.cols();
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (br == d.rows() || abs(d(i, j)) < abs(d(br, bc)))) {
          br = i;
          bc = j;
        }
    if (br == d.rows()) break;
    d.swap_rows(t, br);
    s.u.swap_rows(t, br);
    d.swap_columns(t, bc);
    s.v.swap_columns(t, bc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_column_multiple(j, t, -q);
        s.v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(s, t);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, Integer(1));
            s.u.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  return out;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  const auto hf = hermite_normal_form(generators);
  IntMatrix out(hf.rank, generators.cols());
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t c = 0; c < generators.cols(); ++c) out(i, c) = hf.h(i, c);
  return out;
}

std::vector<IntVector> rational_kernel_basis(const IntMatrix& m) {
  const auto hf = hermite_normal_form(m.transpose());
  IntMatrix gens(0, m.cols());
  for (std::size_t i = hf.rank; i < hf.u.rows(); ++i) gens.append_row(hf.u.row(i));
  return lattice_basis(gens).row_list();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return lattice_basis(a) == lattice_basis(b);
}

std::optional<IntVector> solve_integral(const IntMatrix& m,
                                        std::span<const Integer> u) {
  if (u.size() != m.rows()) throw InputError("solve_integral shape mismatch");
  // With U m^T = H, write x^T = y^T U so that y^T H = u^T.
  const auto hf = hermite_normal_form(m.transpose());
  const IntMatrix& h = hf.h;
  IntVector y(h.rows(), Integer(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    while (h(i, col) == 0) ++col;
    Integer rest = u[col];
    for (std::size_t j = 0; j < i; ++j) rest -= y[j] * h(j, col);
    if (rest % h(i, col) != 0) return std::nullopt;
    y[i] = rest / h(i, col);
  }
  if (left_multiply(std::span<const Integer>(y), h) != IntVector(u.begin(), u.end()))
    return std::nullopt;
  return left_multiply(std::span<const Integer>(y), hf.u);
}

bool in_lattice_image(std::span<const Integer> u, const IntMatrix& m) {
  return solve_integral(m, u).has_value();
}

Integer saturation_index(const IntMatrix& m) {
  Integer idx = 1;
  for (const auto& d : elementary_divisors(m)) idx *= d;
  return idx;
}

}  // namespace toriclab
