#include "toriclab/lp.hpp"

#include "toriclab/lattice.hpp"

namespace toriclab {

void LinearSystem::add_equality(std::span<const Rational> row) {
  if (row.size() != variables) throw InputError("equality row length mismatch");
  equalities.append_row(row);
}

void LinearSystem::add_nonstrict(std::span<const Rational> row) {
  if (row.size() != variables) throw InputError("inequality row length mismatch");
  nonstrict.append_row(row);
}

void LinearSystem::add_strict(std::span<const Rational> row) {
  if (row.size() != variables) throw InputError("inequality row length mismatch");
  strict.append_row(row);
}

RatMatrix LinearSystem::stacked() const {
  return vstack({&equalities, &nonstrict, &strict}, variables);
}

std::optional<RatVector> nonnegative_solution(const RatMatrix& a,
                                              std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw InputError("nonnegative_solution shape mismatch");
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;

  RatMatrix t(m, width);
  std::vector<std::size_t> basis(m);
  RatVector cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t(i, j);
    cost[rhs] -= t(i, rhs);
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw Error("phase-one simplex unbounded (internal error)");

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j)
      if (t(leave, j) != 0) t(leave, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave && t(i, enter) != 0) t.add_row_multiple(i, leave, -t(i, enter));
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t(leave, j) != 0) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  if (cost[rhs] != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, rhs);
  return x;
}

namespace {

RatMatrix kernel_columns(const RatMatrix& equalities, std::size_t n) {
  if (equalities.rows() == 0) return to_rational(IntMatrix::identity(n));
  const auto basis = nullspace(equalities);
  RatMatrix k(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j) = Rational(basis[j][i]);
  return k;
}

RatVector scale_to_primitive(const RatVector& v) {
  const IntVector p = primitive(std::span<const Rational>(v));
  return to_rational(std::span<const Integer>(p));
}

}  // namespace

FeasibilityOutcome strict_lp_feasibility(const LinearSystem& sys) {
  const std::size_t n = sys.variables;
  const RatMatrix k = kernel_columns(sys.equalities, n);
  const std::size_t p = k.cols();
  const RatMatrix b = sys.nonstrict * k;
  const RatMatrix c = sys.strict * k;
  const std::size_t q1 = b.rows();
  const std::size_t q2 = c.rows();

  FeasibilityOutcome out;
  if (q2 == 0) {
    out.status = Feasibility::feasible;
    out.witness = RatVector(n, Rational(0));
    return out;
  }

  // Primal: z = z+ - z-, B z - s = 0, C z - s' = 1.
  {
    RatMatrix a(q1 + q2, 2 * p + q1 + q2);
    RatVector rhs(q1 + q2, Rational(0));
    for (std::size_t i = 0; i < q1; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        a(i, j) = b(i, j);
        a(i, p + j) = -b(i, j);
      }
      a(i, 2 * p + i) = -1;
    }
    for (std::size_t i = 0; i < q2; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        a(q1 + i, j) = c(i, j);
        a(q1 + i, p + j) = -c(i, j);
      }
      a(q1 + i, 2 * p + q1 + i) = -1;
      rhs[q1 + i] = 1;
    }
    if (auto sol = nonnegative_solution(a, rhs)) {
      RatVector z(p);
      for (std::size_t j = 0; j < p; ++j) z[j] = (*sol)[j] - (*sol)[p + j];
      out.status = Feasibility::feasible;
      out.witness = k * z;
      if (!verify_witness(sys, *out.witness))
        throw Error("strict LP produced an invalid witness (internal error)");
      return out;
    }
  }

  // Dual (Motzkin alternative): mu, nu >= 0, mu B + nu C = 0, sum nu = 1.
  RatMatrix a(p + 1, q1 + q2);
  RatVector rhs(p + 1, Rational(0));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < q1; ++i) a(j, i) = b(i, j);
    for (std::size_t i = 0; i < q2; ++i) a(j, q1 + i) = c(i, j);
  }
  for (std::size_t i = 0; i < q2; ++i) a(p, q1 + i) = 1;
  rhs[p] = 1;
  auto mult = nonnegative_solution(a, rhs);
  if (!mult) throw Error("strict LP: neither witness nor certificate (internal error)");

  // Equality multipliers: lambda^T E = -(mu^T N + nu^T S).
  const std::size_t ne = sys.equalities.rows();
  RatVector combo(n, Rational(0));
  for (std::size_t i = 0; i < q1; ++i)
    if ((*mult)[i] != 0)
      for (std::size_t j = 0; j < n; ++j) combo[j] -= (*mult)[i] * sys.nonstrict(i, j);
  for (std::size_t i = 0; i < q2; ++i)
    if ((*mult)[q1 + i] != 0)
      for (std::size_t j = 0; j < n; ++j) combo[j] -= (*mult)[q1 + i] * sys.strict(i, j);
  RatVector lambda(ne, Rational(0));
  if (ne > 0) {
    auto sol = solve_rational(sys.equalities.transpose(), combo);
    if (!sol) throw Error("strict LP: equality multipliers not solvable (internal error)");
    lambda = *sol;
  } else if (!is_zero(std::span<const Rational>(combo))) {
    throw Error("strict LP: inconsistent certificate (internal error)");
  }

  RatVector cert;
  cert.reserve(ne + q1 + q2);
  cert.insert(cert.end(), lambda.begin(), lambda.end());
  cert.insert(cert.end(), mult->begin(), mult->end());
  out.status = Feasibility::infeasible;
  out.certificate = scale_to_primitive(cert);
  if (!verify_certificate(sys, *out.certificate))
    throw Error("strict LP produced an invalid certificate (internal error)");
  return out;
}

FeasibilityOutcome strict_lp_feasibility(const RatMatrix& equalities,
                                         const RatMatrix& strict) {
  if (equalities.rows() > 0 && strict.rows() > 0 && equalities.cols() != strict.cols())
    throw InputError("strict_lp_feasibility: column mismatch");
  const std::size_t n = strict.rows() > 0 ? strict.cols() : equalities.cols();
  LinearSystem sys(n);
  for (std::size_t i = 0; i < equalities.rows(); ++i) sys.add_equality(equalities.row(i));
  for (std::size_t i = 0; i < strict.rows(); ++i) sys.add_strict(strict.row(i));
  return strict_lp_feasibility(sys);
}

bool verify_witness(const LinearSystem& sys, std::span<const Rational> x) {
  if (x.size() != sys.variables) return false;
  for (std::size_t i = 0; i < sys.equalities.rows(); ++i)
    if (dot(sys.equalities.row(i), x) != 0) return false;
  for (std::size_t i = 0; i < sys.nonstrict.rows(); ++i)
    if (dot(sys.nonstrict.row(i), x) < 0) return false;
  for (std::size_t i = 0; i < sys.strict.rows(); ++i)
    if (dot(sys.strict.row(i), x) <= 0) return false;
  return true;
}

bool verify_certificate(const LinearSystem& sys, std::span<const Rational> y) {
  if (y.size() != sys.constraint_count()) return false;
  const std::size_t ne = sys.equalities.rows();
  const std::size_t nn = sys.nonstrict.rows();
  bool some_strict = false;
  for (std::size_t i = ne; i < y.size(); ++i) {
    if (y[i] < 0) return false;
    if (i >= ne + nn && y[i] > 0) some_strict = true;
  }
  if (!some_strict) return false;
  const RatVector combo = left_multiply(y, sys.stacked());
  return is_zero(std::span<const Rational>(combo));
}

}  // namespace toriclab
