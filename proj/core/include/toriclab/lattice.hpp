#pragma once

#include "toriclab/matrix.hpp"

#include <optional>
#include <vector>

namespace toriclab {

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

/// Reduced row echelon form over Q together with the pivot columns.
struct RowEchelon {
  RatMatrix reduced;  // rank x cols, zero rows removed
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of {x in Q^cols : m x = 0}, one vector per free column, returned as
/// primitive integer vectors. Not saturated as a lattice basis; use
/// rational_kernel_basis for that.
std::vector<IntVector> nullspace(const RatMatrix& m);
std::vector<IntVector> nullspace(const IntMatrix& m);

/// Primitive integer basis of the row space of m (over Q).
std::vector<IntVector> row_space_basis(const IntMatrix& m);

/// Some x with m x = b over Q, if one exists.
std::optional<RatVector> solve_rational(const RatMatrix& m,
                                        std::span<const Rational> b);

/// Determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Integer normal forms and lattices
// ---------------------------------------------------------------------------

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form, zero rows at the bottom
  IntMatrix u;  // unimodular, h = u * m
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: upper echelon, pivots positive, entries
/// above a pivot reduced into [0, pivot). Pivot rows are chosen by smallest
/// absolute value, ties broken by smallest row index.
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, d(0,0) | d(1,1) | ... , all >= 0
  IntMatrix v;  // unimodular, cols x cols
};

/// d = u * m * v with d in Smith normal form.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

/// Lattice basis of ker(m) ∩ Z^cols (automatically saturated) in Hermite
/// normal form. Empty when m is injective.
std::vector<IntVector> rational_kernel_basis(const IntMatrix& m);

/// Hermite basis (nonzero HNF rows) of the lattice generated by the rows.
IntMatrix lattice_basis(const IntMatrix& generators);

/// True iff both row sets generate the same sublattice of Z^cols.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Integral x with m x = u, if one exists.
std::optional<IntVector> solve_integral(const IntMatrix& m,
                                        std::span<const Integer> u);

/// True iff u = m x for some integral x.
bool in_lattice_image(std::span<const Integer> u, const IntMatrix& m);

/// Index of the row lattice of m inside its saturation (Q-span ∩ Z^cols).
Integer saturation_index(const IntMatrix& m);

}  // namespace toriclab
