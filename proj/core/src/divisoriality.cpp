#include "toriclab/divisoriality.hpp"

#include "toriclab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toriclab {

namespace {

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool in_cone(const Fan& f, std::size_t cone, std::size_t ray) {
  const auto& c = f.max_cones()[cone];
  return std::binary_search(c.begin(), c.end(), ray);
}

LinearSystem build_system(const KDivInstance& inst, const IndexSet& subset,
                          const std::vector<IntVector>& weight_vectors) {
  const std::size_t d = inst.fan.ray_count();
  const std::size_t s = subset.size();
  LinearSystem sys(s * d);
  auto row = [&] { return RatVector(s * d, Rational(0)); };

  for (std::size_t i = 0; i < s; ++i)
    for (auto j : inst.fan.max_cones()[subset[i]]) {
      auto r = row();
      r[i * d + j] = 1;
      sys.add_equality(r);
    }
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& w : inst.kajiwara.kernel_basis) {
      auto r = row();
      for (std::size_t j = 0; j < d; ++j) r[i * d + j] = Rational(w[j]);
      sys.add_equality(r);
    }
  for (std::size_t i = 1; i < s; ++i)
    for (const auto& w : weight_vectors) {
      auto r = row();
      for (std::size_t j = 0; j < d; ++j) {
        r[i * d + j] = Rational(w[j]);
        r[j] -= Rational(w[j]);
      }
      sys.add_equality(r);
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!in_cone(inst.fan, subset[i], j)) {
        auto r = row();
        r[i * d + j] = 1;
        sys.add_strict(r);
      }
  return sys;
}

void check_subset(const KDivInstance& inst, const IndexSet& subset) {
  if (subset.empty()) throw InputError("empty cone subset");
  for (auto c : subset)
    if (c >= inst.fan.max_cones().size()) throw InputError("cone index out of range");
}

// Weights of the strict rows, mapped onto the variables they bound.
IntVector strict_combination(const LinearSystem& sys, const RatVector& mult) {
  const std::size_t offset = sys.equalities.rows() + sys.nonstrict.rows();
  RatVector comb(sys.variables, Rational(0));
  for (std::size_t r = 0; r < sys.strict.rows(); ++r)
    for (std::size_t v = 0; v < sys.variables; ++v)
      if (sys.strict(r, v) != 0) comb[v] += mult[offset + r] * sys.strict(r, v);
  return primitive(std::span<const Rational>(comb));
}

InfeasibilityCertificate make_certificate(const KDivInstance& inst, const LinearSystem& sys,
                                          RatVector mult, std::size_t blocks) {
  InfeasibilityCertificate c;
  c.multipliers = std::move(mult);
  c.combination = strict_combination(sys, c.multipliers);
  c.relation = format_relation(c.combination, inst.fan.ray_count(), blocks);
  return c;
}

std::string variable_name(std::size_t block, std::size_t ray) {
  std::string name = block < 26 ? std::string(1, static_cast<char>('a' + block))
                                : "u" + std::to_string(block + 1) + "_";
  return name + std::to_string(ray + 1);
}

}  // namespace

KDivInstance make_kdiv_instance(const Fan& f, std::size_t k) {
  if (k == 0) throw InputError("k must be positive");
  KDivInstance inst;
  inst.fan = f;
  inst.k = k;
  inst.cox = cox_lift(f);
  inst.kajiwara = kajiwara_data(f);
  const std::size_t count = f.max_cones().size();
  inst.subsets = subsets_of_size(count, std::min(k, count));
  const auto divisors = elementary_divisors(inst.cox.q.matrix);
  if (!divisors.empty()) inst.weight_torsion_exponent = divisors.back();
  return inst;
}

LinearSystem subset_system(const KDivInstance& inst, const IndexSet& subset) {
  check_subset(inst, subset);
  return build_system(inst, subset, inst.cox.kernel_basis);
}

SubsetResult subset_feasibility(const KDivInstance& inst, const IndexSet& subset) {
  const LinearSystem sys = subset_system(inst, subset);
  const auto outcome = strict_lp_feasibility(sys);
  const std::size_t d = inst.fan.ray_count();
  const std::size_t s = subset.size();
  SubsetResult res;
  res.cones = subset;
  res.feasible = outcome.feasible();

  if (!outcome.feasible()) {
    res.certificate = make_certificate(inst, sys, *outcome.certificate, s);
    if (!verify_kdiv_certificate(inst, subset, *res.certificate))
      throw Error("divisoriality certificate failed verification (internal error)");
    return res;
  }

  // Clear denominators, then scale by the least t making every weight
  // difference an exact lattice relation.
  const IntVector base = primitive(std::span<const Rational>(*outcome.witness));
  const IntMatrix qt = inst.cox.q.matrix.transpose();
  auto exact_at = [&](const Integer& t) {
    for (std::size_t i = 1; i < s; ++i) {
      IntVector diff(d);
      for (std::size_t j = 0; j < d; ++j) diff[j] = t * (base[i * d + j] - base[j]);
      if (!in_lattice_image(diff, qt)) return false;
    }
    return true;
  };
  Integer scale = inst.weight_torsion_exponent;
  for (Integer t = 1; t <= inst.weight_torsion_exponent; ++t)
    if (inst.weight_torsion_exponent % t == 0 && exact_at(t)) {
      scale = t;
      break;
    }
  MonomialWitness w;
  w.cones = subset;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector u(d);
    for (std::size_t j = 0; j < d; ++j) u[j] = scale * base[i * d + j];
    w.exponents.push_back(std::move(u));
  }
  if (!verify_monomial_witness(inst, w))
    throw Error("monomial witness failed verification (internal error)");
  res.witness = std::move(w);
  return res;
}

bool verify_monomial_witness(const KDivInstance& inst, const MonomialWitness& w) {
  const std::size_t d = inst.fan.ray_count();
  if (w.cones.size() != w.exponents.size() || w.cones.empty()) return false;
  const IntMatrix qt = inst.cox.q.matrix.transpose();
  for (std::size_t i = 0; i < w.cones.size(); ++i) {
    const IntVector& u = w.exponents[i];
    if (u.size() != d || w.cones[i] >= inst.fan.max_cones().size()) return false;
    for (std::size_t j = 0; j < d; ++j) {
      const bool zero_here = in_cone(inst.fan, w.cones[i], j);
      if (zero_here && u[j] != 0) return false;
      if (!zero_here && u[j] < 1) return false;
    }
    for (const auto& k : inst.kajiwara.kernel_basis)
      if (dot(std::span<const Integer>(u), std::span<const Integer>(k)) != 0) return false;
    if (i > 0) {
      IntVector diff(d);
      for (std::size_t j = 0; j < d; ++j) diff[j] = u[j] - w.exponents[0][j];
      if (!in_lattice_image(diff, qt)) return false;
    }
  }
  return true;
}

bool verify_kdiv_certificate(const KDivInstance& inst, const IndexSet& subset,
                             const InfeasibilityCertificate& c) {
  const LinearSystem sys = subset_system(inst, subset);
  if (!verify_certificate(sys, c.multipliers)) return false;
  return strict_combination(sys, c.multipliers) == c.combination;
}

std::optional<InfeasibilityCertificate> contracted_certificate(
    const KDivInstance& inst, const IndexSet& subset, std::span<const Integer> kernel_vector) {
  check_subset(inst, subset);
  const std::size_t d = inst.fan.ray_count();
  if (kernel_vector.size() != d) throw InputError("kernel vector has wrong length");
  const IntVector w(kernel_vector.begin(), kernel_vector.end());
  if (!is_zero(std::span<const Integer>(inst.cox.q.matrix * w)))
    throw InputError("vector is not in the kernel of Q");

  const LinearSystem reduced = build_system(inst, subset, {w});
  const auto outcome = strict_lp_feasibility(reduced);
  if (outcome.feasible()) return std::nullopt;

  // Express w in the kernel basis and spread its multiplier accordingly.
  const auto& basis = inst.cox.kernel_basis;
  RatMatrix bt(d, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t j = 0; j < d; ++j) bt(j, b) = Rational(basis[b][j]);
  const auto alpha = solve_rational(bt, to_rational(std::span<const Integer>(w)));
  if (!alpha) throw Error("kernel vector not in the span of the kernel basis (internal error)");

  const LinearSystem full = subset_system(inst, subset);
  const RatVector& red = *outcome.certificate;
  const std::size_t s = subset.size();
  const std::size_t fixed = full.equalities.rows() - (s - 1) * basis.size();
  RatVector mult;
  mult.reserve(full.constraint_count());
  mult.insert(mult.end(), red.begin(), red.begin() + static_cast<std::ptrdiff_t>(fixed));
  for (std::size_t i = 1; i < s; ++i) {
    const Rational& lam = red[fixed + (i - 1)];
    for (std::size_t b = 0; b < basis.size(); ++b) mult.push_back(lam * (*alpha)[b]);
  }
  mult.insert(mult.end(), red.begin() + static_cast<std::ptrdiff_t>(fixed + (s - 1)), red.end());
  const IntVector scaled = primitive(std::span<const Rational>(mult));
  auto cert = make_certificate(inst, full, to_rational(std::span<const Integer>(scaled)), s);
  if (!verify_kdiv_certificate(inst, subset, cert))
    throw Error("contracted certificate failed verification (internal error)");
  return cert;
}

std::string format_relation(const IntVector& comb, std::size_t rays, std::size_t blocks) {
  auto render = [&](bool first_block, bool negate) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t b = 0; b < blocks; ++b) {
      if ((b == 0) != first_block) continue;
      for (std::size_t j = 0; j < rays; ++j) {
        Integer c = comb[b * rays + j];
        if (c == 0) continue;
        if (negate) c = -c;
        if (any) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const Integer mag = abs(c);
        if (mag != 1) os << mag;
        os << variable_name(b, j);
        any = true;
      }
    }
    return any ? os.str() : std::string("0");
  };
  return render(true, false) + " = " + render(false, true);
}

std::vector<std::string> witness_divisors(const MonomialWitness& w) {
  std::vector<std::string> out;
  for (const auto& u : w.exponents) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0) continue;
      if (any) os << " + ";
      if (u[j] != 1) os << u[j] << ' ';
      os << 'D' << j + 1;
      any = true;
    }
    out.push_back(any ? os.str() : "0");
  }
  return out;
}

KDivReport k_divisoriality(const Fan& f, std::size_t k) {
  const KDivInstance inst = make_kdiv_instance(f, k);
  KDivReport rep;
  rep.k = k;
  rep.subset_size = std::min(k, f.max_cones().size());
  rep.invariance_notions_may_differ = inst.kajiwara.saturation_index != 1;
  if (!inst.kajiwara.checks.ok()) {
    rep.presentation_ok = false;
    rep.presentation_failure = inst.kajiwara.checks.failure;
    rep.k_divisorial = false;
    return rep;
  }
  rep.k_divisorial = true;
  for (const auto& subset : inst.subsets) {
    rep.subsets.push_back(subset_feasibility(inst, subset));
    if (!rep.subsets.back().feasible) rep.k_divisorial = false;
  }
  return rep;
}

bool quasiprojectivity_via_corollary(const Fan& f) {
  return k_divisoriality(f, f.max_cones().size()).k_divisorial;
}

}  // namespace toriclab
