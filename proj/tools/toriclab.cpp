// toriclab: command-line front end for the fan library.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input
// error, 3 internal inconsistency (two independent checks disagree).

#include "toriclab/divisoriality.hpp"
#include "toriclab/gale.hpp"
#include "toriclab/io.hpp"
#include "toriclab/lattice.hpp"
#include "toriclab/random_fans.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace toriclab;

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, inconsistent = 3 };

struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::size_t k = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string out;
  std::size_t n = 3;
  std::size_t d = 5;
  std::size_t count = 100;

  bool json_output() const { return format == "json"; }
};

// --- formatting helpers -----------------------------------------------------

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vec(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string one_based(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i] + 1);
  return out + "}";
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, to_string(m(i, j)).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto c = to_string(m(i, j));
      os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
}

json ints(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(json::parse(to_string(x)));
  return a;
}

json rats(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (denominator(x) == 1)
      a.push_back(json::parse(to_string(numerator(x))));
    else
      a.push_back(to_string(x));
  }
  return a;
}

json rows(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(ints(v));
  return a;
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream o(p);
  if (!o) throw InputError("cannot write " + p.string());
  o << text;
}

void need_files(const Options& o, std::size_t count, const char* usage) {
  if (o.files.size() != count) throw InputError(o.command + " expects " + usage);
}

std::string stem_of(const Fan& f, const std::string& path) {
  if (!f.name().empty()) return f.name();
  auto s = fs::path(path).filename().string();
  const auto dot = s.find('.');
  return dot == std::string::npos ? s : s.substr(0, dot);
}

json violations_json(const ValidationReport& rep) {
  json a = json::array();
  for (const auto& v : rep.violations) {
    json e{{"kind", to_string(v.kind)}, {"cones", v.cones}, {"message", v.message}};
    if (v.ray) e["ray"] = *v.ray;
    a.push_back(e);
  }
  return a;
}

void print_violations(std::ostream& os, const ValidationReport& rep) {
  for (const auto& v : rep.violations) os << "  " << to_string(v.kind) << ": " << v.message << '\n';
}

// Reads a fan and requires it to be a valid fan; prints violations otherwise.
std::optional<Fan> valid_fan(const Options& o, const std::string& path) {
  Fan f = read_fan(path);
  const auto rep = validate_fan(f);
  if (rep.valid()) return f;
  if (o.json_output()) {
    std::cout << json{{"file", path}, {"valid", false}, {"violations", violations_json(rep)}}.dump(2)
              << '\n';
  } else {
    std::cout << path << ": not a fan\n";
    print_violations(std::cout, rep);
  }
  return std::nullopt;
}

// --- commands ---------------------------------------------------------------

int cmd_validate(const Options& o) {
  need_files(o, 1, "one fan file");
  const Fan f = read_fan(o.files[0]);
  const auto rep = validate_fan(f);
  if (o.json_output()) {
    std::cout << json{{"valid", rep.valid()}, {"violations", violations_json(rep)}}.dump(2) << '\n';
  } else {
    std::cout << o.files[0] << ": " << (rep.valid() ? "valid fan" : "not a fan") << '\n';
    print_violations(std::cout, rep);
  }
  return rep.valid() ? ok : negative;
}

struct Projectivity {
  ProjectivityVerdict verdict;
  bool verified = false;
};

Projectivity run_test(const Fan& f, ProjectivityMethod m) {
  Projectivity p{m == ProjectivityMethod::shephard ? shephard_test(f) : support_function_test(f), false};
  p.verified = verify_verdict(f, p.verdict);
  if (!p.verified) throw Inconsistency(to_string(m) + " verdict failed independent verification");
  return p;
}

int cmd_analyze(const Options& o) {
  need_files(o, 1, "one fan file");
  auto f = valid_fan(o, o.files[0]);
  if (!f) return negative;
  const bool simplicial = is_simplicial(*f);
  const bool complete = is_complete(*f);
  const bool nondegenerate = is_nondegenerate(*f);
  const std::size_t cartier_rank = cartier_lattice(*f).rank();

  std::optional<Projectivity> sh, sf;
  if (complete && nondegenerate) {
    sh = run_test(*f, ProjectivityMethod::shephard);
    sf = run_test(*f, ProjectivityMethod::support_function);
  }
  const bool disagree = sh && sf && sh->verdict.strongly_polytopal != sf->verdict.strongly_polytopal;

  if (o.json_output()) {
    auto proj = [](const std::optional<Projectivity>& p) -> json {
      if (!p) return nullptr;
      json e{{"strongly_polytopal", p->verdict.strongly_polytopal}, {"verified", p->verified}};
      if (p->verdict.witness) e["witness"] = ints(*p->verdict.witness);
      if (p->verdict.certificate) e["certificate"] = rats(*p->verdict.certificate);
      return e;
    };
    std::cout << json{{"file", o.files[0]},
                      {"rays", f->ray_count()},
                      {"max_cones", f->max_cones().size()},
                      {"simplicial", simplicial},
                      {"complete", complete},
                      {"nondegenerate", nondegenerate},
                      {"projective_shephard", proj(sh)},
                      {"projective_support_function", proj(sf)},
                      {"cartier_rank", cartier_rank}}
                     .dump(2)
              << '\n';
  } else {
    auto proj = [](const std::optional<Projectivity>& p) -> std::string {
      if (!p) return "n/a (needs a complete nondegenerate fan)";
      return std::string(yes_no(p->verdict.strongly_polytopal)) +
             (p->verdict.strongly_polytopal ? " (witness verified)" : " (certificate verified)");
    };
    std::cout << "fan:                       " << (f->name().empty() ? o.files[0] : f->name()) << " in Z^"
              << f->rank() << ", " << f->ray_count() << " rays, " << f->max_cones().size()
              << " maximal cones\n"
              << "simplicial:                " << yes_no(simplicial) << '\n'
              << "complete:                  " << yes_no(complete) << '\n'
              << "nondegenerate:             " << yes_no(nondegenerate) << '\n'
              << "projective (shephard):     " << proj(sh) << '\n'
              << "projective (support fn):   " << proj(sf) << '\n'
              << "cartier rank:              " << cartier_rank << '\n';
  }
  if (disagree) throw Inconsistency("projectivity tests disagree");
  return ok;
}

int cmd_kdiv(const Options& o) {
  need_files(o, 1, "one fan file");
  if (o.k == 0) throw InputError("--k must be positive");
  auto f = valid_fan(o, o.files[0]);
  if (!f) return negative;
  const KDivReport rep = k_divisoriality(*f, o.k);
  if (o.json_output()) {
    std::cout << kdiv_report_to_json(rep);
  } else {
    std::cout << "k = " << rep.k << " (cone subsets of size " << rep.subset_size << ")\n";
    if (!rep.presentation_ok)
      std::cout << "Cartier quotient presentation fails: " << rep.presentation_failure << '\n';
    if (rep.invariance_notions_may_differ)
      std::cout << "note: the Cartier lattice is not saturated; invariance is taken as "
                   "orthogonality to the kernel\n";
    for (const auto& s : rep.subsets) {
      std::cout << "cones " << one_based(s.cones) << ": " << (s.feasible ? "feasible" : "infeasible") << '\n';
      if (s.witness) {
        const auto divs = witness_divisors(*s.witness);
        for (std::size_t i = 0; i < divs.size(); ++i)
          std::cout << "  f" << s.cones[i] + 1 << " = z^" << vec(s.witness->exponents[i]) << "   D = " << divs[i]
                    << '\n';
      }
      if (s.certificate) std::cout << "  relation: " << s.certificate->relation << " with all exponents positive\n";
    }
    std::cout << (rep.k_divisorial ? "" : "not ") << rep.k << "-divisorial\n";
    for (const auto& s : rep.subsets)
      if (!s.feasible) {
        std::cout << "failing subset: " << one_based(s.cones) << '\n';
        break;
      }
  }
  return rep.k_divisorial ? ok : negative;
}

int cmd_quotient_check(const Options& o) {
  need_files(o, 3, "SOURCE_FAN MAP TARGET_FAN");
  auto source = valid_fan(o, o.files[0]);
  if (!source) return negative;
  const LatticeMap p = read_lattice_map(o.files[1]);
  auto target = valid_fan(o, o.files[2]);
  if (!target) return negative;
  const QuotientDiagram q = check_geometric_quotient(*source, p, *target);
  const QuasiaffineReport qa = check_quasiaffine(*source);

  if (o.json_output()) {
    json matches = json::array();
    for (const auto& m : q.image_match) matches.push_back(m ? json(*m) : json(nullptr));
    std::cout << json{{"geometric_quotient", q.geometric_quotient()},
                      {"injective_on_cones", q.cones_injective},
                      {"images_are_target_cones", q.image_is_target},
                      {"bijective_on_cones", q.bijective_on_cones},
                      {"image_match", matches},
                      {"source_dims", q.source_dims},
                      {"image_dims", q.image_dims},
                      {"kernel_basis", rows(q.kernel_basis)},
                      {"source_in_one_pointed_cone", qa.ok()},
                      {"failure", q.failure}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "injective on all source cones:  " << yes_no(q.cones_injective) << '\n'
              << "images are target cones:        " << yes_no(q.image_is_target) << '\n'
              << "bijective on maximal cones:     " << yes_no(q.bijective_on_cones) << '\n';
    for (std::size_t s = 0; s < q.image_match.size(); ++s) {
      std::cout << "  cone " << s + 1 << ": dim " << q.source_dims[s] << " -> " << q.image_dims[s];
      if (q.image_match[s]) std::cout << ", image = target cone " << *q.image_match[s] + 1;
      std::cout << '\n';
    }
    std::cout << "source cones are faces of one pointed cone: " << yes_no(qa.ok()) << '\n';
    std::cout << "kernel basis:";
    for (const auto& v : q.kernel_basis) std::cout << ' ' << vec(v);
    std::cout << '\n'
              << (q.geometric_quotient() ? "geometric quotient verified" : "not a geometric quotient: " + q.failure)
              << '\n';
  }
  return q.geometric_quotient() ? ok : negative;
}

int cmd_cox(const Options& o) {
  need_files(o, 1, "one fan file");
  auto f = valid_fan(o, o.files[0]);
  if (!f) return negative;
  const CoxLift lift = cox_lift(*f);
  const std::string stem = stem_of(*f, o.files[0]);
  if (!o.out.empty()) {
    write_file(fs::path(o.out) / (stem + "-coxlift.fan.json"), fan_to_json(lift.lifted));
    write_file(fs::path(o.out) / (stem + "-Q.map.json"), lattice_map_to_json(lift.q));
  }
  if (o.json_output()) {
    json doc{{"lifted", json::parse(fan_to_json(lift.lifted))},
             {"q", json::parse(lattice_map_to_json(lift.q))},
             {"kernel_rank", lift.kernel_basis.size()},
             {"kernel_basis", rows(lift.kernel_basis)}};
    doc["complement_dimension"] =
        lift.complement_dimension ? json(*lift.complement_dimension) : json(nullptr);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "Cox lift in Z^" << lift.lifted.rank() << " with " << lift.lifted.max_cones().size()
              << " maximal cones\nQ =\n";
    print_matrix(std::cout, lift.q.matrix, "  ");
    std::cout << "kernel rank: " << lift.kernel_basis.size() << '\n';
    for (const auto& v : lift.kernel_basis) std::cout << "  " << vec(v) << '\n';
    if (lift.complement_dimension)
      std::cout << "complement dimension: " << *lift.complement_dimension << '\n';
    else
      std::cout << "complement: empty\n";
  }
  return ok;
}

int cmd_kajiwara(const Options& o) {
  need_files(o, 1, "one fan file");
  auto f = valid_fan(o, o.files[0]);
  if (!f) return negative;
  const KajiwaraPresentation k = kajiwara_data(*f);
  const std::string stem = stem_of(*f, o.files[0]);
  if (!o.out.empty()) {
    write_file(fs::path(o.out) / (stem + "-Q1.map.json"), lattice_map_to_json(k.q1));
    if (k.hat) write_file(fs::path(o.out) / (stem + "-kajiwara.fan.json"), fan_to_json(*k.hat));
  }
  if (o.json_output()) {
    json doc{{"q1", json::parse(lattice_map_to_json(k.q1))},
             {"cartier_rank", k.cartier.rank()},
             {"kernel_rank", k.kernel_basis.size()},
             {"kernel_basis", rows(k.kernel_basis)},
             {"saturation_index", json::parse(to_string(k.saturation_index))},
             {"presentation_ok", k.checks.ok()},
             {"failure", k.checks.failure}};
    doc["hat"] = k.hat ? json::parse(fan_to_json(*k.hat)) : json(nullptr);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "Cartier lattice rank: " << k.cartier.rank() << "\nQ1 =\n";
    print_matrix(std::cout, k.q1.matrix, "  ");
    std::cout << "kernel rank: " << k.kernel_basis.size() << '\n';
    for (const auto& v : k.kernel_basis) std::cout << "  " << vec(v) << '\n';
    if (k.saturation_index != 1)
      std::cout << "Cartier lattice has index " << k.saturation_index << " in its saturation\n";
    std::cout << (k.checks.ok() ? "quotient presentation: ok" : "quotient presentation fails: " + k.checks.failure)
              << '\n';
  }
  return k.checks.ok() ? ok : negative;
}

int cmd_random_fans(const Options& o) {
  if (!o.files.empty()) throw InputError("random-fans takes no files");
  Rng rng(o.seed);
  std::size_t polytopal = 0;
  json fans = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const Fan f = random_kleinschmidt_fan(o.n, o.d, rng);
    if (!validate_fan(f).valid() || !is_complete(f))
      throw Inconsistency("generated fan " + std::to_string(i + 1) + " is not a complete fan");
    const auto sh = run_test(f, ProjectivityMethod::shephard);
    const auto sf = run_test(f, ProjectivityMethod::support_function);
    if (sh.verdict.strongly_polytopal != sf.verdict.strongly_polytopal)
      throw Inconsistency("projectivity tests disagree on generated fan " + std::to_string(i + 1));
    if (sh.verdict.strongly_polytopal) ++polytopal;
    if (!o.out.empty())
      write_file(fs::path(o.out) / ("random-" + std::to_string(i + 1) + ".fan.json"), fan_to_json(f));
    if (o.json_output()) fans.push_back(json::parse(fan_to_json(f)));
  }
  if (o.json_output()) {
    std::cout << json{{"n", o.n},       {"d", o.d},       {"count", o.count},
                      {"seed", o.seed}, {"strongly_polytopal", polytopal}, {"fans", fans}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "n=" << o.n << " d=" << o.d << " seed=" << o.seed << ": " << polytopal << '/' << o.count
              << " strongly polytopal\n";
  }
  return polytopal == o.count ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on rational polyhedral fans"};
  Options o;
  const std::vector<std::string> commands = {"validate", "analyze", "kdiv",       "quotient-check",
                                             "cox",      "kajiwara", "random-fans"};
  app.add_option("command", o.command, "Subcommand")->required()->check(CLI::IsMember(commands));
  app.add_option("files", o.files, "Input files (fans: *.fan.json, maps: *.map.json)");
  app.add_option("--k", o.k, "Number of points for kdiv");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for random-fans");
  app.add_option("--out", o.out, "Output directory for generated files");
  app.add_option("--n", o.n, "Ambient rank for random-fans");
  app.add_option("--d", o.d, "Number of rays for random-fans");
  app.add_option("--count", o.count, "Number of fans for random-fans");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  try {
    if (o.command == "validate") return cmd_validate(o);
    if (o.command == "analyze") return cmd_analyze(o);
    if (o.command == "kdiv") return cmd_kdiv(o);
    if (o.command == "quotient-check") return cmd_quotient_check(o);
    if (o.command == "cox") return cmd_cox(o);
    if (o.command == "kajiwara") return cmd_kajiwara(o);
    return cmd_random_fans(o);
  } catch (const InputError& e) {
    std::cerr << "toriclab: " << e.what() << '\n';
    return input_error;
  } catch (const Inconsistency& e) {
    std::cerr << "toriclab: internal inconsistency: " << e.what() << '\n';
    return inconsistent;
  } catch (const std::exception& e) {
    std::cerr << "toriclab: internal error: " << e.what() << '\n';
    return inconsistent;
  }
}
