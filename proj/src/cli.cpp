#include "pauto/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pauto/conjclass.hpp"
#include "pauto/linearize.hpp"
#include "pauto/manifest.hpp"
#include "pauto/parse.hpp"

namespace pauto {

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<unsigned> p;
  std::optional<std::string> prefix, tail, prefix_b, tail_b;
  std::optional<std::string> alpha;
  std::optional<unsigned> max_degree, levels, k0, count, max_order, max_truncation;
  std::optional<std::string> theta, target, manifest;
  std::vector<std::string> endos;
};

std::vector<Cyclotomic> scalar_list(const std::string& text) {
  std::vector<Cyclotomic> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split_list(text)) out.push_back(parse_scalar(item));
  return out;
}

std::vector<Cyclotomic> tail_list(const std::optional<std::string>& text) {
  if (!text || *text == "zero") return {};
  auto block = scalar_list(*text);
  if (block.empty()) throw InputError("--tail needs `zero` or a non-empty list");
  return block;
}

// Sequence, prime and bounds from flags, falling back to a manifest.
class SequenceInputs {
 public:
  SequenceInputs(const Options& opt, std::istream& in) : opt_(opt) {
    if (opt.manifest) {
      std::string text;
      if (*opt.manifest == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream file(*opt.manifest);
        if (!file) throw InputError("cannot read manifest " + *opt.manifest);
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      manifest_ = parse_manifest(text);
    }
  }

  unsigned prime() const {
    if (opt_.p) {
      if (!is_prime(*opt_.p)) throw InputError(std::to_string(*opt_.p) + " is not prime");
      return *opt_.p;
    }
    if (manifest_) return manifest_->prime;
    throw InputError("--p is required");
  }

  CoeffSequence sequence(std::size_t index) const {
    const auto& prefix = index == 0 ? opt_.prefix : opt_.prefix_b;
    const auto& tail = index == 0 ? opt_.tail : opt_.tail_b;
    if (prefix || tail) return CoeffSequence(prime(), prefix ? scalar_list(*prefix) : std::vector<Cyclotomic>{}, tail_list(tail));
    if (manifest_ && manifest_->sequences.size() > index) return manifest_->sequences[index];
    throw InputError(index == 0 ? "sequence a needs --prefix or --tail" : "sequence b needs --prefix-b or --tail-b");
  }

  RootOfUnity alpha() const {
    if (opt_.alpha) return parse_alpha(*opt_.alpha, prime());
    if (manifest_ && !manifest_->alphas.empty()) return manifest_->alphas.front();
    throw InputError("--alpha is required");
  }

  std::optional<unsigned> bound(std::optional<unsigned> Options::*flag, std::optional<unsigned> Manifest::*field) const {
    if (opt_.*flag) return opt_.*flag;
    if (manifest_) return (*manifest_).*field;
    return std::nullopt;
  }

 private:
  const Options& opt_;
  std::optional<Manifest> manifest_;
};

unsigned required(std::optional<unsigned> v, const char* flag) {
  if (!v) throw InputError(std::string(flag) + " is required");
  return *v;
}

TriangularAffine triangular(const std::string& text) {
  auto theta = as_triangular_affine(parse_endo(text));
  if (!theta) throw InputError(text + " is not of the form (c*x1 + g(x2), b*x2 + b0)");
  return *theta;
}

CommandResult verify_formula_cmd(const Options& opt, std::istream& in) {
  const SequenceInputs inputs(opt, in);
  const CoeffSequence s = inputs.sequence(0);
  const RootOfUnity alpha = inputs.alpha();
  if (verify_formula(s, alpha, opt.max_truncation.value_or(0))) return {"OK: formula matches composition\n", "", 0};
  return {"MISMATCH: formula differs from composition\n", "", 1};
}

CommandResult linearize_cmd(const Options& opt) {
  if (!opt.target) throw InputError("--target is required");
  const LinearizationProblem problem{parse_endo(*opt.target), required(opt.max_degree, "--max-degree")};
  const LinearizationResult result = solve_linearization(problem, opt.p.value_or(0));
  std::ostringstream out;
  if (const auto* found = std::get_if<Linearization>(&result)) {
    out << "status: found\n"
        << "theta: " << found->theta.to_endo().to_string() << "\n"
        << "h: " << found->h.to_string() << "\n";
    return {out.str(), "", 0};
  }
  const auto& obstruction = std::get<Obstruction>(result);
  out << "status: obstruction\n"
      << "reason: "
      << (obstruction.kind == Obstruction::Kind::resonance ? "resonant monomial" : "degree bound exceeded") << "\n"
      << "obstruction degree: " << obstruction.degree << "\n";
  return {out.str(), "", 1};
}

CommandResult min_degree_cmd(const Options& opt, std::istream& in) {
  const SequenceInputs inputs(opt, in);
  const unsigned bound = required(inputs.bound(&Options::max_degree, &Manifest::max_degree), "--max-degree");
  const auto d = minimal_linearizer_degree(inputs.sequence(0), inputs.alpha(), bound);
  if (d) return {"minimal degree: " + std::to_string(*d) + "\n", "", 0};
  return {"minimal degree: none up to " + std::to_string(bound) + "\n", "", 1};
}

CommandResult nonconj_cmd(const Options& opt, std::istream& in) {
  const SequenceInputs inputs(opt, in);
  const CoeffSequence a = inputs.sequence(0), b = inputs.sequence(1);
  const std::size_t default_k0 = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t k0 = inputs.bound(&Options::k0, &Manifest::k0).value_or(static_cast<unsigned>(default_k0));
  const ConjObstructionReport report = necessary_condition(a, b, k0);
  std::ostringstream out;
  if (report.satisfiable()) {
    out << "CONDITION SATISFIABLE\n"
        << "from index: " << report.from_index << "\n"
        << "beta: " << report.beta->to_string() << "\n"
        << "gamma: " << report.gamma->to_string() << "\n";
  } else {
    out << "NON-CONJUGATE CERTIFICATE\n"
        << "reason: " << report.reason << "\n"
        << "failing indices: " << report.failing.to_string() << "\n";
  }
  out << "searched class: " << searched_class_description(a.prime()) << "\n";
  return {out.str(), "", report.satisfiable() ? 0 : 1};
}

CommandResult verify_conjugator_cmd(const Options& opt, std::istream& in) {
  const SequenceInputs inputs(opt, in);
  if (!opt.theta) throw InputError("--theta is required");
  const unsigned levels = required(inputs.bound(&Options::levels, &Manifest::levels), "--levels");
  const TriangularAffine theta = triangular(*opt.theta);
  const std::string range = "levels 1.." + std::to_string(levels);
  if (verify_subgroup_conjugator(inputs.sequence(0), inputs.sequence(1), theta, levels))
    return {"OK: theta intertwines the conjugated subgroups at " + range + "\n", "", 0};
  return {"FAIL: theta does not intertwine the conjugated subgroups at " + range + "\n", "", 1};
}

CommandResult omega_cmd(const Options& opt) {
  const auto family = omega0_family(required(opt.count, "--count"));
  std::ostringstream out;
  for (std::size_t i = 0; i < family.size(); ++i) out << "lambda" << i << ": " << family[i].to_string() << "\n";
  bool all = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) all = all && differ_infinitely(family[i], family[j]);
  out << "pairwise infinite disagreement: " << (all ? "yes" : "no") << "\n";
  return {out.str(), "", all ? 0 : 1};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& stdin_stream) {
  CLI::App app{"Exact computations with Pruefer subgroups of plane polynomial automorphisms", "pauto"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_sequence = [&](CLI::App* sub, bool two) {
    sub->add_option("--p", opt.p, "prime p");
    sub->add_option("--prefix", opt.prefix, "prefix a_0,...,a_{L-1}");
    sub->add_option("--tail", opt.tail, "`zero` or the repeating block");
    if (two) {
      sub->add_option("--prefix-b", opt.prefix_b, "prefix of the second sequence");
      sub->add_option("--tail-b", opt.tail_b, "tail of the second sequence");
    }
    sub->add_option("--manifest", opt.manifest, "JSON manifest file, or - for stdin");
  };

  auto* compose_cmd = app.add_subcommand("compose", "compose two maps, the first applied first");
  compose_cmd->add_option("maps", opt.endos, "two maps (f1, f2)")->required()->expected(2);
  auto* invert_cmd = app.add_subcommand("invert", "invert a triangular map (c*x1 + g(x2), b*x2 + b0)");
  invert_cmd->add_option("map", opt.endos, "the map")->required()->expected(1);
  auto* order_cmd = app.add_subcommand("order", "order of a map, searched up to --max-order");
  order_cmd->add_option("map", opt.endos, "the map")->required()->expected(1);
  order_cmd->add_option("--max-order", opt.max_order, "search bound")->default_val(64);
  auto* conjugate_cmd = app.add_subcommand("conjugate", "theta^-1 psi theta");
  conjugate_cmd->add_option("map", opt.endos, "psi")->required()->expected(1);
  conjugate_cmd->add_option("--theta", opt.theta, "triangular conjugator")->required();

  auto* formula_cmd = app.add_subcommand("verify-formula", "closed form of a^-1 phi a against composition");
  add_sequence(formula_cmd, false);
  formula_cmd->add_option("--alpha", opt.alpha, "alpha as j/p^n");
  formula_cmd->add_option("--max-truncation", opt.max_truncation, "largest truncation level N to check");

  auto* lin_cmd = app.add_subcommand("linearize", "find a triangular linearizer under a degree bound");
  lin_cmd->add_option("--target", opt.target, "map (alpha*x1 + S(x2), alpha*x2)");
  lin_cmd->add_option("--max-degree", opt.max_degree, "degree bound D");
  lin_cmd->add_option("--p", opt.p, "prime, needed only when alpha = 1");

  auto* min_cmd = app.add_subcommand("min-degree", "minimal linearizer degree of a^-1 phi_alpha a");
  add_sequence(min_cmd, false);
  min_cmd->add_option("--alpha", opt.alpha, "alpha as j/p^n");
  min_cmd->add_option("--max-degree", opt.max_degree, "largest degree to try");

  auto* nonconj = app.add_subcommand("nonconj-check", "necessary condition for conjugacy of two subgroups");
  add_sequence(nonconj, true);
  nonconj->add_option("--k0", opt.k0, "first index constrained (default: end of both prefixes)");

  auto* verify_conj = app.add_subcommand("verify-conjugator", "check a conjugator level by level");
  add_sequence(verify_conj, true);
  verify_conj->add_option("--theta", opt.theta, "triangular conjugator");
  verify_conj->add_option("--levels", opt.levels, "check alpha of level 1..levels");

  auto* omega = app.add_subcommand("omega-family", "pairwise infinitely differing 0/1 sequences");
  omega->add_option("--count", opt.count, "family size (>= 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {out.str(), err.str(), code == 0 ? 0 : 2};
  }

  try {
    if (compose_cmd->parsed())
      return {compose(parse_endo(opt.endos[0]), parse_endo(opt.endos[1])).to_string() + "\n", "", 0};
    if (invert_cmd->parsed()) return {ta_inverse(triangular(opt.endos[0])).to_endo().to_string() + "\n", "", 0};
    if (order_cmd->parsed()) {
      const auto order = endo_order(parse_endo(opt.endos[0]), required(opt.max_order, "--max-order"));
      if (order) return {"order: " + std::to_string(*order) + "\n", "", 0};
      return {"order: none up to " + std::to_string(*opt.max_order) + "\n", "", 1};
    }
    if (conjugate_cmd->parsed())
      return {conjugate(parse_endo(opt.endos[0]), triangular(*opt.theta)).to_string() + "\n", "", 0};
    if (formula_cmd->parsed()) return verify_formula_cmd(opt, stdin_stream);
    if (lin_cmd->parsed()) return linearize_cmd(opt);
    if (min_cmd->parsed()) return min_degree_cmd(opt, stdin_stream);
    if (nonconj->parsed()) return nonconj_cmd(opt, stdin_stream);
    if (verify_conj->parsed()) return verify_conjugator_cmd(opt, stdin_stream);
    if (omega->parsed()) return omega_cmd(opt);
  } catch (const std::exception& e) {
    return {"", std::string("error: ") + e.what() + "\n", 2};
  }
  return {"", "error: no command\n", 2};
}

}  // namespace pauto
