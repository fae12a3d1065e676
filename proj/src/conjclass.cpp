#include "pauto/conjclass.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pauto {

BinarySequence::BinarySequence(std::vector<bool> prefix, std::vector<bool> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.empty()) throw std::invalid_argument("binary sequence needs a tail of period >= 1");
}

BinarySequence BinarySequence::support_of(const CoeffSequence& s) {
  std::vector<bool> prefix, tail;
  for (const auto& c : s.prefix()) prefix.push_back(!c.is_zero());
  for (const auto& c : s.tail()) tail.push_back(!c.is_zero());
  if (tail.empty()) tail.push_back(false);
  return {std::move(prefix), std::move(tail)};
}

bool BinarySequence::bit(std::size_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  return tail_[(k - prefix_.size()) % tail_.size()];
}

std::string BinarySequence::to_string() const {
  std::string s;
  for (bool b : prefix_) s += b ? '1' : '0';
  s += '(';
  for (bool b : tail_) s += b ? '1' : '0';
  s += ")*";
  return s;
}

std::string IndexPattern::to_string() const {
  std::ostringstream out;
  out << "(preamble " << preamble << ", period " << period << ", offsets {";
  for (std::size_t i = 0; i < offsets.size(); ++i) out << (i ? ", " : "") << offsets[i];
  out << "})";
  return out.str();
}

IndexPattern eventual_mismatch(const BinarySequence& lambda, const BinarySequence& mu) {
  IndexPattern pattern;
  pattern.preamble = std::max(lambda.preamble(), mu.preamble());
  pattern.period = std::lcm(lambda.period(), mu.period());
  for (std::size_t r = 0; r < pattern.period; ++r)
    if (lambda.bit(pattern.preamble + r) != mu.bit(pattern.preamble + r)) pattern.offsets.push_back(r);
  return pattern;
}

bool differ_infinitely(const BinarySequence& lambda, const BinarySequence& mu) {
  return !eventual_mismatch(lambda, mu).empty();
}

std::vector<BinarySequence> omega0_family(std::size_t count) {
  if (count < 2) throw std::invalid_argument("omega0_family needs count >= 2");
  std::vector<BinarySequence> family;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<bool> tail(i + 2, false);
    tail[0] = true;
    family.emplace_back(std::vector<bool>{}, std::move(tail));
  }
  return family;
}

CoeffSequence to_coeff_sequence(const BinarySequence& bits, unsigned p) {
  auto convert = [](const std::vector<bool>& v) {
    std::vector<Cyclotomic> out;
    for (bool b : v) out.emplace_back(b ? 1 : 0);
    return out;
  };
  return CoeffSequence(p, convert(bits.prefix()), convert(bits.tail()));
}

std::string searched_class_description(unsigned p) {
  return "beta in Q_{>0} * C_{" + std::to_string(p) + "^inf}, gamma in Q(zeta)^*";
}

namespace {

constexpr std::size_t kMaxWitnessBits = std::size_t{1} << 22;

std::size_t bit_length(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Exact positive d-th root of q, if rational.
std::optional<Rational> rational_root(const Rational& q, const Integer& d) {
  if (sgn(q) <= 0) return std::nullopt;
  if (q == 1) return Rational(1);
  if (d > bit_length(q)) return std::nullopt;
  const unsigned long n = d.get_ui();
  Integer num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n) == 0) return std::nullopt;
  return Rational(num, den);
}

Integer p_power(unsigned p, std::size_t k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

struct Candidate {
  Rational scale;
  RootOfUnity root;
};

// beta^(p^k + 1) for beta = scale * root.
std::optional<Cyclotomic> beta_power(const Candidate& beta, unsigned p, std::size_t k) {
  Cyclotomic rootpart = beta.root.pow_p_power_plus_one(static_cast<unsigned>(k)).to_field();
  if (beta.scale == 1) return rootpart;
  const std::size_t bits = bit_length(beta.scale);
  if (k > 64 || p_power(p, k) * bits > kMaxWitnessBits) return std::nullopt;
  const unsigned long e = Integer(p_power(p, k) + 1).get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), beta.scale.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), beta.scale.get_den_mpz_t(), e);
  return Cyclotomic(Rational(num, den)) * rootpart;
}

// Solves beta^(d_k) = q_k for the pair (kmin, k1), with d = p^k1 - p^kmin.
// The solution is unique up to a p^kmin-th root, which no constraint sees.
std::optional<Candidate> candidate_from_pair(const CoeffSequence& a, const CoeffSequence& b, std::size_t kmin,
                                             std::size_t k1) {
  const unsigned p = a.prime();
  const Cyclotomic q = (b.coeff(k1) / a.coeff(k1)) / (b.coeff(kmin) / a.coeff(kmin));
  const auto split = as_scaled_root(q, p);
  if (!split || sgn(split->scale) < 0) return std::nullopt;

  const Integer d = p_power(p, k1) - p_power(p, kmin);
  const auto r = rational_root(split->scale, d);
  if (!r) return std::nullopt;

  const RootOfUnity& t = split->root;
  if (t.is_identity()) return Candidate{*r, RootOfUnity(p)};
  const std::uint64_t pn = t.order();
  const std::uint64_t u = (pow_mod(p, k1 - kmin, pn) + pn - 1) % pn;  // p^(k1-kmin) - 1, a unit
  const std::uint64_t y = mul_mod(t.exponent(), inverse_mod(u, pn), pn);
  const RootOfUnity omega =
      RootOfUnity::from_exponent(p, t.level() + static_cast<unsigned>(kmin), static_cast<std::int64_t>(y));
  return Candidate{*r, omega};
}

struct Witness {
  Cyclotomic beta, gamma;
};

std::optional<Witness> solve_from(const CoeffSequence& a, const CoeffSequence& b, std::size_t start,
                                  std::size_t tail_start, std::size_t period, bool infinite_support) {
  const unsigned p = a.prime();
  auto in_support = [&](std::size_t k) { return !a.coeff(k).is_zero(); };

  const std::size_t scan_end = std::max(start, tail_start) + 2 * period;
  std::vector<std::size_t> first_two;
  for (std::size_t k = start; k < scan_end && first_two.size() < 2; ++k)
    if (in_support(k)) first_two.push_back(k);

  Candidate cand{Rational(1), RootOfUnity(p)};
  if (first_two.size() == 2) {
    auto c = candidate_from_pair(a, b, first_two[0], first_two[1]);
    if (!c) return std::nullopt;
    cand = *c;
  }
  // |beta| != 1 cannot match a periodic ratio at infinitely many k.
  if (infinite_support && cand.scale != 1) return std::nullopt;

  Cyclotomic gamma(1);
  if (!first_two.empty()) {
    const std::size_t k = first_two[0];
    const auto bp = beta_power(cand, p, k);
    if (!bp) return std::nullopt;
    gamma = a.coeff(k) * *bp / b.coeff(k);
  }

  // Past max(tail_start, level(omega)) beta^(p^k+1) = omega, so one full
  // period there settles every later index.
  const std::size_t window_end = std::max({start, tail_start, std::size_t{cand.root.level()}}) + period;
  for (std::size_t k = start; k < window_end; ++k) {
    if (!in_support(k)) continue;
    const auto bp = beta_power(cand, p, k);
    if (!bp || a.coeff(k) * *bp != gamma * b.coeff(k)) return std::nullopt;
  }
  return Witness{Cyclotomic(cand.scale) * cand.root.to_field(), gamma};
}

}  // namespace

ConjObstructionReport necessary_condition(const CoeffSequence& a, const CoeffSequence& b, std::size_t k0) {
  if (a.prime() != b.prime()) throw DomainError("sequences use different primes");
  const BinarySequence sa = BinarySequence::support_of(a), sb = BinarySequence::support_of(b);

  ConjObstructionReport report{ConjObstructionReport::Verdict::non_conjugate_certificate, {}, {}, 0, {}, {}};

  const IndexPattern mismatch = eventual_mismatch(sa, sb);
  if (!mismatch.empty()) {
    report.failing = mismatch;
    report.reason = "supports of a and b differ at infinitely many k";
    return report;
  }

  // Supports agree from the preamble on; the ratio b_k/a_k on the common
  // tail support must then be constant.
  const std::size_t tail_start = mismatch.preamble, period = mismatch.period;
  std::optional<Cyclotomic> first_ratio;
  IndexPattern ratio_mismatch{tail_start, period, {}};
  for (std::size_t r = 0; r < period; ++r) {
    const std::size_t k = tail_start + r;
    if (a.coeff(k).is_zero()) continue;
    const Cyclotomic ratio = b.coeff(k) / a.coeff(k);
    if (!first_ratio)
      first_ratio = ratio;
    else if (ratio != *first_ratio)
      ratio_mismatch.offsets.push_back(r);
  }
  if (!ratio_mismatch.empty()) {
    report.failing = ratio_mismatch;
    report.reason = "ratio b_k/a_k takes several values on the common periodic support";
    return report;
  }

  const bool infinite_support = first_ratio.has_value();
  for (std::size_t start = k0; start <= std::max(k0, tail_start); ++start) {
    // Finite mismatches before the tail rule out any start at or below them.
    bool supports_agree = true;
    for (std::size_t k = start; k < tail_start; ++k) supports_agree = supports_agree && sa.bit(k) == sb.bit(k);
    if (!supports_agree) continue;
    if (auto w = solve_from(a, b, start, tail_start, period, infinite_support)) {
      report.verdict = ConjObstructionReport::Verdict::condition_satisfiable;
      report.beta = std::move(w->beta);
      report.gamma = std::move(w->gamma);
      report.from_index = start;
      report.reason = start == k0 ? "condition holds" : "condition holds once the first indices are dropped";
      return report;
    }
  }
  throw std::logic_error("eventually satisfiable condition found no witness");
}

bool verify_subgroup_conjugator(const CoeffSequence& a, const CoeffSequence& b, const TriangularAffine& theta,
                                unsigned levels) {
  if (levels < 1) throw std::invalid_argument("levels must be at least 1");
  if (a.prime() != b.prime()) throw DomainError("sequences use different primes");
  const PlaneEndo t = theta.to_endo();
  for (unsigned n = 1; n <= levels; ++n) {
    const RootOfUnity alpha = RootOfUnity::primitive(a.prime(), n);
    if (compose(conj_closed_form(a, alpha), t) != compose(t, conj_closed_form(b, alpha))) return false;
  }
  return true;
}

}  // namespace pauto
