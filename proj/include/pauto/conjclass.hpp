#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pauto/endo.hpp"
#include "pauto/prufer.hpp"

namespace pauto {

/// Eventually periodic 0/1 sequence: a finite prefix followed by a
/// repeating block of length >= 1.
class BinarySequence {
 public:
  BinarySequence(std::vector<bool> prefix, std::vector<bool> tail);

  /// Support of a coefficient sequence: bit k is set iff a_k != 0.
  static BinarySequence support_of(const CoeffSequence& s);

  bool bit(std::size_t k) const;
  std::size_t preamble() const { return prefix_.size(); }
  std::size_t period() const { return tail_.size(); }
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& tail() const { return tail_; }

  std::string to_string() const;

 private:
  std::vector<bool> prefix_;
  std::vector<bool> tail_;
};

/// Indices preamble + period*m + offset (m >= 0, offset in offsets).
struct IndexPattern {
  std::size_t preamble = 0;
  std::size_t period = 1;
  std::vector<std::size_t> offsets;

  bool empty() const { return offsets.empty(); }
  std::string to_string() const;
};

/// The eventual disagreement pattern of two sequences, read over one lcm
/// period past both preambles.
IndexPattern eventual_mismatch(const BinarySequence& lambda, const BinarySequence& mu);

/// True iff lambda and mu disagree at infinitely many indices.
bool differ_infinitely(const BinarySequence& lambda, const BinarySequence& mu);

/// `count` sequences with pairwise infinite disagreement: sequence i has an
/// empty prefix and tail 1,0,...,0 of period i + 2. Requires count >= 2.
std::vector<BinarySequence> omega0_family(std::size_t count);

/// 0/1 coefficient sequence with the given bits.
CoeffSequence to_coeff_sequence(const BinarySequence& bits, unsigned p);

struct ConjObstructionReport {
  enum class Verdict { condition_satisfiable, non_conjugate_certificate };
  Verdict verdict;

  /// Witnesses when satisfiable: a_k beta^(p^k+1) = gamma b_k for k >= from_index.
  std::optional<Cyclotomic> beta;
  std::optional<Cyclotomic> gamma;
  std::size_t from_index = 0;

  /// Certificate: indices where the condition fails for every candidate.
  IndexPattern failing;
  std::string reason;

  bool satisfiable() const { return verdict == Verdict::condition_satisfiable; }
};

/// Decides whether some beta = r * omega (r rational > 0, omega in C_{p^inf})
/// and gamma != 0 satisfy a_k beta^(p^k+1) = gamma b_k for all k >= k0.
///
/// A certificate is issued only when the failure is eventual, i.e. the
/// condition fails for infinitely many k whatever beta and gamma are. If the
/// condition fails at k0 but holds from a later index, the report is
/// satisfiable with from_index set to the first index that works.
ConjObstructionReport necessary_condition(const CoeffSequence& a, const CoeffSequence& b, std::size_t k0);

/// Checks (a^-1 phi a) theta = theta (b^-1 phi b) for one primitive alpha at
/// each level 1..levels, using the closed forms on both sides.
bool verify_subgroup_conjugator(const CoeffSequence& a, const CoeffSequence& b, const TriangularAffine& theta,
                                unsigned levels);

/// Text used in reports for the searched class of beta.
std::string searched_class_description(unsigned p);

}  // namespace pauto
