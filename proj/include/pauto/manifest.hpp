#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pauto/prufer.hpp"

namespace pauto {

/// Sequence record: {"prefix": [...], "prime": p, "tail": "zero" | [...]},
/// scalars written in canonical scalar syntax.
std::string print_sequence(const CoeffSequence& s);
CoeffSequence parse_sequence(std::string_view json_text);

/// Inputs for the sequence commands, read from a JSON file or stdin.
struct Manifest {
  unsigned prime = 2;
  std::vector<CoeffSequence> sequences;
  /// alpha designations as exponents j/p^n.
  std::vector<RootOfUnity> alphas;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> levels;
  std::optional<unsigned> k0;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

std::string print_manifest(const Manifest& m);
Manifest parse_manifest(std::string_view json_text);

/// `j/p^n` or `0`; the denominator must be a power of p.
RootOfUnity parse_alpha(std::string_view text, unsigned p);

}  // namespace pauto
