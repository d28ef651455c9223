// Target functions: explicit coefficients, rational functions with poles
// outside the closed disc, and the builtin corpus.
#pragma once

#include <string>
#include <vector>

#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka {

struct TargetSpec {
  enum class Kind { Taylor, Rational, Builtin };

  Kind kind = Kind::Taylor;
  std::vector<Complex> taylor;
  std::vector<Complex> poles;     // all |pole| > 1
  std::vector<Complex> residues;  // same length as poles
  std::string builtin;            // one of f1..f4

  static TargetSpec from_taylor(std::vector<Complex> coeffs);
  static TargetSpec from_rational(std::vector<Complex> poles, std::vector<Complex> residues);
  static TargetSpec from_builtin(std::string name);

  /// Expand into a series of the space's truncation length. The builtin f3 is
  /// a three-kernel combination and therefore depends on the space.
  PowerSeries expand(const SpaceSpec& spec) const;
};

/// Names of the builtin corpus targets:
///   f1: 1/(z-2)
///   f2: 1/(z^2 - 2z + 2), poles 1 +/- i
///   f3: 0.6 E_{0.4} + 0.3 E_{-0.3+0.4i} + 0.1 E_{0.2-0.5i} (normalized
///       kernels of the active space)
///   f4: z
const std::vector<std::string>& builtin_target_names();

}  // namespace rka
