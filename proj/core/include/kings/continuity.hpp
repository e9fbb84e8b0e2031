#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kings/sampled_space.hpp"
#include "kings/weak_selection.hpp"

namespace kings {

/// Pair {a, b} and a perturbed pair {a', b'} with d(a, a') < delta,
/// d(b, b') < delta, both pairs more than epsilon apart, where the selection
/// keeps a from {a, b} but switches to b' in {a', b'}.
struct Violation {
  std::size_t a;
  std::size_t b;
  std::size_t a_perturbed;
  std::size_t b_perturbed;
  std::string explanation;
};

enum class Verdict { pass, violation };

struct ContinuityCertificate {
  double delta = 0.0;
  double epsilon = 0.0;
  Verdict verdict = Verdict::pass;
  std::vector<Violation> violations;   // at most FalsifierOptions::max_recorded
  std::uint64_t violation_count = 0;   // all violations found, recorded or not
  std::uint64_t quadruples_examined = 0;
};

struct FalsifierOptions {
  std::size_t max_recorded = 256;
};

/// Searches for side flips of `sel` under perturbations smaller than delta.
/// A pass only means none exists at this resolution; it never proves the
/// selection continuous. Requires 0 < delta < epsilon and one player per
/// point.
ContinuityCertificate continuity_falsify(const SampledSpace& space, const WeakSelection& sel, double delta,
                                         double epsilon, FalsifierOptions options = {});

/// Re-evaluates a recorded quadruple; true when the side flip reproduces.
bool replay(const SampledSpace& space, const WeakSelection& sel, const Violation& v, double delta, double epsilon);

}  // namespace kings
