#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hjrelax/pl_function.hpp"

namespace hjrelax {

/// Deterministic splitmix64 stream; identical output on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);

  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi], inclusive.
  long range(long lo, long hi);
  /// Rational with value in [lo, hi] and denominator up to max_den.
  Rational rational(long lo, long hi, long max_den);

 private:
  std::uint64_t state_;
};

struct CorpusCase {
  PLFunction H;
  PLFunction F0;
  bool tangency = false;
};

/// Deterministic coercive Hamiltonian + non-increasing semi-coercive boundary
/// function. Every index with index % 5 == 3 uses a tangency recipe in which
/// F0 shares an unbounded segment with H (a non-transversal contact).
CorpusCase random_pair(std::uint64_t seed, std::uint64_t index);

/// Extra boundary function for the same case (used by commutation checks).
PLFunction random_boundary(std::uint64_t seed, std::uint64_t index, std::uint64_t salt);

struct CaseFailure {
  std::uint64_t index = 0;
  std::string identity;
  std::string detail;
  std::string h_repr;
  std::string f0_repr;
};

struct CorpusReport {
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<std::pair<std::string, int>> pass_counts;  // identity -> passing cases
  std::vector<CaseFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Runs every exact identity over `cases` seeded pairs. Every failure carries
/// the serialized inputs for replay.
CorpusReport run_corpus(std::uint64_t seed, int cases);

/// Names of the identities run_corpus evaluates, in report order.
const std::vector<std::string>& corpus_identity_names();

/// Probe abscissas for pointwise checks: breakpoints of the given functions,
/// midpoints between consecutive ones, points beyond both tails, and `extra`
/// random rationals.
std::vector<Rational> probe_points(const std::vector<const PLFunction*>& fs, Rng& rng, int extra);

/// Rebuild a piecewise-linear function from a pointwise evaluator sampled at
/// the probe family of `hint`; the result is validated against the evaluator
/// at `checks` fresh random abscissas (InternalMismatch when inconsistent).
template <typename Fn>
PLFunction reconstruct_pl(const Fn& fn, const PLFunction& hint, Rng& rng, int checks = 8);

}  // namespace hjrelax
