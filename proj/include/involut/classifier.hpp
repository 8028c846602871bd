#pragma once

// Kind and type of the involution attached to a family of matrix tuples,
// decided from exact per-sample stabilizer certificates.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "involut/normal_form.hpp"

namespace involut {

struct FamilySpec {
  Eigen::Index n = 2;
  std::size_t m = 2;
  Family family = Family::Full;
  SignVector signs;  // empty means all +1

  /// Throws std::invalid_argument for m < 2, odd n with the symplectic
  /// family, or signs of the wrong length (or non-trivial signs outside Full).
  void validate() const;
  SignVector effective_signs() const;
};

struct ClassifierOptions {
  std::size_t trials = 5;
  std::size_t retry_cap = 8;
  long bound = kDefaultSampleBound;
};

enum class Verdict { SecondKindUnitary, FirstKindOrthogonal, FirstKindSymplectic, Inconclusive, NotGenerating };

std::string_view to_string(Verdict v);

struct TrialRecord {
  std::uint64_t seed = 0;         // per-trial seed derived from the master seed
  std::uint64_t sample_seed = 0;  // seed of the last tuple drawn
  std::size_t attempts = 0;
  bool generated = false;         // false: every attempt failed the generation test
  StabilizerOutcome outcome;
  std::optional<bool> canonical_verified;  // set for Unique outcomes
  CanonicalStabilizer canonical = CanonicalStabilizer::Trivial;
  TupleQ tuple;
};

struct ClassificationReport {
  FamilySpec spec;
  std::uint64_t seed = 0;
  ClassifierOptions options;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<CanonicalStabilizer> canonical_stabilizer;
  std::vector<TrialRecord> trials;
};

/// Draws a general-position point of the family for one trial: tuples are
/// resampled (up to the retry cap) until they generate M_n and yield a
/// non-ambiguous stabilizer. Symmetric and symplectic samples are conjugated
/// by a random element of PGL_n.
TrialRecord run_trial(const FamilySpec& spec, std::uint64_t trial_seed, const ClassifierOptions& options);

/// Unanimous NoneExists gives SecondKindUnitary, unanimous Unique with a
/// symmetric (skew) element gives FirstKindOrthogonal (FirstKindSymplectic);
/// all trials failing generation gives NotGenerating; anything else is
/// Inconclusive.
ClassificationReport classify_involution(const FamilySpec& spec, std::uint64_t seed,
                                         const ClassifierOptions& options = {});

/// Exhibits, for one sampled general-position x, the element of PGL_n taking
/// x to tau(x). Throws std::domain_error when the family is of the second kind
/// and std::runtime_error when sampling never reaches general position.
bool orbit_dichotomy_check(const FamilySpec& spec, std::uint64_t seed, const ClassifierOptions& options = {});

struct Section6Result {
  TupleQ y;
  ProjectiveQ g;
  bool conjugates_to_transpose = false;  // g y g^-1 == y^t
  bool symmetric = false;
};

/// y = (diag(lambda, mu), [[a, b], [c, d]]) with g = diag(c, b).
/// Throws std::invalid_argument unless lambda != mu, b != 0 and c != 0.
Section6Result ud22_section6_walkthrough(const Rational& lambda, const Rational& mu, const Rational& a,
                                         const Rational& b, const Rational& c, const Rational& d);

}  // namespace involut
