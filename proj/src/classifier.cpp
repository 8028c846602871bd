#include "involut/classifier.hpp"

#include <future>

namespace involut {

void FamilySpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (family == Family::SymplecticComponents && n % 2 != 0) {
    throw std::invalid_argument("symplectic family requires even n");
  }
  if (signs.size() != 0) {
    if (signs.size() != m) throw std::invalid_argument("sign vector length must equal m");
    if (family != Family::Full && !signs.all_positive()) {
      throw std::invalid_argument("signs are fixed to +1 outside the full family");
    }
  }
}

SignVector FamilySpec::effective_signs() const { return signs.size() == 0 ? SignVector::all_plus(m) : signs; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::SecondKindUnitary: return "SecondKindUnitary";
    case Verdict::FirstKindOrthogonal: return "FirstKindOrthogonal";
    case Verdict::FirstKindSymplectic: return "FirstKindSymplectic";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotGenerating: return "NotGenerating";
  }
  return "?";
}

TrialRecord run_trial(const FamilySpec& spec, std::uint64_t trial_seed, const ClassifierOptions& options) {
  const SignVector signs = spec.effective_signs();
  TrialRecord rec;
  rec.seed = trial_seed;
  for (std::size_t attempt = 0; attempt < options.retry_cap; ++attempt) {
    rec.attempts = attempt + 1;
    rec.sample_seed = derive_seed(trial_seed, attempt);
    TupleQ x = sample_tuple(spec.n, spec.m, spec.family, options.bound, rec.sample_seed);
    if (spec.family != Family::Full) {
      Rng rng(derive_seed(rec.sample_seed, 0xC0417));
      x = conjugate_tuple(random_projective(spec.n, options.bound, rng), x);
    }
    rec.tuple = std::move(x);
    if (!generates_full_algebra(rec.tuple)) continue;
    rec.generated = true;
    rec.outcome = stabilizer_element(signs, rec.tuple);
    if (rec.outcome.kind != StabilizerKind::Ambiguous) break;
  }
  if (rec.generated && rec.outcome.kind == StabilizerKind::Unique) {
    const TauCanonicalForm form = canonicalize_tau_g(*rec.outcome.element);
    rec.canonical = form.canonical;
    rec.canonical_verified = verify_canonical_form(*rec.outcome.element, form);
  }
  return rec;
}

namespace {

Verdict decide(const std::vector<TrialRecord>& trials) {
  bool all_failed_generation = true;
  std::optional<Verdict> common;
  bool disagree = false;
  for (const auto& t : trials) {
    std::optional<Verdict> v;
    if (t.generated) {
      all_failed_generation = false;
      switch (t.outcome.kind) {
        case StabilizerKind::NoneExists: v = Verdict::SecondKindUnitary; break;
        case StabilizerKind::Unique:
          v = t.outcome.symmetry == Symmetry::Skew ? Verdict::FirstKindSymplectic : Verdict::FirstKindOrthogonal;
          break;
        case StabilizerKind::Ambiguous: break;
      }
    }
    if (!v) {
      disagree = true;
    } else if (common && *common != *v) {
      disagree = true;
    } else {
      common = v;
    }
  }
  if (all_failed_generation) return Verdict::NotGenerating;
  if (disagree || !common) return Verdict::Inconclusive;
  return *common;
}

}  // namespace

ClassificationReport classify_involution(const FamilySpec& spec, std::uint64_t seed, const ClassifierOptions& options) {
  spec.validate();
  if (options.trials < 1) throw std::invalid_argument("at least one trial is required");
  if (options.retry_cap < 1) throw std::invalid_argument("retry cap must be at least 1");
  ClassificationReport report;
  report.spec = spec;
  report.seed = seed;
  report.options = options;

  std::vector<std::future<TrialRecord>> pending;
  pending.reserve(options.trials);
  for (std::size_t t = 0; t < options.trials; ++t) {
    pending.push_back(std::async(std::launch::async, run_trial, std::cref(spec), derive_seed(seed, t), std::cref(options)));
  }
  for (auto& f : pending) report.trials.push_back(f.get());

  report.verdict = decide(report.trials);
  switch (report.verdict) {
    case Verdict::SecondKindUnitary: report.canonical_stabilizer = CanonicalStabilizer::Trivial; break;
    case Verdict::FirstKindOrthogonal: report.canonical_stabilizer = CanonicalStabilizer::Tau; break;
    case Verdict::FirstKindSymplectic: report.canonical_stabilizer = CanonicalStabilizer::TauG0; break;
    default: break;
  }
  return report;
}

bool orbit_dichotomy_check(const FamilySpec& spec, std::uint64_t seed, const ClassifierOptions& options) {
  spec.validate();
  const TrialRecord rec = run_trial(spec, derive_seed(seed, 0), options);
  if (!rec.generated) throw std::runtime_error("no sample in general position within the retry cap");
  switch (rec.outcome.kind) {
    case StabilizerKind::NoneExists: throw std::domain_error("involution is of the second kind");
    case StabilizerKind::Ambiguous: throw std::runtime_error("stabilizer stayed ambiguous within the retry cap");
    case StabilizerKind::Unique: break;
  }
  return tau_act(spec.effective_signs(), rec.tuple) == conjugate_tuple(*rec.outcome.element, rec.tuple);
}

Section6Result ud22_section6_walkthrough(const Rational& lambda, const Rational& mu, const Rational& a,
                                         const Rational& b, const Rational& c, const Rational& d) {
  if (lambda == mu) throw std::invalid_argument("lambda and mu must differ");
  if (b.is_zero() || c.is_zero()) throw std::invalid_argument("b and c must be nonzero");
  MatrixQ y1 = MatrixQ::Zero(2, 2);
  y1(0, 0) = lambda;
  y1(1, 1) = mu;
  MatrixQ y2(2, 2);
  y2 << a, b, c, d;
  MatrixQ g = MatrixQ::Zero(2, 2);
  g(0, 0) = c;
  g(1, 1) = b;
  Section6Result out{TupleQ(2, {y1, y2}), ProjectiveQ(g)};
  out.conjugates_to_transpose = conjugate_tuple(out.g, out.y) == transpose_tuple(out.y);
  out.symmetric = classify_projective_symmetry(out.g) == Symmetry::Symmetric;
  return out;
}

}  // namespace involut
