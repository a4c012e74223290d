#ifndef ILRC_EXPERIMENT_HPP
#define ILRC_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ilrc/irs.hpp"
#include "ilrc/pmds.hpp"
#include "ilrc/probability.hpp"
#include "ilrc/serialization.hpp"

namespace ilrc {

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Construction { tamo_barg, pmds, reed_solomon };
enum class DecoderKind { mk, irs, lrc_supercode, bmd_per_row };

std::string to_string(Construction c);
std::string to_string(DecoderKind d);
std::string to_string(SupportMode m);
std::string to_string(ValueMode m);
Construction construction_from_string(const std::string& s);
DecoderKind decoder_from_string(const std::string& s);
SupportMode support_mode_from_string(const std::string& s);
ValueMode value_mode_from_string(const std::string& s);

struct CodeSpec {
  Construction kind = Construction::pmds;
  std::uint64_t p = 2;
  unsigned m = 16;
  Index n = 15;
  Index k = 8;
  int r = 4;
  int rho = 2;
  std::uint64_t seed = 1;  // PMDS search seed
  int max_attempts = 20;

  FiniteField field() const;
};

struct ErrorModel {
  Index t = 0;
  SupportMode support = SupportMode::uniform;
  ValueMode values = ValueMode::uniform_nonzero_columns;
  IndexSet fixed_support;
};

struct ExperimentConfig {
  CodeSpec code;
  Index ell = 1;
  ErrorModel error;
  DecoderKind decoder = DecoderKind::mk;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t first_trial = 0;  // offset into the derived seed sequence
  unsigned threads = 1;
};

/// A constructed code together with whatever algebraic structure its decoders need.
struct BuiltCode {
  CodeSpec spec;
  LinearCode code;
  std::optional<TamoBargCode> tamo_barg;
  std::optional<ReedSolomonCode> reed_solomon;
  std::optional<PmdsCode> pmds;
};

BuiltCode build_code(const CodeSpec& spec);

/// Reed-Solomon points gamma^0 .. gamma^(n-1).
ReedSolomonCode primitive_reed_solomon(const FiniteField& field, Index n, Index k);

/// Throws ConfigError when the decoder, error model and code do not fit together.
void validate(const ExperimentConfig& config, const BuiltCode& built);

DecodeOutcome run_decoder(DecoderKind decoder, const BuiltCode& built, const GFMatrix& received);

/// splitmix64 of the master seed mixed with the trial index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial_index);

struct TrialSample {
  GFMatrix transmitted;
  BurstError error;
  GFMatrix received;
};

/// Codeword and error for one trial, a pure function of (config, trial index).
TrialSample sample_trial(const ExperimentConfig& config, const BuiltCode& built, std::uint64_t trial_index);

/// Trials [first_trial, first_trial + trials), split over config.threads workers.
OutcomeCounts run_trials(const ExperimentConfig& config, const BuiltCode& built);

/**
 * Success probability where it has a closed form: unique decoding radius of
 * the syndrome decoders, and MK decoding on PMDS or MDS codes, where success
 * needs a (t+1)-independent support and rank(E) = t.
 */
std::optional<Rational> closed_form_success(const ExperimentConfig& config, const BuiltCode& built);

struct SimulationReport {
  ExperimentConfig config;
  OutcomeCounts counts;
  WilsonInterval interval;
  std::optional<Rational> closed_form;
  double wall_seconds = 0;
};

SimulationReport monte_carlo_estimate(const ExperimentConfig& config, const BuiltCode& built);
SimulationReport monte_carlo_estimate(const ExperimentConfig& config);

Json to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const Json& j);
Json to_json(const ExperimentConfig& config);
/// Missing keys keep the defaults of `base`.
ExperimentConfig config_from_json(const Json& j, const ExperimentConfig& base = {});

/// Report body plus a "meta" object holding wall-clock and version, the only nondeterministic part.
Json to_json(const SimulationReport& report);

inline constexpr const char* kSimulationCsvHeader =
    "n,k,r,rho,q_log2,ell,t,trials,success,failure,miscor,rate,ci_lo,ci_hi,closed_form";
std::string csv_row(const SimulationReport& report);

struct BoundsPoint {
  unsigned n = 0, k = 0, r = 0, rho = 0;
};

/// (n, k, r, rho) with (r + rho - 1) | n, n <= n_max, rho in [2, 4], r <= k < n and k <= (n / (r + rho - 1)) r.
std::vector<BoundsPoint> bounds_grid(unsigned n_max = 24);

struct BoundsRow {
  BoundsPoint point;
  unsigned ell = 1;
  BigInt q;
  Index d_bound = 0;
  Index t_max = 0;
  RatioBound lemma4;
  Rational exact_ratio;  // |S_{k+1}| / C(n, k+1)
  AsymptoticConditions asymptotic;
  LogProbability tail;  // rank deficiency at t = min(t_max, l + 1)
  bool bound_holds = false;
};

BoundsRow compute_bounds(const BoundsPoint& point, unsigned ell, const BigInt& q, double c1, double c2);

inline constexpr const char* kBoundsCsvHeader =
    "n,k,r,rho,ell,q,d_bound,t_max,xi,lemma4_bound,lemma4_value,exact_ratio,exact_value,bound_holds,"
    "rate_condition,group_condition,tail_log10";
std::string csv_row(const BoundsRow& row);

inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace ilrc

#endif  // ILRC_EXPERIMENT_HPP
