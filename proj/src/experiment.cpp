#include "ilrc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <thread>

namespace ilrc {

namespace {

template <class E>
struct Names {
  E value;
  const char* name;
};

constexpr Names<Construction> kConstructions[] = {
    {Construction::tamo_barg, "tamo-barg"}, {Construction::pmds, "pmds"}, {Construction::reed_solomon, "rs"}};
constexpr Names<DecoderKind> kDecoders[] = {{DecoderKind::mk, "mk"},
                                            {DecoderKind::irs, "irs"},
                                            {DecoderKind::lrc_supercode, "lrc-supercode"},
                                            {DecoderKind::bmd_per_row, "bmd-per-row"}};
constexpr Names<SupportMode> kSupportModes[] = {{SupportMode::uniform, "uniform"}, {SupportMode::fixed, "fixed"}};
constexpr Names<ValueMode> kValueModes[] = {{ValueMode::uniform_nonzero_columns, "uniform"},
                                            {ValueMode::full_rank_conditioned, "full-rank"}};

template <class E, std::size_t N>
std::string name_of(const Names<E> (&table)[N], E v) {
  for (const auto& e : table)
    if (e.value == v) return e.name;
  return "?";
}

template <class E, std::size_t N>
E parse(const Names<E> (&table)[N], const std::string& s, const char* what) {
  for (const auto& e : table)
    if (s == e.name) return e.value;
  std::string allowed;
  for (const auto& e : table) allowed += std::string(allowed.empty() ? "" : ", ") + e.name;
  throw ConfigError("unknown " + std::string(what) + " \"" + s + "\" (expected one of " + allowed + ")");
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string format_double(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string to_string(Construction c) { return name_of(kConstructions, c); }
std::string to_string(DecoderKind d) { return name_of(kDecoders, d); }
std::string to_string(SupportMode m) { return name_of(kSupportModes, m); }
std::string to_string(ValueMode m) { return name_of(kValueModes, m); }
Construction construction_from_string(const std::string& s) { return parse(kConstructions, s, "construction"); }
DecoderKind decoder_from_string(const std::string& s) { return parse(kDecoders, s, "decoder"); }
SupportMode support_mode_from_string(const std::string& s) { return parse(kSupportModes, s, "support mode"); }
ValueMode value_mode_from_string(const std::string& s) { return parse(kValueModes, s, "value mode"); }

FiniteField CodeSpec::field() const {
  try {
    return FiniteField::create(p, m);
  } catch (const FieldError& e) {
    throw ConfigError(std::string("invalid field: ") + e.what());
  }
}

ReedSolomonCode primitive_reed_solomon(const FiniteField& field, Index n, Index k) {
  if (n < 1 || static_cast<std::uint64_t>(n) > field.max_element())
    throw CodeError("Reed-Solomon length must lie in [1, q - 1]");
  std::vector<Element> points(static_cast<std::size_t>(n));
  Element x = field.one();
  for (auto& pt : points) {
    pt = x;
    x = field.mul(x, field.primitive_element());
  }
  return {field, std::move(points), k};
}

BuiltCode build_code(const CodeSpec& spec) {
  const FiniteField field = spec.field();
  switch (spec.kind) {
    case Construction::tamo_barg: {
      TamoBargCode tb(field, spec.n, spec.k, spec.r, spec.rho);
      LinearCode code = tb.code();
      return {spec, std::move(code), std::move(tb), std::nullopt, std::nullopt};
    }
    case Construction::pmds: {
      PmdsCode p = pmds_random_search(field, spec.n, spec.k, spec.r, spec.rho, spec.max_attempts, spec.seed);
      LinearCode code = p.code;
      return {spec, std::move(code), std::nullopt, std::nullopt, std::move(p)};
    }
    case Construction::reed_solomon: {
      ReedSolomonCode rs = primitive_reed_solomon(field, spec.n, spec.k);
      LinearCode code = rs.code().with_distance(rs.distance());
      return {spec, std::move(code), std::nullopt, std::move(rs), std::nullopt};
    }
  }
  throw ConfigError("unknown construction");
}

void validate(const ExperimentConfig& config, const BuiltCode& built) {
  const Index n = built.code.length();
  if (config.ell < 1) throw ConfigError("interleaving order must be at least 1");
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.threads < 1) throw ConfigError("threads must be at least 1");
  const ErrorModel& e = config.error;
  if (e.t < 0 || e.t > n) throw ConfigError("error weight must lie in [0, n]");
  if (e.values == ValueMode::full_rank_conditioned && e.t > config.ell)
    throw ConfigError("full-rank errors need t <= l");
  if (e.support == SupportMode::fixed) {
    if (static_cast<Index>(e.fixed_support.size()) != e.t) throw ConfigError("fixed support must list t positions");
    for (Index i : e.fixed_support)
      if (i < 0 || i >= n) throw ConfigError("fixed support position out of range");
  }
  if ((config.decoder == DecoderKind::irs || config.decoder == DecoderKind::bmd_per_row) && !built.reed_solomon)
    throw ConfigError("decoder " + to_string(config.decoder) + " needs a Reed-Solomon code");
  if (config.decoder == DecoderKind::lrc_supercode && !built.tamo_barg)
    throw ConfigError("decoder lrc-supercode needs a Tamo-Barg code");
}

DecodeOutcome run_decoder(DecoderKind decoder, const BuiltCode& built, const GFMatrix& received) {
  switch (decoder) {
    case DecoderKind::mk: return mk_decode(built.code, received);
    case DecoderKind::irs:
      if (!built.reed_solomon) throw ConfigError("irs needs a Reed-Solomon code");
      return irs_decode(*built.reed_solomon, received);
    case DecoderKind::bmd_per_row:
      if (!built.reed_solomon) throw ConfigError("bmd-per-row needs a Reed-Solomon code");
      return bmd_decode_rows(*built.reed_solomon, received);
    case DecoderKind::lrc_supercode:
      if (!built.tamo_barg) throw ConfigError("lrc-supercode needs a Tamo-Barg code");
      return decode_lrc_via_supercode(*built.tamo_barg, received);
  }
  throw ConfigError("unknown decoder");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial_index) {
  return splitmix64(splitmix64(master) + 0x9E3779B97F4A7C15ULL * (trial_index + 1));
}

TrialSample sample_trial(const ExperimentConfig& config, const BuiltCode& built, std::uint64_t trial_index) {
  const LinearCode& code = built.code;
  std::mt19937_64 rng(derive_seed(config.seed, trial_index));
  GFMatrix transmitted = encode(code, GFMatrix::random(code.field(), config.ell, code.dimension(), rng));
  const std::uint64_t error_seed = rng();
  BurstError e = sample_burst_error(code.field(), config.ell, code.length(), config.error.t, config.error.support,
                                    config.error.values, error_seed, config.error.fixed_support);
  GFMatrix received = transmitted + e.matrix;
  return {std::move(transmitted), std::move(e), std::move(received)};
}

OutcomeCounts run_trials(const ExperimentConfig& config, const BuiltCode& built) {
  validate(config, built);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.threads, config.trials));
  std::vector<OutcomeCounts> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = config.trials * w / workers;
      const std::uint64_t end = config.trials * (w + 1) / workers;
      OutcomeCounts& c = partial[w];
      for (std::uint64_t i = begin; i < end; ++i) {
        const TrialSample s = sample_trial(config, built, config.first_trial + i);
        const DecodeOutcome out = run_decoder(config.decoder, built, s.received);
        ++c.trials;
        if (out.ok()) {
          if (*out.codeword == s.transmitted)
            ++c.success;
          else
            ++c.miscorrection;
        } else {
          ++c.failure;
          if (out.status == DecodeStatus::miscorrection_detected) ++c.detected;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  OutcomeCounts total;
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    total += partial[w];
  }
  return total;
}

std::optional<Rational> closed_form_success(const ExperimentConfig& config, const BuiltCode& built) {
  const Index t = config.error.t;
  const Index n = built.code.length();
  const Index k = built.code.dimension();
  if (t == 0) return Rational(1);

  if (config.decoder != DecoderKind::mk) {
    Index d = 0;
    if (config.decoder == DecoderKind::lrc_supercode && built.tamo_barg) d = built.tamo_barg->supercode().distance();
    if (config.decoder != DecoderKind::lrc_supercode && built.reed_solomon) d = built.reed_solomon->distance();
    if (d > 0 && t <= (d - 1) / 2) return Rational(1);
    return std::nullopt;
  }

  const bool fixed = config.error.support == SupportMode::fixed;
  Rational support_fraction;
  if (t >= n - k) {
    support_fraction = 0;
  } else if (built.reed_solomon) {
    support_fraction = 1;
  } else if (built.pmds && built.pmds->verified) {
    const auto& s = built.spec;
    if (fixed)
      support_fraction = is_t_plus_1_independent(built.code.parity_check(), config.error.fixed_support) ? 1 : 0;
    else
      support_fraction = Rational(count_independent_supports(static_cast<unsigned>(n), static_cast<unsigned>(k),
                                                             static_cast<unsigned>(s.r), static_cast<unsigned>(s.rho),
                                                             static_cast<unsigned>(t)),
                                  binomial(static_cast<unsigned>(n), static_cast<unsigned>(t)));
  } else {
    return std::nullopt;
  }
  if (support_fraction == 0) return Rational(0);
  Rational rank_factor = 1;
  if (config.error.values == ValueMode::uniform_nonzero_columns) {
    const BigInt q = big_pow(BigInt(built.spec.p), built.spec.m);
    rank_factor = nonzero_column_full_rank_fraction(q, static_cast<unsigned>(config.ell), static_cast<unsigned>(t));
  }
  return support_fraction * rank_factor;
}

SimulationReport monte_carlo_estimate(const ExperimentConfig& config, const BuiltCode& built) {
  const auto start = std::chrono::steady_clock::now();
  SimulationReport report;
  report.config = config;
  report.counts = run_trials(config, built);
  report.interval = wilson_interval(report.counts.success, report.counts.trials);
  report.closed_form = closed_form_success(config, built);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SimulationReport monte_carlo_estimate(const ExperimentConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  return monte_carlo_estimate(config, build_code(config.code));
}

Json to_json(const CodeSpec& spec) {
  Json j{{"construction", to_string(spec.kind)}, {"p", spec.p}, {"m", spec.m}, {"n", spec.n},
         {"k", spec.k},                          {"r", spec.r}, {"rho", spec.rho}};
  if (spec.kind == Construction::pmds) {
    j["seed"] = spec.seed;
    j["max_attempts"] = spec.max_attempts;
  }
  return j;
}

namespace {

template <class T>
void read(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("bad value for \"") + key + "\"");
  }
}

}  // namespace

CodeSpec code_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("code spec must be an object");
  CodeSpec s;
  std::string kind = to_string(s.kind);
  read(j, "construction", kind);
  s.kind = construction_from_string(kind);
  read(j, "p", s.p);
  read(j, "m", s.m);
  read(j, "n", s.n);
  read(j, "k", s.k);
  read(j, "r", s.r);
  read(j, "rho", s.rho);
  read(j, "seed", s.seed);
  read(j, "max_attempts", s.max_attempts);
  return s;
}

Json to_json(const ExperimentConfig& c) {
  Json error{{"t", c.error.t}, {"support", to_string(c.error.support)}, {"values", to_string(c.error.values)}};
  if (c.error.support == SupportMode::fixed) error["fixed_support"] = c.error.fixed_support;
  return Json{{"code", to_json(c.code)},   {"ell", c.ell},       {"error", std::move(error)},
              {"decoder", to_string(c.decoder)}, {"trials", c.trials}, {"seed", c.seed},
              {"first_trial", c.first_trial}};
}

ExperimentConfig config_from_json(const Json& j, const ExperimentConfig& base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c = base;
  if (j.contains("code")) c.code = code_spec_from_json(j.at("code"));
  read(j, "ell", c.ell);
  if (j.contains("error")) {
    const Json& e = j.at("error");
    if (!e.is_object()) throw ConfigError("error model must be an object");
    read(e, "t", c.error.t);
    std::string support = to_string(c.error.support), values = to_string(c.error.values);
    read(e, "support", support);
    read(e, "values", values);
    c.error.support = support_mode_from_string(support);
    c.error.values = value_mode_from_string(values);
    read(e, "fixed_support", c.error.fixed_support);
  }
  std::string decoder = to_string(c.decoder);
  read(j, "decoder", decoder);
  c.decoder = decoder_from_string(decoder);
  if (j.contains("trials") && j.at("trials").is_number_integer() && j.at("trials").get<long long>() < 0)
    throw ConfigError("trials must be nonnegative");
  read(j, "trials", c.trials);
  read(j, "seed", c.seed);
  read(j, "first_trial", c.first_trial);
  read(j, "threads", c.threads);
  return c;
}

Json to_json(const SimulationReport& r) {
  Json closed = nullptr;
  if (r.closed_form) {
    closed = Json{{"num", to_string(boost::multiprecision::numerator(*r.closed_form))},
                  {"den", to_string(boost::multiprecision::denominator(*r.closed_form))},
                  {"value", to_double(*r.closed_form)},
                  {"inside_interval", r.interval.contains(to_double(*r.closed_form))}};
  }
  return Json{{"config", to_json(r.config)},
              {"counts",
               {{"trials", r.counts.trials},
                {"success", r.counts.success},
                {"failure", r.counts.failure},
                {"miscorrection", r.counts.miscorrection},
                {"detected", r.counts.detected}}},
              {"rate", r.counts.rate()},
              {"ci_lo", r.interval.lo},
              {"ci_hi", r.interval.hi},
              {"closed_form", std::move(closed)},
              {"meta", {{"wall_clock_s", r.wall_seconds}, {"threads", r.config.threads}, {"version", kArtifactVersion}}}};
}

std::string csv_row(const SimulationReport& r) {
  const CodeSpec& s = r.config.code;
  const double q_log2 = s.m * std::log2(static_cast<double>(s.p));
  std::string row;
  auto add = [&](const std::string& v) { row += (row.empty() ? "" : ",") + v; };
  add(std::to_string(s.n));
  add(std::to_string(s.k));
  add(std::to_string(s.r));
  add(std::to_string(s.rho));
  add(format_double(q_log2));
  add(std::to_string(r.config.ell));
  add(std::to_string(r.config.error.t));
  add(std::to_string(r.counts.trials));
  add(std::to_string(r.counts.success));
  add(std::to_string(r.counts.failure));
  add(std::to_string(r.counts.miscorrection));
  add(format_double(r.counts.rate()));
  add(format_double(r.interval.lo));
  add(format_double(r.interval.hi));
  add(r.closed_form ? format_double(to_double(*r.closed_form), 17) : "");
  return row;
}

std::vector<BoundsPoint> bounds_grid(unsigned n_max) {
  std::vector<BoundsPoint> grid;
  for (unsigned rho = 2; rho <= 4; ++rho)
    for (unsigned r = 1; r + rho - 1 <= n_max; ++r) {
      const unsigned s = r + rho - 1;
      for (unsigned n = s; n <= n_max; n += s)
        for (unsigned k = r; k <= (n / s) * r && k + 1 <= n; ++k) grid.push_back({n, k, r, rho});
    }
  return grid;
}

BoundsRow compute_bounds(const BoundsPoint& p, unsigned ell, const BigInt& q, double c1, double c2) {
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  if (q < 2) throw ConfigError("field size must be at least 2");
  if (p.r < 1 || p.rho < 2 || p.k < p.r || p.k >= p.n) throw ConfigError("need 1 <= r <= k < n and rho >= 2");
  BoundsRow row;
  row.point = p;
  row.ell = ell;
  row.q = q;
  row.d_bound = lrc_singleton_bound(p.n, p.k, p.r, p.rho);
  row.t_max = t_max(ell, std::max<Index>(row.d_bound, 1));
  row.lemma4 = s_ratio_lower_bound(p.n, p.k, p.r, p.rho);
  row.exact_ratio = count_S_mu(p.n, p.r, p.rho, p.k + 1).ratio;
  row.asymptotic = asymptotic_conditions(p.n, p.k, p.r, p.rho, c1, c2);
  const auto t = static_cast<unsigned>(row.t_max);
  // beyond l columns the error cannot have full rank
  row.tail = t > ell ? LogProbability::from_rational(1) : rank_deficiency_tail_log10(q, ell, t);
  row.bound_holds = row.lemma4.exact <= row.exact_ratio;
  return row;
}

std::string csv_row(const BoundsRow& b) {
  std::string row;
  auto add = [&](const std::string& v) { row += (row.empty() ? "" : ",") + v; };
  add(std::to_string(b.point.n));
  add(std::to_string(b.point.k));
  add(std::to_string(b.point.r));
  add(std::to_string(b.point.rho));
  add(std::to_string(b.ell));
  add(to_string(b.q));
  add(std::to_string(b.d_bound));
  add(std::to_string(b.t_max));
  add(std::to_string(b.lemma4.xi));
  add(to_string(b.lemma4.exact));
  add(format_double(b.lemma4.value, 17));
  add(to_string(b.exact_ratio));
  add(format_double(to_double(b.exact_ratio), 17));
  add(b.bound_holds ? "1" : "0");
  add(b.asymptotic.rate_condition ? "1" : "0");
  add(b.asymptotic.group_condition ? "1" : "0");
  add(b.tail.log10_string(12));
  return row;
}

}  // namespace ilrc
