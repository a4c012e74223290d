#include "cli.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ilrc/experiment.hpp"

namespace ilrc::cli {

namespace {

class IoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// q = 2^m or a prime.
void split_field_size(std::uint64_t q, CodeSpec& spec) {
  if (q >= 2 && std::has_single_bit(q)) {
    spec.p = 2;
    spec.m = static_cast<unsigned>(std::countr_zero(q));
  } else if (is_prime_u64(q)) {
    spec.p = q;
    spec.m = 1;
  } else {
    throw ConfigError("field size " + std::to_string(q) + " is neither prime nor a power of two");
  }
}

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::string out;
  std::string config;
  unsigned threads = 1;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

struct Sink {
  const Globals& g;
  std::ostream& out;

  void emit(const std::string& text) const {
    if (g.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(g.out);
    if (!f) throw IoError("cannot write " + g.out);
    f << text;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Experiment options shared by simulate and sweep.
struct ExperimentFlags {
  std::string kind, support, values, decoder;
  std::uint64_t q = 0, code_seed = 0, first_trial = 0;
  Index n = 0, k = 0, ell = 0, t = 0;
  int r = 0, rho = 0, max_attempts = 0;
  std::vector<Index> positions;
  std::string format = "json";

  void add_to(CLI::App* app) {
    app->add_option("--kind", kind, "construction: pmds, tamo-barg or rs");
    app->add_option("--q", q, "field size, prime or power of two");
    app->add_option("--n", n, "code length");
    app->add_option("--k", k, "dimension");
    app->add_option("--r", r, "locality");
    app->add_option("--rho", rho, "local distance");
    app->add_option("--code-seed", code_seed, "PMDS search seed");
    app->add_option("--max-attempts", max_attempts, "PMDS search attempts");
    app->add_option("--ell", ell, "interleaving order");
    app->add_option("--t", t, "error weight (nonzero columns)");
    app->add_option("--support", support, "uniform or fixed");
    app->add_option("--positions", positions, "fixed support positions")->delimiter(',');
    app->add_option("--values", values, "uniform or full-rank");
    app->add_option("--decoder", decoder, "mk, irs, lrc-supercode or bmd-per-row");
    app->add_option("--first-trial", first_trial, "index of the first trial");
    app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  ExperimentConfig build(CLI::App* app, const Globals& g, const Json* file) const {
    ExperimentConfig c;
    c.trials = 1000;
    if (file) c = config_from_json(*file, c);
    auto given = [&](const char* name) { return app->get_option(name)->count() > 0; };
    if (given("--kind")) c.code.kind = construction_from_string(kind);
    if (given("--q")) split_field_size(q, c.code);
    if (given("--n")) c.code.n = n;
    if (given("--k")) c.code.k = k;
    if (given("--r")) c.code.r = r;
    if (given("--rho")) c.code.rho = rho;
    if (given("--code-seed")) c.code.seed = code_seed;
    if (given("--max-attempts")) c.code.max_attempts = max_attempts;
    if (given("--ell")) c.ell = ell;
    if (given("--t")) c.error.t = t;
    if (given("--support")) c.error.support = support_mode_from_string(support);
    if (given("--positions")) {
      c.error.fixed_support = positions;
      if (!given("--support")) c.error.support = SupportMode::fixed;
    }
    if (given("--values")) c.error.values = value_mode_from_string(values);
    if (given("--decoder")) c.decoder = decoder_from_string(decoder);
    if (given("--first-trial")) c.first_trial = first_trial;
    if (g.seed_opt->count() > 0) c.seed = g.seed;
    if (g.trials_opt->count() > 0) c.trials = g.trials;
    if (g.threads_opt->count() > 0) c.threads = g.threads;
    if (c.trials < 1) throw ConfigError("trials must be at least 1");
    return c;
  }
};

LinearCode load_code(const std::string& path, Json* doc = nullptr) {
  const Json j = read_json(path);
  if (doc) *doc = j;
  return code_from_json(j);
}

int cmd_construct(const Globals& g, const Sink& sink, CLI::App* app, const ExperimentFlags& f) {
  std::unique_ptr<Json> file;
  if (!g.config.empty()) file = std::make_unique<Json>(read_json(g.config));
  CodeSpec spec;
  if (file && file->contains("code")) spec = code_spec_from_json(file->at("code"));
  Json wrapper{{"code", to_json(spec)}};
  ExperimentConfig c = f.build(app, g, &wrapper);
  spec = c.code;
  if (g.seed_opt->count() > 0 && app->get_option("--code-seed")->count() == 0) spec.seed = g.seed;

  BuiltCode built = build_code(spec);
  const DistanceResult dr = min_distance_exhaustive(built.code);
  if (dr.exact && built.code.known_distance() && *built.code.known_distance() != dr.value)
    throw std::logic_error("constructed code misses its designed distance");
  LinearCode code = dr.exact ? built.code.with_distance(dr.value) : built.code;
  Json j = to_json(code);
  j["construction"] = to_json(spec);
  j["distance_method"] = to_string(dr.method);
  j["distance_exact"] = dr.exact;
  if (!dr.exact) j["distance_lower_bound"] = dr.value;
  if (built.pmds) j["pmds"] = Json{{"verified", built.pmds->verified}, {"attempts", built.pmds->attempts}};
  sink.emit(dump(j));
  return kExitOk;
}

int cmd_encode(const Globals& g, const Sink& sink, const std::string& code_path, const std::string& messages_path,
               Index ell) {
  const LinearCode code = load_code(code_path);
  GFMatrix messages(code.field(), 0, 0);
  if (!messages_path.empty()) {
    messages = matrix_from_document(read_json(messages_path));
    if (!(messages.field() == code.field())) throw FormatError("messages use a different field");
    if (messages.cols() != code.dimension()) throw FormatError("messages must have k columns");
  } else {
    if (ell < 1) throw ConfigError("interleaving order must be at least 1");
    std::mt19937_64 rng(g.seed);
    messages = GFMatrix::random(code.field(), ell, code.dimension(), rng);
  }
  sink.emit(dump(matrix_document(encode(code, messages))));
  return kExitOk;
}

int cmd_corrupt(const Globals& g, const Sink& sink, const std::string& in_path, Index t,
                const std::string& support, const std::vector<Index>& positions, const std::string& values) {
  const GFMatrix clean = matrix_from_document(read_json(in_path));
  SupportMode sm = support_mode_from_string(support);
  if (!positions.empty()) sm = SupportMode::fixed;
  BurstError e = [&] {
    try {
      return sample_burst_error(clean.field(), clean.rows(), clean.cols(), t, sm, value_mode_from_string(values),
                                g.seed, positions);
    } catch (const CodeError& ex) {
      throw ConfigError(ex.what());
    }
  }();
  Json j = matrix_document(clean + e.matrix);
  j["error"] = to_json(e.matrix);
  j["support"] = e.support;
  j["rank"] = e.rank;
  sink.emit(dump(j));
  return kExitOk;
}

int cmd_decode(const Globals& g, std::ostream& out, const std::string& code_path, const std::string& in_path,
               const std::string& decoder_name) {
  Json doc;
  const LinearCode code = load_code(code_path, &doc);
  const GFMatrix received = matrix_from_document(read_json(in_path));
  if (!(received.field() == code.field())) throw FormatError("received word uses a different field");
  if (received.cols() != code.length()) throw FormatError("received word length differs from n");
  const DecoderKind decoder = decoder_from_string(decoder_name);

  DecodeOutcome outcome;
  if (decoder == DecoderKind::mk) {
    outcome = mk_decode(code, received);
  } else {
    if (!doc.contains("construction")) throw ConfigError("decoder " + decoder_name + " needs a constructed code file");
    const BuiltCode built = build_code(code_spec_from_json(doc.at("construction")));
    if (!(built.code.generator() == code.generator())) throw FormatError("code file does not match its construction");
    ExperimentConfig probe;
    probe.decoder = decoder;
    validate(probe, built);
    outcome = run_decoder(decoder, built, received);
  }
  const std::string text = dump(to_json(outcome));
  out << text;
  if (!g.out.empty()) Sink{g, out}.emit(text);
  return outcome.ok() ? kExitOk : kExitDecodeFailure;
}

int cmd_simulate(const Globals& g, const Sink& sink, CLI::App* app, const ExperimentFlags& f) {
  std::unique_ptr<Json> file;
  if (!g.config.empty()) file = std::make_unique<Json>(read_json(g.config));
  const ExperimentConfig c = f.build(app, g, file.get());
  const SimulationReport report = monte_carlo_estimate(c);
  if (f.format == "csv")
    sink.emit(std::string(kSimulationCsvHeader) + "\n" + csv_row(report) + "\n");
  else
    sink.emit(dump(to_json(report)));
  return kExitOk;
}

int cmd_sweep(const Globals& g, const Sink& sink, CLI::App* app, const ExperimentFlags& f,
              std::vector<Index> ts, std::vector<Index> ells, std::vector<std::string> decoders) {
  std::unique_ptr<Json> file;
  if (!g.config.empty()) file = std::make_unique<Json>(read_json(g.config));
  const ExperimentConfig base = f.build(app, g, file.get());
  if (file && file->contains("sweep")) {
    const Json& s = file->at("sweep");
    try {
      if (ts.empty() && s.contains("t")) ts = s.at("t").get<std::vector<Index>>();
      if (ells.empty() && s.contains("ell")) ells = s.at("ell").get<std::vector<Index>>();
      if (decoders.empty() && s.contains("decoder")) decoders = s.at("decoder").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("bad sweep lists");
    }
  }
  if (ts.empty()) ts = {base.error.t};
  if (ells.empty()) ells = {base.ell};
  if (decoders.empty()) decoders = {to_string(base.decoder)};

  const BuiltCode built = build_code(base.code);
  std::string csv = std::string(kSimulationCsvHeader) + ",decoder\n";
  Json reports = Json::array();
  for (const auto& d : decoders)
    for (Index ell : ells)
      for (Index t : ts) {
        ExperimentConfig c = base;
        c.decoder = decoder_from_string(d);
        c.ell = ell;
        c.error.t = t;
        const SimulationReport r = monte_carlo_estimate(c, built);
        csv += csv_row(r) + "," + d + "\n";
        reports.push_back(to_json(r));
      }
  sink.emit(f.format == "json" && app->get_option("--format")->count() > 0 ? dump(reports) : csv);
  return kExitOk;
}

int cmd_bounds(const Sink& sink, CLI::App* app, unsigned n, unsigned k, unsigned r, unsigned rho, unsigned ell,
               std::uint64_t q, double c1, double c2, unsigned n_max) {
  std::vector<BoundsPoint> points;
  const int given = static_cast<int>(app->get_option("--n")->count() + app->get_option("--k")->count() +
                                     app->get_option("--r")->count() + app->get_option("--rho")->count());
  if (given == 4)
    points.push_back({n, k, r, rho});
  else if (given == 0)
    points = bounds_grid(n_max);
  else
    throw ConfigError("give all of --n --k --r --rho for a single point, or none for the grid");
  std::string csv = std::string(kBoundsCsvHeader) + "\n";
  for (const auto& p : points) csv += csv_row(compute_bounds(p, ell, BigInt(q), c1, c2)) + "\n";
  sink.emit(csv);
  return kExitOk;
}

int cmd_verify_pmds(const Sink& sink, const std::string& code_path, std::uint64_t budget) {
  const LinearCode code = load_code(code_path);
  if (!code.locality()) throw FormatError("code file has no locality partition");
  const PmdsVerification v = verify_pmds(code, budget);
  Json j{{"is_pmds", v.is_pmds}, {"patterns_checked", v.patterns_checked}, {"rank_checks", v.rank_checks}};
  if (v.witness_pattern) j["witness_pattern"] = *v.witness_pattern;
  if (v.witness_columns) j["witness_columns"] = *v.witness_columns;
  if (v.witness_group) j["witness_group"] = *v.witness_group;
  sink.emit(dump(j));
  return v.is_pmds ? kExitOk : kExitDecodeFailure;
}

int cmd_count_sets(const Sink& sink, CLI::App* app, unsigned n, unsigned r, unsigned rho, unsigned mu) {
  if (rho < 2 || r < 1) throw ConfigError("need r >= 1 and rho >= 2");
  std::vector<unsigned> mus;
  if (app->get_option("--mu")->count() > 0)
    mus.push_back(mu);
  else
    for (unsigned m = 0; m <= n; ++m) mus.push_back(m);
  std::string csv = "n,r,rho,mu,count,total,ratio_num,ratio_den,lemma4_bound\n";
  for (unsigned m : mus) {
    const SetFamilyCount c = [&] {
      try {
        return count_S_mu(n, r, rho, m);
      } catch (const CodeError& e) {
        throw ConfigError(e.what());
      }
    }();
    std::string bound;
    if (m >= 1) {
      std::ostringstream os;
      os.precision(17);
      os << s_ratio_lower_bound(n, m - 1, r, rho).value;
      bound = os.str();
    }
    csv += std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(rho) + "," + std::to_string(m) + "," +
           to_string(c.count) + "," + to_string(c.total) + "," + to_string(boost::multiprecision::numerator(c.ratio)) +
           "," + to_string(boost::multiprecision::denominator(c.ratio)) + "," + bound + "\n";
  }
  sink.emit(csv);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally repairable, PMDS and interleaved-decoding experiments", "ilrc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.seed_opt = app.add_option("--seed", g.seed, "master seed");
  g.trials_opt = app.add_option("--trials", g.trials, "number of trials");
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--config", g.config, "JSON experiment config");
  g.threads_opt = app.add_option("--threads", g.threads, "worker threads");

  ExperimentFlags construct_flags, simulate_flags, sweep_flags;
  auto* construct = app.add_subcommand("construct", "build a code and write its JSON file");
  construct_flags.add_to(construct);

  std::string code_path, in_path, messages_path, support = "uniform", values = "uniform", decoder = "mk";
  Index ell = 1, t = 0;
  std::vector<Index> positions;
  auto* encode_cmd = app.add_subcommand("encode", "encode messages (or l random ones) into codeword rows");
  encode_cmd->add_option("--code", code_path, "code file")->required();
  encode_cmd->add_option("--messages", messages_path, "matrix file of l x k messages");
  encode_cmd->add_option("--ell", ell, "number of random messages");

  auto* corrupt = app.add_subcommand("corrupt", "add a burst error to codeword rows");
  corrupt->add_option("--in", in_path, "matrix file")->required();
  corrupt->add_option("--t", t, "error weight")->required();
  corrupt->add_option("--support", support, "uniform or fixed");
  corrupt->add_option("--positions", positions, "fixed support positions")->delimiter(',');
  corrupt->add_option("--values", values, "uniform or full-rank");

  auto* decode_cmd = app.add_subcommand("decode", "decode a received matrix");
  decode_cmd->add_option("--code", code_path, "code file")->required();
  decode_cmd->add_option("--in", in_path, "received matrix file")->required();
  decode_cmd->add_option("--decoder", decoder, "mk, irs, lrc-supercode or bmd-per-row");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of one configuration");
  simulate_flags.add_to(simulate);

  std::vector<Index> t_list, ell_list;
  std::vector<std::string> decoder_list;
  auto* sweep = app.add_subcommand("sweep", "cartesian sweep over t, l and decoder; CSV rows");
  sweep_flags.add_to(sweep);
  sweep->add_option("--t-list", t_list, "error weights")->delimiter(',');
  sweep->add_option("--ell-list", ell_list, "interleaving orders")->delimiter(',');
  sweep->add_option("--decoder-list", decoder_list, "decoders")->delimiter(',');

  unsigned bn = 0, bk = 0, br = 0, brho = 0, bell = 1, n_max = 24;
  std::uint64_t bq = 256;
  double c1 = 1.5, c2 = 1.1;
  auto* bounds = app.add_subcommand("bounds", "distance bound, radius, set-ratio bound and rank tail per point");
  bounds->add_option("--n", bn);
  bounds->add_option("--k", bk);
  bounds->add_option("--r", br);
  bounds->add_option("--rho", brho);
  bounds->add_option("--ell", bell, "interleaving order");
  bounds->add_option("--q", bq, "field size");
  bounds->add_option("--c1", c1, "rate constant (> 1)");
  bounds->add_option("--c2", c2, "group-size constant (> 1)");
  bounds->add_option("--n-max", n_max, "largest n of the default grid");

  std::uint64_t budget = kDefaultPmdsBudget;
  auto* verify = app.add_subcommand("verify-pmds", "exhaustive PMDS check of a code file");
  verify->add_option("--code", code_path, "code file")->required();
  verify->add_option("--budget", budget, "rank-check budget");

  unsigned cn = 0, cr = 0, crho = 0, cmu = 0;
  auto* count = app.add_subcommand("count-sets", "count mu-sets meeting every group in at most r positions");
  count->add_option("--n", cn)->required();
  count->add_option("--r", cr)->required();
  count->add_option("--rho", crho)->required();
  count->add_option("--mu", cmu, "set size (default: every mu)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Sink sink{g, out};
  try {
    if (*construct) return cmd_construct(g, sink, construct, construct_flags);
    if (*encode_cmd) return cmd_encode(g, sink, code_path, messages_path, ell);
    if (*corrupt) return cmd_corrupt(g, sink, in_path, t, support, positions, values);
    if (*decode_cmd) return cmd_decode(g, out, code_path, in_path, decoder);
    if (*simulate) return cmd_simulate(g, sink, simulate, simulate_flags);
    if (*sweep) return cmd_sweep(g, sink, sweep, sweep_flags, t_list, ell_list, decoder_list);
    if (*bounds) return cmd_bounds(sink, bounds, bn, bk, br, brho, bell, bq, c1, c2, n_max);
    if (*verify) return cmd_verify_pmds(sink, code_path, budget);
    if (*count) return cmd_count_sets(sink, count, cn, cr, crho, cmu);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ilrc::cli
