// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ilrc/experiment.hpp"
#include "oracles.hpp"

using namespace ilrc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("violated: ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.note(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= limit_s) {
    v.pass = false;
    v.note("runtime over limit");
  }
  if (!v.pass) ++failures;
  std::printf("%s %d %s: %s [%.2f s < %.0f s]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), elapsed,
              limit_s);
  std::fflush(stdout);
}

const PmdsCode& pmds_instance() {
  static const PmdsCode c = pmds_random_search(FiniteField::binary(16), 15, 8, 4, 2, 10, 1);
  return c;
}

ExperimentConfig paper_config(ValueMode values, Index t, std::uint64_t trials, std::uint64_t seed) {
  ExperimentConfig c;
  c.code = CodeSpec{Construction::pmds, 2, 16, 15, 8, 4, 2, 1, 10};
  c.ell = 6;
  c.error.t = t;
  c.error.values = values;
  c.decoder = DecoderKind::mk;
  c.trials = trials;
  c.seed = seed;
  return c;
}

BuiltCode paper_built() {
  return {CodeSpec{Construction::pmds, 2, 16, 15, 8, 4, 2, 1, 10}, pmds_instance().code, std::nullopt, std::nullopt,
          pmds_instance()};
}

GFMatrix random_codewords(const LinearCode& code, Index ell, std::mt19937_64& rng) {
  return encode(code, GFMatrix::random(code.field(), ell, code.dimension(), rng));
}

void c1(Verdict& v) {
  const SetFamilyCount s = count_S_mu(15, 4, 2, 9);
  v.require(s.count == 4375, "count == 4375");
  v.require(s.total == 5005, "total == C(15, 9) == 5005");
  v.require(s.ratio == Rational(125, 143), "ratio == 125/143");
  v.require(s.enumerated.has_value() && *s.enumerated == s.count, "enumeration agrees with the generating function");
  v.note("count=" + to_string(s.count) + " ratio=" + to_string(s.ratio) +
         " enumerated=" + (s.enumerated ? to_string(*s.enumerated) : std::string("none")));
}

void c2(Verdict& v) {
  const PmdsCode& p = pmds_instance();
  v.require(p.verified && verify_pmds(p.code).is_pmds, "instance verified PMDS");
  const BuiltCode built = paper_built();
  const std::uint64_t trials = 20000;

  const Rational uniform_target = full_rank_fraction(big_pow(2, 16), 6, 6).exact * Rational(125, 143);
  const auto uniform = monte_carlo_estimate(paper_config(ValueMode::uniform_nonzero_columns, 6, trials, 20240601), built);
  const double u = to_double(uniform_target);
  v.require(uniform.counts.trials == trials, "2*10^4 uniform trials");
  v.require(uniform.interval.contains(u), "uniform target inside the 99% Wilson interval");
  v.note("uniform rate=" + fmt(uniform.counts.rate()) + " CI99=[" + fmt(uniform.interval.lo) + ", " +
         fmt(uniform.interval.hi) + "] target=" + fmt(u));

  const auto conditioned = monte_carlo_estimate(paper_config(ValueMode::full_rank_conditioned, 6, trials, 20240602), built);
  const double c = 125.0 / 143;
  v.require(conditioned.counts.trials == trials, "2*10^4 full-rank trials");
  v.require(conditioned.interval.contains(c), "125/143 inside the 99% Wilson interval");
  v.note("full-rank rate=" + fmt(conditioned.counts.rate()) + " CI99=[" + fmt(conditioned.interval.lo) + ", " +
         fmt(conditioned.interval.hi) + "] target=" + fmt(c));
  v.require(uniform.counts.miscorrection == 0 && conditioned.counts.miscorrection == 0, "no miscorrections");
}

void c3(Verdict& v) {
  const PmdsCode& p = pmds_instance();
  const LinearCode& code = p.code;
  const FiniteField& f = code.field();
  v.require(p.distance == 7, "d == 7");

  const auto t5 = run_trials(paper_config(ValueMode::full_rank_conditioned, 5, 10000, 20240603), paper_built());
  v.require(t5.success == 10000, "all 10^4 trials at t = 5 succeed");
  v.note("t=5 success " + std::to_string(t5.success) + "/" + std::to_string(t5.trials));

  std::mt19937_64 rng(20240604);
  const GFMatrix cw = random_codewords(code, 6, rng);
  std::uint64_t supports = 0, independent = 0, agree = 0, succeeded = 0, seed = 20240605;
  for_each_subset(15, 6, [&](const IndexSet& support) {
    ++supports;
    // complement of the support is a 9-set; it lies in S_9 iff it meets each group in at most r = 4 positions
    const IndexSet rest = complement(15, support);
    bool in_s9 = true;
    for (Index g = 0; g < 3; ++g) {
      Index hits = 0;
      for (Index i : rest) hits += i / 5 == g ? 1 : 0;
      in_s9 = in_s9 && hits <= 4;
    }
    const bool ind = is_t_plus_1_independent(code.parity_check(), support);
    v.require(ind == in_s9, "independence test matches the S_9 complement classification");
    independent += in_s9 ? 1 : 0;
    const auto e = sample_burst_error(f, 6, 15, 6, SupportMode::fixed, ValueMode::full_rank_conditioned, seed++, support);
    const auto out = mk_decode(code, cw + e.matrix);
    const bool ok = out.ok() && *out.codeword == cw;
    succeeded += ok ? 1 : 0;
    agree += ok == in_s9 ? 1 : 0;
    return true;
  });
  v.require(supports == 5005, "5005 supports enumerated");
  v.require(independent == 4375, "4375 independent supports");
  v.require(agree == supports, "success exactly on independent supports");
  v.note("t=6 supports=" + std::to_string(supports) + " independent=" + std::to_string(independent) +
         " succeeded=" + std::to_string(succeeded) + " agree=" + std::to_string(agree));
}

void c4(Verdict& v) {
  v.require(t_max(512, 7) == 5, "t_max(512, 7) == 5");
  v.require(lrc_singleton_bound(15, 8, 4, 2) == 7, "LRC bound == 7");
  const TamoBargCode tb(FiniteField::binary(4), 15, 8, 4, 2);
  const DistanceResult d = min_distance_exhaustive(tb.code());
  v.require(d.exact && d.value == 7, "exact minimum distance == 7");
  v.note("t_max=" + std::to_string(t_max(512, 7)) + " bound=" + std::to_string(lrc_singleton_bound(15, 8, 4, 2)) +
         " d=" + std::to_string(d.value) + " via " + to_string(d.method));
}

void c5(Verdict& v) {
  const LogProbability tail = rank_deficiency_tail_log10(256, 512, 5);
  const double l = tail.log10();
  v.require(!tail.zero && l >= -1224 && l <= -1222, "log10 tail in [-1224, -1222]");
  v.note("log10 tail=" + tail.log10_string(15));
}

oracle::SmallField small_field(unsigned q) {
  if (q == 4) return {2, 2, 0b111};
  return {q, 1, 0};
}

void c6(Verdict& v) {
  int cases = 0;
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned l = 1; l <= 4; ++l)
      for (unsigned t = 0; t <= 4; ++t) {
        if (std::pow(static_cast<double>(q), l * t) > std::pow(2.0, 24)) continue;
        const std::uint64_t full = oracle::count_full_rank_dfs(small_field(q), l, t);
        const Rational expect(BigInt(full), big_pow(BigInt(q), l * t));
        v.require(full_rank_fraction(q, l, t).exact == expect,
                  "q=" + std::to_string(q) + " l=" + std::to_string(l) + " t=" + std::to_string(t));
        ++cases;
      }
  v.note(std::to_string(cases) + " (q, l, t) cases enumerated");
}

void c7(Verdict& v) {
  int points = 0, violations = 0;
  for (const auto& p : bounds_grid(24)) {
    const RatioBound b = s_ratio_lower_bound(p.n, p.k, p.r, p.rho);
    const Rational exact = count_S_mu(p.n, p.r, p.rho, p.k + 1).ratio;
    ++points;
    if (!(b.exact <= exact)) ++violations;
  }
  v.require(points >= 50, "at least 50 grid points");
  v.require(violations == 0, "no bound violations");
  v.note(std::to_string(points) + " points, " + std::to_string(violations) + " violations");
}

void c8(Verdict& v) {
  const auto field = FiniteField::binary(4);
  const ReedSolomonCode rs = primitive_reed_solomon(field, 15, 9);
  v.require(rs.distance() == 7, "RS[15,9,7]");
  const LinearCode& code = rs.code();

  // (a) weight <= 3 decodes identically to per-row BMD
  std::uint64_t same = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(derive_seed(80801, i));
    const Index t = static_cast<Index>(i % 4);
    const auto e = sample_burst_error(field, 3, 15, t, SupportMode::uniform, ValueMode::uniform_nonzero_columns, rng());
    const GFMatrix r = random_codewords(code, 3, rng) + e.matrix;
    const auto joint = irs_decode(rs, r);
    const auto rows = bmd_decode_rows(rs, r);
    const bool eq = joint.status == rows.status && joint.ok() && *joint.codeword == *rows.codeword &&
                    *joint.error == *rows.error && *joint.error == e.matrix;
    same += eq ? 1 : 0;
  }
  v.require(same == 1000, "(a) IRS equals per-row BMD on 10^3 trials");
  v.note("(a) " + std::to_string(same) + "/1000 identical");

  // (b) weight 4 beyond half the distance
  std::uint64_t success = 0, wrong = 0, parity_violations = 0;
  const std::uint64_t trials = 1000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(80802, i));
    const auto e = sample_burst_error(field, 3, 15, 4, SupportMode::uniform, ValueMode::uniform_nonzero_columns, rng());
    const GFMatrix cw = random_codewords(code, 3, rng);
    const auto out = irs_decode(rs, cw + e.matrix);
    if (!out.ok()) continue;
    if (!all_rows_are_codewords(code, *out.codeword) || !(*out.codeword + *out.error == cw + e.matrix))
      ++parity_violations;
    if (*out.codeword == cw)
      ++success;
    else
      ++wrong;
  }
  const double rate = static_cast<double>(success) / trials;
  v.require(rate >= 0.95, "(b) weight-4 success rate >= 0.95");
  v.require(parity_violations == 0, "(b) no parity-violating successes");
  v.note("(b) rate=" + fmt(rate) + " miscorrections=" + std::to_string(wrong) +
         " parity violations=" + std::to_string(parity_violations));

  // (c) decoding a Tamo-Barg code through its RS supercode
  const TamoBargCode tb(field, 15, 8, 4, 2);
  std::uint64_t non_lrc = 0, flagged = 0, ok = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(derive_seed(80803, i));
    GFMatrix r(field, 3, 15);
    if (i % 10 == 0) {
      // adversarial: a supercode word outside the LRC, received without error
      do {
        r = random_codewords(tb.supercode().code(), 3, rng);
      } while (all_rows_are_codewords(tb.code(), r));
    } else {
      const Index t = 1 + static_cast<Index>(i % 7);
      const auto e = sample_burst_error(field, 3, 15, t, SupportMode::uniform, ValueMode::uniform_nonzero_columns, rng());
      r = random_codewords(tb.code(), 3, rng) + e.matrix;
    }
    const auto out = decode_lrc_via_supercode(tb, r);
    if (out.ok()) {
      ++ok;
      if (!all_rows_are_codewords(tb.code(), *out.codeword)) ++non_lrc;
    }
    flagged += out.status == DecodeStatus::miscorrection_detected ? 1 : 0;
  }
  v.require(non_lrc == 0, "(c) no non-LRC row returned");
  v.require(flagged >= 100, "(c) adversarial supercode words are flagged");
  v.note("(c) successes=" + std::to_string(ok) + " flagged=" + std::to_string(flagged) +
         " non-LRC=" + std::to_string(non_lrc));
}

void c9(Verdict& v) {
  const int cases = 10000;
  std::mt19937_64 rng(90901);

  // field axioms, cross-checked against schoolbook arithmetic where available
  int axiom_cases = 0;
  for (const auto& f : {FiniteField::binary(8), FiniteField::binary(16), FiniteField::binary(32),
                        FiniteField::binary(64), FiniteField::prime(65521), FiniteField::prime(2147483647)}) {
    for (int i = 0; i < cases; ++i) {
      const Element a = f.random(rng), b = f.random(rng), c = f.random(rng);
      bool ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) &&
                f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) && f.add(a, 0) == a && f.mul(a, 1) == a &&
                f.add(a, f.neg(a)) == 0 && f.mul(a, 0) == 0;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      if (f.kind() == FiniteField::Kind::binary && f.degree() <= 31)
        ok = ok && f.mul(a, b) == oracle::gf2m_mul(a, b, f.polynomial(), f.degree());
      if (f.kind() == FiniteField::Kind::prime) ok = ok && f.mul(a, b) == (a * b) % f.characteristic();
      v.require(ok, "field axioms in " + f.to_string());
      if (!ok) return;
      ++axiom_cases;
    }
  }

  // Frobenius: (a + b)^p = a^p + b^p and a^q = a
  int frob_cases = 0;
  for (const auto& f : {FiniteField::binary(8), FiniteField::binary(16), FiniteField::binary(32), FiniteField::prime(65521)}) {
    const std::uint64_t p = f.characteristic();
    for (int i = 0; i < cases; ++i) {
      const Element a = f.random(rng), b = f.random(rng);
      bool ok = f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p));
      ok = ok && f.mul(f.pow(a, f.max_element()), a) == a;
      v.require(ok, "Frobenius in " + f.to_string());
      if (!ok) return;
      ++frob_cases;
    }
  }

  // rank-nullity and kernel correctness
  int rn_cases = 0;
  for (const auto& f : {FiniteField::binary(2), FiniteField::binary(8), FiniteField::prime(7)}) {
    for (int i = 0; i < cases / 2; ++i) {
      const Index rows = 1 + static_cast<Index>(rng() % 6), cols = 1 + static_cast<Index>(rng() % 7);
      GFMatrix m = GFMatrix::random(f, rows, cols, rng);
      if (i % 3 == 0 && rows > 1) m.data().row(rows - 1) = m.data().row(0);  // force dependence
      const Index r = rank(m);
      const GFMatrix k = kernel_basis(m);
      bool ok = r + k.rows() == cols && rank(k) == k.rows();
      if (k.rows() > 0) ok = ok && (m * k.transpose()).is_zero();
      v.require(ok, "rank-nullity over " + f.to_string());
      if (!ok) return;
      ++rn_cases;
    }
  }

  // solve round trip
  int solve_cases = 0;
  for (const auto& f : {FiniteField::binary(4), FiniteField::binary(16), FiniteField::prime(13)}) {
    for (int i = 0; i < cases / 2; ++i) {
      const Index rows = 1 + static_cast<Index>(rng() % 7), cols = 1 + static_cast<Index>(rng() % 6);
      const GFMatrix a = GFMatrix::random(f, rows, cols, rng);
      const GFMatrix x = GFMatrix::random(f, cols, 1 + static_cast<Index>(rng() % 3), rng);
      const GFMatrix b = a * x;
      const SolveResult s = solve(a, b);
      bool ok = s.consistent && a * s.solution == b && s.unique == (rank(a) == cols);
      if (s.unique) ok = ok && s.solution == x;
      v.require(ok, "solve round trip over " + f.to_string());
      if (!ok) return;
      ++solve_cases;
    }
  }
  v.require(axiom_cases >= cases && frob_cases >= cases && rn_cases >= cases && solve_cases >= cases,
            "at least 10^4 cases per suite");
  v.note("axioms=" + std::to_string(axiom_cases) + " frobenius=" + std::to_string(frob_cases) +
         " rank-nullity=" + std::to_string(rn_cases) + " solve=" + std::to_string(solve_cases));
}

}  // namespace

int main() {
  criterion(1, "S-family exactness", 1, c1);
  criterion(2, "PMDS [15,8,4,2] end to end at t = 6", 300, c2);
  criterion(3, "MK guarantees at t = 5 and t = 6", 600, c3);
  criterion(4, "radius and distance arithmetic", 60, c4);
  criterion(5, "extreme rank-deficiency tail", 1, c5);
  criterion(6, "full-rank fraction vs enumeration", 60, c6);
  criterion(7, "set-ratio bound soundness", 300, c7);
  criterion(8, "IRS properties", 300, c8);
  criterion(9, "field and matrix substrate", 60, c9);
  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
