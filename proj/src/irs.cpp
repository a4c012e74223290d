#include "ilrc/irs.hpp"

#include <algorithm>

namespace ilrc {

Index t_max(Index ell, Index d) {
  if (ell < 1 || d < 1) throw CodeError("t_max needs l >= 1 and d >= 1");
  return ell * (d - 1) / (ell + 1);
}

JointKeyEquationSystem key_equation_system(const GFMatrix& syndromes, Index t) {
  const FiniteField& f = syndromes.field();
  const Index redundancy = syndromes.rows();
  const Index ell = syndromes.cols();
  if (t < 1 || t >= redundancy) throw CodeError("locator degree must lie in [1, n - k)");
  const Index per_row = redundancy - t;
  JointKeyEquationSystem sys{syndromes, t, GFMatrix(f, ell * per_row, t), GFMatrix(f, ell * per_row, 1)};
  for (Index r = 0; r < ell; ++r)
    for (Index i = 0; i < per_row; ++i) {
      const Index eq = r * per_row + i;
      for (Index u = 0; u < t; ++u) sys.coefficients(eq, u) = syndromes(i + u, r);
      sys.rhs(eq, 0) = f.neg(syndromes(i + t, r));
    }
  return sys;
}

namespace {

DecodeOutcome decode_up_to(const ReedSolomonCode& rs, const GFMatrix& received, Index limit) {
  const FiniteField& f = rs.field();
  const Index n = rs.length();
  if (received.cols() != n) throw DimensionError("received word length != n");
  const GFMatrix& hs = rs.syndrome_matrix();
  const GFMatrix s = hs * received.transpose();
  DecodeOutcome out;
  if (s.is_zero()) {
    out.status = DecodeStatus::success;
    out.codeword = received;
    out.error = GFMatrix(f, received.rows(), n);
    return out;
  }
  out.syndrome_rank = rank(s);

  for (Index t = 1; t <= limit && t < hs.rows(); ++t) {
    const auto sys = key_equation_system(s, t);
    const SolveResult sol = solve(sys.coefficients, sys.rhs);
    if (!sol.consistent || !sol.unique) continue;

    out.locator_degree = t;
    std::vector<Element> locator(static_cast<std::size_t>(t) + 1, f.one());
    for (Index u = 0; u < t; ++u) locator[static_cast<std::size_t>(u)] = sol.solution(u, 0);
    for (Index j = 0; j < n; ++j)
      if (f.eval_poly(locator, rs.points()[static_cast<std::size_t>(j)]) == 0) out.support.push_back(j);
    if (static_cast<Index>(out.support.size()) != t) {
      out.reason = "locator of degree " + std::to_string(t) + " has " +
                   std::to_string(out.support.size()) + " roots among the points";
      return out;
    }
    const SolveResult values = solve(select_columns(hs, out.support), s);
    if (!values.consistent || !values.unique) {
      out.reason = "error values not uniquely determined";
      return out;
    }
    GFMatrix e(f, received.rows(), n);
    for (std::size_t c = 0; c < out.support.size(); ++c)
      e.data().col(out.support[c]) = values.solution.data().row(static_cast<Index>(c)).transpose();
    if (column_support(e) != out.support) {
      out.reason = "located position carries a zero error column";
      return out;
    }
    GFMatrix c = received - e;
    if (!all_rows_are_codewords(rs.code(), c)) {
      out.reason = "corrected rows fail the parity checks";
      return out;
    }
    out.codeword = std::move(c);
    out.error = std::move(e);
    out.status = DecodeStatus::success;
    return out;
  }
  out.reason = "no unique locator of degree <= " + std::to_string(limit);
  return out;
}

}  // namespace

DecodeOutcome irs_decode(const ReedSolomonCode& rs, const GFMatrix& received) {
  return decode_up_to(rs, received, t_max(received.rows(), rs.distance()));
}

DecodeOutcome bmd_decode_rows(const ReedSolomonCode& rs, const GFMatrix& received) {
  const FiniteField& f = rs.field();
  const Index n = rs.length();
  if (received.cols() != n) throw DimensionError("received word length != n");
  const Index limit = t_max(1, rs.distance());
  DecodeOutcome out;
  GFMatrix codeword(f, received.rows(), n);
  GFMatrix error(f, received.rows(), n);
  for (Index r = 0; r < received.rows(); ++r) {
    GFMatrix row(f, 1, n);
    row.data().row(0) = received.data().row(r);
    const DecodeOutcome one = decode_up_to(rs, row, limit);
    out.locator_degree = std::max(out.locator_degree, one.locator_degree);
    if (!one.ok()) {
      out.reason = "row " + std::to_string(r) + ": " + one.reason;
      return out;
    }
    codeword.data().row(r) = one.codeword->data().row(0);
    error.data().row(r) = one.error->data().row(0);
  }
  out.syndrome_rank = rank(rs.syndrome_matrix() * received.transpose());
  out.support = column_support(error);
  out.codeword = std::move(codeword);
  out.error = std::move(error);
  out.status = DecodeStatus::success;
  return out;
}

DecodeOutcome decode_lrc_via_supercode(const TamoBargCode& lrc, const GFMatrix& received) {
  DecodeOutcome out = irs_decode(lrc.supercode(), received);
  if (out.ok() && !all_rows_are_codewords(lrc.code(), *out.codeword)) {
    out.status = DecodeStatus::miscorrection_detected;
    out.reason = "decoded rows lie outside the locally recoverable code";
  }
  return out;
}

}  // namespace ilrc
