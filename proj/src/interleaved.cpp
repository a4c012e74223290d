#include "ilrc/interleaved.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ilrc {

InterleavedWord::InterleavedWord(const LinearCode& code, GFMatrix rows)
    : code_(&code), rows_(std::move(rows)) {
  if (!all_rows_are_codewords(code, rows_)) throw CodeError("row outside the constituent code");
}

InterleavedWord InterleavedWord::encode(const LinearCode& code, const GFMatrix& messages) {
  return {code, ilrc::encode(code, messages)};
}

IndexSet column_support(const GFMatrix& m) {
  IndexSet s;
  for (Index j = 0; j < m.cols(); ++j)
    if (!(m.data().col(j).array() == Element{0}).all()) s.push_back(j);
  return s;
}

BurstError::BurstError(GFMatrix e) : matrix(std::move(e)), support(column_support(matrix)) {
  rank = ilrc::rank(matrix);
}

BurstError sample_burst_error(const FiniteField& field, Index ell, Index n, Index t,
                              SupportMode support_mode, ValueMode value_mode, std::uint64_t seed,
                              std::span<const Index> fixed_support) {
  if (ell < 1 || n < 1) throw CodeError("burst errors need l >= 1 and n >= 1");
  if (t < 0 || t > n) throw CodeError("error weight out of range");
  if (value_mode == ValueMode::full_rank_conditioned && t > ell)
    throw CodeError("a rank-t error needs t <= l");
  std::mt19937_64 rng(seed);

  IndexSet support;
  if (support_mode == SupportMode::fixed) {
    if (static_cast<Index>(fixed_support.size()) != t) throw CodeError("fixed support must have t positions");
    support.assign(fixed_support.begin(), fixed_support.end());
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end() ||
        (!support.empty() && (support.front() < 0 || support.back() >= n)))
      throw CodeError("invalid fixed support");
  } else {
    // partial Fisher-Yates
    IndexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (Index i = 0; i < t; ++i) {
      const auto j = i + static_cast<Index>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    support.assign(all.begin(), all.begin() + t);
    std::sort(support.begin(), support.end());
  }

  GFMatrix values(field, ell, t);
  for (;;) {
    for (Index c = 0; c < t; ++c) {
      bool zero = true;
      while (zero) {
        for (Index i = 0; i < ell; ++i) {
          values(i, c) = field.random(rng);
          zero = zero && values(i, c) == 0;
        }
      }
    }
    if (value_mode != ValueMode::full_rank_conditioned || rank(values) == t) break;
  }
  GFMatrix e(field, ell, n);
  for (Index c = 0; c < t; ++c) e.data().col(support[static_cast<std::size_t>(c)]) = values.data().col(c);
  return BurstError(std::move(e));
}

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::success: return "success";
    case DecodeStatus::failure: return "failure";
    case DecodeStatus::miscorrection_detected: return "miscorrection_detected";
  }
  return "?";
}

bool is_t_plus_1_independent(const GFMatrix& h, std::span<const Index> e) {
  const auto t = static_cast<Index>(e.size());
  const Index n = h.cols();
  if (t >= n) return false;
  GFMatrix he = select_columns(h, e);
  if (rank(he) < t) return false;
  const IndexSet rest = complement(n, e);
  IndexSet cols(e.begin(), e.end());
  cols.push_back(0);
  for (Index i : rest) {
    cols.back() = i;
    if (rank(select_columns(h, cols)) < t + 1) return false;
  }
  return true;
}

DecodeOutcome mk_decode(const LinearCode& code, const GFMatrix& received, const LinearCode* subcode) {
  const FiniteField& f = code.field();
  const Index n = code.length();
  const Index redundancy = code.redundancy();
  DecodeOutcome out;
  if (received.cols() != n) throw DimensionError("received word length != n");
  const GFMatrix& h = code.parity_check();
  const GFMatrix s = h * received.transpose();

  if (s.is_zero()) {
    out.status = DecodeStatus::success;
    out.codeword = received;
    out.error = GFMatrix(f, received.rows(), n);
  } else {
    out.syndrome_rank = rank(s);
    const ColumnSpace cs(s);
    for (Index j = 0; j < n; ++j)
      if (cs.contains_column(h, j)) out.support.push_back(j);
    const auto found = static_cast<Index>(out.support.size());
    if (found != out.syndrome_rank) {
      out.reason = "support size " + std::to_string(found) + " != syndrome rank " +
                   std::to_string(out.syndrome_rank);
      return out;
    }
    if (found > redundancy - 1) {
      out.reason = "support size exceeds n - k - 1";
      return out;
    }
    const SolveResult sol = solve(select_columns(h, out.support), s);
    if (!sol.consistent || !sol.unique) {
      out.reason = "error values not uniquely determined";
      return out;
    }
    GFMatrix e(f, received.rows(), n);
    for (std::size_t c = 0; c < out.support.size(); ++c)
      e.data().col(out.support[c]) = sol.solution.data().row(static_cast<Index>(c)).transpose();
    GFMatrix c = received - e;
    if (!all_rows_are_codewords(code, c)) {
      out.reason = "corrected rows fail the parity checks";
      return out;
    }
    out.codeword = std::move(c);
    out.error = std::move(e);
    out.status = DecodeStatus::success;
  }
  if (subcode != nullptr && !all_rows_are_codewords(*subcode, *out.codeword)) {
    out.status = DecodeStatus::miscorrection_detected;
    out.reason = "decoded rows lie outside the subcode";
  }
  return out;
}

bool colspace_of_syndrome_equals_H_E(const GFMatrix& h, const GFMatrix& e) {
  const IndexSet support = column_support(e);
  const GFMatrix he = select_columns(h, support);
  const GFMatrix s = h * e.transpose();
  const Index rs = rank(s);
  return rs == rank(he) && rank(hconcat(s, he)) == rs;
}

}  // namespace ilrc
