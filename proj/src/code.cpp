#include "ilrc/code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ilrc/combinatorics.hpp"

namespace ilrc {

namespace {

void check_positions(Index n, std::span<const Index> positions) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index p : positions) {
    if (p < 0 || p >= n) throw CodeError("position " + std::to_string(p) + " out of range");
    if (seen[static_cast<std::size_t>(p)]) throw CodeError("repeated position " + std::to_string(p));
    seen[static_cast<std::size_t>(p)] = true;
  }
}

GFMatrix row_basis(const GFMatrix& m) {
  auto r = rref(m);
  return GFMatrix(m.field(), r.reduced.data().topRows(r.rank()));
}

}  // namespace

LocalityPartition LocalityPartition::contiguous(Index n, int r, int rho) {
  const Index size = r + rho - 1;
  if (size <= 0 || n % size != 0) throw CodeError("group size must divide n");
  LocalityPartition p{r, rho, {}};
  for (Index start = 0; start < n; start += size) {
    IndexSet g(static_cast<std::size_t>(size));
    for (Index i = 0; i < size; ++i) g[static_cast<std::size_t>(i)] = start + i;
    p.groups.push_back(std::move(g));
  }
  return p;
}

void LocalityPartition::validate(Index n) const {
  if (r < 1 || rho < 1) throw CodeError("locality parameters must be positive");
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& g : groups) {
    if (g.empty()) throw CodeError("empty locality group");
    if (static_cast<Index>(g.size()) > r + rho - 1)
      throw CodeError("locality group larger than r + rho - 1");
    for (Index i : g) {
      if (i < 0 || i >= n) throw CodeError("locality group index out of range");
      ++hits[static_cast<std::size_t>(i)];
    }
  }
  for (int h : hits)
    if (h != 1) throw CodeError("locality groups must partition the positions");
}

Index LocalityPartition::group_of(Index position) const {
  for (std::size_t j = 0; j < groups.size(); ++j)
    if (std::find(groups[j].begin(), groups[j].end(), position) != groups[j].end())
      return static_cast<Index>(j);
  throw CodeError("position not covered by the partition");
}

bool LocalityPartition::equal_sizes() const {
  return std::all_of(groups.begin(), groups.end(),
                     [&](const IndexSet& g) { return g.size() == groups.front().size(); });
}

LinearCode::LinearCode(const GFMatrix& generator)
    : LinearCode(row_basis(generator), kernel_basis(generator)) {}

LinearCode::LinearCode(GFMatrix generator, GFMatrix parity_check)
    : generator_(std::move(generator)), parity_check_(std::move(parity_check)) {
  if (!(generator_ * parity_check_.transpose()).is_zero())
    throw CodeError("generator and parity-check matrices are not dual");
}

LinearCode LinearCode::from_parity_check(const GFMatrix& parity_check) {
  return LinearCode(kernel_basis(parity_check), row_basis(parity_check));
}

LinearCode LinearCode::with_locality(LocalityPartition partition) const {
  partition.validate(length());
  LinearCode c = *this;
  c.locality_ = std::move(partition);
  return c;
}

LinearCode LinearCode::with_distance(Index d) const {
  LinearCode c = *this;
  c.distance_ = d;
  return c;
}

GFMatrix evaluation_matrix(const FiniteField& field, std::span<const Element> points,
                           std::span<const std::uint64_t> exponents) {
  GFMatrix m(field, static_cast<Index>(exponents.size()), static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = field.pow(points[j], exponents[i]);
  return m;
}

namespace {

std::vector<Element> validated_points(const FiniteField& field, std::vector<Element> points, Index k) {
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CodeError("evaluation points must be distinct");
  for (Element a : points)
    if (!field.contains(a)) throw CodeError("evaluation point outside the field");
  const auto n = static_cast<Index>(points.size());
  if (k < 1 || k > n) throw CodeError("Reed-Solomon dimension out of range");
  return points;
}

GFMatrix rs_generator(const FiniteField& field, std::span<const Element> points, Index k) {
  std::vector<std::uint64_t> exps(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) exps[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
  return evaluation_matrix(field, points, exps);
}

}  // namespace

ReedSolomonCode::ReedSolomonCode(const FiniteField& field, std::vector<Element> points, Index k)
    : points_(validated_points(field, std::move(points), k)),
      syndrome_matrix_(field, 0, 0),
      code_(rs_generator(field, points_, k)) {
  const auto n = static_cast<Index>(points_.size());
  multipliers_.resize(points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j) {
    Element prod = 1;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (i != j) prod = field.mul(prod, field.sub(points_[j], points_[i]));
    multipliers_[j] = field.inv(prod);
  }
  syndrome_matrix_ = GFMatrix(field, n - k, n);
  for (Index i = 0; i < n - k; ++i)
    for (Index j = 0; j < n; ++j)
      syndrome_matrix_(i, j) = field.mul(multipliers_[static_cast<std::size_t>(j)],
                                         field.pow(points_[static_cast<std::size_t>(j)],
                                                   static_cast<std::uint64_t>(i)));
  if (!(code_.generator() * syndrome_matrix_.transpose()).is_zero())
    throw CodeError("internal: power-sum parity checks do not annihilate the code");
  code_ = code_.with_distance(n - k + 1);
}

Word encode(const LinearCode& code, const Word& message) {
  if (message.size() != code.dimension())
    throw DimensionError("message length " + std::to_string(message.size()) + " != k");
  return multiply(code.field(), message, code.generator());
}

GFMatrix encode(const LinearCode& code, const GFMatrix& messages) {
  if (messages.cols() != code.dimension()) throw DimensionError("message length != k");
  return messages * code.generator();
}

Word syndrome(const LinearCode& code, const Word& word) {
  if (word.size() != code.length()) throw DimensionError("word length != n");
  return multiply(code.field(), word, code.parity_check().transpose());
}

bool is_codeword(const LinearCode& code, const Word& word) {
  const Word s = syndrome(code, word);
  return (s.array() == Element{0}).all();
}

bool all_rows_are_codewords(const LinearCode& code, const GFMatrix& rows) {
  if (rows.cols() != code.length()) throw DimensionError("word length != n");
  return (rows * code.parity_check().transpose()).is_zero();
}

SystematicForm systematic_form(const LinearCode& code) {
  auto r = rref(code.generator());
  return {std::move(r.reduced), std::move(r.pivots)};
}

namespace {

struct ColumnSearch {
  std::optional<Index> dependent_size;
  Index independent_through = 0;  // every subset of this size or smaller is independent
  std::uint64_t work = 0;
};

ColumnSearch parity_column_search(const LinearCode& code, std::uint64_t budget) {
  const Index n = code.length();
  const GFMatrix& h = code.parity_check();
  ColumnSearch out;
  for (Index w = 1; w <= std::min(n, h.rows() + 1); ++w) {
    const auto count = binomial_u64(static_cast<unsigned>(n), static_cast<unsigned>(w));
    if (count > budget - std::min(budget, out.work)) break;
    bool dependent = false;
    for_each_subset(n, w, [&](const IndexSet& s) {
      ++out.work;
      dependent = rank(select_columns(h, s)) < w;
      return !dependent;
    });
    if (dependent) {
      out.dependent_size = w;
      break;
    }
    out.independent_through = w;
  }
  return out;
}

}  // namespace

std::optional<Index> min_distance_by_parity_columns(const LinearCode& code, std::uint64_t budget) {
  return parity_column_search(code, budget).dependent_size;
}

DistanceResult min_distance_exhaustive(const LinearCode& code, std::uint64_t budget) {
  const FiniteField& f = code.field();
  const Index n = code.length();
  const Index k = code.dimension();
  if (k == 0) return {n + 1, true, DistanceResult::Method::enumeration, 0};

  const double log_space = static_cast<double>(k) * f.order_log2();
  if (log_space <= std::log2(static_cast<double>(budget))) {
    // Odometer over all nonzero messages, updating the codeword incrementally.
    const std::uint64_t q = f.order();
    Word msg = Word::Zero(k);
    Word cw = Word::Zero(n);
    Index best = n;
    std::uint64_t work = 0;
    const GFMatrix& g = code.generator();
    for (;;) {
      Index i = 0;
      while (i < k) {
        const Element old = msg(i);
        const Element next = old + 1 == q ? 0 : old + 1;
        msg(i) = next;
        const Element delta = f.sub(next, old);
        for (Index j = 0; j < n; ++j) cw(j) = f.add(cw(j), f.mul(delta, g(i, j)));
        if (next != 0) break;
        ++i;
      }
      if (i == k) break;
      ++work;
      const Index weight = (cw.array() != Element{0}).count();
      best = std::min(best, weight);
    }
    return {best, true, DistanceResult::Method::enumeration, work};
  }

  const ColumnSearch search = parity_column_search(code, budget);
  if (search.dependent_size)
    return {*search.dependent_size, true, DistanceResult::Method::parity_columns, search.work};
  return {search.independent_through + 1, false, DistanceResult::Method::lower_bound, search.work};
}

std::optional<Index> mds_witness_distance(const LinearCode& code) {
  const Index n = code.length();
  const Index k = code.dimension();
  bool mds = true;
  for_each_subset(n, k, [&](const IndexSet& s) {
    if (rank(select_columns(code.generator(), s)) < k) {
      mds = false;
      return false;
    }
    return true;
  });
  if (!mds) return std::nullopt;
  return n - k + 1;
}

IndexSet complement(Index n, std::span<const Index> positions) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Index p : positions) in[static_cast<std::size_t>(p)] = true;
  IndexSet out;
  for (Index i = 0; i < n; ++i)
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

LinearCode puncture(const LinearCode& code, std::span<const Index> positions) {
  check_positions(code.length(), positions);
  const IndexSet keep = complement(code.length(), positions);
  return LinearCode(select_columns(code.generator(), keep));
}

LinearCode restrict_to(const LinearCode& code, std::span<const Index> positions) {
  check_positions(code.length(), positions);
  return LinearCode(select_columns(code.generator(), positions));
}

LinearCode shorten(const LinearCode& code, std::span<const Index> positions) {
  check_positions(code.length(), positions);
  const IndexSet keep = complement(code.length(), positions);
  // Messages m with m G_positions = 0 form the left kernel of G restricted to positions.
  const GFMatrix gs = select_columns(code.generator(), positions);
  const GFMatrix msgs = kernel_basis(gs.transpose());
  const GFMatrix sub = msgs * code.generator();
  return LinearCode(select_columns(sub, keep));
}

ErasureResult erasure_decode(const LinearCode& code, const Word& received,
                             std::span<const Index> erased) {
  check_positions(code.length(), erased);
  if (received.size() != code.length()) throw DimensionError("word length != n");
  const FiniteField& f = code.field();
  Word known = received;
  for (Index p : erased) known(p) = 0;
  if (erased.empty()) {
    const bool ok = is_codeword(code, known);
    return {ok ? ErasureStatus::recovered : ErasureStatus::inconsistent, known};
  }
  // H_E x = -H known^T
  const GFMatrix he = select_columns(code.parity_check(), erased);
  const Word s = syndrome(code, known);
  GFMatrix rhs(f, s.size(), 1);
  for (Index i = 0; i < s.size(); ++i) rhs(i, 0) = f.neg(s(i));
  const SolveResult sol = solve(he, rhs);
  if (!sol.consistent) return {ErasureStatus::inconsistent, received};
  for (std::size_t i = 0; i < erased.size(); ++i)
    known(erased[i]) = sol.solution(static_cast<Index>(i), 0);
  return {sol.unique ? ErasureStatus::recovered : ErasureStatus::ambiguous, known};
}

bool is_information_set(const LinearCode& code, std::span<const Index> positions) {
  if (static_cast<Index>(positions.size()) != code.dimension())
    throw CodeError("an information set has exactly k positions");
  check_positions(code.length(), positions);
  return rank(select_columns(code.generator(), positions)) == code.dimension();
}

std::string to_string(ErasureStatus s) {
  switch (s) {
    case ErasureStatus::recovered: return "recovered";
    case ErasureStatus::ambiguous: return "ambiguous";
    case ErasureStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

std::string to_string(DistanceResult::Method m) {
  switch (m) {
    case DistanceResult::Method::enumeration: return "enumeration";
    case DistanceResult::Method::parity_columns: return "parity-columns";
    case DistanceResult::Method::mds_witness: return "mds-witness";
    case DistanceResult::Method::lower_bound: return "lower-bound";
  }
  return "?";
}

}  // namespace ilrc
