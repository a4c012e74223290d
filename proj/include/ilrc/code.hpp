#ifndef ILRC_CODE_HPP
#define ILRC_CODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilrc/matrix.hpp"

namespace ilrc {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Disjoint groups covering [0, n), each of size at most r + rho - 1.
struct LocalityPartition {
  int r = 0;
  int rho = 0;
  std::vector<IndexSet> groups;

  /// Contiguous groups of equal size r + rho - 1.
  static LocalityPartition contiguous(Index n, int r, int rho);

  /// Throws CodeError when groups overlap, miss a position or are too large.
  void validate(Index n) const;
  Index group_of(Index position) const;
  bool equal_sizes() const;
};

/**
 * An [n, k] linear code held as a generator G (k x n, full row rank) and a
 * parity-check matrix H ((n - k) x n) derived as a kernel basis of G.
 */
class LinearCode {
 public:
  /// Dependent rows of `generator` are dropped; the dimension is its rank.
  explicit LinearCode(const GFMatrix& generator);
  static LinearCode from_parity_check(const GFMatrix& parity_check);

  const FiniteField& field() const noexcept { return generator_.field(); }
  Index length() const noexcept { return generator_.cols(); }
  Index dimension() const noexcept { return generator_.rows(); }
  Index redundancy() const noexcept { return parity_check_.rows(); }
  const GFMatrix& generator() const noexcept { return generator_; }
  const GFMatrix& parity_check() const noexcept { return parity_check_; }

  const std::optional<LocalityPartition>& locality() const noexcept { return locality_; }
  LinearCode with_locality(LocalityPartition partition) const;

  std::optional<Index> known_distance() const noexcept { return distance_; }
  LinearCode with_distance(Index d) const;

 private:
  LinearCode(GFMatrix generator, GFMatrix parity_check);

  GFMatrix generator_;
  GFMatrix parity_check_;
  std::optional<LocalityPartition> locality_;
  std::optional<Index> distance_;
};

/// Evaluation code of polynomials of degree < k on distinct points.
class ReedSolomonCode {
 public:
  ReedSolomonCode(const FiniteField& field, std::vector<Element> points, Index k);

  const LinearCode& code() const noexcept { return code_; }
  const FiniteField& field() const noexcept { return code_.field(); }
  Index length() const noexcept { return code_.length(); }
  Index dimension() const noexcept { return code_.dimension(); }
  Index distance() const noexcept { return length() - dimension() + 1; }
  const std::vector<Element>& points() const noexcept { return points_; }

  /// Column multipliers v_j of the dual: H(i, j) = v_j * points_j^i.
  const std::vector<Element>& dual_multipliers() const noexcept { return multipliers_; }
  /// Power-sum parity-check matrix used by syndrome decoders.
  const GFMatrix& syndrome_matrix() const noexcept { return syndrome_matrix_; }

 private:
  std::vector<Element> points_;
  std::vector<Element> multipliers_;
  GFMatrix syndrome_matrix_;
  LinearCode code_;
};

/// Vandermonde rows x^e over `points` for the listed exponents.
GFMatrix evaluation_matrix(const FiniteField& field, std::span<const Element> points,
                           std::span<const std::uint64_t> exponents);

Word encode(const LinearCode& code, const Word& message);
/// Rows of `messages` (l x k) encoded into an l x n matrix.
GFMatrix encode(const LinearCode& code, const GFMatrix& messages);
Word syndrome(const LinearCode& code, const Word& word);
bool is_codeword(const LinearCode& code, const Word& word);
bool all_rows_are_codewords(const LinearCode& code, const GFMatrix& rows);

/// Generator in systematic form on its first pivot positions, when one exists.
struct SystematicForm {
  GFMatrix generator;
  IndexSet information_positions;
};
SystematicForm systematic_form(const LinearCode& code);

struct DistanceResult {
  enum class Method { enumeration, parity_columns, mds_witness, lower_bound };
  Index value = 0;
  bool exact = false;
  Method method = Method::lower_bound;
  std::uint64_t work = 0;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 2'000'000;

/**
 * Minimum distance under a work budget.
 *
 * Codeword enumeration runs when q^k <= budget. Otherwise columns of H are
 * searched for the smallest dependent subset, size by size, until the budget
 * is spent; finding one is exact, running out leaves a certified lower bound
 * (every checked size was independent) with exact = false.
 */
DistanceResult min_distance_exhaustive(const LinearCode& code,
                                       std::uint64_t budget = kDefaultDistanceBudget);

/// Smallest w such that some w columns of H are dependent, if the search fits.
std::optional<Index> min_distance_by_parity_columns(const LinearCode& code,
                                                    std::uint64_t budget = kDefaultDistanceBudget);

/// n - k + 1 if every k columns of G are independent, nullopt otherwise.
std::optional<Index> mds_witness_distance(const LinearCode& code);

LinearCode puncture(const LinearCode& code, std::span<const Index> positions);
/// The code restricted to `positions` (in the given order).
LinearCode restrict_to(const LinearCode& code, std::span<const Index> positions);
/// Codewords vanishing on `positions`, with those positions deleted.
LinearCode shorten(const LinearCode& code, std::span<const Index> positions);

enum class ErasureStatus { recovered, ambiguous, inconsistent };

struct ErasureResult {
  ErasureStatus status = ErasureStatus::inconsistent;
  Word word;
};

/// Fills the erased positions from H; erased entries of `received` are ignored.
ErasureResult erasure_decode(const LinearCode& code, const Word& received,
                             std::span<const Index> erased);

bool is_information_set(const LinearCode& code, std::span<const Index> positions);

IndexSet complement(Index n, std::span<const Index> positions);
std::string to_string(ErasureStatus s);
std::string to_string(DistanceResult::Method m);

}  // namespace ilrc

#endif  // ILRC_CODE_HPP
