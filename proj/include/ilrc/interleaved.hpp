#ifndef ILRC_INTERLEAVED_HPP
#define ILRC_INTERLEAVED_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ilrc/code.hpp"

namespace ilrc {

/// l codewords of one constituent code stacked as rows.
class InterleavedWord {
 public:
  /// Throws CodeError unless every row is a codeword.
  InterleavedWord(const LinearCode& code, GFMatrix rows);
  static InterleavedWord encode(const LinearCode& code, const GFMatrix& messages);

  const LinearCode& code() const noexcept { return *code_; }
  const GFMatrix& matrix() const noexcept { return rows_; }
  Index order() const noexcept { return rows_.rows(); }

 private:
  const LinearCode* code_;
  GFMatrix rows_;
};

/// l x n error whose weight counts nonzero columns.
struct BurstError {
  GFMatrix matrix;
  IndexSet support;
  Index rank = 0;

  explicit BurstError(GFMatrix e);
  Index weight() const noexcept { return static_cast<Index>(support.size()); }
};

enum class SupportMode { uniform, fixed };
enum class ValueMode { uniform_nonzero_columns, full_rank_conditioned };

/**
 * Random burst error with exactly t nonzero columns. Uniform support draws a
 * t-subset of [n]; fixed support uses `fixed_support`. Nonzero columns are
 * uniform over nonzero vectors; the conditioned mode redraws until the
 * l x t submatrix has rank t.
 */
BurstError sample_burst_error(const FiniteField& field, Index ell, Index n, Index t,
                              SupportMode support_mode, ValueMode value_mode, std::uint64_t seed,
                              std::span<const Index> fixed_support = {});

enum class DecodeStatus { success, failure, miscorrection_detected };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::failure;
  std::optional<GFMatrix> codeword;
  std::optional<GFMatrix> error;
  IndexSet support;
  Index syndrome_rank = 0;
  Index locator_degree = 0;  // error-locator degree for syndrome decoders
  std::string reason;

  bool ok() const noexcept { return status == DecodeStatus::success; }
};

std::string to_string(DecodeStatus s);

/// rank(H_E) = t and rank(H_{E + i}) = t + 1 for every i outside E.
bool is_t_plus_1_independent(const GFMatrix& h, std::span<const Index> e);

/**
 * Metzner-Kapturowski decoding of an l x n received matrix. When `subcode`
 * is given, a result outside it is reported as miscorrection_detected.
 */
DecodeOutcome mk_decode(const LinearCode& code, const GFMatrix& received,
                        const LinearCode* subcode = nullptr);

/// colspace(H E^T) == colspace(H_E) for E's support; a test-side diagnostic.
bool colspace_of_syndrome_equals_H_E(const GFMatrix& h, const GFMatrix& e);

IndexSet column_support(const GFMatrix& m);

}  // namespace ilrc

#endif  // ILRC_INTERLEAVED_HPP
