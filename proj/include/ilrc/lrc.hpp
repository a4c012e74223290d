#ifndef ILRC_LRC_HPP
#define ILRC_LRC_HPP

#include <vector>

#include "ilrc/code.hpp"

namespace ilrc {

/// d <= n - k + 1 - (ceil(k / r) - 1)(rho - 1)
Index lrc_singleton_bound(Index n, Index k, Index r, Index rho);

/**
 * Tamo-Barg code with good polynomial g(x) = x^(r + rho - 1).
 *
 * Evaluation points run coset by coset: group c holds gamma^c * beta^j for
 * j = 0 .. r + rho - 2, where gamma is the field's primitive element and beta
 * generates the subgroup of order r + rho - 1. The message polynomial is
 * sum a_ij x^i g(x)^j with i < r and j < k / r.
 */
class TamoBargCode {
 public:
  TamoBargCode(const FiniteField& field, Index n, Index k, int r, int rho);

  const LinearCode& code() const noexcept { return code_; }
  const ReedSolomonCode& supercode() const noexcept { return supercode_; }
  const LocalityPartition& partition() const noexcept { return *code_.locality(); }
  const std::vector<Element>& points() const noexcept { return supercode_.points(); }
  const std::vector<std::uint64_t>& exponents() const noexcept { return exponents_; }
  int r() const noexcept { return r_; }
  int rho() const noexcept { return rho_; }
  Index distance() const noexcept { return *code_.known_distance(); }
  /// Degree of g(x).
  Index group_size() const noexcept { return r_ + rho_ - 1; }

 private:
  struct Parts;
  explicit TamoBargCode(Parts&& parts);

  int r_;
  int rho_;
  std::vector<std::uint64_t> exponents_;
  ReedSolomonCode supercode_;
  LinearCode code_;
};

struct LocalityCertificate {
  bool holds = false;
  std::vector<Index> group_distances;  // exact distance of each restriction
  std::vector<Index> violating_groups;
};

/// Checks d(C|A_j) >= rho for every group of the partition.
LocalityCertificate verify_locality(const LinearCode& code, const LocalityPartition& partition);

/**
 * Recovers erasures inside one group from that group's symbols only.
 * Throws CodeError when more than rho - 1 positions are erased or an erasure
 * lies outside the group.
 */
ErasureResult local_repair(const LinearCode& code, const LocalityPartition& partition,
                           const Word& received, std::span<const Index> erased, Index group);

}  // namespace ilrc

#endif  // ILRC_LRC_HPP
