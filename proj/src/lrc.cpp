#include "ilrc/lrc.hpp"

#include <algorithm>

namespace ilrc {

Index lrc_singleton_bound(Index n, Index k, Index r, Index rho) {
  if (r < 1 || k < r || n < k) throw CodeError("need 1 <= r <= k <= n");
  const Index groups = (k + r - 1) / r;
  return n - k + 1 - (groups - 1) * (rho - 1);
}

namespace {

struct Layout {
  FiniteField field;
  std::vector<Element> points;
  std::vector<std::uint64_t> exponents;
  Index degmax = 0;
};

Layout tamo_barg_layout(const FiniteField& f, Index n, Index k, int r, int rho) {
  if (r < 1 || rho < 2) throw CodeError("Tamo-Barg needs r >= 1 and rho >= 2");
  if (k < 1 || k % r != 0) throw CodeError("Tamo-Barg needs r | k");
  const std::uint64_t s = static_cast<std::uint64_t>(r + rho - 1);
  const std::uint64_t units = f.max_element();  // q - 1
  if (units % s != 0)
    throw CodeError("r + rho - 1 = " + std::to_string(s) + " does not divide q - 1");
  if (n <= 0 || static_cast<std::uint64_t>(n) % s != 0)
    throw CodeError("n must be a multiple of r + rho - 1");
  if (static_cast<std::uint64_t>(n) > units) throw CodeError("field too small for n");
  if (k > n) throw CodeError("k exceeds n");

  const Element gamma = f.primitive_element();
  const Element beta = f.pow(gamma, units / s);
  Layout out{f, {}, {}, 0};
  for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(n) / s; ++c) {
    Element x = f.pow(gamma, c);
    for (std::uint64_t j = 0; j < s; ++j) {
      out.points.push_back(x);
      x = f.mul(x, beta);
    }
  }
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(k / r); ++j)
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(r); ++i) {
      out.exponents.push_back(i + s * j);
      out.degmax = std::max<Index>(out.degmax, static_cast<Index>(i + s * j));
    }
  if (out.degmax >= n) throw CodeError("message degree reaches n");
  return out;
}

}  // namespace

struct TamoBargCode::Parts {
  Layout layout;
  int r;
  int rho;
};

TamoBargCode::TamoBargCode(const FiniteField& field, Index n, Index k, int r, int rho)
    : TamoBargCode(Parts{tamo_barg_layout(field, n, k, r, rho), r, rho}) {}

TamoBargCode::TamoBargCode(Parts&& parts)
    : r_(parts.r),
      rho_(parts.rho),
      exponents_(std::move(parts.layout.exponents)),
      supercode_(parts.layout.field, parts.layout.points, parts.layout.degmax + 1),
      code_(evaluation_matrix(parts.layout.field, parts.layout.points, exponents_)) {
  const Index n = supercode_.length();
  code_ = code_.with_locality(LocalityPartition::contiguous(n, r_, rho_))
              .with_distance(n - parts.layout.degmax);
}

LocalityCertificate verify_locality(const LinearCode& code, const LocalityPartition& partition) {
  partition.validate(code.length());
  LocalityCertificate cert;
  cert.holds = true;
  for (std::size_t j = 0; j < partition.groups.size(); ++j) {
    const LinearCode local = restrict_to(code, partition.groups[j]);
    const DistanceResult d = min_distance_exhaustive(local);
    if (!d.exact) throw CodeError("local group too large for an exact distance search");
    cert.group_distances.push_back(d.value);
    if (d.value < partition.rho) {
      cert.holds = false;
      cert.violating_groups.push_back(static_cast<Index>(j));
    }
  }
  return cert;
}

ErasureResult local_repair(const LinearCode& code, const LocalityPartition& partition,
                           const Word& received, std::span<const Index> erased, Index group) {
  if (group < 0 || group >= static_cast<Index>(partition.groups.size()))
    throw CodeError("no such locality group");
  if (received.size() != code.length()) throw DimensionError("word length != n");
  const IndexSet& members = partition.groups[static_cast<std::size_t>(group)];
  if (static_cast<Index>(erased.size()) > partition.rho - 1)
    throw CodeError("more than rho - 1 erasures in one group; fall back to global decoding");
  IndexSet local_erased;
  for (Index p : erased) {
    const auto it = std::find(members.begin(), members.end(), p);
    if (it == members.end()) throw CodeError("erasure outside the repair group");
    local_erased.push_back(static_cast<Index>(it - members.begin()));
  }
  const LinearCode local = restrict_to(code, members);
  Word part(static_cast<Index>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) part(static_cast<Index>(i)) = received(members[i]);
  const ErasureResult r = erasure_decode(local, part, local_erased);
  ErasureResult out{r.status, received};
  for (std::size_t i = 0; i < members.size(); ++i) out.word(members[i]) = r.word(static_cast<Index>(i));
  return out;
}

}  // namespace ilrc
