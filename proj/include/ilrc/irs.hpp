#ifndef ILRC_IRS_HPP
#define ILRC_IRS_HPP

#include "ilrc/interleaved.hpp"
#include "ilrc/lrc.hpp"

namespace ilrc {

/// floor(l (d - 1) / (l + 1))
Index t_max(Index ell, Index d);

/**
 * Stacked key equations for a common monic error locator of degree t:
 * sum_{u<t} lambda_u s_{i+u} = -s_{i+t} for every row and i < n - k - t.
 */
struct JointKeyEquationSystem {
  GFMatrix syndromes;  // (n - k) x l, column r holds row r's power-sum syndrome
  Index degree = 0;
  GFMatrix coefficients;  // l (n - k - t) x t
  GFMatrix rhs;           // l (n - k - t) x 1
};

JointKeyEquationSystem key_equation_system(const GFMatrix& syndromes, Index t);

/**
 * Collaborative decoding of an l x n received matrix up to t_max(l, d).
 * Searches t = 1 .. t_max for the first consistent system with a unique
 * solution, then requires its locator to have t distinct roots among the
 * evaluation points before solving for error values.
 */
DecodeOutcome irs_decode(const ReedSolomonCode& rs, const GFMatrix& received);

/// Each row decoded alone up to floor((d - 1) / 2); success only if all rows succeed.
DecodeOutcome bmd_decode_rows(const ReedSolomonCode& rs, const GFMatrix& received);

/// irs_decode against the RS supercode; rows outside the LRC become miscorrection_detected.
DecodeOutcome decode_lrc_via_supercode(const TamoBargCode& lrc, const GFMatrix& received);

}  // namespace ilrc

#endif  // ILRC_IRS_HPP
