#pragma once

// Numerical cutoffs used across the library.  All sets handled here are
// open, so membership tests apply a strictness margin instead of testing
// exact inequalities; the remaining constants bound reconstruction error,
// rank decisions and iteration stopping.

namespace polyfoil::tol {

// Strictness margin for open-set membership, relative to the largest
// length in the tuple under test.
inline constexpr double membership = 1e-9;

// Vertex reconstruction round-trip bound, relative to the largest length.
inline constexpr double reconstruct = 1e-8;

// A stacked-gradient matrix is rank 2 when sigma2 > rank_ratio * sigma1.
inline constexpr double rank_ratio = 1e-7;

// Post-hoc cyclicity checks (equidistance, gamma residuals), relative.
inline constexpr double cyclic = 1e-8;

// Leaf conservation bound for accepted trace samples, relative.
inline constexpr double leaf = 1e-8;

// Gradient-norm stopping threshold for the optimizers, relative to the
// polygon's largest length.
inline constexpr double optimizer = 1e-8;

} // namespace polyfoil::tol
