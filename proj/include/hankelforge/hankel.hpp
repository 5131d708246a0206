#pragma once

#include <vector>

#include "hankelforge/power_series.hpp"

namespace hankelforge {

// Parameters of a shifted Hankel determinant D_{K,M}(N): the determinant of
// the N x N matrix (a_{K, i+j+M}) built from the K-th convolution power,
// with negative-index coefficients taken as zero.
struct HankelQuery {
  long K = 1;  // convolution power, >= 1
  long M = 0;  // shift, may be negative
  long N = 0;  // matrix order, >= 0
};

// Dense square matrix of exact rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(long order);

  long order() const { return n_; }
  Rat& at(long i, long j) { return cells_[index(i, j)]; }
  const Rat& at(long i, long j) const { return cells_[index(i, j)]; }

 private:
  long n_;
  std::vector<Rat> cells_;
  std::size_t index(long i, long j) const;
};

// a_idx for idx >= 0 (TruncationExceeded past the known window), 0 for
// negative idx.
Rat coefficient_at(const PowerSeries& seq, long idx);

// Matrix with entry (i,j) = coefficient_at(seq, i + j + shift). Requires
// 2(order-1) + shift < truncation of seq.
ExactMatrix hankel_matrix(const PowerSeries& seq, long shift, long order);

// Exact determinant. Row denominators are cleared to integers, the integer
// matrix is eliminated fraction-free (Bareiss, with row pivoting), and the
// cleared factor divided back out. Order 0 gives 1. Exactness of every
// interior division is asserted; a failed assertion is a logic error, not a
// numeric one.
Rat det_exact(const ExactMatrix& m);

// D_{K,M}(N) evaluated on the K-th convolution power of f. D_{K,M}(0) = 1.
Rat shifted_hankel_det(const PowerSeries& f, const HankelQuery& q);

// [D_{K,M}(0), ..., D_{K,M}(n_max)]; the convolution power is computed once.
std::vector<Rat> det_sequence(const PowerSeries& f, long power, long shift, long n_max);

// Smallest truncation order that serves every coefficient of D_{K,M}(N) for
// N <= max_order, with a little headroom.
long min_truncation(long shift, long max_order);

}  // namespace hankelforge
