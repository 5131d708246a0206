#include "hankelforge/hankel.hpp"

#include <stdexcept>
#include <utility>

#include "hankelforge/errors.hpp"

namespace hankelforge {

ExactMatrix::ExactMatrix(long order) : n_(order) {
  if (order < 0) throw std::invalid_argument("negative matrix order");
  cells_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), Rat(0));
}

std::size_t ExactMatrix::index(long i, long j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

Rat coefficient_at(const PowerSeries& seq, long idx) {
  if (idx < 0) return Rat(0);
  return seq.at(idx);
}

ExactMatrix hankel_matrix(const PowerSeries& seq, long shift, long order) {
  if (order < 0) throw std::invalid_argument("negative Hankel order");
  ExactMatrix m(order);
  if (order == 0) return m;
  long top = 2 * (order - 1) + shift;
  if (top >= seq.truncation())
    throw TruncationExceeded("Hankel matrix needs coefficient " + std::to_string(top) +
                             ", series truncated at " + std::to_string(seq.truncation()));
  for (long i = 0; i < order; ++i)
    for (long j = 0; j < order; ++j) m.at(i, j) = coefficient_at(seq, i + j + shift);
  return m;
}

namespace {

// Fraction-free elimination over the integers. Entries after step c are
// (c+1)-minors of the (row-permuted) input, so the division by the previous
// pivot is exact -- checked, not assumed.
Int bareiss_int_det(std::vector<Int>& a, long n) {
  int sgn = 1;
  Int prev(1);
  for (long c = 0; c + 1 < n; ++c) {
    if (a[static_cast<std::size_t>(c * n + c)] == 0) {
      long r = c + 1;
      while (r < n && a[static_cast<std::size_t>(r * n + c)] == 0) ++r;
      if (r == n) return Int(0);  // zero pivot column: singular
      for (long j = c; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(c * n + j)], a[static_cast<std::size_t>(r * n + j)]);
      sgn = -sgn;
    }
    const Int& pivot = a[static_cast<std::size_t>(c * n + c)];
    for (long i = c + 1; i < n; ++i) {
      for (long j = c + 1; j < n; ++j) {
        Int t = pivot * a[static_cast<std::size_t>(i * n + j)] -
                a[static_cast<std::size_t>(i * n + c)] * a[static_cast<std::size_t>(c * n + j)];
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw std::logic_error("fraction-free elimination: interior division not exact");
        mpz_divexact(a[static_cast<std::size_t>(i * n + j)].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[static_cast<std::size_t>(i * n + c)] = 0;
    }
    prev = pivot;
  }
  Int det = a[static_cast<std::size_t>(n * n - 1)];
  if (sgn < 0) det = -det;
  return det;
}

}  // namespace

Rat det_exact(const ExactMatrix& m) {
  const long n = m.order();
  if (n == 0) return Rat(1);

  std::vector<Int> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  Int cleared(1);
  for (long i = 0; i < n; ++i) {
    Int row_lcm(1);
    for (long j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (long j = 0; j < n; ++j) {
      const Rat& x = m.at(i, j);
      Int scale;
      mpz_divexact(scale.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
      a[static_cast<std::size_t>(i * n + j)] = Int(x.get_num()) * scale;
    }
    cleared *= row_lcm;
  }

  Rat det(bareiss_int_det(a, n));
  det /= Rat(cleared);
  return det;
}

Rat shifted_hankel_det(const PowerSeries& f, const HankelQuery& q) {
  if (q.K < 1) throw std::invalid_argument("convolution power must be >= 1");
  if (q.N < 0) throw std::invalid_argument("negative Hankel order");
  if (q.N == 0) return Rat(1);
  long top = 2 * (q.N - 1) + q.M;
  if (top >= f.truncation())
    throw TruncationExceeded("D_{K,M}(N) needs coefficient " + std::to_string(top) +
                             ", series truncated at " + std::to_string(f.truncation()));
  PowerSeries p = q.K == 1 ? f : f.pow(q.K);
  return det_exact(hankel_matrix(p, q.M, q.N));
}

std::vector<Rat> det_sequence(const PowerSeries& f, long power, long shift, long n_max) {
  if (power < 1) throw std::invalid_argument("convolution power must be >= 1");
  if (n_max < 0) throw std::invalid_argument("negative n_max");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.emplace_back(1);
  if (n_max == 0) return out;
  long top = 2 * (n_max - 1) + shift;
  if (top >= f.truncation())
    throw TruncationExceeded("D_{K,M}(N) needs coefficient " + std::to_string(top) +
                             ", series truncated at " + std::to_string(f.truncation()));
  PowerSeries p = power == 1 ? f : f.pow(power);
  for (long n = 1; n <= n_max; ++n)
    out.push_back(det_exact(hankel_matrix(p, shift, n)));
  return out;
}

long min_truncation(long shift, long max_order) {
  long need = max_order >= 1 ? 2 * (max_order - 1) + shift + 1 : 1;
  return (need < 1 ? 1 : need) + 4;
}

}  // namespace hankelforge
