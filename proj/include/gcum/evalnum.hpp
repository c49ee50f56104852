// Numeric evaluation of symbolic results against concrete covariance
// matrices, plus a seeded Monte Carlo estimator used as an independent
// statistical cross-check.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcum/cumulants.hpp"
#include "gcum/poly.hpp"

namespace gcum {

/// Dense symmetric covariance matrix.  Construction validates squareness
/// and symmetry (1e-12 relative tolerance); positive semi-definiteness is
/// only required, and checked, when sampling.
class CovMatrix {
 public:
  CovMatrix(std::size_t dim, std::vector<double> entries);  // row-major

  std::size_t dim() const { return dim_; }

  /// Entry for variables i and j, 1-based.
  double at(Index i, Index j) const { return entries_[(i - 1) * dim_ + (j - 1)]; }

  static CovMatrix identity(std::size_t dim);

  /// Reads the JSON form {"dim": n, "entries": [[...], ...]} (row-major).
  static CovMatrix load_json(std::istream& in);
  static CovMatrix load_json_file(const std::string& path);

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

struct McConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct McEstimate {
  double estimate = 0.0;
  /// Batch-means standard error; +infinity when there are too few samples
  /// to form at least two batches.
  double std_error = 0.0;
};

/// Evaluates the polynomial at the given covariances, in display term order.
/// Throws std::out_of_range naming the offending symbol when an index
/// exceeds the matrix dimension.
double eval_numeric(const Poly& p, const CovMatrix& cov);

/// Lower-triangular L with cov = L * L^T, row-major.  Pivots below -1e-10
/// raise an error (the matrix is not positive semi-definite); pivots within
/// the tolerance are clamped to zero.  No jitter repair is attempted.
std::vector<double> psd_factor(const CovMatrix& cov);

/// Plug-in Monte Carlo estimate of cumulant(q) under cov: draws seeded joint
/// Gaussian samples through the factor of cov, forms per-sample group
/// products, and combines their empirical moments through the partition
/// formula.  The estimate is biased at O(1/samples) but consistent.  The
/// standard error comes from batch means.  Requires total order <= 8 and a
/// positive semi-definite matrix.  A fixed (seed, samples) pair gives a
/// bit-identical estimate within one standard-library implementation; the
/// generator is std::mt19937_64 with std::normal_distribution, sampled in a
/// single stream.
McEstimate mc_estimate_cumulant(const CumulantQuery& q, const CovMatrix& cov,
                                const McConfig& cfg);

}  // namespace gcum
