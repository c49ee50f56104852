#include "gcum/evalnum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gcum/combinat.hpp"

namespace gcum {

CovMatrix::CovMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw std::invalid_argument("covariance matrix needs dim >= 1");
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("covariance matrix entries must be dim x dim");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("covariance matrix entries must be finite");
    }
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r + 1; c < dim_; ++c) {
      const double a = entries_[r * dim_ + c];
      const double b = entries_[c * dim_ + r];
      const double tol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
      if (std::abs(a - b) > tol) {
        std::ostringstream msg;
        msg << "covariance matrix is not symmetric at (" << r + 1 << "," << c + 1
            << "): " << a << " vs " << b;
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

CovMatrix CovMatrix::identity(std::size_t dim) {
  std::vector<double> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return CovMatrix(dim, std::move(e));
}

CovMatrix CovMatrix::load_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw std::runtime_error(
        "covariance file must be an object with \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() == 0) {
    throw std::runtime_error("covariance \"dim\" must be a positive integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  const auto& rows = j["entries"];
  if (!rows.is_array() || rows.size() != dim) {
    throw std::runtime_error("covariance \"entries\" must hold dim rows");
  }
  std::vector<double> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw std::runtime_error("covariance rows must hold dim numbers");
    }
    for (const auto& v : row) {
      if (!v.is_number()) throw std::runtime_error("covariance entries must be numbers");
      entries.push_back(v.get<double>());
    }
  }
  return CovMatrix(dim, std::move(entries));
}

CovMatrix CovMatrix::load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open covariance file: " + path);
  return load_json(in);
}

double eval_numeric(const Poly& p, const CovMatrix& cov) {
  double sum = 0.0;
  for (const auto& [m, c] : p.sorted_terms()) {
    double term = c.convert_to<double>();
    for (const CovSymbol& f : m.factors()) {
      if (f.hi > cov.dim()) {
        std::ostringstream msg;
        msg << "symbol V[" << f.lo << "," << f.hi << "] exceeds covariance dimension "
            << cov.dim();
        throw std::out_of_range(msg.str());
      }
      term *= cov.at(f.lo, f.hi);
    }
    sum += term;
  }
  return sum;
}

std::vector<double> psd_factor(const CovMatrix& cov) {
  const std::size_t n = cov.dim();
  std::vector<double> L(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = cov.at(static_cast<Index>(j + 1), static_cast<Index>(j + 1));
    for (std::size_t k = 0; k < j; ++k) d -= L[j * n + k] * L[j * n + k];
    if (d < -1e-10) {
      std::ostringstream msg;
      msg << "covariance matrix is not positive semi-definite (pivot " << d
          << " at " << j + 1 << ")";
      throw std::runtime_error(msg.str());
    }
    if (d <= 0.0) continue;  // semi-definite direction: column stays zero
    const double root = std::sqrt(d);
    L[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = cov.at(static_cast<Index>(i + 1), static_cast<Index>(j + 1));
      for (std::size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      L[i * n + j] = s / root;
    }
  }
  return L;
}

namespace {

struct CompiledPartition {
  double weight;                          // (-1)^(i-1) * (i-1)!
  std::vector<std::uint32_t> block_masks; // group subsets, one per block
};

// Partition formula applied to empirical subset moments.
double combine_moments(const std::vector<CompiledPartition>& partitions,
                       const std::vector<double>& subset_means) {
  double total = 0.0;
  for (const CompiledPartition& p : partitions) {
    double prod = p.weight;
    for (std::uint32_t mask : p.block_masks) prod *= subset_means[mask];
    total += prod;
  }
  return total;
}

}  // namespace

McEstimate mc_estimate_cumulant(const CumulantQuery& q, const CovMatrix& cov,
                                const McConfig& cfg) {
  const std::size_t order = q.total_order();
  if (order > 8) {
    throw std::invalid_argument(
        "Monte Carlo estimation supports total order <= 8 (precision degrades "
        "rapidly beyond)");
  }
  if (cfg.samples == 0) throw std::invalid_argument("samples must be >= 1");
  for (const Group& g : q.groups()) {
    for (Index i : g.values()) {
      if (i > cov.dim()) {
        std::ostringstream msg;
        msg << "group index " << i << " exceeds covariance dimension " << cov.dim();
        throw std::out_of_range(msg.str());
      }
    }
  }

  const std::size_t dim = cov.dim();
  const std::vector<double> L = psd_factor(cov);
  const std::size_t ngroups = q.groups().size();
  const std::size_t nsubsets = std::size_t{1} << ngroups;

  // Weighted block structure of every partition of the group positions; the
  // empirical estimator keeps odd blocks (their sample moments are not zero).
  std::vector<CompiledPartition> partitions;
  {
    combinat::SetPartitionStream stream(ngroups);
    while (auto part = stream.next()) {
      CompiledPartition cp;
      double w = 1.0;
      for (std::size_t i = 2; i < part->size(); ++i) w *= static_cast<double>(i);
      cp.weight = part->size() % 2 == 0 ? -w : w;
      for (const combinat::Block& block : *part) {
        std::uint32_t mask = 0;
        for (std::size_t pos : block) mask |= std::uint32_t{1} << pos;
        cp.block_masks.push_back(mask);
      }
      partitions.push_back(std::move(cp));
    }
  }

  std::mt19937_64 engine(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  const std::uint64_t batch_size = std::max<std::uint64_t>(1, cfg.samples / 50);

  std::vector<double> z(dim), x(dim), y(ngroups);
  std::vector<double> prod(nsubsets, 1.0);
  std::vector<double> batch_sums(nsubsets, 0.0), total_sums(nsubsets, 0.0);
  std::vector<double> batch_estimates;
  std::vector<double> means(nsubsets, 1.0);

  std::uint64_t in_batch = 0;
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    for (std::size_t i = 0; i < dim; ++i) z[i] = normal(engine);
    for (std::size_t i = 0; i < dim; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k <= i; ++k) v += L[i * dim + k] * z[k];
      x[i] = v;
    }
    for (std::size_t g = 0; g < ngroups; ++g) {
      double v = 1.0;
      for (Index idx : q.groups()[g].values()) v *= x[idx - 1];
      y[g] = v;
    }
    for (std::size_t mask = 1; mask < nsubsets; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      prod[mask] = prod[mask ^ low] * y[std::countr_zero(low)];
      batch_sums[mask] += prod[mask];
    }
    if (++in_batch == batch_size) {
      for (std::size_t mask = 1; mask < nsubsets; ++mask) {
        total_sums[mask] += batch_sums[mask];
        means[mask] = batch_sums[mask] / static_cast<double>(batch_size);
        batch_sums[mask] = 0.0;
      }
      batch_estimates.push_back(combine_moments(partitions, means));
      in_batch = 0;
    }
  }
  if (in_batch > 0) {  // leftovers go into the totals only
    for (std::size_t mask = 1; mask < nsubsets; ++mask) {
      total_sums[mask] += batch_sums[mask];
    }
  }

  for (std::size_t mask = 1; mask < nsubsets; ++mask) {
    means[mask] = total_sums[mask] / static_cast<double>(cfg.samples);
  }
  McEstimate out;
  out.estimate = combine_moments(partitions, means);

  const std::size_t nbatches = batch_estimates.size();
  if (nbatches >= 2) {
    double mean = 0.0;
    for (double e : batch_estimates) mean += e;
    mean /= static_cast<double>(nbatches);
    double var = 0.0;
    for (double e : batch_estimates) var += (e - mean) * (e - mean);
    var /= static_cast<double>(nbatches - 1);
    out.std_error = std::sqrt(var / static_cast<double>(nbatches));
  } else {
    out.std_error = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace gcum
