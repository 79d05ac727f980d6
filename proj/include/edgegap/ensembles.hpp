// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace edgegap::ensembles {

struct Gaussian {};
/// Laguerre weight x^exponent e^{-c x}; exponent > -1.
struct Laguerre {
  double exponent;
};
using Family = std::variant<Gaussian, Laguerre>;

// Weight conventions, matching the superposition/decimation identities:
//   Gaussian:  beta=1 e^{-x^2/2}, beta=2 e^{-x^2},  beta=4 e^{-x^2}
//   Laguerre:  beta=1 x^w e^{-x/2}, beta=2 x^w e^{-x}, beta=4 x^w e^{-x}
struct EnsembleSpec {
  Family family = Gaussian{};
  int beta = 1;
  int n = 1;

  /// OE_n(x^{(a-1)/2} e^{-x/2}), UE_n(x^a e^{-x}), SE_n(x^{a+1} e^{-x}) for a
  /// given underlying Bessel order a.
  static EnsembleSpec laguerre_for_order(int beta, int n, double a);
  static EnsembleSpec gaussian(int beta, int n);

  void validate() const;
  bool is_gaussian() const { return std::holds_alternative<Gaussian>(family); }
};

enum class Ordering { Descending, Ascending };

/// Gaussian samples are labelled from the top (x_1 > x_2 > ...); Laguerre
/// samples from the hard edge (x_1 < x_2 < ...).
Ordering ordering_for(const Family& family);

struct EnsembleSample {
  std::vector<double> eigenvalues;  // sorted per `ordering`
  Ordering ordering;
  EnsembleSpec spec;
  std::uint64_t seed;
};

/// Eigenvalues of the tridiagonal (Gaussian) or bidiagonal (Laguerre)
/// beta-ensemble model, rescaled to the weight conventions above.
/// Deterministic in (spec, seed).
EnsembleSample sample(const EnsembleSpec& spec, std::uint64_t seed);

/// Same distribution as sample(); reuses the generator across draws.
class Sampler {
 public:
  Sampler(EnsembleSpec spec, std::uint64_t seed);
  EnsembleSample next();

 private:
  EnsembleSpec spec_;
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Even-labelled members (2nd, 4th, ...) of the merged, relabelled spectrum.
EnsembleSample superpose_even(const EnsembleSample& first, const EnsembleSample& second);
/// Even-labelled members of a sample of odd size.
EnsembleSample decimate_even(const EnsembleSample& sample);

/// Counting interval: soft (s, inf) or hard (0, s); an empty interval is allowed.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x > lo && x < hi; }
};

struct CountStatistics {
  Interval interval;
  std::vector<std::uint64_t> counts;  // histogram over n
  std::vector<double> estimates;     // E^(n; J)
  std::vector<double> std_errors;    // sqrt(p (1 - p) / R)
  std::uint64_t replicates = 0;

  void add(const EnsembleSample& sample);
  void finalize();
  double estimate(int n) const;
  double std_error(int n) const;
};

/// Empirical gap-count distribution over R samples.
CountStatistics gap_counts(std::span<const EnsembleSample> samples, Interval interval);

/// Draws R samples of `spec` and tabulates gap counts on J.
CountStatistics gap_counts(const EnsembleSpec& spec, Interval interval, std::uint64_t replicates,
                           std::uint64_t seed);

enum class Identity { A1, A2, A1h, A2h };
const char* to_string(Identity id);
Identity identity_from_string(const std::string& name);

struct IdentityLevel {
  int n;
  double lhs;
  double rhs;
  double z;
};

struct IdentityReport {
  Identity identity;
  int n_size;
  Interval interval;
  std::uint64_t replicates;
  std::uint64_t seed;
  std::vector<IdentityLevel> levels;
  double max_abs_z;
  bool pass;  // every |z| < 4
};

/// Monte Carlo check of a convolution identity between gap counts:
///   A1  UE_N           vs OE_N (+) OE_{N+1}           (Gaussian, n <= N/2)
///   A2  SE_N           vs OE_{2N+1} levels 2n, 2n+1   (Gaussian, n <= N)
///   A1h, A2h: Laguerre analogues with underlying order `a`.
/// Each side is drawn from independent seed substreams; z uses the delta-method
/// variance of the right side.
IdentityReport verify_identity(Identity id, int n_size, Interval interval, std::uint64_t replicates,
                               std::uint64_t seed, double a = 1.0);

/// splitmix64 step; used to derive independent substreams.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace edgegap::ensembles
