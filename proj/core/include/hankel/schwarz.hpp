#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Deterministic uniform source. mt19937_64 has a standard-specified output
/// sequence, and the double conversion below avoids std::uniform_real_distribution
/// (whose stream is implementation-defined), so results are reproducible
/// across platforms for a fixed seed.
class DiskRng {
 public:
  explicit DiskRng(std::uint64_t seed) : eng_(seed) {}

  double nextDouble() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Area-uniform draw from the closed unit disk.
  std::complex<double> nextInDisk();

 private:
  std::mt19937_64 eng_;
};

enum class Region { D1, D2, D3, D4, D5, D6, D7, Point21, Uncovered };

const char* regionName(Region r);

/// Classification of (mu, nu) with the resulting Phi value. phi is absent
/// exactly when the point lies in no listed region.
struct RegionVerdict {
  Region region = Region::Uncovered;
  std::optional<double> phi;

  bool covered() const { return region != Region::Uncovered; }
};

/// Membership test against D1..D7 and {(2,1)}, first match wins, closed
/// boundaries. Overlaps only occur where the Phi values agree.
RegionVerdict classifyRegion(double mu, double nu);

/// Same, in exact rational arithmetic (used by the bound pipelines).
RegionVerdict classifyRegionExact(const Rational& mu, const Rational& nu);

/// A Schwarz-function coefficient vector together with the Schur parameters
/// that realize it, so every sample corresponds to an actual Schwarz function.
struct SchwarzSample {
  std::array<std::complex<double>, 4> c{};
  std::array<std::complex<double>, 4> schurParams{};

  bool operator==(const SchwarzSample&) const = default;
};

/// Expand the Schwarz function with the given Schur parameters to order 4:
/// w(z) = z * S0(z) with S_k = (g_k + z S_{k+1}) / (1 + conj(g_k) z S_{k+1}).
SchwarzSample schwarzFromSchur(const std::array<std::complex<double>, 4>& gamma);

std::vector<SchwarzSample> sampleSchwarz(DiskRng& rng, std::int64_t count);

/// |c3 + mu c1 c2 + nu c1^3|.
double psiEval(const SchwarzSample& s, double mu, double nu);

/// Coefficient bounds in terms of |c1| (and then |c2|).
struct CarlsonShell {
  double c1Abs;
  double c2Bound;  // 1 - |c1|^2

  double c3Bound(double c2Abs) const {
    return 1.0 - c1Abs * c1Abs - c2Abs * c2Abs / (1.0 + c1Abs);
  }
  double c4Bound(double c2Abs) const { return 1.0 - c1Abs * c1Abs - c2Abs * c2Abs; }
};

/// Requires 0 <= c1Abs <= 1.
CarlsonShell carlsonBounds(double c1Abs);

/// True iff |c2|, |c3|, |c4| satisfy all three shell bounds within tol.
bool checkCarlson(const SchwarzSample& s, double tol);

}  // namespace hankel
