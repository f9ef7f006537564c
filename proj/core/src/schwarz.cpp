#include "hankel/schwarz.hpp"

#include <algorithm>
#include <cmath>

#include "hankel/class_models.hpp"
#include "hankel/errors.hpp"
#include "hankel/series.hpp"

namespace hankel {

std::complex<double> DiskRng::nextInDisk() {
  const double r = std::sqrt(nextDouble());
  const double theta = 2.0 * M_PI * nextDouble();
  return {r * std::cos(theta), r * std::sin(theta)};
}

const char* regionName(Region r) {
  switch (r) {
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
    case Region::D4: return "D4";
    case Region::D5: return "D5";
    case Region::D6: return "D6";
    case Region::D7: return "D7";
    case Region::Point21: return "(2,1)";
    case Region::Uncovered: return "uncovered";
  }
  return "?";
}

namespace {

// Shared template so the double and exact-rational classifiers cannot drift.
template <typename Num>
Region classifyImpl(const Num& mu, const Num& nu) {
  const Num m = mu < Num(0) ? Num(-mu) : mu;
  const Num half = Num(1) / Num(2);
  const Num twoThirds = Num(2) / Num(3);

  if (m <= half && Num(-1) <= nu && nu <= Num(1)) return Region::D1;
  if (half <= m && m <= Num(2)) {
    // Lower boundary of D2: (4/27)(|mu|+1)^3 - (|mu|+1).
    const Num t = m + Num(1);
    const Num lower = Num(4) * t * t * t / Num(27) - t;
    if (lower <= nu && nu <= Num(1)) return Region::D2;
  }
  if (m <= half && nu <= Num(-1)) return Region::D3;
  if (m >= half && nu <= -twoThirds * (m + Num(1))) return Region::D4;
  if (m <= Num(2) && nu >= Num(1)) return Region::D5;
  if (Num(2) <= m && m <= Num(4) && nu >= (mu * mu + Num(8)) / Num(12)) return Region::D6;
  if (m >= Num(4) && nu >= twoThirds * (m - Num(1))) return Region::D7;
  if (mu == Num(2) && nu == Num(1)) return Region::Point21;
  return Region::Uncovered;
}

RegionVerdict verdictFor(Region region, double nu) {
  RegionVerdict v;
  v.region = region;
  switch (region) {
    case Region::D1:
    case Region::D2:
    case Region::Point21:
      v.phi = 1.0;
      break;
    case Region::D3:
    case Region::D4:
    case Region::D5:
    case Region::D6:
    case Region::D7:
      v.phi = std::abs(nu);
      break;
    case Region::Uncovered:
      break;
  }
  return v;
}

}  // namespace

RegionVerdict classifyRegion(double mu, double nu) {
  return verdictFor(classifyImpl<double>(mu, nu), nu);
}

RegionVerdict classifyRegionExact(const Rational& mu, const Rational& nu) {
  return verdictFor(classifyImpl<Rational>(mu, nu), toDouble(nu));
}

SchwarzSample schwarzFromSchur(const std::array<std::complex<double>, 4>& gamma) {
  using C = std::complex<double>;
  using Series = TruncatedSeries<C>;
  const int n = kSchwarzOrder - 1;  // order of S; w = z * S gives c1..c4
  Series s = Series::constant(gamma[3], n);
  for (int level = 2; level >= 0; --level) {
    // S_k = (g_k + z S_{k+1}) / (1 + conj(g_k) z S_{k+1})
    Series zs(n);
    for (int j = 1; j <= n; ++j) zs.set(j, s[j - 1]);
    const Series num = Series::constant(gamma[level], n) + zs;
    const Series den = Series::constant(C(1.0), n) + zs.scaled(std::conj(gamma[level]));
    s = num * reciprocal(den);
  }
  SchwarzSample out;
  out.schurParams = gamma;
  for (int k = 0; k < 4; ++k) out.c[k] = s[k];
  return out;
}

std::vector<SchwarzSample> sampleSchwarz(DiskRng& rng, std::int64_t count) {
  if (count < 1) throw ArgumentError("sample count must be >= 1");
  std::vector<SchwarzSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    std::array<std::complex<double>, 4> gamma;
    for (auto& g : gamma) g = rng.nextInDisk();
    out.push_back(schwarzFromSchur(gamma));
  }
  return out;
}

double psiEval(const SchwarzSample& s, double mu, double nu) {
  const auto& c = s.c;
  return std::abs(c[2] + mu * c[0] * c[1] + nu * c[0] * c[0] * c[0]);
}

CarlsonShell carlsonBounds(double c1Abs) {
  if (!(c1Abs >= 0.0 && c1Abs <= 1.0))
    throw ArgumentError("carlsonBounds: |c1| must lie in [0,1]");
  return CarlsonShell{c1Abs, 1.0 - c1Abs * c1Abs};
}

bool checkCarlson(const SchwarzSample& s, double tol) {
  if (tol < 0) throw ArgumentError("checkCarlson: tol must be >= 0");
  const double a1 = std::abs(s.c[0]);
  const double a2 = std::abs(s.c[1]);
  const double a3 = std::abs(s.c[2]);
  const double a4 = std::abs(s.c[3]);
  if (a1 > 1.0 + tol) return false;
  const CarlsonShell shell = carlsonBounds(std::min(a1, 1.0));
  return a2 <= shell.c2Bound + tol && a3 <= shell.c3Bound(a2) + tol &&
         a4 <= shell.c4Bound(a2) + tol;
}

}  // namespace hankel
