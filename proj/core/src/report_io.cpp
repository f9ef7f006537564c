#include "hankel/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>

#include "hankel/errors.hpp"
#include "json.hpp"

namespace hankel {

using json = nlohmann::json;

namespace {

std::string isoFromEpoch(long long epoch) {
  std::time_t t = static_cast<std::time_t>(epoch);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifestJson(const RunManifest& m) {
  json params = json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  return json{{"command", m.command},
              {"parameters", params},
              {"seed", m.seed},
              {"version", m.version},
              {"timestamp", m.timestamp}};
}

json rationalJson(const Rational& r) { return toString(r); }

std::string manifestHeader(const RunManifest& m) {
  std::ostringstream os;
  os << "# " << m.command;
  for (const auto& [k, v] : m.parameters) os << " " << k << "=" << v;
  os << " seed=" << m.seed << " version=" << m.version;
  if (!m.timestamp.empty()) os << " timestamp=" << m.timestamp;
  os << "\n";
  return os.str();
}

const char* className(ClassId id) { return classSpec(id).name.data(); }

json groupedFormJson(const GroupedForm& g) {
  json terms = json::array();
  for (const GroupedTerm& t : g.terms)
    terms.push_back({{"coeff", rationalJson(t.coeff)},
                     {"base", t.base.str()},
                     {"power", t.power}});
  return json{{"prefactor", rationalJson(g.prefactor)}, {"terms", terms}};
}

}  // namespace

RunManifest makeManifest(std::string command,
                         std::vector<std::pair<std::string, std::string>> parameters,
                         std::uint64_t seed) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  m.seed = seed;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
    m.timestamp = isoFromEpoch(std::atoll(epoch));
  return m;
}

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string derivationTable(ClassId id, bool latexMode, const RunManifest& manifest) {
  const auto coeffs = deriveCoefficients(id, 5);
  std::ostringstream os;
  os << manifestHeader(manifest);
  if (latexMode) {
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      os << "\\[ a_{" << (k + 2) << "} = " << coeffs[k].latex() << " \\]\n";
  } else {
    os << "class " << className(id) << ": " << classSpec(id).relation << "\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      os << "a" << (k + 2) << " = " << coeffs[k].str() << "\n";
  }
  return os.str();
}

std::string derivationJson(ClassId id, const RunManifest& manifest) {
  const auto coeffs = deriveCoefficients(id, 5);
  json j;
  j["manifest"] = manifestJson(manifest);
  j["class"] = className(id);
  j["relation"] = std::string(classSpec(id).relation);
  json table = json::object();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    table["a" + std::to_string(k + 2)] = coeffs[k].str();
  j["coefficients"] = table;
  return j.dump(2) + "\n";
}

std::string boundReportText(const BoundReport& report, const RunManifest& manifest) {
  std::ostringstream os;
  os << manifestHeader(manifest);
  os << "class " << className(report.classId) << "\n";
  os << "upper bound |H3(1)| <= " << formatDouble(report.upperBound);
  if (!report.closedForm.empty()) os << "  (closed form: " << report.closedForm << ")";
  os << "\n";
  if (report.exactBound) os << "exact value: " << toString(*report.exactBound) << "\n";
  os << "lemma invocations:\n";
  for (const LemmaInvocation& l : report.lemmas) {
    os << "  " << l.boundExpr << "  at (mu, nu) = (" << toString(l.mu) << ", "
       << toString(l.nu) << ") -> " << regionName(l.verdict.region)
       << ", Phi = " << formatDouble(l.verdict.phi.value_or(0.0)) << "\n";
    if (!l.note.empty()) os << "    note: " << l.note << "\n";
  }
  os << "steps:\n";
  for (const InequalityStep& s : report.steps)
    os << "  [" << (s.pass ? "pass" : "FAIL") << "|" << verificationName(s.verification)
       << "] " << s.description << "\n";
  if (report.optimizer) {
    const OptimizerEvidence& ev = *report.optimizer;
    os << "optimizer evidence:\n";
    os << "  certified max = " << formatDouble(ev.certifiedMax) << "\n";
    os << "  interior critical points: " << ev.interior.interior.size() << "\n";
    for (const CriticalPoint& p : ev.interior.interior)
      os << "    (" << formatDouble(p.x) << ", " << formatDouble(p.y)
         << ") value = " << formatDouble(p.value) << "\n";
    for (const RejectedCandidate& r : ev.interior.rejected)
      os << "  rejected candidate (" << formatDouble(r.x) << ", " << formatDouble(r.y)
         << "): " << r.reason << "\n";
    for (const EdgeMax& e : ev.edges)
      os << "  edge " << e.edge << ": max " << formatDouble(e.value) << " at "
         << formatDouble(e.argmax) << "\n";
    os << "  grid check: max " << formatDouble(ev.grid.gridMax) << " over "
       << ev.grid.resolution << "x" << ev.grid.resolution
       << " in-domain points, Lipschitz slack " << formatDouble(ev.grid.slack) << "\n";
  }
  return os.str();
}

std::string boundReportJson(const BoundReport& report, const RunManifest& manifest) {
  json j;
  j["manifest"] = manifestJson(manifest);
  j["class"] = className(report.classId);
  j["upperBound"] = report.upperBound;
  j["upperBoundExact"] =
      report.exactBound ? json(toString(*report.exactBound)) : json(nullptr);
  j["closedForm"] = report.closedForm;

  json lemmas = json::array();
  for (const LemmaInvocation& l : report.lemmas) {
    json e{{"mu", rationalJson(l.mu)},
           {"nu", rationalJson(l.nu)},
           {"region", regionName(l.verdict.region)},
           {"phi", l.verdict.phi.value_or(0.0)},
           {"bounds", l.boundExpr}};
    if (!l.note.empty()) e["note"] = l.note;
    lemmas.push_back(e);
  }
  j["lemmaInvocations"] = lemmas;

  json steps = json::array();
  for (const InequalityStep& s : report.steps)
    steps.push_back({{"description", s.description},
                     {"dominating", s.dominating},
                     {"verification", verificationName(s.verification)},
                     {"status", s.pass ? "pass" : "fail"}});
  j["steps"] = steps;

  if (report.optimizer) {
    const OptimizerEvidence& ev = *report.optimizer;
    json opt;
    opt["certifiedMax"] = ev.certifiedMax;
    opt["interiorCriticalPoints"] = json::array();
    for (const CriticalPoint& p : ev.interior.interior)
      opt["interiorCriticalPoints"].push_back({{"x", p.x}, {"y", p.y}, {"value", p.value}});
    opt["rejectedCandidates"] = json::array();
    for (const RejectedCandidate& r : ev.interior.rejected)
      opt["rejectedCandidates"].push_back({{"x", r.x}, {"y", r.y}, {"reason", r.reason}});
    opt["boundaryMaxima"] = json::array();
    for (const EdgeMax& e : ev.edges)
      opt["boundaryMaxima"].push_back(
          {{"edge", e.edge}, {"argmax", e.argmax}, {"value", e.value}});
    opt["grid"] = {{"resolution", ev.grid.resolution},
                   {"max", ev.grid.gridMax},
                   {"slack", ev.grid.slack}};
    j["optimizerEvidence"] = opt;
  }
  j["grouped"] = groupedFormJson(hankel3Polynomial(report.classId).groupedForm);
  return j.dump(2) + "\n";
}

std::string searchResultText(const SearchResult& result, const GapRow& row,
                             const RunManifest& manifest) {
  std::ostringstream os;
  os << manifestHeader(manifest);
  os << "class " << className(result.config.classId) << "\n";
  os << "bestValue = " << formatDouble(result.bestValue) << "\n";
  os << "witness c = [";
  for (int i = 0; i < 4; ++i)
    os << (i ? ", " : "") << formatDouble(result.witness.c[i].real()) << (result.witness.c[i].imag() < 0 ? "" : "+")
       << formatDouble(result.witness.c[i].imag()) << "i";
  os << "]\n";
  os << "evaluations = " << (result.config.budget) << " samples + refinement, improvements = "
     << result.history.size() << "\n";
  os << "upper bound = " << formatDouble(row.upperBound) << ", gap ratio = "
     << formatDouble(row.gapRatio);
  if (row.priorBound)
    os << ", prior bound = " << formatDouble(*row.priorBound);
  os << "\n";
  return os.str();
}

namespace {

json complexJson(const std::complex<double>& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json gapRowJson(const GapRow& row) {
  json j{{"class", className(row.classId)},
         {"lowerBound", row.lowerBound},
         {"upperBound", row.upperBound},
         {"gapRatio", row.gapRatio}};
  j["priorBound"] = row.priorBound ? json(*row.priorBound) : json(nullptr);
  return j;
}

}  // namespace

std::string searchResultJson(const SearchResult& result, const GapRow& row,
                             const RunManifest& manifest) {
  json j;
  j["manifest"] = manifestJson(manifest);
  j["class"] = className(result.config.classId);
  j["config"] = {{"budget", result.config.budget},
                 {"refineIters", result.config.refineIters},
                 {"seed", result.config.seed},
                 {"stepScale", result.config.stepScale}};
  j["bestValue"] = result.bestValue;
  j["classUpperBound"] = result.classUpperBound;
  json witness;
  witness["c"] = json::array();
  witness["schurParams"] = json::array();
  for (int i = 0; i < 4; ++i) {
    witness["c"].push_back(complexJson(result.witness.c[i]));
    witness["schurParams"].push_back(complexJson(result.witness.schurParams[i]));
  }
  j["witness"] = witness;
  json history = json::array();
  for (const auto& [idx, v] : result.history) history.push_back({{"eval", idx}, {"best", v}});
  j["history"] = history;
  j["gap"] = gapRowJson(row);
  return j.dump(2) + "\n";
}

std::string verifySummaryText(const LemmaSoundnessReport& lemma,
                              const BoundSoundnessReport& bound,
                              const RunManifest& manifest) {
  std::ostringstream os;
  os << manifestHeader(manifest);
  os << "lemma soundness: " << lemma.samples << " samples, " << lemma.carlsonChecks
     << " coefficient-shell checks (tol " << formatDouble(lemma.carlsonTolerance) << "), "
     << lemma.psiChecks << " Psi<=Phi checks (tol " << formatDouble(lemma.psiTolerance)
     << ")\n";
  os << "  max Psi - Phi observed: " << formatDouble(lemma.maxPsiExcess) << "\n";
  os << "bound soundness: " << bound.samplesPerClass << " samples per class\n";
  for (ClassId id : kAllClasses) {
    const std::size_t k = static_cast<std::size_t>(id);
    os << "  " << className(id) << ": max |H3| = " << formatDouble(bound.maxObserved[k])
       << " <= " << formatDouble(bound.upperBounds[k]) << "\n";
  }
  const std::size_t total = lemma.violations.size() + bound.violations.size();
  os << total << " violations\n";
  for (const SoundnessViolation& v : lemma.violations)
    os << "  VIOLATION " << v.check << ": observed " << formatDouble(v.observed)
       << " allowed " << formatDouble(v.allowed) << "\n";
  for (const SoundnessViolation& v : bound.violations)
    os << "  VIOLATION " << v.check << ": observed " << formatDouble(v.observed)
       << " allowed " << formatDouble(v.allowed) << "\n";
  return os.str();
}

std::string verifySummaryJson(const LemmaSoundnessReport& lemma,
                              const BoundSoundnessReport& bound,
                              const RunManifest& manifest) {
  json j;
  j["manifest"] = manifestJson(manifest);
  j["lemmaSoundness"] = {{"samples", lemma.samples},
                         {"psiChecks", lemma.psiChecks},
                         {"carlsonChecks", lemma.carlsonChecks},
                         {"psiTolerance", lemma.psiTolerance},
                         {"carlsonTolerance", lemma.carlsonTolerance},
                         {"maxPsiExcess", lemma.maxPsiExcess},
                         {"violations", lemma.violations.size()}};
  json perClass = json::object();
  for (ClassId id : kAllClasses) {
    const std::size_t k = static_cast<std::size_t>(id);
    perClass[className(id)] = {{"maxObserved", bound.maxObserved[k]},
                               {"upperBound", bound.upperBounds[k]}};
  }
  j["boundSoundness"] = {{"samplesPerClass", bound.samplesPerClass},
                         {"perClass", perClass},
                         {"violations", bound.violations.size()}};
  j["violations"] = lemma.violations.size() + bound.violations.size();
  return j.dump(2) + "\n";
}

void writeSurfaceGrid(std::ostream& os, int resolution, const RunManifest& manifest) {
  if (resolution < 2) throw ArgumentError("grid resolution must be >= 2");
  os << manifestHeader(manifest);
  os << "# columns: x,y,h" << "\n";
  const OmegaDomain domain;
  const BivariatePoly& h = starlikeSurface();
  for (int i = 0; i < resolution; ++i) {
    const Rational x(i, resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const Rational y(j, resolution - 1);
      if (!domain.contains(x, y)) continue;
      const double xd = toDouble(x), yd = toDouble(y);
      os << formatDouble(xd) << "," << formatDouble(yd) << ","
         << formatDouble(h.evalDouble(xd, yd)) << "\n";
    }
  }
}

}  // namespace hankel
