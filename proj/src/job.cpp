#include "fsing/job.hpp"

#include <sstream>

namespace fsing {

namespace {

using Json = nlohmann::ordered_json;

const char* kSchema = "fsing-report/1";

Json orInfJson(const OrInf& v) {
  if (!v) return Json("infinite");
  return Json(*v);
}

std::string statusName(DeltaStatus s) {
  switch (s) {
    case DeltaStatus::Certified: return "Certified";
    case DeltaStatus::ProbableStable: return "ProbableStable";
    case DeltaStatus::UnboundedDetected: return "UnboundedDetected";
    case DeltaStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Json genList(const Ideal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.gens()) out.push_back(g.toString());
  return out;
}

struct Context {
  JobSpec spec;
  PrimeField field;
  Limits limits;
  Poly f;
};

// Default window: the threshold region for small rings, a 12-degree span
// below d otherwise (graded pieces grow like C(-t-1, n)).
std::pair<std::int64_t, std::int64_t> windowFor(const Context& ctx) {
  if (ctx.spec.window) return *ctx.spec.window;
  const std::int64_t d = ctx.f.degree();
  const int n = ctx.spec.n;
  const std::int64_t hi = d;
  std::int64_t lo;
  if (n >= 1 && n <= 2)
    lo = isolationThreshold(n, std::max<std::int64_t>(d, 1)) - 4;
  else
    lo = d - 11;
  return {lo, hi};
}

Json runTestIdeal(const Context& ctx) {
  Ideal tau = testIdeal(ctx.f, ctx.spec.e, ctx.limits);
  return Json{{"e", ctx.spec.e},
              {"generators", genList(tau)},
              {"isUnit", tau.isUnit()}};
}

Json runFedder(const Context& ctx) {
  bool notPure = fedderNotFPure(ctx.f, ctx.limits);
  return Json{{"notFPureAtM", notPure}, {"fPureAtM", !notPure}};
}

Json runMe(const Context& ctx) {
  Ideal tau = testIdeal(ctx.f, 1, ctx.limits);
  const int e0 = e0LevelOf(tau);
  Json reports = Json::array();
  if (!tau.isUnit()) {
    if (ctx.spec.eMax < e0)
      throw InvalidArgument("eMax below e0 = " + std::to_string(e0));
    for (int e = e0; e <= ctx.spec.eMax; ++e) {
      MeReport r = computeMeAt(tau, e, ctx.limits);
      reports.push_back(Json{{"e", e},
                             {"Me", orInfJson(r.Me)},
                             {"normalized", r.normalized ? Json(*r.normalized)
                                                         : Json(nullptr)},
                             {"witness", r.witness ? Json(r.witness->toString())
                                                   : Json(nullptr)}});
    }
  }
  Json out{{"e0", e0}, {"reports", reports}};
  if (tau.isUnit())
    out["note"] = "test ideal is the unit ideal: M_e is infinite";
  return out;
}

Json deltaJson(const DeltaReport& r) {
  Json seq = Json::array();
  for (const auto& [e, v] : r.sequence) seq.push_back(Json::array({e, v}));
  Json out{{"delta", r.delta ? Json(*r.delta) : Json(nullptr)},
           {"status", statusName(r.status)},
           {"eUsed", r.eUsed},
           {"ellMin", orInfJson(r.ellMin)},
           {"sequence", seq}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json runDelta(const Context& ctx) {
  return deltaJson(computeDelta(ctx.f, ctx.spec.eMax, ctx.limits));
}

Json runIsolated(const Context& ctx) {
  IsolatedVerdict v = isolatedPoint(ctx.f, ctx.limits);
  return Json{{"fPureAtM", v.fPureAtM},
              {"isolated", v.isolated},
              {"ellMin", orInfJson(v.ellMin)}};
}

Json runInjectivity(const Context& ctx) {
  DeltaReport r = computeDelta(ctx.f, ctx.spec.eMax, ctx.limits);
  if (r.status != DeltaStatus::Certified &&
      r.status != DeltaStatus::ProbableStable)
    throw DeltaUndefinedError("delta undetermined: " + statusName(r.status) +
                                  (r.note.empty() ? "" : "; " + r.note),
                              r.status);
  return Json{{"injectiveBelow", *r.delta + ctx.f.degree()},
              {"delta", *r.delta},
              {"status", statusName(r.status)}};
}

Json runHnDims(const Context& ctx) {
  auto [lo, hi] = windowFor(ctx);
  Json dims = Json::array();
  for (std::int64_t t = lo; t <= hi; ++t)
    dims.push_back(Json::array({t, hnDim(ctx.f, t, ctx.limits)}));
  return Json{{"window", Json::array({lo, hi})}, {"dims", dims}};
}

Json runKernelDims(const Context& ctx) {
  auto [lo, hi] = windowFor(ctx);
  Json dims = Json::array();
  bool agree = true;
  for (std::int64_t t = lo; t <= hi; ++t) {
    std::int64_t direct = frobeniusKernelDimDirect(ctx.f, t, ctx.limits);
    std::int64_t colon = frobeniusKernelDimColon(ctx.f, t, ctx.limits);
    if (direct != colon) agree = false;
    dims.push_back(Json::array({t, direct, colon}));
  }
  return Json{{"window", Json::array({lo, hi})},
              {"dims", dims},
              {"agree", agree}};
}

Json runWitness(const Context& ctx) {
  NonInjectivityWitness w = witnessNonInjectivity(ctx.f, ctx.spec.e, ctx.limits);
  MeReport me = computeMe(ctx.f, ctx.spec.e, ctx.limits);
  std::int64_t q = 1;
  for (int i = 0; i < w.e; ++i) q *= ctx.field.p();
  return Json{{"e", w.e},
              {"Me", orInfJson(me.Me)},
              {"t", w.t},
              {"numerator", w.numerator.toString()},
              {"denominatorExponent", q}};
}

Json runSigma(const Context& ctx) {
  SigmaEstimate est = nonFPureIdeal(ctx.f, ctx.spec.eMax, ctx.limits);
  return Json{{"status", est.status == SigmaStatus::Stabilized ? "Stabilized"
                                                               : "Unstable"},
              {"eReached", est.eReached},
              {"generators", genList(est.ideal)}};
}

class CheckList {
 public:
  template <typename T, typename U>
  void add(const std::string& name, const T& expected, const U& computed) {
    Json e(expected), c(computed);
    bool pass = e == c;
    allPass_ &= pass;
    checks_.push_back(
        Json{{"name", name}, {"expected", e}, {"computed", c}, {"pass", pass}});
  }

  Json result() const {
    return Json{{"checks", checks_}, {"allPass", allPass_}};
  }
  bool allPass() const { return allPass_; }

 private:
  Json checks_ = Json::array();
  bool allPass_ = true;
};

// Reference problem 1: f = x^2 y^2 + y^2 z^2 + z^2 x^2 over F_p, p > 2.
Json runExample1(const Context& ctx, int* exitCode) {
  if (ctx.field.p() == 2)
    throw InvalidArgument("this reference problem needs p > 2");
  const Poly& f = ctx.f;
  CheckList checks;

  Ideal tau = testIdeal(f, 1, ctx.limits);
  checks.add("testIdeal(f,1) equals (x0, x1, x2)",
             true, idealEquals(tau, maximalIdeal(ctx.field, 3), ctx.limits));

  IsolatedVerdict verdict = isolatedPoint(f, ctx.limits);
  checks.add("isolated", true, verdict.isolated);
  checks.add("ellMin", 1, orInfJson(verdict.ellMin));

  DeltaReport delta = computeDelta(f, std::max(ctx.spec.eMax, 2), ctx.limits);
  checks.add("delta", -3, delta.delta ? Json(*delta.delta) : Json(nullptr));
  checks.add("delta status", "Certified", statusName(delta.status));
  checks.add("injectivityBound", 1,
             injectivityBound(f, std::max(ctx.spec.eMax, 2), ctx.limits));

  checks.add("dim H^2_m(R/fR)_1", 1, hnDim(f, 1, ctx.limits));
  for (std::int64_t t = 2; t <= 4; ++t)
    checks.add("dim H^2_m(R/fR)_" + std::to_string(t), 0,
               hnDim(f, t, ctx.limits));

  checks.add("Frobenius kernel dim at t=1 (action is zero there)", 1,
             frobeniusKernelDimDirect(f, 1, ctx.limits));
  for (std::int64_t t = -8; t <= 0; ++t)
    checks.add("Frobenius kernel dim at t=" + std::to_string(t), 0,
               frobeniusKernelDimDirect(f, t, ctx.limits));

  if (!checks.allPass()) *exitCode = 1;
  return checks.result();
}

// Reference problem 2: six variables over F_2, tau = (x0..x4, x5^3).
Json runExample2(const Context& ctx, int* exitCode) {
  const Poly& f = ctx.f;
  CheckList checks;

  Ideal tau = testIdeal(f, 1, ctx.limits);
  checks.add("testIdeal(f,1) generators",
             Json::array({"x0", "x1", "x2", "x3", "x4", "x5^3"}),
             genList(tau));

  MeReport m1 = computeMeAt(tau, 1, ctx.limits);
  MeReport m2 = computeMeAt(tau, 2, ctx.limits);
  checks.add("M_1", 5, orInfJson(m1.Me));
  checks.add("M_2", 16, orInfJson(m2.Me));
  checks.add("normalized at e=1", -7, m1.normalized ? Json(*m1.normalized)
                                                    : Json(nullptr));
  checks.add("normalized at e=2", -8, m2.normalized ? Json(*m2.normalized)
                                                    : Json(nullptr));

  checks.add("ellMin", 3, orInfJson(ellMin(tau, 5, f.degree(), ctx.limits)));

  DeltaReport delta = computeDelta(f, std::max(ctx.spec.eMax, 2), ctx.limits);
  checks.add("delta", -8, delta.delta ? Json(*delta.delta) : Json(nullptr));
  checks.add("delta status", "Certified", statusName(delta.status));

  if (!checks.allPass()) *exitCode = 1;
  return checks.result();
}

std::string renderText(const Json& report) {
  std::ostringstream out;
  out << "schema: " << report.at("schema").get<std::string>() << "\n";
  out << "command: " << report.at("command").get<std::string>() << "\n";
  if (report.contains("input")) {
    const auto& in = report.at("input");
    out << "input: p=" << in.at("p") << " n=" << in.at("n")
        << " f=" << in.at("f").get<std::string>() << "\n";
  }
  if (report.contains("error")) {
    out << "error: " << report.at("error").at("kind").get<std::string>()
        << ": " << report.at("error").at("message").get<std::string>() << "\n";
    return out.str();
  }
  out << "result:\n";
  for (const auto& [key, value] : report.at("result").items())
    out << "  " << key << ": " << value.dump() << "\n";
  return out.str();
}

}  // namespace

JobOutcome runJob(const JobSpec& spec) {
  JobOutcome outcome;
  Json report{{"schema", kSchema}, {"command", spec.command}};
  try {
    PrimeField field(spec.p);
    Limits limits;
    if (spec.maxDim) {
      if (*spec.maxDim < 1) throw InvalidArgument("max-dim must be positive");
      limits.maxDim = *spec.maxDim;
    }

    JobSpec resolved = spec;
    if (spec.command == "repro-example-1") {
      if (spec.p == 2) resolved.p = 3;
      resolved.n = 2;
      resolved.f = "x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2";
      field = PrimeField(resolved.p);
    } else if (spec.command == "repro-example-2") {
      resolved.p = 2;
      resolved.n = 5;
      resolved.f =
          "x0^2*x1*x2*x3*x4 + x0*x1^2*x2*x3*x4 + x0*x1*x2^2*x3*x4 + "
          "x0*x1*x2*x3^2*x4 + x0*x1*x2*x3*x4^2 + x5^6";
      field = PrimeField(2);
    }
    if (resolved.n < 0) throw InvalidArgument("n must be >= 0");
    if (resolved.f.empty()) throw InvalidArgument("missing polynomial (--f)");

    report["input"] = Json{{"p", resolved.p},
                           {"n", resolved.n},
                           {"f", resolved.f}};
    Context ctx{resolved, field, limits,
                parsePoly(resolved.f, resolved.n + 1, field)};
    report["input"]["f"] = ctx.f.toString();
    Json options{{"e", resolved.e},
                 {"eMax", resolved.eMax},
                 {"maxDim", limits.maxDim}};
    if (resolved.window)
      options["window"] =
          Json::array({resolved.window->first, resolved.window->second});
    report["options"] = options;

    const bool needHomogeneous = spec.command != "repro-example-1" &&
                                 spec.command != "repro-example-2";
    if (needHomogeneous && !ctx.f.isHomogeneous())
      throw InvalidArgument("f must be homogeneous");
    if (needHomogeneous && ctx.f.isZero())
      throw InvalidArgument("f must be nonzero");

    if (spec.command == "test-ideal") {
      if (resolved.e < 1) throw InvalidArgument("level e must be >= 1");
      report["result"] = runTestIdeal(ctx);
    } else if (spec.command == "fedder") {
      report["result"] = runFedder(ctx);
    } else if (spec.command == "me") {
      report["result"] = runMe(ctx);
    } else if (spec.command == "delta") {
      report["result"] = runDelta(ctx);
    } else if (spec.command == "isolated") {
      report["result"] = runIsolated(ctx);
    } else if (spec.command == "injectivity") {
      report["result"] = runInjectivity(ctx);
    } else if (spec.command == "hn-dims") {
      report["result"] = runHnDims(ctx);
    } else if (spec.command == "kernel-dims") {
      report["result"] = runKernelDims(ctx);
    } else if (spec.command == "witness") {
      if (resolved.e < 1) throw InvalidArgument("level e must be >= 1");
      report["result"] = runWitness(ctx);
    } else if (spec.command == "sigma") {
      report["result"] = runSigma(ctx);
    } else if (spec.command == "repro-example-1") {
      report["result"] = runExample1(ctx, &outcome.exitCode);
    } else if (spec.command == "repro-example-2") {
      report["result"] = runExample2(ctx, &outcome.exitCode);
    } else {
      throw InvalidArgument("unknown command: " + spec.command);
    }
  } catch (const ResourceLimitError& e) {
    report["error"] = Json{{"kind", "resource"}, {"message", e.what()}};
    outcome.exitCode = 3;
  } catch (const ParseError& e) {
    report["error"] = Json{{"kind", "parse"}, {"message", e.what()}};
    outcome.exitCode = 2;
  } catch (const InvalidArgument& e) {
    report["error"] = Json{{"kind", "invalid"}, {"message", e.what()}};
    outcome.exitCode = 2;
  } catch (const Error& e) {
    report["error"] = Json{{"kind", "invalid"}, {"message", e.what()}};
    outcome.exitCode = 2;
  }
  outcome.report = report;
  outcome.text = renderText(report);
  return outcome;
}

}  // namespace fsing
