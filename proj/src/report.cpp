#include "lgf/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "lgf/bifurcation.hpp"
#include "lgf/equilibria.hpp"
#include "lgf/errata.hpp"
#include "lgf/kernels.hpp"
#include "lgf/stability.hpp"

namespace lgf {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// NaN and infinities are not representable in JSON; emit null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json matrix_json(const Matrix2& m) { return json::array({json::array({num(m.a11), num(m.a12)}), json::array({num(m.a21), num(m.a22)})}); }

json linear_json(const LinearAnalysis& la) {
  return {
      {"label", std::string(to_string(la.label))},
      {"trace", num(la.trace)},
      {"det", num(la.det)},
      {"eigenvalues", json::array({json::array({num(la.eig1.real()), num(la.eig1.imag())}),
                                   json::array({num(la.eig2.real()), num(la.eig2.imag())})})},
      {"degenerate_node", la.degenerate_node},
      {"jacobian", matrix_json(la.jac)},
  };
}

json hopf_json(const Params& p, EquilibriumKind at) {
  try {
    const HopfReport h = first_lyapunov(p, at);
    return {
        {"at", std::string(to_string(at))},
        {"s_star", num(h.s_star)},
        {"mu_prime", num(h.mu_prime)},
        {"trace", num(h.trace)},
        {"det", num(h.det)},
        {"omega", num(h.omega)},
        {"admissible", h.admissible},
        {"l1", num(h.l1)},
        {"l1_normalized", num(h.l1_normalized)},
        {"direction", std::string(to_string(h.direction))},
    };
  } catch (const DomainError& e) {
    return {{"at", std::string(to_string(at))}, {"unavailable", e.what()}};
  }
}

json probe_json(const Params& p) {
  const ProbeResult pr = origin_attraction_probe(p, 1e-3);
  return {{"delta", 1e-3},
          {"verdict", std::string(to_string(pr.verdict))},
          {"converged", pr.converged},
          {"escaped", pr.escaped},
          {"total", pr.total}};
}

json blowup_json(const Params& p) {
  const BlowupReport rep = origin_blowup(p);
  json sing = json::array();
  for (const auto& s : rep.singularities) {
    sing.push_back({{"v", num(s.v)},
                    {"divisor_residual", num(divisor_flow(p, s.v))},
                    {"jacobian", matrix_json(s.jac)},
                    {"label", std::string(to_string(s.linear.label))},
                    {"hyperbolic", s.hyperbolic}});
  }
  return {{"singularities", sing},
          {"origin_verdict", std::string(to_string(rep.origin_verdict))},
          {"agrees_with_published", rep.agrees_with_published},
          {"published_v", num(rep.published_v)},
          {"published_v_residual", num(rep.published_v_residual)},
          {"probe", probe_json(p)}};
}

json fold_json(const Params& p) {
  const double s0 = s_zero(p);
  json out = {{"s0", num(s0)}};
  const bool at_cusp = std::abs(p.s - s0) <= 1e-9 * std::max(1.0, s0);
  if (at_cusp) {
    const CuspReport c = cusp_check(p);
    out["cusp"] = {{"verdict", std::string(to_string(c.verdict))},
                   {"e", {num(c.e[0]), num(c.e[1]), num(c.e[2])}},
                   {"f", {num(c.f[0]), num(c.f[1]), num(c.f[2])}},
                   {"f1_closed", num(c.f1_closed)},
                   {"f2_plus_2e1", num(c.f2_plus_2e1)},
                   {"product", num(c.product)}};
  } else {
    const SotomayorCheck sc = sotomayor_saddle_node(p);
    out["sotomayor"] = {{"v", {num(sc.v[0]), num(sc.v[1])}},
                        {"w", {num(sc.w[0]), num(sc.w[1])}},
                        {"t1", num(sc.t1)},
                        {"t1_closed", num(sc.t1_closed)},
                        {"t2", num(sc.t2)},
                        {"passes", sc.passes}};
    const SaddleNodeReport sn = saddle_node_type(p);
    out["saddle_node"] = {{"type", std::string(to_string(sn.type))},
                          {"transverse_eigenvalue", num(sn.transverse_eigenvalue)},
                          {"c1", num(sn.c1)},
                          {"d1", num(sn.d1)},
                          {"time_sign", sn.time_sign},
                          {"center_coefficient", num(sn.center_coefficient)}};
  }
  return out;
}

json errata_items_json(const Params& p) {
  json items = json::array();
  for (const auto& it : errata_report(p)) {
    items.push_back({{"id", it.id},
                     {"status", std::string(to_string(it.status))},
                     {"published", it.published},
                     {"derived", it.derived},
                     {"context", it.context},
                     {"published_value", num(it.published_value)},
                     {"derived_value", num(it.derived_value)}});
  }
  return items;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  if (s.empty()) return kNaN;
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size()) throw DomainError("not a number: '" + tmp + "'");
  return v;
}

json params_json(const Params& p) { return {{"m", p.m}, {"a", p.a}, {"lam", p.lam}, {"s", p.s}}; }

json analysis_json(const Params& p) {
  require_strong_allee(p);
  const ExistenceRegime r = existence_regime(p);

  json eqs = json::array();
  for (const auto& e : all_equilibria(p)) {
    json j = linear_json(classify(p, e));
    j["kind"] = std::string(to_string(e.kind));
    j["x"] = num(e.x);
    j["y"] = num(e.y);
    eqs.push_back(j);
  }

  json thresholds = {{"a1_star", num(r.a1_star)}, {"lam_sn", num(r.lam_crit)},
                     {"s0", nullptr}, {"s_star", nullptr}, {"s_hopf_e5", nullptr}};
  json hopf = json::object();
  json fold = nullptr;
  if (r.label == RegimeLabel::OneDegenerate) {
    thresholds["s0"] = num(s_zero(p));
    fold = fold_json(p);
  } else if (r.label == RegimeLabel::TwoInterior) {
    thresholds["s_star"] = num(s_star(p));
    thresholds["s_hopf_e5"] = num(trace_zero_rate(p, interior_equilibrium(p, EquilibriumKind::E5)));
    hopf["E4"] = hopf_json(p, EquilibriumKind::E4);
    hopf["E5"] = hopf_json(p, EquilibriumKind::E5);
  }

  return {
      {"schema_version", kSchemaVersion},
      {"params", params_json(p)},
      {"regime", {{"label", std::string(to_string(r.label))},
                  {"reason", std::string(to_string(r.reason))},
                  {"delta", num(r.delta)}}},
      {"equilibria", eqs},
      {"thresholds", thresholds},
      {"blowup", blowup_json(p)},
      {"hopf", hopf},
      {"fold", fold},
      {"errata", errata_items_json(p)},
  };
}

json errata_json(const Params& p) {
  require_strong_allee(p);
  json items = errata_items_json(p);
  int agrees = 0, disagrees = 0, na = 0;
  for (const auto& it : items) {
    const std::string st = it["status"];
    if (st == "agrees") ++agrees;
    else if (st == "disagrees") ++disagrees;
    else ++na;
  }
  const BlowupReport rep = origin_blowup(p);
  return {{"schema_version", kSchemaVersion},
          {"params", params_json(p)},
          {"origin", {{"verdict", std::string(to_string(rep.origin_verdict))},
                      {"agrees_with_published", rep.agrees_with_published},
                      {"probe", probe_json(p)}}},
          {"items", items},
          {"summary", {{"agrees", agrees}, {"disagrees", disagrees}, {"not_applicable", na}}}};
}

// ---------------------------------------------------------------------------

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Lam: return "lam";
    case SweepAxis::S: return "s";
    case SweepAxis::A: return "a";
    case SweepAxis::M: return "m";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "lam") return SweepAxis::Lam;
  if (name == "s") return SweepAxis::S;
  if (name == "a") return SweepAxis::A;
  if (name == "m") return SweepAxis::M;
  throw DomainError("unknown sweep axis '" + std::string(name) + "' (expected lam, s, a or m)");
}

void SweepSpec::validate() const {
  if (!(std::isfinite(from) && std::isfinite(to) && from > 0.0 && to > from)) {
    throw DomainError("sweep range must satisfy 0 < from < to");
  }
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (jobs < 1) throw DomainError("jobs must be >= 1");
}

double SweepSpec::value(int i) const {
  if (i == steps - 1) return to;
  return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

namespace {

std::vector<SweepRow> sweep_point(const SweepSpec& spec, int i) {
  const double v = spec.value(i);
  double m = spec.m, a = spec.a, lam = spec.lam, s = spec.s;
  switch (spec.axis) {
    case SweepAxis::Lam: lam = v; break;
    case SweepAxis::S: s = v; break;
    case SweepAxis::A: a = v; break;
    case SweepAxis::M: m = v; break;
  }

  std::vector<SweepRow> rows;
  std::vector<Equilibrium> eqs;
  Params p;
  try {
    p = Params::make(m, a, lam, s);
    require_strong_allee(p);
    eqs = all_equilibria(p);
  } catch (const DomainError&) {
    rows.push_back({v, "", kNaN, kNaN, "", kNaN, kNaN, kNaN});
    return rows;
  }

  const std::size_t n = eqs.size();
  std::vector<double> xs(n), ys(n), j11(n), j12(n), j21(n), j22(n), fx(n), fy(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = eqs[k].x;
    ys[k] = eqs[k].y;
  }
  kernels::jacobian_batch(p, xs, ys, {j11, j12, j21, j22});
  kernels::rhs_batch(p, xs, ys, fx, fy);

  for (std::size_t k = 0; k < n; ++k) {
    SweepRow row{v, std::string(to_string(eqs[k].kind)), xs[k], ys[k], "", kNaN, kNaN, kNaN};
    if (std::max(std::abs(fx[k]), std::abs(fy[k])) < 1e-8) {
      const LinearAnalysis la = classify_matrix({j11[k], j12[k], j21[k], j22[k]});
      row.label = std::string(to_string(la.label));
      row.trace = la.trace;
      row.det = la.det;
      const bool unstable_focus = la.label == StabilityLabel::UnstableFocus;
      if (spec.cycles && eqs[k].interior() && unstable_focus) {
        try {
          const State init{xs[k] * (1.0 + 1e-3), ys[k]};
          const CycleSearch cs = search_limit_cycle(p, init, spec.cycle_cfg);
          if (cs.cycle) row.amplitude = cs.cycle->amplitude;
        } catch (const std::exception&) {
          // Leave the amplitude empty; the row itself stays valid.
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<std::vector<SweepRow>> per_point(spec.steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < spec.steps; i = next.fetch_add(1)) {
      per_point[i] = sweep_point(spec, i);
    }
  };
  const int nthreads = std::min(spec.jobs, spec.steps);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<SweepRow> rows;
  for (auto& chunk : per_point) {
    for (auto& r : chunk) rows.push_back(std::move(r));
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.param) << ',' << r.kind << ',' << format_double(r.x) << ','
       << format_double(r.y) << ',' << r.label << ',' << format_double(r.trace) << ','
       << format_double(r.det) << ',' << format_double(r.amplitude) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepHeader) throw DomainError("unexpected sweep CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 8) throw DomainError("sweep CSV row with " + std::to_string(f.size()) + " fields");
    rows.push_back({parse_double(f[0]), f[1], parse_double(f[2]), parse_double(f[3]), f[4],
                    parse_double(f[5]), parse_double(f[6]), parse_double(f[7])});
  }
  return rows;
}

void write_plot_script(std::ostream& os, const SweepSpec& spec, const std::string& csv_path) {
  const std::string axis(to_string(spec.axis));
  os << "# gnuplot -persist <this file>\n"
     << "set datafile separator ','\n"
     << "set key outside right\n"
     << "set xlabel '" << axis << "'\n"
     << "set ylabel 'x (prey)'\n"
     << "stable(l) = (strstrt(l, 'Stable') == 1) ? 1 : 0\n"
     << "sel(k, want, v) = (k eq want) ? v : NaN\n"
     << "f = '" << csv_path << "'\n"
     << "plot \\\n";
  const char* kinds[] = {"E1", "E2", "E3", "E4", "E5"};
  for (int k = 0; k < 5; ++k) {
    os << "  f skip 1 using 1:(sel(strcol(2), '" << kinds[k]
       << "', $3)):(stable(strcol(5)) ? 7 : 6) with points pt variable title '" << kinds[k] << "'";
    os << (k < 4 ? ", \\\n" : "\n");
  }
}

}  // namespace lgf
