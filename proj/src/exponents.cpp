#include "klsm/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace klsm {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string head = s.substr(0, dot);
    const std::string tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("parse_rational: bad decimal " + s);
    boost::multiprecision::cpp_int ipart(head.empty() || head == "-" ? "0"
                                                                     : head);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int frac = tail.empty()
                                              ? boost::multiprecision::cpp_int(0)
                                              : boost::multiprecision::cpp_int(tail);
    const bool neg = !head.empty() && head[0] == '-';
    Rational r = Rational(ipart) + (neg ? -1 : 1) * Rational(frac, scale);
    return r;
  }
  return Rational(boost::multiprecision::cpp_int(s));
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

Rational ExponentSet::gap() const {
  return m + Rational(1, 2) + b2p - (2 * m - 1) * b1 - b2;
}

std::string to_string(ScalingCase c) {
  switch (c) {
    case ScalingCase::drop_laplacian_u: return "drop_laplacian_u";
    case ScalingCase::drop_dt_u: return "drop_dt_u";
    case ScalingCase::drop_halfwave_n: return "drop_halfwave_n";
    case ScalingCase::drop_dt_n: return "drop_dt_n";
  }
  return "?";
}

CriticalIndices critical_indices(const Rational& m, int d, ScalingCase c) {
  if (m < 1)
    throw std::invalid_argument("critical_indices: requires m >= 1, got " +
                                format_rational(m));
  if (d < 1) throw std::invalid_argument("critical_indices: requires d >= 1");
  const Rational half_d(d, 2);
  const Rational two_m_minus_1 = 2 * m - 1;
  switch (c) {
    case ScalingCase::drop_laplacian_u:
      return {half_d - Rational(3) / (4 * m - 2),
              half_d - (2 - m) / two_m_minus_1, c};
    case ScalingCase::drop_dt_u:
      return {half_d - Rational(2) / two_m_minus_1,
              half_d - Rational(2) / two_m_minus_1, c};
    case ScalingCase::drop_halfwave_n:
      return {half_d - Rational(5) / (4 * m - 2),
              half_d - (3 - m) / two_m_minus_1, c};
    case ScalingCase::drop_dt_n:
      return {half_d - Rational(2) / two_m_minus_1,
              half_d - Rational(2) / two_m_minus_1, c};
  }
  throw std::invalid_argument("critical_indices: bad case");
}

namespace {

// Upper end of the open theta interval at fixed (m, eps):
// theta < min(2 - m - 2 eps, m + 1/(2m) - 2 + 4 m eps).
Rational theta_upper(const Rational& m, const Rational& eps) {
  const Rational from_sum = 2 - m - 2 * eps;
  const Rational from_diff = m + Rational(1) / (2 * m) - 2 + 4 * m * eps;
  return std::min(from_sum, from_diff);
}

void validate_epsilon(const Rational& m, const Rational& eps) {
  if (m < 1 || m >= 2)
    throw std::invalid_argument("bourgain_exponents: requires 1 <= m < 2, got " +
                                format_rational(m));
  if (!(eps > 0))
    throw std::invalid_argument(
        "bourgain_exponents: violates epsilon > 0 (epsilon = " +
        format_rational(eps) + ")");
  if (!(eps < 1 - m / 2))
    throw std::invalid_argument(
        "bourgain_exponents: violates epsilon < 1 - m/2 (epsilon = " +
        format_rational(eps) + ", bound = " + format_rational(1 - m / 2) + ")");
  if (!(eps <= Rational(1) / (4 * m)))
    throw std::invalid_argument(
        "bourgain_exponents: violates epsilon <= 1/(4m) (epsilon = " +
        format_rational(eps) + ", bound = " + format_rational(Rational(1) / (4 * m)) +
        ")");
}

} // namespace

ExponentSet bourgain_exponents(const Rational& m, const Rational& epsilon) {
  validate_epsilon(m, epsilon);
  const Rational hi = theta_upper(m, epsilon);
  if (hi > 0) return bourgain_exponents(m, epsilon, hi / 2);
  ExponentSet e = bourgain_exponents(m, epsilon, Rational(1, 1000));
  e.theta_feasible = false;
  return e;
}

ExponentSet bourgain_exponents(const Rational& m, const Rational& epsilon,
                               const Rational& theta) {
  validate_epsilon(m, epsilon);
  if (!(theta > 0))
    throw std::invalid_argument("bourgain_exponents: violates theta > 0");
  ExponentSet e;
  e.m = m;
  e.epsilon = epsilon;
  e.theta = theta;
  e.b1 = (2 * m - 1) / (4 * m) + epsilon;
  e.b2 = e.b1;
  e.b1p = Rational(-1, 2) + 2 * m * epsilon;
  e.b2p = e.b1p;
  e.endpoint_b = (epsilon == Rational(1) / (4 * m));
  e.theta_feasible = theta < theta_upper(m, epsilon);
  return e;
}

RegionReport admissible_region(const Rational& m) {
  if (m < 1)
    throw std::invalid_argument("admissible_region: requires m >= 1");
  RegionReport report;
  report.m = m;
  // a_theta * theta + a_eps * eps (relation) rhs, as "<= rhs" on the closure;
  // 'strict' records which are open in the admissible set itself.
  report.constraints = {
      {-1, 0, 0, true, "theta > 0"},
      {0, -1, 0, true, "eps > 0"},
      {0, 1, 1 - m / 2, true, "eps < 1 - m/2"},
      {0, 1, Rational(1) / (4 * m), false, "eps <= 1/(4m)"},
      {1, 2, 2 - m, true, "theta + 2 eps < 2 - m"},
      {1, -4 * m, m + Rational(1) / (2 * m) - 2, true,
       "theta - 4m eps < m + 1/(2m) - 2"},
  };
  const auto& cs = report.constraints;
  const int nc = static_cast<int>(cs.size());

  auto satisfies_closed = [&](const Rational& th, const Rational& ep) {
    for (const auto& c : cs)
      if (c.a_theta * th + c.a_eps * ep > c.rhs) return false;
    return true;
  };

  // All pairwise boundary intersections that satisfy every closed constraint.
  std::vector<RegionVertex> verts;
  for (int i = 0; i < nc; ++i) {
    for (int j = i + 1; j < nc; ++j) {
      const Rational det = cs[i].a_theta * cs[j].a_eps - cs[j].a_theta * cs[i].a_eps;
      if (det == 0) continue;
      const Rational th = (cs[i].rhs * cs[j].a_eps - cs[j].rhs * cs[i].a_eps) / det;
      const Rational ep = (cs[i].a_theta * cs[j].rhs - cs[j].a_theta * cs[i].rhs) / det;
      if (!satisfies_closed(th, ep)) continue;
      bool dup = false;
      for (auto& v : verts)
        if (v.theta == th && v.eps == ep) { dup = true; break; }
      if (dup) continue;
      RegionVertex v;
      v.theta = th;
      v.eps = ep;
      for (int c = 0; c < nc; ++c)
        if (cs[c].a_theta * th + cs[c].a_eps * ep == cs[c].rhs)
          v.active.push_back(c);
      verts.push_back(std::move(v));
    }
  }

  if (!verts.empty()) {
    // Sort counter-clockwise around the centroid (exact sign computations).
    Rational cth = 0, cep = 0;
    for (const auto& v : verts) { cth += v.theta; cep += v.eps; }
    cth /= static_cast<int>(verts.size());
    cep /= static_cast<int>(verts.size());
    auto half = [&](const RegionVertex& v) {
      const Rational dy = v.eps - cep;
      if (dy != 0) return dy > 0 ? 0 : 1;
      return v.theta - cth >= 0 ? 0 : 1;
    };
    std::sort(verts.begin(), verts.end(),
              [&](const RegionVertex& a, const RegionVertex& b) {
                const int ha = half(a), hb = half(b);
                if (ha != hb) return ha < hb;
                const Rational cross = (a.theta - cth) * (b.eps - cep) -
                                       (b.theta - cth) * (a.eps - cep);
                if (cross != 0) return cross > 0;
                // collinear: nearer first (harmless; duplicates removed above)
                const Rational da = (a.theta - cth) * (a.theta - cth) +
                                    (a.eps - cep) * (a.eps - cep);
                const Rational db = (b.theta - cth) * (b.theta - cth) +
                                    (b.eps - cep) * (b.eps - cep);
                return da < db;
              });

    // The open region is nonempty iff the closure is two-dimensional, in
    // which case the vertex centroid is an interior point.
    bool two_dim = false;
    for (std::size_t a = 1; a + 1 < verts.size() && !two_dim; ++a) {
      const Rational cross =
          (verts[a].theta - verts[0].theta) * (verts[a + 1].eps - verts[0].eps) -
          (verts[a + 1].theta - verts[0].theta) * (verts[a].eps - verts[0].eps);
      if (cross != 0) two_dim = true;
    }
    if (two_dim) {
      report.feasible = true;
      report.witness = {cth, cep};
    }
  }
  report.vertices = std::move(verts);
  if (report.witness &&
      !region_contains(report, (*report.witness)[0], (*report.witness)[1]))
    throw std::logic_error("admissible_region: witness failed verification");
  return report;
}

bool region_contains(const RegionReport& region, const Rational& theta,
                     const Rational& eps) {
  for (const auto& c : region.constraints) {
    const Rational lhs = c.a_theta * theta + c.a_eps * eps;
    if (c.strict ? !(lhs < c.rhs) : !(lhs <= c.rhs)) return false;
  }
  return true;
}

double local_delta(double mass_u0, double n_half_norm, const ExponentSet& exps,
                   double c_local) {
  if (mass_u0 < 0 || n_half_norm < 0)
    throw std::invalid_argument("local_delta: negative norm");
  if (!(c_local > 0))
    throw std::invalid_argument("local_delta: c_local must be positive");
  if (mass_u0 == 0.0) return 1.0;  // u decouples; every window closes

  const double m = to_double(exps.m);
  const double inv_gap = 1.0 / to_double(exps.gap());  // = 2 exactly
  std::vector<double> qs;
  qs.push_back(std::pow(mass_u0, 2.0 * m - 1.0));
  if (n_half_norm > 0.0) {
    qs.push_back(std::pow(mass_u0, 2.0 * m - 2.0) * n_half_norm);
    qs.push_back(std::pow(mass_u0, 2.0 * m) / n_half_norm);
  }
  double delta = 1.0;
  for (const double q : qs)
    if (q > 0.0) delta = std::min(delta, std::pow(c_local * q, -inv_gap));
  return delta;
}

DoublingForecast doubling_forecast(double mass_u0, double n_half_norm,
                                   const ExponentSet& exps, double c_local) {
  DoublingForecast f;
  const double m = to_double(exps.m);
  const double c = std::max(c_local, 1.0 / c_local);
  f.c_star = 2.0 * c;
  if (mass_u0 == 0.0) {
    f.applicable = true;
    f.free_wave = true;
    f.delta = 1.0;
    f.iterations = 0;
    f.advance = std::numeric_limits<double>::infinity();
    return f;
  }
  if (n_half_norm < std::pow(mass_u0, 2.0 * m)) return f;  // wrong regime

  f.applicable = true;
  f.delta = local_delta(mass_u0, n_half_norm, exps, c_local);
  const double per_step = std::sqrt(f.delta) * std::pow(mass_u0, 2.0 * m);
  const double raw = n_half_norm / per_step;
  f.iterations = static_cast<long long>(std::ceil(raw));
  f.advance = static_cast<double>(f.iterations) * f.delta;
  return f;
}

} // namespace klsm
