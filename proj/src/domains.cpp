#include "pingpong/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/constants/constants.hpp>

namespace pingpong::domains {

ProjectivePoint ProjectivePoint::from_vector(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) throw Error(ErrorCode::InputError, "projective point has a non-finite coordinate");
  const double nv = numkit::norm(v);
  if (nv == 0.0) throw Error(ErrorCode::InputError, "zero vector is not a projective point");
  Vector out = v;
  double sign = 1.0;
  for (double x : out)
    if (x != 0.0) {
      sign = x > 0 ? 1.0 : -1.0;
      break;
    }
  for (auto& x : out) x *= sign / nv;
  return ProjectivePoint(std::move(out));
}

double projective_gap(const Vector& a, const Vector& b) {
  // |a - (a.b) b| for unit vectors; avoids the cancellation in sqrt(1 - cos^2).
  const double na = numkit::norm(a), nb = numkit::norm(b);
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::InputError, "zero vector in projective_gap");
  const double c = numkit::dot(a, b) / (na * nb);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = a[i] / na - c * b[i] / nb;
    acc += r * r;
  }
  return std::min(1.0, std::sqrt(acc));
}

Halfspace::Halfspace(LagInterval iv, SymMatrix form)
    : iv_(std::move(iv)), form_(std::move(form)), scale_(std::max(1.0, numkit::max_abs(form_.matrix()))) {}

Halfspace Halfspace::make(const LagInterval& iv) {
  return Halfspace(iv, symp::bform(iv.p, iv.q).gram());
}

double Halfspace::value(const Vector& v) const { return value_t(v); }

HalfspaceValue halfspace_contains(const Halfspace& h, const ProjectivePoint& p, double tol) {
  const double val = h.value(p.v());
  const double thr = tol * h.scale();
  return {val, val > thr, std::abs(val) <= thr};
}

// Sampling checks -------------------------------------------------------------------

namespace {

Vector unit(Vector v) {
  const double nv = numkit::norm(v);
  for (auto& x : v) x /= nv;
  return v;
}

// A line of a random Lagrangian in (P, Q); always inside H_{P,Q}.
Vector inside_line(const LagInterval& iv, std::mt19937_64& rng) {
  const std::size_t n = iv.p.n();
  const auto l = symp::chart_to_lagrangian(symp::random_positive_definite(n, rng, 2.0), iv);
  return unit(l.basis() * symp::random_vector(n, rng));
}

}  // namespace

ComplementReport complement_identities_check(const Halfspace& h, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto opp = Halfspace::make(h.interval().opposite());
  const auto r = symp::reflection(h.interval().p, h.interval().q);
  const double thr = kBoundaryTol * h.scale();
  ComplementReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vector v = (s % 2 == 0) ? unit(symp::random_vector(2 * h.interval().p.n(), rng)) : inside_line(h.interval(), rng);
    const double b = h.value(v), bo = opp.value(v);
    ++rep.samples;
    rep.max_flip_error = std::max(rep.max_flip_error, std::abs(b + bo) / h.scale());
    if (std::abs(b) > thr && (bo > 0) == (b > 0)) ++rep.sign_violations;
    if (b > thr && !(h.value(unit(r.apply(v))) < -thr)) ++rep.reflection_violations;
  }
  return rep;
}

ProjectivisationReport projectivisation_check(const Halfspace& h, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& iv = h.interval();
  const std::size_t n = iv.p.n();
  const double thr = kBoundaryTol * h.scale();
  ProjectivisationReport rep;
  for (std::size_t attempt = 0; attempt < 20 * samples + 100 && (rep.inside < samples || rep.outside < samples);
       ++attempt) {
    const Vector v = (attempt % 2 == 0) ? inside_line(iv, rng) : unit(symp::random_vector(2 * n, rng));
    const double b = h.value(v);
    if (b > thr && rep.inside < samples) {
      ++rep.inside;
      try {
        const auto l = symp::complete_positive_line(iv.p, iv.q, v);
        const Vector proj = l.projector() * v;
        double resid = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) resid = std::max(resid, std::abs(proj[i] - v[i]));
        if (resid < 1e-8 && symp::maslov(iv.p, l, iv.q) == static_cast<int>(n)) ++rep.completed;
      } catch (const Error&) {
      }
    } else if (b < -thr && rep.outside < samples) {
      ++rep.outside;
      try {
        (void)symp::complete_positive_line(iv.p, iv.q, v);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonPositiveLine) ++rep.rejected;
      }
    }
  }
  return rep;
}

DisjointnessReport disjointness_check(const Lagrangian& p, const Lagrangian& q, const Lagrangian& r,
                                      const Lagrangian& s, std::size_t samples, std::uint64_t seed) {
  using symp::cyclic_lag;
  if (!(cyclic_lag(p, q, r) && cyclic_lag(p, q, s) && cyclic_lag(p, r, s) && cyclic_lag(q, r, s)))
    throw Error(ErrorCode::NotACycle, "(P, Q, R, S) is not a cycle of Lagrangians");
  std::mt19937_64 rng(seed);
  const auto first = Halfspace::make({p, q});
  const auto second = Halfspace::make({r, s});
  const double thr = kBoundaryTol * first.scale();
  DisjointnessReport rep;
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector v = (k % 2 == 0) ? inside_line(first.interval(), rng) : unit(symp::random_vector(2 * p.n(), rng));
    ++rep.samples;
    if (first.value(v) > thr) {
      ++rep.inside_first;
      if (second.value(v) >= 0.0) ++rep.violations;
    }
  }
  return rep;
}

// The fundamental domain -------------------------------------------------------------------

std::string to_string(const Classification& c) {
  switch (c.region) {
    case Region::InDomain: return "InDomain";
    case Region::Boundary: return "Boundary";
    case Region::InHalfspace:
      return std::string("InHalfspace(") + std::to_string(c.letter.gen + 1) + (c.letter.sign > 0 ? ",+)" : ",-)");
  }
  return "?";
}

FundamentalDomain::FundamentalDomain(const schottky::SchottkyData& data) : data_(&data), group_(data) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * data.g()); ++i) {
    const Letter x = Letter::from_index(i);
    halfspaces_.push_back(Halfspace::make(LagInterval::make(data.a(x), data.b(x))));
  }
}

Classification classify(const FundamentalDomain& fd, const ProjectivePoint& p, double tol) {
  return classify_t(fd, p.v(), tol);
}

DescentResult descend(const FundamentalDomain& fd, const precise::RVector& p, std::size_t max_steps, double tol) {
  if (p.size() != 2 * fd.data().n) throw Error(ErrorCode::InputError, "point has the wrong dimension");
  DescentResult out{DescentStatus::Reached, {}, precise::normalized(p), {}, 0};
  while (true) {
    out.final = classify_t(fd, out.image, tol);
    if (out.final.region != Region::InHalfspace) return out;
    if (out.steps == max_steps) {
      out.status = DescentStatus::LimitProximal;
      return out;
    }
    // From the halfspace of x, x^{-1} pushes the point out of it.
    const Letter back = out.final.letter.inverse();
    out.image = precise::normalized(fd.group().letter(back) * out.image);
    out.word = ReducedWord({back}) * out.word;
    ++out.steps;
  }
}

DescentResult descend(const FundamentalDomain& fd, const ProjectivePoint& p, std::size_t max_steps, double tol) {
  return descend(fd, precise::promote(p.v()), max_steps, tol);
}

// Export ------------------------------------------------------------------------------------

std::optional<Vector> affine_chart(const Vector& v, std::size_t c, double clip) {
  const double nv = numkit::norm(v);
  if (std::abs(v.at(c)) < 1e-9 * nv) return std::nullopt;
  Vector out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j == c) continue;
    const double x = v[j] / v[c];
    if (std::abs(x) > clip) return std::nullopt;
    out.push_back(x);
  }
  return out;
}

namespace {

// Points where the projective line through s and s + t d meets B = 0.
void null_points_on_line(const Halfspace& h, const Vector& s, const Vector& d, std::vector<Vector>& out) {
  const Matrix& g = h.form().matrix();
  const Vector gd = g * d;
  const double a = numkit::dot(d, gd);
  const double b = numkit::dot(s, gd);
  const double c = h.value(s);
  std::vector<double> roots;
  const double disc = b * b - a * c;
  if (std::abs(a) < 1e-14 * h.scale()) {
    out.push_back(unit(d));
    if (std::abs(b) > 1e-14) roots.push_back(-c / (2.0 * b));
  } else {
    if (disc < 0) return;
    const double q = -(b + std::copysign(std::sqrt(disc), b));
    if (q != 0.0) {
      roots.push_back(q / a);
      roots.push_back(c / q);
    }
  }
  for (double t : roots) {
    for (int it = 0; it < 3; ++it) {
      const double f = a * t * t + 2 * b * t + c;
      const double fp = 2 * a * t + 2 * b;
      if (fp == 0.0) break;
      t -= f / fp;
    }
    Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i] + t * d[i];
    v = unit(v);
    if (std::abs(h.value(v)) < 1e-8) out.push_back(v);
  }
}

}  // namespace

QuadricSample quadric_export(const Halfspace& h, std::size_t resolution, std::optional<std::size_t> chart_index) {
  if (resolution == 0) throw Error(ErrorCode::InputError, "resolution must be positive");
  const std::size_t n = h.interval().p.n();
  const std::size_t dim = 2 * n;
  if (chart_index && *chart_index >= dim) throw Error(ErrorCode::InputError, "chart index out of range");

  const auto mid = symp::chart_to_lagrangian(SymMatrix(Matrix::identity(n)), h.interval());
  const Vector s = unit(mid.basis().col(0));
  Matrix srow(1, dim);
  for (std::size_t i = 0; i < dim; ++i) srow(0, i) = s[i];
  const Matrix perp = numkit::null_space(srow);

  QuadricSample out;
  if (n >= 3) {
    // Sign samples on the affine plane s + x e_1 + y e_2 of a 2D slice.
    out.kind = "sign-grid";
    out.notice = "n = " + std::to_string(n) + ": quadric exported as a sign grid on a 2D slice";
    const Vector e1 = perp.col(0), e2 = perp.col(1);
    for (std::size_t i = 0; i < resolution; ++i)
      for (std::size_t j = 0; j < resolution; ++j) {
        const double x = resolution == 1 ? 0.0 : -2.0 + 4.0 * i / (resolution - 1);
        const double y = resolution == 1 ? 0.0 : -2.0 + 4.0 * j / (resolution - 1);
        Vector v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = s[k] + x * e1[k] + y * e2[k];
        v = unit(v);
        const double b = h.value(v);
        out.points.push_back(v);
        out.chart_points.push_back({x, y, b > 0 ? 1.0 : (b < 0 ? -1.0 : 0.0)});
      }
    return out;
  }

  if (n == 1) {
    out.kind = "null-points";
    null_points_on_line(h, s, perp.col(0), out.points);
  } else {
    out.kind = "surface";
    const Vector e1 = perp.col(0), e2 = perp.col(1), e3 = perp.col(2);
    for (std::size_t i = 0; i < resolution; ++i) {
      const double alpha = 0.5 * std::numbers::pi * (i + 0.5) / resolution;
      for (std::size_t j = 0; j < 2 * resolution; ++j) {
        const double beta = std::numbers::pi * j / resolution;
        Vector d(dim);
        for (std::size_t k = 0; k < dim; ++k)
          d[k] = std::sin(alpha) * std::cos(beta) * e1[k] + std::sin(alpha) * std::sin(beta) * e2[k] +
                 std::cos(alpha) * e3[k];
        null_points_on_line(h, s, d, out.points);
      }
    }
  }
  for (auto& v : out.points) v = ProjectivePoint::from_vector(v).v();

  auto project = [&](std::size_t c) {
    std::vector<Vector> pts;
    for (const auto& v : out.points)
      if (auto a = affine_chart(v, c)) pts.push_back(*a);
    return pts;
  };
  out.chart_index = chart_index.value_or(dim - 1);
  out.chart_points = project(out.chart_index);
  if (out.chart_points.empty() && !out.points.empty()) {
    if (chart_index) {
      out.notice = "empty slice in chart " + std::to_string(out.chart_index);
    } else {
      std::size_t best = out.chart_index;
      std::size_t best_count = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        const auto pts = project(c);
        if (pts.size() > best_count) {
          best = c;
          best_count = pts.size();
        }
      }
      out.notice = "empty slice in chart " + std::to_string(out.chart_index) + "; using chart " + std::to_string(best);
      out.chart_index = best;
      out.chart_points = project(best);
    }
  }
  return out;
}

std::vector<LegendrianSample> legendrian_export(const FundamentalDomain& fd, const std::vector<ReducedWord>& words,
                                                std::size_t points_per_line) {
  using precise::Real;
  const std::size_t n = fd.data().n;
  if (points_per_line == 0 && n > 1) throw Error(ErrorCode::InputError, "points_per_line must be positive");
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<LegendrianSample> out;
  for (const auto& w : words) {
    const auto basis = fd.group().limit_basis(w);
    LegendrianSample sample{w, {}};
    if (n == 1) {
      sample.points.push_back(basis.col(0));
    } else {
      // Great circles through consecutive basis pairs of L.
      const std::size_t circles = n - 1;
      const std::size_t per = std::max<std::size_t>(1, points_per_line / circles);
      for (std::size_t c = 0; c < circles; ++c) {
        const auto u = basis.col(c), v = basis.col(c + 1);
        for (std::size_t j = 0; j < per; ++j) {
          const Real t = pi * Real(j) / Real(per);
          precise::RVector p(u.size());
          for (std::size_t i = 0; i < u.size(); ++i) p[i] = cos(t) * u[i] + sin(t) * v[i];
          sample.points.push_back(precise::normalized(std::move(p)));
        }
      }
    }
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace pingpong::domains
