#include "pingpong/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "pingpong/pco.hpp"

namespace pingpong::schottky {

using numkit::SymMatrix;
using symp::grassmann_gap;

namespace {

double wrap(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

bool same_angle(double a, double b, double eps = 1e-11) {
  const double d = std::abs(wrap(a) - wrap(b));
  return d < eps || d > 1.0 - eps;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::vector<Letter> CircleModel::letters_in_circle_order() const {
  std::vector<Letter> out;
  for (int i = 0; i < g; ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  std::stable_sort(out.begin(), out.end(), [&](Letter x, Letter y) { return wrap(a(x)) < wrap(a(y)); });
  return out;
}

SymplecticMap SchottkyData::letter_map(Letter x) const {
  const auto& h = generators.at(static_cast<std::size_t>(x.gen));
  return x.sign > 0 ? h : h.inverse();
}

// Words -----------------------------------------------------------------------

std::vector<Letter> successors(const CircleModel& model, Letter x) {
  const auto order = model.letters_in_circle_order();
  const auto inv = x.inverse();
  const std::size_t m = order.size();
  std::size_t pos = 0;
  while (pos < m && !(order[pos] == inv)) ++pos;
  if (pos == m) throw Error(ErrorCode::InputError, "letter outside the model");
  std::vector<Letter> out;
  for (std::size_t k = 1; k < m; ++k) out.push_back(order[(pos + k) % m]);
  return out;
}

std::vector<ReducedWord> enumerate_words(const CircleModel& model, std::size_t k, std::size_t budget) {
  if (k < 1) throw Error(ErrorCode::InputError, "word length must be at least 1");
  if (model.g < 1) throw Error(ErrorCode::InputError, "model needs g >= 1");
  const std::size_t count = word_count(model.g, k);
  if (count > budget)
    throw Error(ErrorCode::CapacityExceeded, std::to_string(count) + " words exceed the budget of " + std::to_string(budget));

  std::vector<std::vector<Letter>> next(static_cast<std::size_t>(2 * model.g));
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = successors(model, Letter::from_index(i));

  std::vector<ReducedWord> out;
  out.reserve(count);
  std::vector<Letter> stack;
  // Depth-first in the interval order gives the cyclic order of the leaves.
  auto rec = [&](auto&& self, const std::vector<Letter>& choices) -> void {
    for (const Letter& x : choices) {
      stack.push_back(x);
      if (stack.size() == k) out.emplace_back(stack);
      else self(self, next[x.index()]);
      stack.pop_back();
    }
  };
  rec(rec, model.letters_in_circle_order());
  return out;
}

Lagrangian act(const SchottkyData& data, const ReducedWord& w, const Lagrangian& l) {
  Lagrangian cur = l;
  for (std::size_t i = w.size(); i-- > 0;) cur = data.letter_map(w[i]).apply(cur);
  return cur;
}

SymplecticMap word_map(const SchottkyData& data, const ReducedWord& w) {
  auto m = SymplecticMap::identity(data.n);
  for (std::size_t i = 0; i < w.size(); ++i) m = m.compose(data.letter_map(w[i]));
  return m;
}

LagInterval word_interval(const SchottkyData& data, const ReducedWord& w) {
  if (w.empty()) throw Error(ErrorCode::InputError, "word_interval needs a nonempty word");
  const auto prefix = w.prefix(w.size() - 1);
  return {act(data, prefix, data.a(w.back())), act(data, prefix, data.b(w.back()))};
}

// Circle side --------------------------------------------------------------------

Lagrangian circle_point(double theta) {
  Matrix b(2, 1);
  b(0, 0) = std::cos(std::numbers::pi * theta);
  b(1, 0) = std::sin(std::numbers::pi * theta);
  return Lagrangian::trusted(b);
}

std::vector<Matrix> circle_generators(const SchottkyData& data) {
  if (!data.circle_generators.empty()) return data.circle_generators;
  auto vec = [](double t) { return std::pair{std::cos(std::numbers::pi * t), std::sin(std::numbers::pi * t)}; };
  std::vector<Matrix> out;
  for (int i = 0; i < data.g(); ++i) {
    const Letter plus{i, 1}, minus{i, -1};
    // Sends b^- to a^+ and a^- to b^+.
    auto [ap0, ap1] = vec(data.model.a(plus));
    auto [bp0, bp1] = vec(data.model.b(plus));
    auto [am0, am1] = vec(data.model.a(minus));
    auto [bm0, bm1] = vec(data.model.b(minus));
    Matrix src{{bm0, am0}, {bm1, am1}};
    Matrix dst{{ap0, bp0}, {ap1, bp1}};
    Matrix m = dst * numkit::inverse(src);
    double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det < 0) {
      dst(0, 0) = -dst(0, 0);
      dst(1, 0) = -dst(1, 0);
      m = dst * numkit::inverse(src);
      det = -det;
    }
    m *= 1.0 / std::sqrt(det);
    out.push_back(m);
  }
  return out;
}

double circle_act(const std::vector<Matrix>& gens, const ReducedWord& w, double theta) {
  double x = std::cos(std::numbers::pi * theta), y = std::sin(std::numbers::pi * theta);
  for (std::size_t i = w.size(); i-- > 0;) {
    const Matrix& m = gens.at(static_cast<std::size_t>(w[i].gen));
    double nx, ny;
    if (w[i].sign > 0) {
      nx = m(0, 0) * x + m(0, 1) * y;
      ny = m(1, 0) * x + m(1, 1) * y;
    } else {
      nx = m(1, 1) * x - m(0, 1) * y;
      ny = -m(1, 0) * x + m(0, 0) * y;
    }
    const double r = std::hypot(nx, ny);
    x = nx / r;
    y = ny / r;
  }
  return wrap(std::atan2(y, x) / std::numbers::pi);
}

// Validation ------------------------------------------------------------------------

ValidationReport validate(const SchottkyData& data, double tol) {
  ValidationReport rep;
  auto fail = [&](std::string check, std::string witness) { rep.failures.push_back({std::move(check), std::move(witness)}); };
  const int g = data.g();
  if (g < 1 || data.model.endpoints.size() != 4 * static_cast<std::size_t>(g)) {
    fail("shape", "expected 4g circle endpoints with g >= 1");
    return rep;
  }
  for (double t : data.model.endpoints)
    if (!std::isfinite(t)) {
      fail("shape", "non-finite circle endpoint");
      return rep;
    }

  // (1) circle endpoints, listed interval by interval in circle order.
  const auto order = data.model.letters_in_circle_order();
  const bool shared = data.model.flavor == Flavor::Shared;
  std::vector<double> angles;
  std::vector<std::size_t> slot;  // endpoint slot for each listed angle
  std::vector<std::pair<std::size_t, std::size_t>> identified;
  auto push = [&](double t, std::size_t sl) {
    if (shared && !angles.empty() && same_angle(angles.back(), t)) {
      identified.push_back({slot.back(), sl});
      return;
    }
    angles.push_back(t);
    slot.push_back(sl);
  };
  for (const Letter x : order) {
    const std::size_t base_slot = static_cast<std::size_t>(4 * x.gen + (x.sign > 0 ? 0 : 2));
    push(data.model.a(x), base_slot);
    push(data.model.b(x), base_slot + 1);
  }
  if (shared && angles.size() > 1 && same_angle(angles.front(), angles.back())) {
    identified.push_back({slot.front(), slot.back()});
    angles.pop_back();
    slot.pop_back();
  }
  const auto circle = pco::circle_model();
  if (!pco::is_cycle(circle, angles)) {
    std::string w = "angles in interval order:";
    for (double t : angles) w += " " + fmt(t);
    fail("circle-cycle", w);
  }

  // (2) endpoint Lagrangians form a cycle in the same order.
  if (data.endpoint_images.size() != data.model.endpoints.size()) {
    fail("shape", "expected 4g endpoint Lagrangians");
    return rep;
  }
  for (const auto& l : data.endpoint_images)
    if (l.n() != data.n) {
      fail("shape", "endpoint Lagrangian of the wrong dimension");
      return rep;
    }
  for (auto [i, j] : identified)
    if (!symp::same_lagrangian(data.endpoint_images[i], data.endpoint_images[j], tol))
      fail("shared-endpoint", "slots " + std::to_string(i) + " and " + std::to_string(j) + " share an angle but not a Lagrangian");
  {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < slot.size(); ++i)
      for (std::size_t j = i + 1; j < slot.size(); ++j)
        for (std::size_t k = j + 1; k < slot.size(); ++k)
          if (!symp::cyclic_lag(data.endpoint_images[slot[i]], data.endpoint_images[slot[j]], data.endpoint_images[slot[k]])) {
            if (bad++ == 0)
              first = "slots (" + std::to_string(slot[i]) + ", " + std::to_string(slot[j]) + ", " + std::to_string(slot[k]) + ")";
          }
    if (bad > 0) fail("increasing", std::to_string(bad) + " endpoint triples out of order, first " + first);
  }

  // (3) and (4): generators.
  if (data.generators.size() != static_cast<std::size_t>(g)) {
    fail("shape", "expected g generators");
    return rep;
  }
  for (int i = 0; i < g; ++i) {
    const auto& h = data.generators[static_cast<std::size_t>(i)];
    const std::string name(1, Letter{i, 1}.symbol());
    if (h.matrix().rows() != 2 * data.n) {
      fail("shape", "generator " + name + " has the wrong size");
      continue;
    }
    const auto kind = symp::classify_map(h.matrix());
    if (!kind || *kind != symp::MapKind::Symplectic) {
      const Matrix w = symp::omega_matrix(data.n);
      const double err = numkit::max_abs(Matrix(h.matrix().transpose() * w * h.matrix() - w));
      fail("symplectic", "generator " + name + ": |M^T Omega M - Omega| = " + fmt(err));
    }
    const Letter plus{i, 1}, minus{i, -1};
    const double g1 = grassmann_gap(h.apply(data.b(minus)), data.a(plus));
    const double g2 = grassmann_gap(h.apply(data.a(minus)), data.b(plus));
    if (g1 >= tol) fail("pairing", "generator " + name + ": gap(h(b^-), a^+) = " + fmt(g1));
    if (g2 >= tol) fail("pairing", "generator " + name + ": gap(h(a^-), b^+) = " + fmt(g2));
  }
  if (!data.circle_generators.empty()) {
    if (data.circle_generators.size() != static_cast<std::size_t>(g)) {
      fail("shape", "expected g circle generators");
    } else {
      for (int i = 0; i < g; ++i) {
        const Letter plus{i, 1}, minus{i, -1};
        const ReducedWord w({plus});
        const double t1 = circle_act(data.circle_generators, w, data.model.b(minus));
        const double t2 = circle_act(data.circle_generators, w, data.model.a(minus));
        if (!same_angle(t1, data.model.a(plus), 1e-9) || !same_angle(t2, data.model.b(plus), 1e-9))
          fail("circle-pairing", std::string("circle generator ") + plus.symbol() + " does not pair its intervals");
      }
    }
  }
  return rep;
}

Lagrangian basepoint(const SchottkyData& data, std::size_t gap) {
  if (data.model.flavor == Flavor::Shared)
    throw Error(ErrorCode::Unsupported, "shared-endpoint models have no gap for a basepoint");
  const auto order = data.model.letters_in_circle_order();
  const Letter x = order[gap % order.size()];
  const Letter y = order[(gap + 1) % order.size()];
  const auto base = LagInterval::make(data.b(x), data.a(y));
  return symp::chart_to_lagrangian(SymMatrix(Matrix::identity(data.n)), base);
}

PingPongReport ping_pong_check(const SchottkyData& data, std::size_t depth, std::size_t budget) {
  if (depth < 1) throw Error(ErrorCode::InputError, "ping-pong depth must be at least 1");
  PingPongReport rep;
  rep.depth = depth;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= depth; ++k) total += word_count(data.g(), k);
  if (total > budget) throw Error(ErrorCode::CapacityExceeded, std::to_string(total) + " words exceed the budget");
  const auto bp = basepoint(data);
  for (std::size_t k = 1; k <= depth; ++k) {
    const auto words = enumerate_words(data.model, k, budget);
    rep.words_per_length.push_back(words.size());
    for (const auto& w : words) {
      const auto l = act(data, w, bp);
      ++rep.words_checked;
      if (!symp::cyclic_lag(data.a(w.front()), l, data.b(w.front()))) rep.violations.push_back(w.str());
      if (grassmann_gap(l, bp) < symp::kLagEqualGap) rep.fixed.push_back(w.str());
    }
  }
  return rep;
}

// Contraction ---------------------------------------------------------------------

namespace {

SymMatrix sym_function(const SymMatrix& s, double (*f)(double)) {
  const auto eig = numkit::sym_eig(s);
  const std::size_t n = s.n();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = f(eig.values[i]);
  return SymMatrix(eig.vectors * d * eig.vectors.transpose());
}

double safe_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }
double exp_fn(double x) { return std::exp(x); }

// Chart forms of points over a fixed interval, with pairwise distances done
// directly on the forms.
struct ChartCloud {
  std::vector<SymMatrix> forms;
  std::vector<Matrix> inv_chol;

  ChartCloud(const LagInterval& base, const std::vector<Lagrangian>& pts) {
    for (const auto& p : pts) {
      SymMatrix s;
      try {
        s = symp::lagrangian_to_chart(p, base);
      } catch (const Error&) {
        throw Error(ErrorCode::NotInInterval, "sample point meets the interval's far end");
      }
      Matrix l;
      try {
        l = numkit::cholesky(s);
      } catch (const Error&) {
        throw Error(ErrorCode::NotInInterval, "sample point outside the interval");
      }
      forms.push_back(s);
      inv_chol.push_back(numkit::inverse(l));
    }
  }

  double distance(std::size_t i, std::size_t j) const {
    const auto& li = inv_chol[i];
    const auto vals = numkit::sym_eig(SymMatrix(li * forms[j].matrix() * li.transpose())).values;
    double acc = 0.0;
    for (double x : vals) {
      if (!(x > 0.0)) throw Error(ErrorCode::NotInInterval, "non-positive generalized eigenvalue");
      acc += std::log(x) * std::log(x);
    }
    return std::sqrt(acc);
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = i + 1; j < forms.size(); ++j) d = std::max(d, distance(i, j));
    return d;
  }
};

}  // namespace

double sampled_ratio(const SymplecticMap& t, const LagInterval& source, const LagInterval& target, int samples,
                     std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InputError, "need at least one sample");
  const std::size_t n = source.p.n();
  std::mt19937_64 rng(seed);
  static constexpr double kSpreads[] = {0.3, 1.5, 3.0};
  static constexpr double kSteps[] = {1e-3, 0.05, 0.5, 2.0};

  std::vector<Lagrangian> xs, ys;
  for (int s = 0; s < samples; ++s) {
    const SymMatrix sx = symp::random_positive_definite(n, rng, kSpreads[s % 3]);
    SymMatrix h = symp::random_symmetric(n, rng);
    const double hn = numkit::frobenius_norm(h.matrix());
    const double eps = kSteps[(s / 3) % 4] / std::max(hn, 1e-300);
    const SymMatrix root = sym_function(sx, safe_sqrt);
    const SymMatrix step = sym_function(SymMatrix(h.matrix() * eps), exp_fn);
    const SymMatrix sy(root.matrix() * step.matrix() * root.matrix());
    xs.push_back(symp::chart_to_lagrangian(sx, source));
    ys.push_back(symp::chart_to_lagrangian(sy, source));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d0 = symp::interval_distance(source, xs[i], ys[i]);
    if (d0 < 1e-12) continue;
    const double d1 = symp::interval_distance(target, t.apply(xs[i]), t.apply(ys[i]));
    worst = std::max(worst, d1 / d0);
  }
  return worst;
}

double contraction_ratio(const SymplecticMap& t, const LagInterval& source, const LagInterval& target, int samples,
                         std::uint64_t seed) {
  const double r = sampled_ratio(t, source, target, samples, seed);
  if (r >= 1.0 - 1e-9) throw Error(ErrorCode::ContractionViolation, "sampled ratio " + fmt(r) + " is not below 1");
  return r;
}

double contraction_constant(const SchottkyData& data, int samples, std::uint64_t seed) {
  if (data.model.flavor == Flavor::Shared)
    throw Error(ErrorCode::Unsupported, "contraction needs intervals with disjoint closures");
  double c = 0.0;
  const std::size_t letters = static_cast<std::size_t>(2 * data.g());
  for (std::size_t xi = 0; xi < letters; ++xi) {
    const Letter x = Letter::from_index(xi);
    const auto t = data.letter_map(x);
    for (std::size_t ki = 0; ki < letters; ++ki) {
      const Letter k = Letter::from_index(ki);
      if (k == x.inverse()) continue;
      c = std::max(c, contraction_ratio(t, data.interval(k), data.interval(x), samples, seed + 1000 * xi + ki));
    }
  }
  return c;
}

ClosureSampler::ClosureSampler(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  rotations_.push_back(Matrix::identity(n));
  for (int r = 0; r < 2; ++r) rotations_.push_back(symp::random_orthogonal(n, rng));
  const int steps = n <= 2 ? 5 : 3;
  std::vector<double> grid;
  for (int s = 0; s < steps; ++s) grid.push_back(0.5 * std::numbers::pi * s / (steps - 1));
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = grid[idx[i]];
    phis_.push_back(phi);
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
}

std::vector<Lagrangian> ClosureSampler::sample(const LagInterval& iv) const {
  std::vector<Lagrangian> out;
  for (const auto& u : rotations_)
    for (const auto& phi : phis_) out.push_back(symp::interval_closure_point(iv, u, phi));
  return out;
}

double word_diameter(const SchottkyData& data, const ReducedWord& w, const ClosureSampler& sampler) {
  if (w.size() < 2) throw Error(ErrorCode::NeedLongerPrefix, "first-order intervals have infinite diameter");
  const auto prefix = w.prefix(w.size() - 1);
  auto pts = sampler.sample(data.interval(w.back()));
  for (auto& p : pts) p = act(data, prefix, p);
  return ChartCloud(data.interval(w.front()), pts).diameter();
}

double second_order_diameter(const SchottkyData& data, const ClosureSampler& sampler) {
  double m = 0.0;
  for (const auto& w : enumerate_words(data.model, 2)) m = std::max(m, word_diameter(data, w, sampler));
  return m;
}

Lagrangian attracting_lagrangian(const SchottkyData& data, Letter x) {
  const auto t = data.letter_map(x);
  Lagrangian cur = symp::chart_to_lagrangian(SymMatrix(Matrix::identity(data.n)), data.interval(x));
  for (int it = 0; it < 5000; ++it) {
    Lagrangian next = t.apply(cur);
    const double step = grassmann_gap(next, cur);
    cur = std::move(next);
    if (step < 1e-15) break;
  }
  return cur;
}

// The limit map --------------------------------------------------------------------

LimitMap::LimitMap(const SchottkyData& data, int samples, std::uint64_t seed)
    : LimitMap(data, schottky::basepoint(data), samples, seed) {}

LimitMap::LimitMap(const SchottkyData& data, Lagrangian base, int samples, std::uint64_t seed)
    : data_(&data), base_(std::move(base)) {
  if (data.model.flavor == Flavor::Shared) throw Error(ErrorCode::Unsupported, "the limit map needs disjoint closures");
  c_ = contraction_constant(data, samples, seed);
  m_ = second_order_diameter(data, ClosureSampler(data.n, seed));
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * data.g()); ++i)
    attractors_.push_back(attracting_lagrangian(data, Letter::from_index(i)));
}

double LimitMap::bound(std::size_t k) const {
  if (k < 2) return std::numeric_limits<double>::infinity();
  return m_ * std::pow(c_, static_cast<double>(k) - 2.0);
}

EtaValue LimitMap::eta(const ReducedWord& prefix) const {
  if (prefix.size() < 2) throw Error(ErrorCode::NeedLongerPrefix, "eta needs a prefix of length at least 2");
  return {act(*data_, prefix, base_), bound(prefix.size())};
}

std::vector<LimitEntry> LimitMap::limit_set(std::size_t depth, std::size_t budget) const {
  std::vector<LimitEntry> out;
  for (auto& w : enumerate_words(data_->model, depth, budget)) {
    auto p = act(*data_, w, attractors_[w.back().index()]);
    out.push_back({std::move(w), std::move(p), bound(depth)});
  }
  return out;
}

// Constructors -------------------------------------------------------------------------

SchottkyData embed_diagonal_sl2(const FuchsianData& f, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InputError, "n must be at least 1");
  if (f.g < 1 || f.endpoints.size() != 4 * static_cast<std::size_t>(f.g) ||
      f.matrices.size() != static_cast<std::size_t>(f.g))
    throw Error(ErrorCode::InputError, "Fuchsian data needs 4g endpoints and g matrices");
  for (const auto& m : f.matrices) {
    if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::InputError, "Fuchsian generators must be 2x2");
    numkit::require_finite(m, "Fuchsian generator");
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det - 1.0) > 1e-9) throw Error(ErrorCode::InputError, "Fuchsian generator not in SL(2, R)");
    if (std::abs(m(0, 0) + m(1, 1)) <= 2.0 + 1e-12) throw Error(ErrorCode::InputError, "Fuchsian generator is not hyperbolic");
  }

  SchottkyData base;
  base.model.g = f.g;
  for (double t : f.endpoints) base.model.endpoints.push_back(wrap(t));
  base.n = 1;
  for (double t : base.model.endpoints) base.endpoint_images.push_back(circle_point(t));
  for (const auto& m : f.matrices) base.generators.push_back(SymplecticMap::from_matrix(m));
  base.circle_generators = f.matrices;
  const auto rep = validate(base);
  if (!rep.ok())
    throw Error(ErrorCode::InputError, "Fuchsian data is not a Schottky system: " + rep.failures.front().check + " (" +
                                           rep.failures.front().witness + ")");
  if (n == 1) return base;

  SchottkyData out;
  out.model = base.model;
  out.n = n;
  out.circle_generators = f.matrices;
  for (double t : out.model.endpoints) {
    Matrix b(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      b(i, i) = std::cos(std::numbers::pi * t);
      b(n + i, i) = std::sin(std::numbers::pi * t);
    }
    out.endpoint_images.push_back(Lagrangian::from_matrix(b));
  }
  for (const auto& m : f.matrices) {
    Matrix h(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = m(0, 0);
      h(i, n + i) = m(0, 1);
      h(n + i, i) = m(1, 0);
      h(n + i, n + i) = m(1, 1);
    }
    out.generators.push_back(SymplecticMap::from_matrix(h));
  }
  return out;
}

FuchsianData standard_fuchsian_g2(double lambda) {
  if (!(lambda > 1.0)) throw Error(ErrorCode::InputError, "lambda must exceed 1 for a hyperbolic generator");
  const double eps = std::atan(1.0 / lambda) / std::numbers::pi;
  FuchsianData f;
  f.g = 2;
  f.endpoints = {wrap(-eps), eps, 0.5 - eps, 0.5 + eps, 0.25 - eps, 0.25 + eps, 0.75 - eps, 0.75 + eps};
  const Matrix a{{lambda, 0.0}, {0.0, 1.0 / lambda}};
  const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
  const Matrix r{{c, -s}, {s, c}};
  const Matrix rt = r.transpose();
  f.matrices = {a, r * a * rt};
  return f;
}

// Endpoint table ------------------------------------------------------------------------

std::vector<XiEntry> xi_endpoints(const SchottkyData& data, std::size_t k, bool cumulative) {
  if (k < 1) throw Error(ErrorCode::InputError, "order must be at least 1");
  const auto gens = circle_generators(data);
  std::vector<XiEntry> out;
  for (std::size_t j = cumulative ? 1 : k; j <= k; ++j) {
    for (const auto& w : enumerate_words(data.model, j)) {
      const auto prefix = w.prefix(j - 1);
      const Letter y = w.back();
      out.push_back({circle_act(gens, prefix, data.model.a(y)), w, true, act(data, prefix, data.a(y))});
      out.push_back({circle_act(gens, prefix, data.model.b(y)), w, false, act(data, prefix, data.b(y))});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const XiEntry& x, const XiEntry& y) { return x.angle < y.angle; });
  std::vector<XiEntry> dedup;
  for (auto& e : out)
    if (dedup.empty() || !same_angle(dedup.back().angle, e.angle)) dedup.push_back(std::move(e));
  if (dedup.size() > 1 && same_angle(dedup.front().angle, dedup.back().angle)) dedup.pop_back();
  return dedup;
}

EquivarianceReport xi_equivariance_check(const SchottkyData& data, const std::vector<XiEntry>& table,
                                         std::size_t samples, std::uint64_t seed) {
  EquivarianceReport rep;
  if (table.empty()) return rep;
  const auto gens = circle_generators(data);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  std::uniform_int_distribution<std::size_t> letter(0, static_cast<std::size_t>(2 * data.g() - 1));
  std::uniform_int_distribution<int> len(1, 3);
  std::vector<double> angles;
  for (const auto& e : table) angles.push_back(e.angle);

  for (std::size_t attempt = 0; attempt < 200 * samples && rep.checked < samples; ++attempt) {
    std::vector<Letter> ls;
    const int target = len(rng);
    while (static_cast<int>(ls.size()) < target) {
      const Letter x = Letter::from_index(letter(rng));
      if (!ls.empty() && ls.back() == x.inverse()) continue;
      ls.push_back(x);
    }
    const ReducedWord gamma(ls);
    const auto& e = table[pick(rng)];
    const double t = circle_act(gens, gamma, e.angle);
    auto it = std::lower_bound(angles.begin(), angles.end(), t - 1e-9);
    std::size_t hit = table.size();
    for (auto c : {it, angles.begin(), angles.end() - 1}) {
      if (c != angles.end() && same_angle(*c, t, 1e-9)) {
        hit = static_cast<std::size_t>(c - angles.begin());
        break;
      }
    }
    if (hit == table.size()) continue;
    rep.max_gap = std::max(rep.max_gap, grassmann_gap(act(data, gamma, e.point), table[hit].point));
    ++rep.checked;
  }
  return rep;
}

}  // namespace pingpong::schottky
