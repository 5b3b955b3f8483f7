#include "pingpong/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "pingpong/domains.hpp"
#include "pingpong/invariants.hpp"
#include "pingpong/spec_io.hpp"

namespace pingpong::cli {

namespace {

using io::Json;
using schottky::ReducedWord;

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InputError:
    case ErrorCode::CapacityExceeded:
    case ErrorCode::Unsupported:
    case ErrorCode::NotIsotropic:
    case ErrorCode::NotASubspaceBasis:
    case ErrorCode::NonReducedWord:
      return 2;
    default:
      return 1;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

io::Spec load(const Options& o) {
  auto spec = io::load_spec(o.target);
  if (o.tol) spec.tol.boundary = *o.tol;
  return spec;
}

/// Prints failures; true when the spec passes validate().
bool report_validation(const io::Spec& spec, std::ostream& out) {
  const auto rep = schottky::validate(spec.data, spec.tol.lagrangian_gap);
  for (const auto& f : rep.failures) out << "FAIL " << f.check << ": " << f.witness << "\n";
  return rep.ok();
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) out << content;
  else io::write_file(o.out, content);
}

std::string label(const domains::Classification& c) {
  switch (c.region) {
    case domains::Region::InDomain: return "domain";
    case domains::Region::Boundary: return "boundary";
    case domains::Region::InHalfspace: return std::string("halfspace ") + c.letter.symbol();
  }
  return "?";
}

Json summary_json(const domains::FundamentalDomain& fd, std::size_t samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::size_t in_domain = 0, boundary = 0;
  std::map<std::string, std::size_t> per_letter;
  for (std::size_t i = 0; i < fd.halfspaces().size(); ++i)
    per_letter[std::string(1, schottky::Letter::from_index(i).symbol())] = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = domains::ProjectivePoint::from_vector(symp::random_vector(2 * fd.data().n, rng));
    const auto c = domains::classify(fd, p, tol);
    if (c.region == domains::Region::InDomain) ++in_domain;
    else if (c.region == domains::Region::Boundary) ++boundary;
    else ++per_letter[std::string(1, c.letter.symbol())];
  }
  Json halfspaces = Json::object();
  for (const auto& [k, v] : per_letter) halfspaces[k] = v;
  return {{"samples", samples}, {"in_domain", in_domain}, {"boundary", boundary}, {"in_halfspace", halfspaces}};
}

}  // namespace

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(o);
    bool ok = report_validation(spec, out);
    out << "validate: " << (ok ? "ok" : "failed") << "\n";
    if (!ok) return 1;
    if (spec.data.model.flavor == schottky::Flavor::Shared) {
      out << "notice: ping-pong check skipped, shared endpoints leave no gap for a basepoint\n";
      return 0;
    }
    const std::size_t depth = o.depth.value_or(5);
    const auto pp = schottky::ping_pong_check(spec.data, depth);
    for (const auto& w : pp.violations) out << "FAIL ping-pong: " << w << " leaves its first-letter interval\n";
    for (const auto& w : pp.fixed) out << "FAIL ping-pong: " << w << " fixes the basepoint\n";
    out << "ping-pong: depth " << depth << ", " << pp.words_checked << " words (";
    for (std::size_t k = 0; k < pp.words_per_length.size(); ++k)
      out << (k ? " " : "") << "len" << k + 1 << "=" << pp.words_per_length[k];
    out << "): " << (pp.ok() ? "ok" : "failed") << "\n";
    return pp.ok() ? 0 : 1;
  });
}

int cmd_limit_set(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(o);
    if (spec.data.model.flavor != schottky::Flavor::Disjoint)
      throw Error(ErrorCode::Unsupported, "limit-set needs the disjoint-closures flavor");
    if (!report_validation(spec, err)) return 1;
    const std::size_t depth = o.depth.value_or(6);
    const schottky::LimitMap lm(spec.data, 150, o.seed);
    const auto entries = lm.limit_set(depth);

    Json j;
    j["version"] = io::kSceneVersion;
    j["n"] = spec.data.n;
    j["g"] = spec.data.g();
    j["depth"] = depth;
    j["contraction_constant"] = lm.contraction();
    j["diameter_bound"] = lm.diameter_bound();
    Json words = Json::array(), limits = Json::array();
    for (const auto& e : entries) {
      words.push_back(e.word.str());
      limits.push_back({{"word", e.word.str()}, {"basis", io::matrix_to_json(e.point.basis())}, {"bound", e.bound}});
    }
    j["words"] = std::move(words);
    j["limit_set"] = std::move(limits);
    emit(o, io::dump(j), out);

    if (!o.points_out.empty()) {
      // One generic point of each limit Lagrangian: the sum of its basis.
      const precise::PreciseGroup group(spec.data);
      std::ostringstream pts;
      pts << "# limit points, depth " << depth << "\n";
      for (const auto& e : entries) {
        const auto b = group.limit_basis(e.word);
        precise::RVector v(b.rows(), precise::Real(0));
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t k = 0; k < b.cols(); ++k) v[i] += b(i, k);
        pts << io::format_point(precise::normalized(v)) << "  # " << e.word.str() << "\n";
      }
      io::write_file(o.points_out, pts.str());
    }
    err << "limit-set: " << entries.size() << " entries, C = " << lm.contraction() << ", M = " << lm.diameter_bound()
        << "\n";
    return 0;
  });
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(o);
    if (!report_validation(spec, err)) return 1;
    const auto pts = io::load_points(o.points, 2 * spec.data.n);
    const domains::FundamentalDomain fd(spec.data);
    std::ostringstream s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto c = domains::classify_t(fd, precise::normalized(pts[i]), spec.tol.boundary);
      s << i << " " << label(c) << "\n";
    }
    emit(o, s.str(), out);
    return 0;
  });
}

int cmd_tile(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(o);
    if (!report_validation(spec, err)) return 1;
    const auto pts = io::load_points(o.points, 2 * spec.data.n);
    const domains::FundamentalDomain fd(spec.data);
    std::ostringstream s;
    std::size_t proximal = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto r = domains::descend(fd, pts[i], o.max_steps, spec.tol.boundary);
      const bool lp = r.status == domains::DescentStatus::LimitProximal;
      proximal += lp ? 1 : 0;
      s << i << " " << (lp ? "limit-proximal" : label(r.final)) << " " << r.word.str() << " "
        << io::format_point(r.image) << "\n";
    }
    emit(o, s.str(), out);
    err << "tile: " << pts.size() << " points, " << proximal << " limit-proximal\n";
    return 0;
  });
}

int cmd_export_scene(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.resolution == 0) throw Error(ErrorCode::InputError, "resolution must be positive");
    const auto spec = load(o);
    if (spec.data.model.flavor != schottky::Flavor::Disjoint)
      throw Error(ErrorCode::Unsupported, "export-scene needs the disjoint-closures flavor");
    if (!report_validation(spec, err)) return 1;
    const std::size_t depth = o.depth.value_or(4);
    const std::size_t n = spec.data.n;
    const std::size_t chart = 2 * n - 1;
    const schottky::LimitMap lm(spec.data, 150, o.seed);
    const domains::FundamentalDomain fd(spec.data);

    Json j;
    j["version"] = io::kSceneVersion;
    j["n"] = n;
    j["g"] = spec.data.g();
    j["depth"] = depth;
    j["resolution"] = o.resolution;
    j["seed"] = o.seed;
    j["tolerances"] = {{"lagrangian_gap", spec.tol.lagrangian_gap}, {"boundary", spec.tol.boundary}};
    j["contraction_constant"] = lm.contraction();
    j["diameter_bound"] = lm.diameter_bound();
    j["chart_index"] = chart;

    Json quadrics = Json::array(), notices = Json::array();
    for (std::size_t i = 0; i < fd.halfspaces().size(); ++i) {
      const auto x = schottky::Letter::from_index(i);
      const auto q = domains::quadric_export(fd.halfspaces()[i], o.resolution);
      Json pts = Json::array(), hom = Json::array();
      for (const auto& p : q.chart_points) pts.push_back(io::vector_to_json(p));
      for (const auto& p : q.points) hom.push_back(io::vector_to_json(p));
      if (!q.notice.empty()) {
        notices.push_back(std::string(1, x.symbol()) + ": " + q.notice);
        err << "notice: " << x.symbol() << ": " << q.notice << "\n";
      }
      quadrics.push_back({{"letter", std::string(1, x.symbol())},
                          {"order", 1},
                          {"kind", q.kind},
                          {"chart_index", q.chart_index},
                          {"notice", q.notice},
                          {"count", pts.size()},
                          {"points", std::move(pts)},
                          {"homogeneous", std::move(hom)}});
    }
    j["quadrics"] = std::move(quadrics);

    const auto words = schottky::enumerate_words(spec.data.model, depth);
    const auto legs = domains::legendrian_export(fd, words, n == 1 ? 1 : 32);
    Json legendrians = Json::array(), labels = Json::array();
    for (const auto& l : legs) {
      Json pts = Json::array(), hom = Json::array();
      for (const auto& p : l.points) {
        const auto v = precise::demote(p);
        hom.push_back(io::vector_to_json(v));
        if (auto a = domains::affine_chart(v, chart)) pts.push_back(io::vector_to_json(*a));
      }
      labels.push_back(l.word.str());
      legendrians.push_back({{"word", l.word.str()},
                             {"count", pts.size()},
                             {"points", std::move(pts)},
                             {"homogeneous", std::move(hom)}});
    }
    j["legendrians"] = std::move(legendrians);
    j["words"] = std::move(labels);
    j["domain_summary"] = summary_json(fd, o.samples.value_or(2000), o.seed, spec.tol.boundary);
    j["notices"] = std::move(notices);
    emit(o, io::dump(j), out);
    return 0;
  });
}

namespace {

void print_axioms(const std::string& name, const pco::AxiomReport& r, std::ostream& out) {
  out << name << ": samples=" << r.sample_size << " cyclicity=" << r.cyclicity << " asymmetry=" << r.asymmetry
      << " transitivity=" << r.transitivity;
  if (r.totality) out << " incomparable=" << *r.totality;
  out << (r.pco_ok() ? " ok" : " FAILED") << "\n";
}

template <class Model, class Point>
bool axiom_pair(const Model& m, const std::vector<Point>& pool, std::size_t chain, std::size_t small,
                std::size_t draws, bool totality, std::mt19937_64& rng, std::ostream& out, std::size_t* incomparable) {
  const auto exhaustive = pco::axiom_check(m, std::vector<Point>(pool.begin(), pool.begin() + small), totality);
  print_axioms(m.name + " exhaustive", exhaustive, out);
  const auto sampled = pco::sampled_axiom_check(m, pool, chain, draws, rng, totality);
  print_axioms(m.name + " sampled", sampled, out);
  if (incomparable) *incomparable = exhaustive.totality.value_or(0) + sampled.totality.value_or(0);
  return exhaustive.pco_ok() && sampled.pco_ok();
}

}  // namespace

int cmd_axioms(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::size_t draws = o.samples.value_or(500);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::string& t = o.target;
    bool ok = true;

    if (t == "circle") {
      std::vector<double> pool(64);
      for (auto& x : pool) x = unit(rng);
      std::sort(pool.begin(), pool.end());
      std::size_t inc = 0;
      ok = axiom_pair(pco::circle_model(), pool, pool.size(), 16, draws, true, rng, out, &inc);
      if (inc != 0) {
        out << "circle: " << inc << " incomparable triples in a total order\n";
        ok = false;
      }
    } else if (t == "torus") {
      std::vector<double> xs(48), ys(48);
      for (auto& x : xs) x = unit(rng);
      for (auto& y : ys) y = unit(rng);
      std::sort(xs.begin(), xs.end());
      std::sort(ys.begin(), ys.end());
      std::vector<pco::TorusPoint> pool;
      for (std::size_t i = 0; i < xs.size(); ++i) pool.push_back({xs[i], ys[i]});
      for (int i = 0; i < 48; ++i) pool.push_back({unit(rng), unit(rng)});
      // Interleave so the exhaustive prefix mixes chain and free points.
      std::vector<pco::TorusPoint> small;
      for (int i = 0; i < 8; ++i) {
        small.push_back(pool[i * 6]);
        small.push_back(pool[48 + i]);
      }
      const auto m = pco::torus_model();
      const auto exhaustive = pco::axiom_check(m, small, true);
      print_axioms("torus exhaustive", exhaustive, out);
      const auto sampled = pco::sampled_axiom_check(m, pool, 48, draws, rng, true);
      print_axioms("torus sampled", sampled, out);
      ok = exhaustive.pco_ok() && sampled.pco_ok();
      const std::size_t inc = exhaustive.totality.value_or(0) + sampled.totality.value_or(0);
      out << "notice: torus order is not total (" << inc << " incomparable triples found)\n";
    } else if (t == "linear") {
      std::vector<long> pool;
      for (long i = 0; i < 64; ++i) pool.push_back(i * 7 - 100);
      ok = axiom_pair(pco::induced_linear_model(), pool, pool.size(), 16, draws, false, rng, out, nullptr);
    } else if (t.rfind("lag:n=", 0) == 0) {
      std::size_t n = 0;
      try {
        n = std::stoul(t.substr(6));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InputError, "bad model name '" + t + "'");
      }
      if (n < 1 || n > 6) throw Error(ErrorCode::InputError, "lag model needs 1 <= n <= 6");
      const auto m = symp::lagrangian_model();
      const auto small = symp::chart_sample(n, 8, 8, rng);
      const auto exhaustive = pco::axiom_check(m, small);
      print_axioms("lag exhaustive", exhaustive, out);
      const auto pool = symp::chart_sample(n, 40, 40, rng);
      const auto sampled = pco::sampled_axiom_check(m, pool, 40, draws, rng);
      print_axioms("lag sampled", sampled, out);
      const auto suite = symp::maslov_suite(n, 200, 20, o.seed);
      out << "maslov: " << suite.summary() << (suite.ok() ? " ok" : " FAILED") << "\n";
      ok = exhaustive.pco_ok() && sampled.pco_ok() && suite.ok();
    } else {
      // A spec file: check the relation on its endpoint images.
      const auto spec = load(o);
      const auto m = symp::lagrangian_model();
      const auto table = schottky::xi_endpoints(spec.data, 2, true);
      std::vector<symp::Lagrangian> pool;
      for (const auto& e : table) pool.push_back(e.point);
      const std::size_t chain = pool.size();
      for (int i = 0; i < 16; ++i) pool.push_back(symp::random_lagrangian(spec.data.n, rng));
      const auto exhaustive = pco::axiom_check(m, std::vector<symp::Lagrangian>(pool.begin(), pool.begin() + 12));
      print_axioms("spec endpoints exhaustive", exhaustive, out);
      const auto sampled = pco::sampled_axiom_check(m, pool, chain, draws, rng);
      print_axioms("spec endpoints sampled", sampled, out);
      const auto suite = symp::maslov_suite(spec.data.n, 200, 20, o.seed);
      out << "maslov: " << suite.summary() << (suite.ok() ? " ok" : " FAILED") << "\n";
      ok = exhaustive.pco_ok() && sampled.pco_ok() && suite.ok();
    }
    out << "axioms: " << (ok ? "ok" : "failed") << "\n";
    return ok ? 0 : 1;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schottky groups in Sp(2n): validation, limit sets and fundamental domains"};
  app.require_subcommand(1);
  Options o;

  auto spec_arg = [&](CLI::App* c) { c->add_option("spec", o.target, "Schottky spec file")->required(); };
  auto common = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "boundary tolerance for halfspace membership");
    c->add_option("--seed", o.seed, "seed for randomized steps");
    c->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* validate = app.add_subcommand("validate", "validate a spec and run the ping-pong check");
  spec_arg(validate);
  validate->add_option("--depth", o.depth, "ping-pong word length (default 5)");
  common(validate);

  auto* limit = app.add_subcommand("limit-set", "limit Lagrangians of all words of a given length");
  spec_arg(limit);
  limit->add_option("--depth", o.depth, "word length (default 6)");
  limit->add_option("--points-out", o.points_out, "also write one extended-precision point per limit Lagrangian");
  common(limit);

  auto* classify = app.add_subcommand("classify", "locate points relative to the fundamental domain");
  spec_arg(classify);
  classify->add_option("points", o.points, "points file")->required();
  common(classify);

  auto* tile = app.add_subcommand("tile", "move points into the fundamental domain");
  spec_arg(tile);
  tile->add_option("points", o.points, "points file")->required();
  tile->add_option("--max-steps", o.max_steps, "descent step limit (default 60)");
  common(tile);

  auto* scene = app.add_subcommand("export-scene", "write a scene file for rendering");
  spec_arg(scene);
  scene->add_option("--depth", o.depth, "legendrian word length (default 4)");
  scene->add_option("--resolution", o.resolution, "quadric sampling resolution (default 32)");
  scene->add_option("--samples", o.samples, "random points for the domain summary (default 2000)");
  common(scene);

  auto* axioms = app.add_subcommand("axioms", "check the partial cyclic order axioms");
  axioms->add_option("model", o.target, "circle | torus | linear | lag:n=K | spec file")->required();
  axioms->add_option("--samples", o.samples, "sampled quadruples (default 500)");
  axioms->add_option("--seed", o.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (*validate) return cmd_validate(o, out, err);
  if (*limit) return cmd_limit_set(o, out, err);
  if (*classify) return cmd_classify(o, out, err);
  if (*tile) return cmd_tile(o, out, err);
  if (*scene) return cmd_export_scene(o, out, err);
  return cmd_axioms(o, out, err);
}

}  // namespace pingpong::cli
