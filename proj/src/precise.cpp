#include "pingpong/precise.hpp"

#include <ios>
#include <limits>

namespace pingpong::precise {

RMatrix promote(const numkit::Matrix& m) { return RMatrix::from(m); }

RVector promote(const numkit::Vector& v) { return RVector(v.begin(), v.end()); }

numkit::Matrix demote(const RMatrix& m) {
  numkit::Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

numkit::Vector demote(const RVector& v) {
  numkit::Vector out;
  for (const auto& x : v) out.push_back(static_cast<double>(x));
  return out;
}

std::string to_string(const Real& x) {
  return x.str(std::numeric_limits<Real>::digits10 + 2, std::ios_base::scientific);
}

Real parse_real(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  Real r;
  try {
    r = Real(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
  }
  if (!boost::multiprecision::isfinite(r)) throw Error(ErrorCode::ParseError, "non-finite number: '" + s + "'");
  return r;
}

RVector normalized(RVector v) {
  const Real nv = numkit::norm(v);
  if (nv == 0) throw Error(ErrorCode::InputError, "zero vector");
  for (auto& x : v) x /= nv;
  return v;
}

namespace {

Real projector_gap(const RMatrix& a, const RMatrix& b) {
  const RMatrix d = a * a.transpose() - b * b.transpose();
  return numkit::max_abs(d);
}

}  // namespace

PreciseGroup::PreciseGroup(const schottky::SchottkyData& data) : n_(data.n) {
  for (const auto& h : data.generators) {
    gens_.push_back(promote(h.matrix()));
    invs_.push_back(numkit::inverse(gens_.back()));
  }
  const Real converged("1e-96");
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * data.g()); ++i) {
    const auto x = schottky::Letter::from_index(i);
    RMatrix cur = promote(schottky::attracting_lagrangian(data, x).basis());
    for (int it = 0; it < 4000; ++it) {
      RMatrix next = numkit::orthonormalize_columns(RMatrix(letter(x) * cur));
      const Real step = projector_gap(next, cur);
      cur = std::move(next);
      if (step < converged) break;
    }
    attractors_.push_back(std::move(cur));
  }
}

RVector PreciseGroup::act(const schottky::ReducedWord& w, RVector v) const {
  for (std::size_t i = w.size(); i-- > 0;) v = normalized(letter(w[i]) * v);
  return v;
}

RMatrix PreciseGroup::act(const schottky::ReducedWord& w, RMatrix basis) const {
  for (std::size_t i = w.size(); i-- > 0;) basis = numkit::orthonormalize_columns(RMatrix(letter(w[i]) * basis));
  return basis;
}

RMatrix PreciseGroup::limit_basis(const schottky::ReducedWord& w) const {
  if (w.empty()) throw Error(ErrorCode::NeedLongerPrefix, "limit point needs a nonempty word");
  return act(w, attractor(w.back()));
}

}  // namespace pingpong::precise
