#pragma once

// Extended-precision orbit arithmetic. Descending a point that sits on the
// limit set expands errors by roughly the square of the translation length
// per step, so following such a point for dozens of steps needs far more than
// double precision. The generators are promoted exactly and everything else
// is recomputed with 100 significant digits.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pingpong/numkit.hpp"
#include "pingpong/schottky.hpp"

namespace pingpong::precise {

using Real = boost::multiprecision::cpp_bin_float_100;
using RMatrix = numkit::BasicMatrix<Real>;
using RVector = std::vector<Real>;

RMatrix promote(const numkit::Matrix& m);
RVector promote(const numkit::Vector& v);
numkit::Matrix demote(const RMatrix& m);
numkit::Vector demote(const RVector& v);

/// Scientific notation with every stored digit.
std::string to_string(const Real& x);
/// Throws ParseError on malformed input.
Real parse_real(const std::string& s);

RVector normalized(RVector v);

class PreciseGroup {
 public:
  explicit PreciseGroup(const schottky::SchottkyData& data);

  std::size_t n() const noexcept { return n_; }
  /// h_i or h_i^{-1}.
  const RMatrix& letter(schottky::Letter x) const { return x.sign > 0 ? gens_[x.gen] : invs_[x.gen]; }

  RVector act(const schottky::ReducedWord& w, RVector v) const;
  /// Acts on the columns and re-orthonormalizes after every letter.
  RMatrix act(const schottky::ReducedWord& w, RMatrix basis) const;

  /// Orthonormal basis of the attracting fixed Lagrangian of a letter's map.
  const RMatrix& attractor(schottky::Letter x) const { return attractors_[x.index()]; }

  /// Limit point of the infinite word W x x x ... with x the last letter of W.
  RMatrix limit_basis(const schottky::ReducedWord& w) const;

 private:
  std::size_t n_;
  std::vector<RMatrix> gens_;
  std::vector<RMatrix> invs_;
  std::vector<RMatrix> attractors_;
};

}  // namespace pingpong::precise
