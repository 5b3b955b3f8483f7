#pragma once

// JSON spec and scene files, and plain-text point files.
//
// Spec ("schottky-spec/1"): n, g, flavor ("disjoint" | "shared"),
// endpoints_circle (4g angles in [0, 1)), endpoints_lagrangian (4g matrices
// 2n x n), generators (g matrices 2n x 2n), optional circle_generators (g
// matrices 2 x 2) and optional tolerances {lagrangian_gap, boundary}.
// Matrices are row-major, either nested [[row], ...] or flat.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pingpong/domains.hpp"
#include "pingpong/precise.hpp"
#include "pingpong/schottky.hpp"

namespace pingpong::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSpecVersion = "schottky-spec/1";
inline constexpr const char* kSceneVersion = "schottky-scene/1";

struct Tolerances {
  double lagrangian_gap = symp::kLagEqualGap;
  double boundary = domains::kBoundaryTol;
};

struct Spec {
  schottky::SchottkyData data;
  Tolerances tol;
};

/// Throws ParseError naming the line/column or the offending field.
Spec parse_spec(const std::string& text);
Spec load_spec(const std::string& path);

Json spec_to_json(const schottky::SchottkyData& data, const Tolerances& tol = {});
Json matrix_to_json(const numkit::Matrix& m);
Json vector_to_json(const numkit::Vector& v);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// One point per line, `dim` whitespace-separated decimals read in extended
/// precision. '#' starts a comment; blank lines are skipped.
std::vector<precise::RVector> read_points(std::istream& in, std::size_t dim);
std::vector<precise::RVector> load_points(const std::string& path, std::size_t dim);
std::string format_point(const precise::RVector& v);

}  // namespace pingpong::io
