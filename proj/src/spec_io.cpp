#include "pingpong/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pingpong::io {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

const Json& member(const Json& j, const std::string& key) {
  if (!j.contains(key)) field_error(key, "missing field");
  return j.at(key);
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) field_error(path, "non-finite number");
  return x;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<long>();
}

numkit::Matrix matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array");
  numkit::Matrix m(rows, cols);
  const bool nested = !j.empty() && j.front().is_array();
  if (nested) {
    if (j.size() != rows) field_error(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string rp = path + "[" + std::to_string(i) + "]";
      if (!j[i].is_array() || j[i].size() != cols) field_error(rp, "expected a row of " + std::to_string(cols) + " numbers");
      for (std::size_t k = 0; k < cols; ++k) m(i, k) = number(j[i][k], rp + "[" + std::to_string(k) + "]");
    }
  } else {
    if (j.size() != rows * cols)
      field_error(path, "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        m(i, k) = number(j[i * cols + k], path + "[" + std::to_string(i * cols + k) + "]");
  }
  return m;
}

const Json& array_of(const Json& j, const std::string& key, std::size_t count) {
  const Json& a = member(j, key);
  if (!a.is_array()) field_error(key, "expected an array");
  if (a.size() != count) field_error(key, "expected " + std::to_string(count) + " entries, got " + std::to_string(a.size()));
  return a;
}

}  // namespace

Spec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "spec must be a JSON object");
  const Json& ver = member(j, "version");
  if (!ver.is_string() || ver.get<std::string>() != kSpecVersion)
    field_error("version", "unknown version tag " + ver.dump() + " (expected \"" + kSpecVersion + "\")");

  Spec spec;
  auto& d = spec.data;
  const long n = integer(member(j, "n"), "n");
  const long g = integer(member(j, "g"), "g");
  if (n < 1 || n > 8) field_error("n", "must be in 1..8");
  if (g < 1 || g > 26) field_error("g", "must be in 1..26");
  d.n = static_cast<std::size_t>(n);
  d.model.g = static_cast<int>(g);

  const Json& flavor = member(j, "flavor");
  if (flavor == "disjoint") d.model.flavor = schottky::Flavor::Disjoint;
  else if (flavor == "shared") d.model.flavor = schottky::Flavor::Shared;
  else field_error("flavor", "expected \"disjoint\" or \"shared\"");

  const std::size_t ne = 4 * static_cast<std::size_t>(g);
  const Json& angles = array_of(j, "endpoints_circle", ne);
  for (std::size_t i = 0; i < ne; ++i) {
    const std::string p = "endpoints_circle[" + std::to_string(i) + "]";
    const double a = number(angles[i], p);
    if (a < 0.0 || a >= 1.0) field_error(p, "angle must lie in [0, 1)");
    d.model.endpoints.push_back(a);
  }

  const Json& lags = array_of(j, "endpoints_lagrangian", ne);
  for (std::size_t i = 0; i < ne; ++i) {
    const std::string p = "endpoints_lagrangian[" + std::to_string(i) + "]";
    const auto m = matrix(lags[i], 2 * d.n, d.n, p);
    try {
      d.endpoint_images.push_back(symp::Lagrangian::from_matrix(m));
    } catch (const Error& e) {
      throw Error(e.code(), p + ": " + e.message());
    }
  }

  const Json& gens = array_of(j, "generators", static_cast<std::size_t>(g));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "generators[" + std::to_string(i) + "]";
    auto m = matrix(gens[i], 2 * d.n, 2 * d.n, p);
    try {
      d.generators.push_back(symp::SymplecticMap::unchecked(m));
    } catch (const Error& e) {
      throw Error(e.code(), p + ": " + e.message());
    }
  }

  if (j.contains("circle_generators")) {
    const Json& cg = array_of(j, "circle_generators", static_cast<std::size_t>(g));
    for (std::size_t i = 0; i < cg.size(); ++i)
      d.circle_generators.push_back(matrix(cg[i], 2, 2, "circle_generators[" + std::to_string(i) + "]"));
  }

  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) field_error("tolerances", "expected an object");
    for (const auto& [key, val] : t.items()) {
      const double x = number(val, "tolerances." + key);
      if (x <= 0) field_error("tolerances." + key, "must be positive");
      if (key == "lagrangian_gap") spec.tol.lagrangian_gap = x;
      else if (key == "boundary") spec.tol.boundary = x;
      else field_error("tolerances." + key, "unknown tolerance");
    }
  }
  return spec;
}

Spec load_spec(const std::string& path) {
  try {
    return parse_spec(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

Json matrix_to_json(const numkit::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const numkit::Vector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json spec_to_json(const schottky::SchottkyData& data, const Tolerances& tol) {
  Json j;
  j["version"] = kSpecVersion;
  j["n"] = data.n;
  j["g"] = data.g();
  j["flavor"] = data.model.flavor == schottky::Flavor::Disjoint ? "disjoint" : "shared";
  j["endpoints_circle"] = vector_to_json(data.model.endpoints);
  Json lags = Json::array();
  for (const auto& l : data.endpoint_images) lags.push_back(matrix_to_json(l.basis()));
  j["endpoints_lagrangian"] = std::move(lags);
  Json gens = Json::array();
  for (const auto& h : data.generators) gens.push_back(matrix_to_json(h.matrix()));
  j["generators"] = std::move(gens);
  if (!data.circle_generators.empty()) {
    Json cg = Json::array();
    for (const auto& m : data.circle_generators) cg.push_back(matrix_to_json(m));
    j["circle_generators"] = std::move(cg);
  }
  j["tolerances"] = {{"lagrangian_gap", tol.lagrangian_gap}, {"boundary", tol.boundary}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InputError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::InputError, "write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InputError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<precise::RVector> read_points(std::istream& in, std::size_t dim) {
  std::vector<precise::RVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    precise::RVector v;
    std::string tok;
    while (ls >> tok) {
      try {
        v.push_back(precise::parse_real(tok));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.message());
      }
    }
    if (v.empty()) continue;
    if (v.size() != dim)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                                             " coordinates, got " + std::to_string(v.size()));
    bool zero = true;
    for (const auto& x : v) zero = zero && x == 0;
    if (zero) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": zero vector");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<precise::RVector> load_points(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot read " + path);
  try {
    return read_points(in, dim);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

std::string format_point(const precise::RVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += precise::to_string(v[i]);
  }
  return s;
}

}  // namespace pingpong::io
