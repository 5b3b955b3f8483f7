// Writes the shipped example specs into the given directory (default: data).

#include <iostream>
#include <string>

#include "pingpong/spec_io.hpp"

using namespace pingpong;

namespace {

void write(const std::string& dir, const std::string& name, const schottky::SchottkyData& d) {
  const auto rep = schottky::validate(d);
  if (!rep.ok()) std::cerr << name << ": does not validate (" << rep.failures.front().check << ")\n";
  io::write_file(dir + "/" + name, io::dump(io::spec_to_json(d)));
  std::cout << "wrote " << dir << "/" << name << "\n";
}

// Once-punctured torus: four arcs meeting at tan(pi theta) = 0, 1, inf, -1.
schottky::SchottkyData punctured_torus() {
  schottky::SchottkyData d;
  d.model.g = 2;
  d.model.flavor = schottky::Flavor::Shared;
  d.model.endpoints = {0.0, 0.25, 0.5, 0.75, 0.25, 0.5, 0.75, 0.0};
  d.n = 1;
  for (double t : d.model.endpoints) d.endpoint_images.push_back(schottky::circle_point(t));
  // On slopes t = y / x these act by t -> (t + 1) / (t + 2) and t -> (2t + 1) / (t + 1).
  numkit::Matrix h1(2, 2), h2(2, 2);
  h1(0, 0) = 2, h1(0, 1) = 1, h1(1, 0) = 1, h1(1, 1) = 1;
  h2(0, 0) = 1, h2(0, 1) = 1, h2(1, 0) = 1, h2(1, 1) = 2;
  d.generators = {symp::SymplecticMap::from_matrix(h1), symp::SymplecticMap::from_matrix(h2)};
  d.circle_generators = {h1, h2};
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    const auto f = schottky::standard_fuchsian_g2(3.0);
    write(dir, "sl2_g2.json", schottky::embed_diagonal_sl2(f, 1));
    write(dir, "sp4_diag_g2.json", schottky::embed_diagonal_sl2(f, 2));
    write(dir, "sp6_diag_g2.json", schottky::embed_diagonal_sl2(f, 3));
    write(dir, "punctured_torus_shared.json", punctured_torus());
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
