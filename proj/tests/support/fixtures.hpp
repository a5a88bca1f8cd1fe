#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/dataset.hpp"
#include "toric/fan.hpp"

namespace fixtures {

inline std::vector<toric::DatasetRecord> load(const std::string& name) {
  return toric::parse_dataset(toric::read_text_file(toric::default_data_dir() / name));
}

inline std::vector<toric::DatasetRecord> table1() { return load("table1_delpezzo.txt"); }
inline std::vector<toric::DatasetRecord> table2() { return load("table2_fano3.txt"); }
inline std::vector<toric::DatasetRecord> smooth_not_nef() { return load("smooth_not_nef.txt"); }

inline const toric::DatasetRecord& by_id(const std::vector<toric::DatasetRecord>& records, const std::string& id) {
  for (const auto& r : records) {
    if (r.id == id) return r;
  }
  throw std::out_of_range("no record " + id);
}

inline std::vector<toric::LatticeVector> p2() { return {{1, 0}, {0, 1}, {-1, -1}}; }
inline std::vector<toric::LatticeVector> p3() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}; }
inline std::vector<toric::LatticeVector> id34() {
  return {{1, 0, 0}, {0, 1, 0}, {-2, 1, 5}, {1, -1, -3}, {-1, 1, 3}};
}
inline std::vector<toric::LatticeVector> surface_example() { return {{1, 0}, {1, 2}, {-1, 2}, {-1, -1}}; }

inline toric::Fan p1() { return toric::Fan({toric::LatticeVector{1}, toric::LatticeVector{-1}}, {toric::Cone{0}, toric::Cone{1}}); }

}  // namespace fixtures

namespace fixtures {

// Hirzebruch surface F_a.
inline toric::Fan hirzebruch(int a) { return toric::planar_fan({{1, 0}, {0, 1}, {-1, a}, {0, -1}}); }

// P(O + O(a)) over P^2.
inline toric::Fan p2_bundle(int a) {
  std::vector<toric::LatticeVector> g{{1, 0, 0}, {0, 1, 0}, {-1, -1, a}, {0, 0, 1}, {0, 0, -1}};
  std::vector<toric::Cone> cones;
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 2}, {0, 2}}) {
    cones.push_back(toric::Cone{i, j, 3});
    cones.push_back(toric::Cone{i, j, 4});
  }
  return toric::Fan(std::move(g), std::move(cones));
}

// P(O + O(a, b)) over P^1 x P^1.
inline toric::Fan p1p1_bundle(int a, int b) {
  std::vector<toric::LatticeVector> g{{1, 0, 0}, {-1, 0, a}, {0, 1, 0}, {0, -1, b}, {0, 0, 1}, {0, 0, -1}};
  std::vector<toric::Cone> cones;
  for (std::size_t i : {0, 1}) {
    for (std::size_t j : {2, 3}) {
      cones.push_back(toric::Cone{i, j, 4});
      cones.push_back(toric::Cone{i, j, 5});
    }
  }
  return toric::Fan(std::move(g), std::move(cones));
}

struct NamedFan {
  std::string name;
  toric::Fan fan;
};

// Complete simplicial 3-folds that are not Fano.
inline std::vector<NamedFan> non_fano_3folds() {
  return {{"F2 x P1", toric::product_fan(hirzebruch(2), p1())},
          {"F3 x P1", toric::product_fan(hirzebruch(3), p1())},
          {"P(O+O(3)) over P2", p2_bundle(3)},
          {"P(O+O(4)) over P2", p2_bundle(4)},
          {"P(O+O(2,1)) over P1xP1", p1p1_bundle(2, 1)}};
}

// Every bundled variety as a fan.
inline std::vector<NamedFan> bundled_fans() {
  std::vector<NamedFan> out;
  for (const auto& r : table1()) out.push_back({"table1/" + r.id, toric::face_fan(r.generators)});
  for (const auto& r : table2()) out.push_back({"table2/" + r.id, toric::face_fan(r.generators)});
  for (const auto& r : smooth_not_nef()) out.push_back({r.id, toric::face_fan(r.generators)});
  return out;
}

}  // namespace fixtures
