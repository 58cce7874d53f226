#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tropfan/minkowski.hpp"

namespace tropfan {

using ElementSet = std::uint32_t;  // bit i = element i

std::vector<std::size_t> elements_of(ElementSet s);

class Matroid {
 public:
  // Validates the basis exchange axiom and rejects loops.
  static Matroid from_bases(std::size_t n, const std::vector<std::vector<std::size_t>>& bases);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }

  std::size_t rank_of(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  // All flats, ordered by rank and then by their sorted element lists.
  std::vector<ElementSet> flats() const;

 private:
  Matroid(std::size_t n, std::size_t r, std::vector<ElementSet> bases) : n_(n), rank_(r), bases_(std::move(bases)) {}
  std::size_t n_;
  std::size_t rank_;
  std::vector<ElementSet> bases_;
};

Matroid uniform_matroid(std::size_t r, std::size_t n);
// Cycle matroid of a graph: bases are the spanning forests.
Matroid graphic_matroid(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
Matroid complete_graph_matroid(std::size_t vertices);
Matroid fano_matroid();

struct BergmanFan {
  TropicalFan tropical;
  std::vector<ElementSet> ray_flats;  // flat of each ray
};

// Rays are proper nonempty flats marked by their indicator vectors in
// R^E / R(1,...,1), written in coordinates x_i - x_0 for i >= 1. Maximal cones
// are maximal chains of such flats; every weight is 1.
BergmanFan bergman_fan(const Matroid& m);

}  // namespace tropfan
