#include "tropfan/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "tropfan/errors.hpp"

namespace tropfan {

std::vector<std::size_t> elements_of(ElementSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (s & (ElementSet{1} << i)) out.push_back(i);
  return out;
}

Matroid Matroid::from_bases(std::size_t n, const std::vector<std::vector<std::size_t>>& bases) {
  if (n == 0 || n > 32) throw InputError("matroid ground set must have 1 to 32 elements");
  if (bases.empty()) throw InputError("matroid has no bases");
  std::set<ElementSet> set;
  std::size_t r = bases.front().size();
  for (const auto& b : bases) {
    if (b.size() != r) throw InputError("bases have different sizes");
    ElementSet mask = 0;
    for (auto e : b) {
      if (e >= n) throw InputError("basis element " + std::to_string(e) + " outside the ground set");
      if (mask & (ElementSet{1} << e)) throw InputError("repeated element in a basis");
      mask |= ElementSet{1} << e;
    }
    set.insert(mask);
  }
  std::vector<ElementSet> list(set.begin(), set.end());
  for (auto b1 : list)
    for (auto b2 : list)
      for (auto x : elements_of(b1 & ~b2)) {
        bool ok = false;
        for (auto y : elements_of(b2 & ~b1))
          if (set.count((b1 & ~(ElementSet{1} << x)) | (ElementSet{1} << y))) {
            ok = true;
            break;
          }
        if (!ok) throw InputError("basis exchange axiom fails");
      }
  ElementSet covered = 0;
  for (auto b : list) covered |= b;
  for (std::size_t e = 0; e < n; ++e)
    if (!(covered & (ElementSet{1} << e))) throw InputError("element " + std::to_string(e) + " is a loop");
  return Matroid(n, r, std::move(list));
}

std::size_t Matroid::rank_of(ElementSet s) const {
  std::size_t best = 0;
  for (auto b : bases_) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s & b)));
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  const std::size_t r = rank_of(s);
  ElementSet out = s;
  for (std::size_t e = 0; e < n_; ++e) {
    ElementSet bit = ElementSet{1} << e;
    if (!(s & bit) && rank_of(s | bit) == r) out |= bit;
  }
  return out;
}

std::vector<ElementSet> Matroid::flats() const {
  std::set<ElementSet> seen{closure(0)};
  std::vector<ElementSet> frontier{closure(0)};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (auto f : frontier)
      for (std::size_t e = 0; e < n_; ++e) {
        ElementSet bit = ElementSet{1} << e;
        if (f & bit) continue;
        ElementSet g = closure(f | bit);
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](ElementSet a, ElementSet b) {
    std::size_t ra = rank_of(a), rb = rank_of(b);
    if (ra != rb) return ra < rb;
    return elements_of(a) < elements_of(b);
  });
  return out;
}

Matroid uniform_matroid(std::size_t r, std::size_t n) {
  if (r > n) throw InputError("uniform matroid needs r <= n");
  std::vector<std::vector<std::size_t>> bases;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == r) {
      bases.push_back(pick);
      return;
    }
    for (std::size_t e = start; e < n; ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return Matroid::from_bases(n, bases);
}

Matroid graphic_matroid(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t m = edges.size();
  if (m == 0 || m > 32) throw InputError("graph must have 1 to 32 edges");
  auto forest_size = [&](ElementSet s) -> std::optional<std::size_t> {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t count = 0;
    for (auto e : elements_of(s)) {
      auto [u, v] = edges[e];
      if (u >= vertices || v >= vertices) throw InputError("edge endpoint outside the vertex set");
      std::size_t a = find(u), b = find(v);
      if (a == b) return std::nullopt;
      parent[a] = b;
      ++count;
    }
    return count;
  };
  std::size_t best = 0;
  std::vector<ElementSet> forests;
  for (ElementSet s = 0; s < (ElementSet{1} << m); ++s) {
    auto k = forest_size(s);
    if (!k) continue;
    if (*k > best) {
      best = *k;
      forests.clear();
    }
    if (*k == best) forests.push_back(s);
  }
  std::vector<std::vector<std::size_t>> bases;
  for (auto s : forests) bases.push_back(elements_of(s));
  return Matroid::from_bases(m, bases);
}

Matroid complete_graph_matroid(std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  return graphic_matroid(vertices, edges);
}

Matroid fano_matroid() {
  const std::vector<ElementSet> lines = {0b0000111, 0b0011001, 0b1100001, 0b0101010,
                                         0b1010010, 0b1001100, 0b0110100};
  std::vector<std::vector<std::size_t>> bases;
  for (ElementSet s = 0; s < (ElementSet{1} << 7); ++s) {
    if (std::popcount(s) != 3) continue;
    if (std::find(lines.begin(), lines.end(), s) != lines.end()) continue;
    bases.push_back(elements_of(s));
  }
  return Matroid::from_bases(7, bases);
}

BergmanFan bergman_fan(const Matroid& m) {
  const std::size_t n = m.size();
  const ElementSet ground = n == 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
  std::vector<ElementSet> proper;
  for (auto f : m.flats())
    if (f != 0 && f != ground) proper.push_back(f);

  std::vector<RatVector> rays;
  for (auto f : proper) {
    RatVector u(n - 1);
    const int base = (f & 1) ? 1 : 0;
    for (std::size_t i = 1; i < n; ++i) u[i - 1] = static_cast<long>((f >> i) & 1) - base;
    rays.push_back(std::move(u));
  }
  std::vector<std::size_t> flat_rank(proper.size());
  for (std::size_t i = 0; i < proper.size(); ++i) flat_rank[i] = m.rank_of(proper[i]);

  std::vector<Cone> cones;
  Cone chain;
  std::function<void(std::size_t)> extend = [&](std::size_t want) {
    if (want == m.rank()) {
      cones.push_back(chain);
      return;
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (flat_rank[i] != want) continue;
      if (!chain.empty() && (proper[chain.back()] & ~proper[i]) != 0) continue;
      chain.push_back(i);
      extend(want + 1);
      chain.pop_back();
    }
  };
  extend(1);

  MarkedFan f(n - 1, std::move(rays), std::move(cones));
  MinkowskiWeight w = constant_weight(f, f.dim(), Rational(1));
  return BergmanFan{make_tropical_fan(std::move(f), std::move(w)), std::move(proper)};
}

}  // namespace tropfan
