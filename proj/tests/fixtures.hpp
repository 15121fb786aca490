#ifndef PGV_TESTS_FIXTURES_HPP
#define PGV_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "pgv/filters.hpp"
#include "pgv/groupoid.hpp"
#include "pgv/morphisms.hpp"
#include "pgv/pgraph.hpp"

namespace pgv::fixtures {

inline DegreeMonoid grid(int k) { return DegreeMonoid({MonoidKind::Grid, k, "", {}}); }

inline DegreeMonoid free_ab() { return DegreeMonoid({MonoidKind::Free, 0, "ab", {}}); }

// The single-edge graph v --e--> w, as a closed finite category.
inline PGraph e1() {
  PGraphBuilder b(grid(1));
  b.add_vertex("v");
  b.add_vertex("w");
  b.add_morphism("e", "v", "w", grid(1).make_grid({1}));
  return b.finalize();
}

// E1 with the identity composition v*e redirected to v.
inline PGraph e1_corrupted() {
  PGraphBuilder b(grid(1));
  b.add_vertex("v");
  b.add_vertex("w");
  b.add_morphism("e", "v", "w", grid(1).make_grid({1}));
  b.set_composition("v", "e", "v");
  return b.finalize();
}

// One vertex, one blue loop (color 1) and one red loop (color 2) with the
// commuting square b.r = r.b.
inline PGraph e3(const std::vector<int>& window) {
  SkeletonPresentation sk;
  sk.rank = 2;
  sk.vertices = {"u"};
  sk.edges = {{"b", 1, "u", "u"}, {"r", 2, "u", "u"}};
  sk.squares = {{{"b", "r"}, {"r", "b"}}};
  return from_skeleton(sk, grid(2).make_grid(window));
}

// Single loop over one vertex; windowed line N^{<=window}.
inline PGraph nloop(int window) {
  SkeletonPresentation sk;
  sk.rank = 1;
  sk.vertices = {"u"};
  sk.edges = {{"a", 1, "u", "u"}};
  return from_skeleton(sk, grid(1).make_grid({window}));
}

// Two 1-color loops at one vertex.
inline PGraph bouquet2(int window) {
  SkeletonPresentation sk;
  sk.rank = 1;
  sk.vertices = {"u"};
  sk.edges = {{"a1", 1, "u", "u"}, {"a2", 1, "u", "u"}};
  return from_skeleton(sk, grid(1).make_grid({window}));
}

// One vertex, loops a1,a2 of color 1 and c of color 2 with the swap squares
// a1.c = c.a2 and a2.c = c.a1.
inline PGraph two_loop_swap(const std::vector<int>& window) {
  SkeletonPresentation sk;
  sk.rank = 2;
  sk.vertices = {"u"};
  sk.edges = {{"a1", 1, "u", "u"}, {"a2", 1, "u", "u"}, {"c", 2, "u", "u"}};
  sk.squares = {{{"a1", "c"}, {"c", "a2"}}, {{"a2", "c"}, {"c", "a1"}}};
  return from_skeleton(sk, grid(2).make_grid(window));
}

// Skeleton with two squares assigned to the bicolored pair b.r; materialized
// permissively so validate_ufp can exhibit the failure.
inline PGraph double_square_broken(const std::vector<int>& window) {
  SkeletonPresentation sk;
  sk.rank = 2;
  sk.vertices = {"u"};
  sk.edges = {{"b", 1, "u", "u"}, {"r", 2, "u", "u"}, {"r2", 2, "u", "u"}};
  sk.squares = {{{"b", "r"}, {"r", "b"}}, {{"b", "r"}, {"r2", "b"}}};
  return from_skeleton(sk, grid(2).make_grid(window), SkeletonMode::Permissive);
}

// Seeded random valid 2-graph: one vertex, two loops per color, squares from
// a random bijection between the bicolored path sets. Any complete bijective
// square collection yields a 2-graph.
inline SkeletonPresentation random_skeleton_presentation(unsigned seed) {
  SkeletonPresentation sk;
  sk.rank = 2;
  sk.vertices = {"u"};
  sk.edges = {{"a0", 1, "u", "u"},
              {"a1", 1, "u", "u"},
              {"c0", 2, "u", "u"},
              {"c1", 2, "u", "u"}};
  std::vector<std::pair<std::string, std::string>> ac, ca;
  for (const auto& a : {"a0", "a1"})
    for (const auto& c : {"c0", "c1"}) {
      ac.push_back({a, c});
      ca.push_back({c, a});
    }
  std::mt19937 rng(seed);
  std::shuffle(ca.begin(), ca.end(), rng);
  for (std::size_t i = 0; i < ac.size(); ++i)
    sk.squares.push_back({{ac[i].first, ac[i].second}, {ca[i].first, ca[i].second}});
  return sk;
}

inline PGraph random_2graph(unsigned seed, const std::vector<int>& window) {
  return from_skeleton(random_skeleton_presentation(seed), grid(2).make_grid(window));
}

}  // namespace pgv::fixtures

#endif
