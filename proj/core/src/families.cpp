#include "ihara/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw InputError("family '" + spec.kind + "' expects " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(spec.params.size()));
}

std::string join_params(const FamilySpec& spec) {
  std::string s;
  for (Vertex p : spec.params) s += "_" + std::to_string(p);
  return s;
}

Graph make_cycle(const FamilySpec& spec) {
  expect_params(spec, 1);
  Vertex n = spec.params[0];
  if (n < 3) throw InputError("cycle needs n >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph("cycle" + join_params(spec), n, std::move(edges));
}

Graph make_complete(const FamilySpec& spec) {
  expect_params(spec, 1);
  Vertex n = spec.params[0];
  if (n < 2) throw InputError("complete needs n >= 2");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph("complete" + join_params(spec), n, std::move(edges));
}

Graph make_complete_bipartite(const FamilySpec& spec) {
  expect_params(spec, 2);
  Vertex a = spec.params[0], b = spec.params[1];
  if (a < 1 || b < 1) throw InputError("complete_bipartite needs both parts >= 1");
  EdgeList edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_graph("complete_bipartite" + join_params(spec), a + b, std::move(edges));
}

Graph make_petersen(const FamilySpec& spec) {
  expect_params(spec, 0);
  EdgeList edges;
  for (Vertex i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (Vertex i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (Vertex i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return build_graph("petersen", 10, std::move(edges));
}

Graph make_bowtie(const FamilySpec& spec) {
  expect_params(spec, 0);
  EdgeList edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
  return build_graph("bowtie", 5, std::move(edges));
}

Graph make_tree_ball(const FamilySpec& spec) {
  expect_params(spec, 2);
  Vertex d = spec.params[0], r = spec.params[1];
  if (d < 2) throw InputError("tree_ball needs degree >= 2");
  if (r < 1) throw InputError("tree_ball needs radius >= 1");
  EdgeList edges;
  Vertex next = 1;
  std::vector<Vertex> layer = {0};
  for (Vertex depth = 0; depth < r; ++depth) {
    std::vector<Vertex> next_layer;
    for (Vertex parent : layer) {
      Vertex children = (depth == 0) ? d : d - 1;
      for (Vertex c = 0; c < children; ++c) {
        edges.emplace_back(parent, next);
        next_layer.push_back(next);
        ++next;
      }
    }
    layer = std::move(next_layer);
  }
  return build_graph("tree_ball" + join_params(spec), next, std::move(edges));
}

Graph make_grid_ball(const FamilySpec& spec) {
  expect_params(spec, 2);
  Vertex d = spec.params[0], r = spec.params[1];
  if (d < 1) throw InputError("grid_ball needs dimension >= 1");
  if (r < 1) throw InputError("grid_ball needs radius >= 1");

  // All lattice points with l1 norm <= r, labeled by (norm, lexicographic).
  std::vector<std::vector<Vertex>> points;
  std::vector<Vertex> coord(static_cast<std::size_t>(d), 0);
  auto enumerate = [&](auto&& self, std::size_t dim, Vertex budget) -> void {
    if (dim == static_cast<std::size_t>(d)) {
      points.push_back(coord);
      return;
    }
    for (Vertex x = -budget; x <= budget; ++x) {
      coord[dim] = x;
      self(self, dim + 1, budget - std::abs(static_cast<long long>(x)));
    }
  };
  enumerate(enumerate, 0, r);

  auto norm1 = [](const std::vector<Vertex>& p) {
    Vertex s = 0;
    for (Vertex x : p) s += std::abs(static_cast<long long>(x));
    return s;
  };
  std::sort(points.begin(), points.end(),
            [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
              Vertex na = norm1(a), nb = norm1(b);
              if (na != nb) return na < nb;
              return a < b;
            });

  std::map<std::vector<Vertex>, Vertex> label;
  for (std::size_t i = 0; i < points.size(); ++i)
    label[points[i]] = static_cast<Vertex>(i);

  EdgeList edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) {
      std::vector<Vertex> nbr = points[i];
      nbr[k] += 1;
      auto it = label.find(nbr);
      if (it != label.end()) edges.emplace_back(static_cast<Vertex>(i), it->second);
    }
  }
  return build_graph("grid_ball" + join_params(spec),
                     static_cast<Vertex>(points.size()), std::move(edges));
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
  if (spec.kind == "cycle") return make_cycle(spec);
  if (spec.kind == "complete") return make_complete(spec);
  if (spec.kind == "complete_bipartite") return make_complete_bipartite(spec);
  if (spec.kind == "petersen") return make_petersen(spec);
  if (spec.kind == "bowtie") return make_bowtie(spec);
  if (spec.kind == "tree_ball") return make_tree_ball(spec);
  if (spec.kind == "grid_ball") return make_grid_ball(spec);
  throw InputError("unknown family kind '" + spec.kind + "'");
}

std::vector<std::string> family_kinds() {
  return {"cycle",  "complete",  "complete_bipartite", "petersen",
          "bowtie", "tree_ball", "grid_ball"};
}

}  // namespace ihara
