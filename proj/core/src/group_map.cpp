#include "hforge/group_map.hpp"

#include <algorithm>
#include <functional>

#include "hforge/error.hpp"

namespace hforge {

ElementSet GroupMap::image() const { return make_set(images); }

bool GroupMap::is_injective() const { return image().size() == images.size(); }

bool GroupMap::is_bijective() const { return is_injective() && images.size() == target.order(); }

void check_homomorphism(const GroupMap& map) {
  const std::size_t n = map.source.order();
  require(map.images.size() == n, Errc::verification, "map does not cover the source group");
  for (Element a = 0; a < n; ++a) {
    require(map.images[a] < map.target.order(), Errc::verification, "map image out of range");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map.images[map.source.mul(a, b)] != map.target.mul(map.images[a], map.images[b])) {
        fail(Errc::verification, "map is not multiplicative on (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
      }
    }
  }
}

std::optional<GroupMap> extend_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                                const std::vector<Element>& generator_images) {
  const auto& gens = source.generators();
  require(gens.size() == generator_images.size(), Errc::invalid_argument,
          "generator image count does not match source generators");
  constexpr Element unset = ~Element{0};
  std::vector<Element> img(source.order(), unset);
  img[0] = 0;
  std::vector<Element> frontier{0};
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element h : frontier) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Element p = source.mul(h, gens[i].element);
        Element q = target.mul(img[h], generator_images[i]);
        if (img[p] == unset) {
          img[p] = q;
          next.push_back(p);
          ++reached;
        } else if (img[p] != q) {
          return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  require(reached == source.order(), Errc::invalid_argument, "source generators do not generate the group");
  return GroupMap{source, target, std::move(img)};
}

GroupMap identity_map(const FiniteGroup& group) {
  std::vector<Element> img(group.order());
  for (Element g = 0; g < group.order(); ++g) img[g] = g;
  return GroupMap{group, group, std::move(img)};
}

GroupMap compose(const GroupMap& second, const GroupMap& first) {
  require(first.target == second.source, Errc::group_mismatch, "maps are not composable");
  std::vector<Element> img(first.images.size());
  for (std::size_t g = 0; g < img.size(); ++g) img[g] = second.images[first.images[g]];
  return GroupMap{first.source, second.target, std::move(img)};
}

GroupMap inverse(const GroupMap& map) {
  require(map.is_bijective(), Errc::invalid_argument, "only bijective maps can be inverted");
  std::vector<Element> img(map.images.size());
  for (Element g = 0; g < map.images.size(); ++g) img[map.images[g]] = g;
  return GroupMap{map.target, map.source, std::move(img)};
}

Subgroup subgroup_as_group(const FiniteGroup& parent, const ElementSet& elements) {
  require(!elements.empty() && elements.front() == 0, Errc::not_closed, "subgroup must contain the identity");
  const std::size_t n = elements.size();
  std::vector<Element> local(parent.order(), ~Element{0});
  for (Element i = 0; i < n; ++i) local[elements[i]] = i;
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      Element p = local[parent.mul(elements[i], elements[j])];
      require(p != ~Element{0}, Errc::not_closed, "element set is not closed under multiplication");
      table[i * n + j] = p;
    }
  }
  std::vector<std::string> labels;
  for (Element g : elements) labels.push_back(parent.label(g));
  FiniteGroup sub(n, std::move(table), std::move(labels));
  return Subgroup{sub, GroupMap{sub, parent, elements}};
}

std::optional<GroupMap> find_isomorphism_by_generators(const FiniteGroup& source, const FiniteGroup& target) {
  if (source.order() != target.order()) return std::nullopt;
  const auto& gens = source.generators();
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element t = 0; t < target.order(); ++t) {
      if (target.element_order(t) == source.element_order(gens[i].element)) candidates[i].push_back(t);
    }
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<Element> choice(gens.size());
  std::optional<GroupMap> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (found) return;
    if (i == gens.size()) {
      auto map = extend_generator_images(source, target, choice);
      if (map && map->is_bijective()) found = std::move(map);
      return;
    }
    for (Element t : candidates[i]) {
      // pairwise relations between generators already fixed must agree on commutation
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        bool commute_src = source.mul(gens[i].element, gens[j].element) == source.mul(gens[j].element, gens[i].element);
        bool commute_tgt = target.mul(t, choice[j]) == target.mul(choice[j], t);
        ok = commute_src == commute_tgt;
      }
      if (!ok) continue;
      choice[i] = t;
      dfs(i + 1);
      if (found) return;
    }
  };
  dfs(0);
  return found;
}

}  // namespace hforge
