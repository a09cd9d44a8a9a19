#include "tom/permutation.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "tom/errors.hpp"

namespace tom {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size())
      throw InputError("permutation image " + std::to_string(x) + " out of range for degree " +
                       std::to_string(images_.size()));
    if (seen[x]) throw InputError("permutation image " + std::to_string(x) + " repeated");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                     " and " + std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = p(q(static_cast<Point>(x)));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[p(static_cast<Point>(x))] = static_cast<Point>(x);
  return Permutation(std::move(out));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

std::vector<Permutation> close_generators(std::span<const Permutation> gens, std::size_t bound) {
  if (gens.empty()) throw InputError("generator list is empty");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generators have mixed degrees " + std::to_string(degree) + " and " +
                       std::to_string(g.degree()));

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{elements[0], 0}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : gens) {
      Permutation y = compose(elements[next], g);
      if (index.contains(y)) continue;
      if (elements.size() >= bound)
        throw ResourceError("group closure exceeds " + std::to_string(bound) + " elements");
      index.emplace(y, elements.size());
      elements.push_back(std::move(y));
    }
  }
  return elements;
}

}  // namespace tom
