#include "csiso/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace csiso
{

Perm::Perm(std::size_t degree)
: images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images)
: images_(std::move(images))
{
  if (!is_bijection(images_))
    throw std::invalid_argument("image array is not a bijection");
}

Perm::Perm(std::initializer_list<Point> images)
: Perm(std::vector<Point>(images))
{}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw std::invalid_argument("cycle point out of range");
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  Perm res(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    res.images_[images_[i]] = static_cast<Point>(i);
  return res;
}

std::vector<Point> Perm::support() const
{
  std::vector<Point> res;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      res.push_back(static_cast<Point>(i));
  return res;
}

Perm operator*(Perm const &lhs, Perm const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm res;
  res.images_.resize(lhs.degree());
  for (std::size_t i = 0; i < lhs.degree(); ++i)
    res.images_[i] = rhs.images_[lhs.images_[i]];
  return res;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  *this = *this * rhs;
  return *this;
}

bool is_bijection(std::span<Point const> images)
{
  std::vector<char> seen(images.size(), 0);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

std::ostream &operator<<(std::ostream &os, Perm const &p)
{
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i)
    os << (i ? "," : "") << p[static_cast<Point>(i)];
  return os << ']';
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images())
    h = (h ^ x) * 1099511628211ull;
  return h;
}

} // namespace csiso
