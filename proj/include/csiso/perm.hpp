#ifndef CSISO_PERM_HPP
#define CSISO_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace csiso
{

using Point = std::uint32_t;

// Permutation of {0, ..., degree-1} stored as an image array. Permutations
// act on the right: x^(p*q) = (x^p)^q, so p * q applies p first.
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  // Builds a permutation from disjoint cycles, e.g. {{0, 1, 2, 3}}.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }
  std::vector<Point> const &image_vector() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // Points moved by this permutation, ascending.
  std::vector<Point> support() const;

  friend Perm operator*(Perm const &lhs, Perm const &rhs);
  Perm &operator*=(Perm const &rhs);

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &lhs, Perm const &rhs)
  { return lhs.images_ <=> rhs.images_; }

private:
  std::vector<Point> images_;
};

// True iff `images` is a bijection of 0..size-1.
bool is_bijection(std::span<Point const> images);

std::ostream &operator<<(std::ostream &os, Perm const &p);

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace csiso

#endif // CSISO_PERM_HPP
