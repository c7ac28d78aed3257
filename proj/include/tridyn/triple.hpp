#pragma once

// Angle triples for triangles, in two flavours: interior angles summing to
// pi and exterior angles summing to 2*pi.  Triples are identified up to
// cyclic rotation, since relabelling a triangle's vertices cyclically gives
// the same triangle; CanonicalTriple picks a fixed representative of that
// rotation class.

#include <array>
#include <cstddef>

#include "tridyn/error.hpp"

namespace tridyn {

enum class TripleKind { interior, exterior };

// Sum tolerance below which a triple is accepted as-is, and the wider band
// within which it is rescaled to the exact target sum.
inline constexpr double kSumExact = 1e-12;
inline constexpr double kSumRenorm = 1e-9;

namespace detail {
// Validates and (if needed) rescales `a` so its components are in (0, pi)
// and sum to `target`.  Throws InvalidTriple.
std::array<double, 3> checked_triple(std::array<double, 3> a, double target);
// Lexicographically smallest cyclic rotation (no validation).
std::array<double, 3> lex_min_rotation(const std::array<double, 3>& v);
}  // namespace detail

class InteriorTriple {
  public:
    InteriorTriple(double a, double b, double c);
    explicit InteriorTriple(const std::array<double, 3>& v)
        : InteriorTriple(v[0], v[1], v[2]) {}

    const std::array<double, 3>& angles() const { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }

  private:
    std::array<double, 3> a_;
};

class ExteriorTriple {
  public:
    ExteriorTriple(double a, double b, double c);
    explicit ExteriorTriple(const std::array<double, 3>& v)
        : ExteriorTriple(v[0], v[1], v[2]) {}

    const std::array<double, 3>& angles() const { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }

  private:
    std::array<double, 3> a_;
};

// A rotation class together with its kind, represented by the
// lexicographically smallest of the three cyclic rotations.  Mirror images
// are not identified.
class CanonicalTriple {
  public:
    explicit CanonicalTriple(const InteriorTriple& t);
    explicit CanonicalTriple(const ExteriorTriple& t);

    TripleKind kind() const { return kind_; }
    const std::array<double, 3>& representative() const { return rep_; }
    double operator[](std::size_t i) const { return rep_[i]; }

  private:
    TripleKind kind_;
    std::array<double, 3> rep_;
};

ExteriorTriple interior_to_exterior(const InteriorTriple& t);
InteriorTriple exterior_to_interior(const ExteriorTriple& t);

// Classifies a raw triple by its sum (pi -> interior, 2*pi -> exterior),
// validates it, and canonicalizes.  Throws InvalidTriple when the sum
// matches neither target or a component is out of range.
CanonicalTriple normalize_cyclic(const std::array<double, 3>& t);

// Distance between rotation classes: the minimum over cyclic rotations of
// one argument of the Euclidean distance to the other.  Symmetric; zero
// exactly when both sides canonicalize identically.
double quotient_distance(const CanonicalTriple& p, const CanonicalTriple& q);
double quotient_distance(const InteriorTriple& p, const InteriorTriple& q);
double quotient_distance(const ExteriorTriple& p, const ExteriorTriple& q);

// Raw helper shared by the typed overloads (no validation); rotates `p`.
double quotient_distance_raw(const std::array<double, 3>& p,
                             const std::array<double, 3>& q);

// Edge lengths opposite each interior angle, scaled to the given perimeter:
// the triangle is placed at unit circumradius (side = 2 sin of the opposite
// angle) and rescaled so the sides sum to `perimeter`.
std::array<double, 3> edges_by_construction(const InteriorTriple& t,
                                            double perimeter);

}  // namespace tridyn
