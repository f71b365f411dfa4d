#pragma once

// Seeded generators for tests, the CLI and the acceptance suite. Every
// function draws only from the generator passed in.

#include <random>

#include "hnq/grid.hpp"
#include "hnq/ladder.hpp"
#include "hnq/zigzag.hpp"

namespace hnq {

using Rng = std::mt19937_64;

/// n/d with n in [-range, range], d in [1, max_den].
Rational random_rational(Rng& rng, long range, long max_den);
CentralCharge random_charge(Rng& rng, std::size_t vertices, long range = 6, long max_den = 4);
Orientation random_orientation(Rng& rng, std::size_t length);

/// Random dimensions (total at most max_total) and uniformly random maps
/// over F_p. Not equalised in general.
Representation random_representation(Rng& rng, const QuiverPtr& q, Field field, long max_total, long max_vertex = 3);

/// Subrepresentation generated by a few random vectors.
Subrepresentation random_subrep(Rng& rng, const Representation& v);

Barcode random_barcode(Rng& rng, int length, long max_total);
RectangleMultiset random_rectangles(Rng& rng, const Shape& shape, long max_total);
/// Nestfree multiset with total dimension at most max_total and every vertex
/// dimension at most max_vertex.
LadderMultiset random_nestfree(Rng& rng, int length, long max_total, long max_vertex = 4);

/// Equalised grid module: the subrepresentation generated by random vectors
/// inside a random sum of rectangle modules, in its own basis.
Representation random_equalised_grid(Rng& rng, const QuiverPtr& grid, Field field, long max_total);

}  // namespace hnq
