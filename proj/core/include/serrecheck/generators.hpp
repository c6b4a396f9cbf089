#ifndef SERRECHECK_GENERATORS_HPP
#define SERRECHECK_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "serrecheck/complex.hpp"

namespace serrecheck {

/// Full n-simplex on vertices "0".."n".
Complex simplex(int n);

/// Boundary of the n-simplex: its n facets of dimension n-1 (an (n-1)-sphere).
Complex boundary_simplex(int n);

/// Cycle graph on n >= 3 vertices.
Complex cycle(int n);

/// Two triangles glued at one vertex: {abc, cde}.
Complex bowtie();

/**
 * Six-vertex triangulation of the real projective plane, built as the
 * antipodal quotient of the icosahedron boundary. The result is checked
 * against its known homology (β̃ = 0,1,1 over GF(2), acyclic over Q)
 * on first use and std::logic_error is thrown if that ever fails.
 */
Complex rp2_minimal();

Complex cone(const Complex& K);
/// Labels that clash between the operands are prefixed with "L." / "R.".
Complex disjoint_union(const Complex& K, const Complex& L);
/// Facets F ∪ G for every pair; void if either operand is void.
Complex join(const Complex& K, const Complex& L);

struct RandomSpec {
    std::size_t n_vertices = 6;
    int max_dim = 2;
    std::size_t facet_count = 5;
    std::uint64_t seed = 1;
};

/**
 * Deterministic random complex. Randomness is the raw output of
 * std::mt19937_64 seeded with `seed` (a generator with published reference
 * values), reduced to a range by rejection sampling, so results are
 * reproducible across platforms.
 *
 * Each facet draw picks its dimension (max_dim with probability 1/2,
 * otherwise uniform in [0, max_dim]) and then a uniform vertex subset.
 * A draw comparable to an accepted facet is redrawn up to 16 times and then
 * skipped, so the result may have fewer than facet_count facets.
 */
Complex random_complex(const RandomSpec& spec);

/// Specs for the standard random corpus: 4..8 vertices, dimension 1..4.
std::vector<RandomSpec> random_corpus_specs(std::size_t count, std::uint64_t base_seed);

/// Named hand-built complexes used across tests and the CLI.
std::vector<std::pair<std::string, Complex>> designed_fixtures();

/// Uniform integer in [0, bound) from raw engine output.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace serrecheck

#endif  // SERRECHECK_GENERATORS_HPP
