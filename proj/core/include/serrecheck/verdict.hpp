#ifndef SERRECHECK_VERDICT_HPP
#define SERRECHECK_VERDICT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"

namespace serrecheck {

/// Which characterization produced a verdict.
enum class Method {
    Definition,            // links of K
    SequentialDefinition,  // links of every pure skeleton K^[m]
    SequentialCm,          // K^[m] Cohen-Macaulay for every m
    LocalHomology,         // purity + global homology + dim D_k(X)
    FacetClosureLinks,     // links of every K^<m>
    StratifiedLocalHomology,  // global homology + dim D_k(X^<m>) for every m
};

/// Which part of a characterization a witness violates.
enum class Condition {
    LinkHomology,     // a link has homology below the allowed degree
    Purity,           // X^<d-1> != X
    GlobalHomology,   // H̃_j(X) or H̃_j(X^<m>) nonzero
    LocalHomologyDimension,  // dim D_k too large
};

std::string_view to_string(Method m);
std::string_view to_string(Condition c);

/**
 * A failing (σ, i): β̃_i(link(σ; L)) ≠ 0 with i below the governing bound,
 * where L is K, the pure skeleton K^[m], or the facet closure K^<m>
 * depending on the method and on `skeleton`.
 *
 * Oracle witnesses are phrased the same way: a purity failure is a
 * sub-top facet σ with i = -1, a global homology failure has σ = ∅, and a
 * local homology failure in degree k has i = k - dim σ - 1.
 */
struct Witness {
    Face face;
    int degree = 0;
    std::optional<int> skeleton;
    Condition condition = Condition::LinkHomology;

    bool operator==(const Witness&) const = default;
};

struct SerreVerdict {
    bool holds = true;
    int r = 0;
    FieldSpec field = FieldSpec::rationals();
    Method method = Method::Definition;
    /// First failure in the canonical order; present iff !holds.
    std::optional<Witness> witness;
    /// Every failure, filled only in audit mode.
    std::vector<Witness> all_witnesses;
};

struct CheckOptions {
    /// Keep scanning after the first failure and record every witness.
    bool audit = false;
};

}  // namespace serrecheck

#endif  // SERRECHECK_VERDICT_HPP
