#ifndef SERRECHECK_TOPO_ORACLE_HPP
#define SERRECHECK_TOPO_ORACLE_HPP

#include <map>
#include <optional>
#include <vector>

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"
#include "serrecheck/verdict.hpp"

// Topological characterizations of (S_r) and sequential (S_r), phrased
// through local homology of |K| and the facet closures K^<m>. These share
// only the complex and homology primitives with serre.hpp, so agreement
// between the two is a genuine cross-check.

namespace serrecheck {

/**
 * Degrees k with H_k(X, X - p) ≠ 0 for p interior to σ, X = |K|.
 * Local homology there equals β̃_{k - dim σ - 1}(link(σ; K)).
 *
 * Throws std::invalid_argument for σ = ∅ (no interior point) or σ ∉ K.
 */
std::vector<int> local_homology_degrees(const Complex& K, const Face& sigma, const FieldSpec& F);

/// Per-face local homology degrees of every nonempty face.
struct LocalHomologyTable {
    FieldSpec field;
    std::map<Face, std::vector<int>, DimLexLess> rows;
};

LocalHomologyTable local_homology_table(const Complex& K, const FieldSpec& F);

/**
 * Dimension of D_k(|K|): the largest dim σ over nonempty faces σ carrying
 * local homology in degree k, or nullopt when D_k is empty. D_k is a union
 * of open cells, so its largest open ball has the dimension of its largest
 * cell.
 */
std::optional<int> d_set_dimension(const Complex& K, int k, const FieldSpec& F);

/**
 * (S_r) through local homology, for 2 <= r <= d:
 *   (1) K is pure,
 *   (2) β̃_j(K) = 0 for -1 <= j < r - 1,
 *   (3) dim D_k <= k - r for 0 <= k <= d - 2 (empty passes).
 */
SerreVerdict thm_stc_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options = {});

/// Sequential (S_r) through links in the facet closures: for each
/// 0 <= m <= dim K, σ ∈ K^<m>, -1 <= j < min{m - dim σ - 1, r - 1},
/// β̃_j(link(σ; K^<m>)) = 0. Requires r >= 2.
SerreVerdict prop_cs_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options = {});

/**
 * Sequential (S_r) through local homology of the strata X_m = |K^<m>|,
 * for 2 <= r <= d and every 0 <= m <= d - 1:
 *   (1) β̃_j(X_m) = 0 for -1 <= j < min{m, r - 1},
 *   (2) dim D_k(X_m) <= k - r for 0 <= k <= m - 1.
 */
SerreVerdict thm_sstc_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options = {});

}  // namespace serrecheck

#endif  // SERRECHECK_TOPO_ORACLE_HPP
