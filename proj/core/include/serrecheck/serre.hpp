#ifndef SERRECHECK_SERRE_HPP
#define SERRECHECK_SERRE_HPP

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"
#include "serrecheck/verdict.hpp"

namespace serrecheck {

/**
 * Serre's condition (S_r) straight from the definition.
 *
 * With d = dim K + 1, K is (S_r) iff for every face σ (∅ included) and
 * every -1 <= i < min{r-1, d-dim σ-2}, β̃_i(link(σ; K)) = 0. Degree -1 is
 * part of the range, so a sub-top facet (link {∅}) fails and (S_2) forces
 * purity. Faces are visited by dimension, then lexicographically, then by
 * degree; the first failure is the witness.
 *
 * Requires K non-void and r >= 2. Values r > d behave as r = d.
 */
SerreVerdict is_serre(const Complex& K, int r, const FieldSpec& F, CheckOptions options = {});

/// (S_d) with d = dim K + 1 (r = 2 when d < 2).
SerreVerdict is_cm(const Complex& K, const FieldSpec& F, CheckOptions options = {});

/// Largest r in [2, d] with (S_r), or 1 if (S_2) fails. Requires dim K >= 1.
int max_serre_r(const Complex& K, const FieldSpec& F);

/// Every pure skeleton K^[m], 0 <= m <= dim K, is (S_r). Witnesses carry
/// the failing m; skeleta are visited in increasing m.
SerreVerdict is_sequentially_serre(const Complex& K, int r, const FieldSpec& F, CheckOptions options = {});

/// Every pure skeleton K^[m] is Cohen-Macaulay.
SerreVerdict is_sequentially_cm(const Complex& K, const FieldSpec& F, CheckOptions options = {});

/**
 * Re-checks every witness of a failed verdict with direct link and Betti
 * computations: the degree lies in [-1, bound) for the verdict's method
 * and β̃_degree(link(σ; L)) ≠ 0, where L is the complex the method
 * quantifies over. Returns true for a verdict that holds with no witness.
 */
bool revalidate(const Complex& K, const SerreVerdict& verdict);

}  // namespace serrecheck

#endif  // SERRECHECK_SERRE_HPP
