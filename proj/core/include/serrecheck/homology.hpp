#ifndef SERRECHECK_HOMOLOGY_HPP
#define SERRECHECK_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"

namespace serrecheck {

/// Reduced Betti numbers over one field. Degrees outside the stored range
/// read as zero.
class HomologyProfile {
public:
    HomologyProfile(FieldSpec field, std::vector<std::size_t> betti_from_minus_one)
        : field_(field), betti_(std::move(betti_from_minus_one)) {}

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] std::size_t betti(int degree) const;
    /// Betti numbers for degrees -1, 0, 1, ... as stored.
    [[nodiscard]] const std::vector<std::size_t>& values() const { return betti_; }
    /// Highest stored degree, or -2 if nothing is stored.
    [[nodiscard]] int top_degree() const { return static_cast<int>(betti_.size()) - 2; }
    [[nodiscard]] bool is_acyclic() const;

    bool operator==(const HomologyProfile&) const = default;

private:
    FieldSpec field_;
    std::vector<std::size_t> betti_;
};

/// Boundary map C_i -> C_{i-1} of the augmented chain complex. Rows are
/// the lexicographically sorted (i-1)-faces (just ∅ when i = 0), columns
/// the i-faces. Deleting the j-th smallest vertex carries sign (-1)^j.
/// Requires 0 <= i <= dim K.
SparseMatrix boundary_matrix(const Complex& K, int i);

/// Reduced Betti number β̃_i. Zero for the void complex and outside
/// [-1, dim K]; β̃_{-1}({∅}) = 1.
std::size_t reduced_betti(const Complex& K, int i, const FieldSpec& F);

/**
 * Reduced Betti numbers for degrees -1..dim K, each boundary rank computed
 * once. With `max_degree`, only degrees up to that bound are computed (and
 * stored), which needs ranks of ∂_0..∂_{max_degree+1} only.
 */
HomologyProfile homology_profile(const Complex& K, const FieldSpec& F,
                                 std::optional<int> max_degree = std::nullopt);

}  // namespace serrecheck

#endif  // SERRECHECK_HOMOLOGY_HPP
