#include "serrecheck/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace serrecheck {

std::size_t HomologyProfile::betti(int degree) const {
    if (degree < -1) return 0;
    const auto idx = static_cast<std::size_t>(degree + 1);
    return idx < betti_.size() ? betti_[idx] : 0;
}

bool HomologyProfile::is_acyclic() const {
    return std::all_of(betti_.begin(), betti_.end(), [](std::size_t b) { return b == 0; });
}

SparseMatrix boundary_matrix(const Complex& K, int i) {
    if (K.is_void() || i < 0 || i > K.dim())
        throw std::invalid_argument("boundary_matrix: degree " + std::to_string(i) + " outside [0, dim K]");
    const auto& lower = K.faces(i - 1);
    const auto& upper = K.faces(i);

    std::vector<MatrixEntry> entries;
    entries.reserve(upper.size() * static_cast<std::size_t>(i + 1));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const Face& tau = upper[col];
        for (std::size_t j = 0; j < tau.size(); ++j) {
            const Face facet = tau.without_index(j);
            const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
            const auto row = static_cast<std::size_t>(it - lower.begin());
            entries.push_back({row, col, (j % 2 == 0) ? 1 : -1});
        }
    }
    return SparseMatrix(lower.size(), upper.size(), std::move(entries));
}

namespace {

std::size_t boundary_rank(const Complex& K, int i, const FieldSpec& F) {
    if (i < 0 || i > K.dim()) return 0;
    return rank(boundary_matrix(K, i), F);
}

}  // namespace

std::size_t reduced_betti(const Complex& K, int i, const FieldSpec& F) {
    if (K.is_void() || i < -1 || i > K.dim()) return 0;
    const std::size_t f = K.face_count(i);
    return f - boundary_rank(K, i, F) - boundary_rank(K, i + 1, F);
}

HomologyProfile homology_profile(const Complex& K, const FieldSpec& F, std::optional<int> max_degree) {
    if (K.is_void()) return HomologyProfile(F, {});
    const int top = max_degree ? std::min(*max_degree, K.dim()) : K.dim();
    if (top < -1) return HomologyProfile(F, {});

    // ranks[i] = rank ∂_i for i in 0..top+1; ∂_{-1} is the zero map
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int i = 0; i <= top + 1; ++i) ranks[static_cast<std::size_t>(i)] = boundary_rank(K, i, F);

    std::vector<std::size_t> betti;
    betti.reserve(static_cast<std::size_t>(top + 2));
    for (int i = -1; i <= top; ++i) {
        const std::size_t down = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
        const std::size_t up = ranks[static_cast<std::size_t>(i + 1)];
        betti.push_back(K.face_count(i) - down - up);
    }
    return HomologyProfile(F, std::move(betti));
}

}  // namespace serrecheck
