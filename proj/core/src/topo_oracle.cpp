#include "serrecheck/topo_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "serrecheck/homology.hpp"

namespace serrecheck {

namespace {

// Local homology degrees of σ up to max_k (all degrees when max_k is unset).
std::vector<int> degrees_up_to(const Complex& K, const Face& sigma, const FieldSpec& F,
                               std::optional<int> max_k) {
    const int shift = sigma.dim() + 1;
    std::optional<int> max_link_degree;
    if (max_k) max_link_degree = *max_k - shift;
    const auto profile = homology_profile(link(K, sigma), F, max_link_degree);

    std::vector<int> out;
    for (int i = -1; i <= profile.top_degree(); ++i)
        if (profile.betti(i) != 0) out.push_back(i + shift);
    return out;
}

bool carries(const std::vector<int>& degrees, int k) {
    return std::binary_search(degrees.begin(), degrees.end(), k);
}

void require_oracle_range(const Complex& K, int r, const char* what) {
    if (K.is_void()) throw std::invalid_argument(std::string(what) + ": void complex");
    const int d = K.dim() + 1;
    if (r < 2 || r > d)
        throw std::invalid_argument(std::string(what) + ": r = " + std::to_string(r) + " outside [2, " +
                                    std::to_string(d) + "]");
}

SerreVerdict finish(int r, const FieldSpec& F, Method method, std::vector<Witness> failures, bool audit) {
    SerreVerdict v;
    v.r = r;
    v.field = F;
    v.method = method;
    v.holds = failures.empty();
    if (!failures.empty()) v.witness = failures.front();
    if (audit) v.all_witnesses = std::move(failures);
    return v;
}

// Faces σ of X with k in their local homology and dim σ > k - r, for
// 0 <= k <= max_k, ordered by k then (dim, lex). Witness faces are in X's ids.
std::vector<Witness> oversized_d_sets(const Complex& X, int r, int max_k, const FieldSpec& F,
                                      std::optional<int> skeleton, bool audit) {
    std::vector<Witness> out;
    if (max_k < 0) return out;
    const int top_face = std::min(max_k, X.dim());
    // degrees per face, computed once; faces of dim > max_k never carry k <= max_k
    std::vector<std::pair<Face, std::vector<int>>> table;
    for (int s = 0; s <= top_face; ++s)
        for (const Face& sigma : X.faces(s)) table.emplace_back(sigma, degrees_up_to(X, sigma, F, max_k));

    for (int k = 0; k <= max_k; ++k) {
        for (const auto& [sigma, degrees] : table) {
            if (sigma.dim() <= k - r || !carries(degrees, k)) continue;
            out.push_back({sigma, k - sigma.dim() - 1, skeleton, Condition::LocalHomologyDimension});
            if (!audit) return out;
        }
    }
    return out;
}

}  // namespace

std::vector<int> local_homology_degrees(const Complex& K, const Face& sigma, const FieldSpec& F) {
    if (sigma.empty()) throw std::invalid_argument("local_homology_degrees: the empty face has no interior point");
    if (!K.contains(sigma))
        throw std::invalid_argument("local_homology_degrees: face " + to_string(K, sigma) + " is not in the complex");
    return degrees_up_to(K, sigma, F, std::nullopt);
}

LocalHomologyTable local_homology_table(const Complex& K, const FieldSpec& F) {
    LocalHomologyTable table{F, {}};
    for (int s = 0; s <= K.dim(); ++s)
        for (const Face& sigma : K.faces(s)) table.rows.emplace(sigma, degrees_up_to(K, sigma, F, std::nullopt));
    return table;
}

std::optional<int> d_set_dimension(const Complex& K, int k, const FieldSpec& F) {
    if (K.is_void()) throw std::invalid_argument("d_set_dimension: void complex");
    // a face of dimension s only carries degrees k >= s
    for (int s = std::min(k, K.dim()); s >= 0; --s)
        for (const Face& sigma : K.faces(s))
            if (carries(degrees_up_to(K, sigma, F, k), k)) return s;
    return std::nullopt;
}

SerreVerdict thm_stc_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options) {
    require_oracle_range(K, r, "thm_stc_check");
    const bool audit = options.audit;
    const int d = K.dim() + 1;
    std::vector<Witness> failures;

    // (1) X^<d-1> = X
    std::vector<Face> low;
    for (const Face& f : K.facets())
        if (f.dim() < d - 1) low.push_back(f);
    std::sort(low.begin(), low.end(), DimLexLess{});
    for (const Face& f : low) {
        failures.push_back({f, -1, std::nullopt, Condition::Purity});
        if (!audit) return finish(r, F, Method::LocalHomology, std::move(failures), audit);
    }

    // (2) H̃_j(X) = 0 for j < r - 1
    const auto global = homology_profile(K, F, r - 2);
    for (int j = -1; j < r - 1; ++j) {
        if (global.betti(j) == 0) continue;
        failures.push_back({Face{}, j, std::nullopt, Condition::GlobalHomology});
        if (!audit) return finish(r, F, Method::LocalHomology, std::move(failures), audit);
    }

    // (3) dim D_k <= k - r for k <= d - 2
    for (auto& w : oversized_d_sets(K, r, d - 2, F, std::nullopt, audit)) {
        failures.push_back(std::move(w));
        if (!audit) break;
    }
    return finish(r, F, Method::LocalHomology, std::move(failures), audit);
}

SerreVerdict prop_cs_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options) {
    if (K.is_void()) throw std::invalid_argument("prop_cs_check: void complex");
    if (r < 2) throw std::invalid_argument("prop_cs_check: r must be >= 2, got " + std::to_string(r));
    const bool audit = options.audit;
    std::vector<Witness> failures;

    for (int m = 0; m <= K.dim(); ++m) {
        const Complex X = facet_closure(K, m);
        for (int s = -1; s <= m - 1; ++s) {
            const int bound = std::min(m - s - 1, r - 1);
            for (const Face& sigma : X.faces(s)) {
                const auto profile = homology_profile(link(X, sigma), F, bound - 1);
                for (int j = -1; j < bound; ++j) {
                    if (profile.betti(j) == 0) continue;
                    failures.push_back({translate_face(X, sigma, K), j, m, Condition::LinkHomology});
                    if (!audit) return finish(r, F, Method::FacetClosureLinks, std::move(failures), audit);
                }
            }
        }
    }
    return finish(r, F, Method::FacetClosureLinks, std::move(failures), audit);
}

SerreVerdict thm_sstc_check(const Complex& K, int r, const FieldSpec& F, CheckOptions options) {
    require_oracle_range(K, r, "thm_sstc_check");
    const bool audit = options.audit;
    const int d = K.dim() + 1;
    std::vector<Witness> failures;

    for (int m = 0; m <= d - 1; ++m) {
        const Complex X = facet_closure(K, m);

        // (1) H̃_j(X_m) = 0 for j < min{m, r - 1}
        const int global_bound = std::min(m, r - 1);
        const auto global = homology_profile(X, F, global_bound - 1);
        for (int j = -1; j < global_bound; ++j) {
            if (global.betti(j) == 0) continue;
            failures.push_back({Face{}, j, m, Condition::GlobalHomology});
            if (!audit) return finish(r, F, Method::StratifiedLocalHomology, std::move(failures), audit);
        }

        // (2) dim D_k(X_m) <= k - r for k <= m - 1
        for (auto& w : oversized_d_sets(X, r, m - 1, F, m, audit)) {
            w.face = translate_face(X, w.face, K);
            failures.push_back(std::move(w));
            if (!audit) return finish(r, F, Method::StratifiedLocalHomology, std::move(failures), audit);
        }
    }
    return finish(r, F, Method::StratifiedLocalHomology, std::move(failures), audit);
}

}  // namespace serrecheck
