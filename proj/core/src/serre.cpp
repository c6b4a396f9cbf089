#include "serrecheck/serre.hpp"

#include <algorithm>
#include <stdexcept>

#include "serrecheck/homology.hpp"

namespace serrecheck {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Definition: return "definition";
        case Method::SequentialDefinition: return "sequential-definition";
        case Method::SequentialCm: return "sequential-cm";
        case Method::LocalHomology: return "local-homology";
        case Method::FacetClosureLinks: return "facet-closure-links";
        case Method::StratifiedLocalHomology: return "stratified-local-homology";
    }
    return "unknown";
}

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::LinkHomology: return "link-homology";
        case Condition::Purity: return "purity";
        case Condition::GlobalHomology: return "global-homology";
        case Condition::LocalHomologyDimension: return "local-homology-dimension";
    }
    return "unknown";
}

namespace {

void require_checkable(const Complex& K, int r, const char* what) {
    if (K.is_void()) throw std::invalid_argument(std::string(what) + ": void complex");
    if (r < 2) throw std::invalid_argument(std::string(what) + ": r must be >= 2, got " + std::to_string(r));
}

// Link scan over K; witnesses are in K's ids.
std::vector<Witness> scan_links(const Complex& K, int r, const FieldSpec& F, bool audit) {
    std::vector<Witness> failures;
    const int d = K.dim() + 1;
    for (int s = -1; s <= K.dim(); ++s) {
        const int bound = std::min(r - 1, d - s - 2);
        if (bound <= -1) break;  // bound only shrinks as dim σ grows
        for (const Face& sigma : K.faces(s)) {
            const auto profile = homology_profile(link(K, sigma), F, bound - 1);
            for (int i = -1; i < bound; ++i) {
                if (profile.betti(i) == 0) continue;
                failures.push_back({sigma, i, std::nullopt, Condition::LinkHomology});
                if (!audit) return failures;
            }
        }
    }
    return failures;
}

SerreVerdict make_verdict(int r, const FieldSpec& F, Method method, std::vector<Witness> failures,
                          bool audit) {
    SerreVerdict v;
    v.r = r;
    v.field = F;
    v.method = method;
    v.holds = failures.empty();
    if (!failures.empty()) v.witness = failures.front();
    if (audit) v.all_witnesses = std::move(failures);
    return v;
}

// Runs a per-skeleton check on K^[m] for m = 0..dim K and lifts witnesses
// back to K's vertex ids.
template <class RForSkeleton>
std::vector<Witness> scan_pure_skeleta(const Complex& K, const FieldSpec& F, bool audit, RForSkeleton r_for) {
    std::vector<Witness> failures;
    for (int m = 0; m <= K.dim(); ++m) {
        const Complex S = pure_skeleton(K, m);
        for (auto w : scan_links(S, r_for(m), F, audit)) {
            w.face = translate_face(S, w.face, K);
            w.skeleton = m;
            failures.push_back(std::move(w));
            if (!audit) return failures;
        }
    }
    return failures;
}

}  // namespace

SerreVerdict is_serre(const Complex& K, int r, const FieldSpec& F, CheckOptions options) {
    require_checkable(K, r, "is_serre");
    return make_verdict(r, F, Method::Definition, scan_links(K, r, F, options.audit), options.audit);
}

SerreVerdict is_cm(const Complex& K, const FieldSpec& F, CheckOptions options) {
    if (K.is_void()) throw std::invalid_argument("is_cm: void complex");
    return is_serre(K, std::max(K.dim() + 1, 2), F, options);
}

int max_serre_r(const Complex& K, const FieldSpec& F) {
    if (K.is_void() || K.dim() < 1) throw std::invalid_argument("max_serre_r: requires dim K >= 1");
    // (S_{r+1}) implies (S_r), so the first success from the top is the maximum
    for (int r = K.dim() + 1; r >= 2; --r)
        if (is_serre(K, r, F).holds) return r;
    return 1;
}

SerreVerdict is_sequentially_serre(const Complex& K, int r, const FieldSpec& F, CheckOptions options) {
    require_checkable(K, r, "is_sequentially_serre");
    auto failures = scan_pure_skeleta(K, F, options.audit, [r](int) { return r; });
    return make_verdict(r, F, Method::SequentialDefinition, std::move(failures), options.audit);
}

SerreVerdict is_sequentially_cm(const Complex& K, const FieldSpec& F, CheckOptions options) {
    if (K.is_void()) throw std::invalid_argument("is_sequentially_cm: void complex");
    auto failures = scan_pure_skeleta(K, F, options.audit, [](int m) { return std::max(m + 1, 2); });
    return make_verdict(K.dim() + 1, F, Method::SequentialCm, std::move(failures), options.audit);
}

bool revalidate(const Complex& K, const SerreVerdict& verdict) {
    if (verdict.holds) return !verdict.witness && verdict.all_witnesses.empty();
    if (!verdict.witness) return false;

    auto check = [&](const Witness& w) {
        const Complex* ambient = &K;
        Complex sub;
        bool closure_bound = false;
        switch (verdict.method) {
            case Method::Definition:
            case Method::LocalHomology:
                if (w.skeleton) return false;
                break;
            case Method::SequentialDefinition:
            case Method::SequentialCm:
                if (!w.skeleton) return false;
                sub = pure_skeleton(K, *w.skeleton);
                ambient = &sub;
                break;
            case Method::FacetClosureLinks:
            case Method::StratifiedLocalHomology:
                if (!w.skeleton) return false;
                sub = facet_closure(K, *w.skeleton);
                ambient = &sub;
                closure_bound = true;
                break;
        }
        const Face sigma = translate_face(K, w.face, *ambient);
        if (!ambient->contains(sigma)) return false;

        const int s = sigma.dim();
        int bound = 0;
        if (closure_bound) {
            bound = std::min(*w.skeleton - s - 1, verdict.r - 1);
        } else {
            const int d = ambient->dim() + 1;
            const int r = verdict.method == Method::SequentialCm ? std::max(d, 2) : verdict.r;
            bound = std::min(r - 1, d - s - 2);
        }
        if (w.degree < -1 || w.degree >= bound) return false;
        return reduced_betti(link(*ambient, sigma), w.degree, verdict.field) != 0;
    };

    if (!check(*verdict.witness)) return false;
    return std::all_of(verdict.all_witnesses.begin(), verdict.all_witnesses.end(), check);
}

}  // namespace serrecheck
