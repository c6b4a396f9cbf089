// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Independent reference values come from the dense brute-force oracles in
// tests/support; nothing here is tuned to the library's own output.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "brute_force.hpp"
#include "corpus.hpp"
#include "serrecheck/generators.hpp"
#include "serrecheck/homology.hpp"
#include "serrecheck/serre.hpp"
#include "serrecheck/topo_oracle.hpp"

using namespace serrecheck;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::size_t checks = 0;
    std::size_t failures = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures < 5) detail << " [" << what << "]";
        ++failures;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<testcorpus::Entry>& corpus() {
    static const auto c = testcorpus::full(testcorpus::kRandomCount);
    return c;
}

std::string name_of(const FieldSpec& F) { return F.name(); }

// Same complex with fresh labels and shuffled vertex and facet order, so ids,
// labels and input order all differ from the original.
Complex scrambled(const Complex& K, std::mt19937_64& rng) {
    std::vector<VertexId> perm(K.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::string>> raw;
    for (const auto& f : K.facets()) {
        std::vector<std::string> facet;
        for (auto v : f.vertices()) facet.push_back("w" + std::to_string(perm[v]));
        std::shuffle(facet.begin(), facet.end(), rng);
        raw.push_back(std::move(facet));
    }
    std::shuffle(raw.begin(), raw.end(), rng);
    if (K.is_void()) return Complex{};
    if (raw.size() == 1 && raw[0].empty()) return Complex::empty_face_complex();
    return Complex::from_facets(raw);
}

// ---------------------------------------------------------------- criteria

Outcome rp2_characteristic_dependence() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto K = rp2_minimal();
    const auto Q = FieldSpec::rationals();
    const auto GF2 = FieldSpec::prime(2);
    out.expect(is_serre(K, 2, GF2).holds, "(S_2) over GF(2)");
    out.expect(is_serre(K, 2, Q).holds, "(S_2) over Q");
    out.expect(is_serre(K, 3, Q).holds, "(S_3) over Q");
    out.expect(!is_serre(K, 3, GF2).holds, "(S_3) fails over GF(2)");
    out.expect(max_serre_r(K, Q) == 3, "max r over Q is 3");
    out.expect(max_serre_r(K, GF2) == 2, "max r over GF(2) is 2");
    const double elapsed = seconds_since(t0);

    // the same pattern from the brute-force definition
    const auto masks = brute::masks_of(K);
    out.expect(brute::serre(masks, 2, GF2) && brute::serre(masks, 3, Q) && !brute::serre(masks, 3, GF2),
               "brute-force pattern");
    out.expect(elapsed < 1.0, "runtime under 1 s");
    out.detail << " verdict time " << elapsed * 1000 << " ms";
    return out;
}

struct AgreementRun {
    Outcome sequential;
    Outcome serre;
    double seconds = 0;
};

AgreementRun oracle_agreement() {
    AgreementRun run;
    const auto t0 = Clock::now();
    for (const auto& [name, K] : corpus()) {
        if (K.dim() < 1) continue;  // [2, d] is empty
        const int d = K.dim() + 1;
        for (const auto& F : testcorpus::fields()) {
            for (int r = 2; r <= d; ++r) {
                const std::string tag = name + " " + name_of(F) + " r=" + std::to_string(r);
                try {
                    const bool seq = is_sequentially_serre(K, r, F).holds;
                    run.sequential.expect(seq == prop_cs_check(K, r, F).holds && seq == thm_sstc_check(K, r, F).holds,
                                          tag);
                    run.serre.expect(is_serre(K, r, F).holds == thm_stc_check(K, r, F).holds, tag);
                } catch (const std::exception& e) {
                    run.sequential.expect(false, tag + " threw " + e.what());
                    run.serre.expect(false, tag + " threw " + e.what());
                }
            }
        }
    }
    run.seconds = seconds_since(t0);
    run.sequential.expect(run.seconds < 300.0, "runtime under 5 min");
    run.sequential.detail << " corpus " << corpus().size() << " complexes, " << run.seconds << " s";
    run.serre.detail << " corpus " << corpus().size() << " complexes";
    return run;
}

Outcome homology_correctness() {
    Outcome out;
    std::vector<std::pair<std::string, Complex>> base;
    for (int n = 0; n <= 5; ++n) base.emplace_back("simplex:" + std::to_string(n), simplex(n));
    for (int n = 1; n <= 5; ++n) base.emplace_back("boundary-simplex:" + std::to_string(n), boundary_simplex(n));
    base.emplace_back("cycle:3", cycle(3));
    base.emplace_back("bowtie", bowtie());

    std::vector<std::pair<std::string, Complex>> cases = base;
    for (const auto& [name, K] : base) cases.emplace_back("cone(" + name + ")", cone(K));
    cases.emplace_back("cone(rp2)", cone(rp2_minimal()));

    const std::vector<std::pair<std::string, Complex>> small{
        {"point", simplex(0)},        {"edge", simplex(1)},     {"cycle:3", cycle(3)},
        {"bowtie", bowtie()},         {"S^0", boundary_simplex(1)}, {"S^2", boundary_simplex(3)},
        {"rp2", rp2_minimal()}};
    for (const auto& [a, K] : small)
        for (const auto& [b, L] : small) {
            cases.emplace_back(a + " + " + b, disjoint_union(K, L));
            if (K.n_vertices() + L.n_vertices() <= 10) cases.emplace_back(a + " * " + b, join(K, L));
        }

    for (const auto& [name, K] : cases) {
        const auto masks = brute::masks_of(K);
        for (const auto& F : testcorpus::fields())
            out.expect(homology_profile(K, F).values() == brute::betti(masks, F), name + " " + name_of(F));
    }
    out.detail << " " << cases.size() << " complexes x 4 fields";
    return out;
}

Outcome structural_invariants() {
    Outcome out;
    std::mt19937_64 rng(2718);
    for (const auto& [name, K] : corpus()) {
        // canonicalization idempotence
        std::vector<std::vector<std::string>> raw;
        for (const auto& f : K.facets()) raw.push_back(K.labels_of(f));
        if (!K.is_void() && K.dim() >= 0) {
            // ids follow first-seen order, so identity is labelled structure
            const auto once = Complex::from_facets(raw);
            std::vector<std::vector<std::string>> raw_once;
            for (const auto& f : once.facets()) raw_once.push_back(once.labels_of(f));
            out.expect(once == K && Complex::from_facets(raw_once) == once, name + " idempotence");
        }

        const auto P = scrambled(K, rng);
        const auto f = K.f_vector();
        for (const auto& F : testcorpus::fields()) {
            const auto b = homology_profile(K, F).values();
            // relabeling invariance of Betti numbers
            out.expect(homology_profile(P, F).values() == b, name + " relabel betti " + name_of(F));

            // reduced Euler relation
            long long lhs = 0, rhs = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                const long long sign = i % 2 == 0 ? -1 : 1;
                lhs += sign * static_cast<long long>(b[i]);
                rhs += sign * static_cast<long long>(f[i]);
            }
            out.expect(lhs == rhs, name + " euler " + name_of(F));

            // cone acyclicity
            out.expect(homology_profile(cone(K), F).is_acyclic(), name + " cone " + name_of(F));

            if (K.dim() < 1) continue;
            const int d = K.dim() + 1;
            bool prev = true, prev_seq = true;
            for (int r = 2; r <= d + 1; ++r) {
                const auto v = is_serre(K, r, F);
                const auto s = is_sequentially_serre(K, r, F);
                // monotone in r: once it fails it keeps failing
                out.expect(prev || !v.holds, name + " monotone " + name_of(F));
                out.expect(prev_seq || !s.holds, name + " seq monotone " + name_of(F));
                prev = v.holds;
                prev_seq = s.holds;
                // (S_2) forces purity
                if (r == 2 && v.holds) out.expect(is_pure(K), name + " S2 purity");
                // relabeling invariance of verdicts
                out.expect(is_serre(P, r, F).holds == v.holds, name + " relabel serre " + name_of(F));
                out.expect(is_sequentially_serre(P, r, F).holds == s.holds, name + " relabel seq " + name_of(F));
            }
            out.expect(is_cm(P, F).holds == is_cm(K, F).holds, name + " relabel cm");
            out.expect(is_sequentially_cm(P, F).holds == is_sequentially_cm(K, F).holds, name + " relabel seq cm");
        }
    }
    out.detail << " " << out.checks << " checks";
    return out;
}

Outcome link_identities() {
    Outcome out;
    std::size_t complexes = 0;
    for (const auto& [name, K] : corpus()) {
        if (K.n_vertices() > 7 || K.dim() < 0) continue;
        ++complexes;
        for (int m = 0; m <= K.dim(); ++m) {
            const auto closure = facet_closure(K, m);
            const auto pure = pure_skeleton(K, m);
            for (int s = -1; s < m; ++s) {
                for (const auto& sigma_c : closure.faces(s)) {
                    const auto sigma = translate_face(closure, sigma_c, K);
                    const auto L = link(K, sigma);
                    const int shift = m - s - 1;
                    const std::string tag = name + " m=" + std::to_string(m);
                    out.expect(link(closure, sigma_c) == facet_closure(L, shift), tag + " closure");
                    out.expect(link(pure, translate_face(K, sigma, pure)) == pure_skeleton(L, shift), tag + " pure");
                }
            }
        }
    }
    out.expect(complexes > 100, "enough small complexes");
    out.detail << " " << complexes << " complexes, " << out.checks << " face/m pairs";
    return out;
}

Outcome manifold_local_homology() {
    Outcome out;
    std::vector<std::pair<std::string, Complex>> manifolds{{"rp2", rp2_minimal()}};
    for (int n = 1; n <= 5; ++n) manifolds.emplace_back("boundary-simplex:" + std::to_string(n), boundary_simplex(n));
    for (const auto& [name, K] : manifolds)
        for (const auto& F : testcorpus::fields()) {
            for (int k = -1; k < K.dim(); ++k)
                out.expect(!d_set_dimension(K, k, F).has_value(), name + " k=" + std::to_string(k) + " " + name_of(F));
            // the top degree is where the local homology lives
            out.expect(d_set_dimension(K, K.dim(), F) == K.dim(), name + " top " + name_of(F));
        }
    return out;
}

void report(int id, const std::string& title, const Outcome& o, double seconds, int& failed) {
    std::printf("%s [%d] %s: %zu checks, %zu failures, %.2f s;%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
                o.checks, o.failures, seconds, o.detail.str().c_str());
    if (!o.pass) ++failed;
}

template <class Fn>
void timed(int id, const std::string& title, Fn fn, int& failed) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    report(id, title, o, seconds_since(t0), failed);
}

}  // namespace

int main() {
    int failed = 0;
    timed(1, "RP2 characteristic dependence", rp2_characteristic_dependence, failed);

    auto agreement = oracle_agreement();
    report(2, "sequential three-way oracle agreement", agreement.sequential, agreement.seconds, failed);
    report(3, "(S_r) two-way oracle agreement", agreement.serre, agreement.seconds, failed);

    timed(4, "homology against dense brute force", homology_correctness, failed);
    timed(5, "structural invariants", structural_invariants, failed);
    timed(6, "link identities on complexes with <= 7 vertices", link_identities, failed);
    timed(7, "manifold local homology only in top degree", manifold_local_homology, failed);

    std::printf("%s: %d of 7 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
