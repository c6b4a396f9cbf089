#include "serrecheck/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>

#include "serrecheck/homology.hpp"

namespace serrecheck {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

Complex from_index_facets(const std::vector<std::vector<VertexId>>& facets, std::size_t n) {
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) faces.emplace_back(f);
    return Complex::from_id_facets(std::move(faces), numeric_labels(n));
}

// Label tables for a two-operand construction; clashing labels get side prefixes.
std::pair<std::vector<std::string>, std::size_t> merged_labels(const Complex& K, const Complex& L) {
    const std::set<std::string> left(K.labels().begin(), K.labels().end());
    const bool clash = std::any_of(L.labels().begin(), L.labels().end(),
                                   [&](const std::string& s) { return left.count(s) > 0; });
    std::vector<std::string> labels;
    for (const auto& s : K.labels()) labels.push_back(clash ? "L." + s : s);
    for (const auto& s : L.labels()) labels.push_back(clash ? "R." + s : s);
    return {labels, K.n_vertices()};
}

Face shifted(const Face& f, std::size_t offset) {
    std::vector<VertexId> verts;
    for (VertexId v : f.vertices()) verts.push_back(static_cast<VertexId>(v + offset));
    return Face(std::move(verts));
}

Complex build_rp2() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> pts;
    for (double a : {-1.0, 1.0})
        for (double b : {-phi, phi}) {
            pts.push_back({0.0, a, b});
            pts.push_back({a, b, 0.0});
            pts.push_back({b, 0.0, a});
        }

    // antipodal classes, numbered in first-seen order
    const std::size_t n = pts.size();
    std::vector<int> cls(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& p = pts[i];
            const auto& q = pts[j];
            if (std::abs(p[0] + q[0]) < 1e-9 && std::abs(p[1] + q[1]) < 1e-9 && std::abs(p[2] + q[2]) < 1e-9)
                cls[j] = next;
        }
        ++next;
    }

    auto adjacent = [&](std::size_t i, std::size_t j) {
        double s = 0;
        for (int c = 0; c < 3; ++c) s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
        return std::abs(s - 4.0) < 1e-9;  // icosahedron edge length 2
    };

    std::vector<std::vector<VertexId>> facets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k))
                    facets.push_back({static_cast<VertexId>(cls[i]), static_cast<VertexId>(cls[j]),
                                      static_cast<VertexId>(cls[k])});
    return from_index_facets(facets, static_cast<std::size_t>(next));
}

void validate_rp2(const Complex& K) {
    const auto mod2 = homology_profile(K, FieldSpec::prime(2)).values();
    const auto rational = homology_profile(K, FieldSpec::rationals()).values();
    const std::vector<std::size_t> expect_mod2{0, 0, 1, 1};
    const std::vector<std::size_t> expect_q{0, 0, 0, 0};
    if (K.n_vertices() != 6 || K.facets().size() != 10 || mod2 != expect_mod2 || rational != expect_q)
        throw std::logic_error("rp2_minimal: construction does not have the homology of RP^2");
}

}  // namespace

Complex simplex(int n) {
    if (n < 0) throw std::invalid_argument("simplex: n must be >= 0");
    std::vector<VertexId> all(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    return from_index_facets({all}, all.size());
}

Complex boundary_simplex(int n) {
    if (n < 1) throw std::invalid_argument("boundary_simplex: n must be >= 1");
    const auto verts = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<VertexId>> facets;
    for (std::size_t skip = 0; skip < verts; ++skip) {
        std::vector<VertexId> f;
        for (std::size_t v = 0; v < verts; ++v)
            if (v != skip) f.push_back(static_cast<VertexId>(v));
        facets.push_back(std::move(f));
    }
    return from_index_facets(facets, verts);
}

Complex cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return from_index_facets(facets, static_cast<std::size_t>(n));
}

Complex bowtie() {
    return Complex::from_facets({{"a", "b", "c"}, {"c", "d", "e"}});
}

Complex rp2_minimal() {
    static const Complex K = [] {
        Complex built = build_rp2();
        validate_rp2(built);
        return built;
    }();
    return K;
}

Complex cone(const Complex& K) {
    if (K.is_void()) return K;
    std::string apex = "apex";
    while (std::find(K.labels().begin(), K.labels().end(), apex) != K.labels().end()) apex += "'";
    auto labels = K.labels();
    labels.push_back(apex);
    const auto a = static_cast<VertexId>(K.n_vertices());
    std::vector<Face> faces;
    for (const auto& f : K.facets()) faces.push_back(f.united_with(Face{a}));
    return Complex::from_id_facets(std::move(faces), labels);
}

Complex disjoint_union(const Complex& K, const Complex& L) {
    if (K.is_void()) return L;
    if (L.is_void()) return K;
    auto [labels, offset] = merged_labels(K, L);
    std::vector<Face> faces = K.facets();
    for (const auto& g : L.facets()) faces.push_back(shifted(g, offset));
    return Complex::from_id_facets(std::move(faces), labels);
}

Complex join(const Complex& K, const Complex& L) {
    if (K.is_void() || L.is_void()) return Complex{};
    auto [labels, offset] = merged_labels(K, L);
    std::vector<Face> faces;
    for (const auto& f : K.facets())
        for (const auto& g : L.facets()) faces.push_back(f.united_with(shifted(g, offset)));
    return Complex::from_id_facets(std::move(faces), labels);
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_draw: empty range");
    // reject the low values that would bias x % bound
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

Complex random_complex(const RandomSpec& spec) {
    if (spec.facet_count < 1) throw std::invalid_argument("random_complex: facet_count must be >= 1");
    if (spec.max_dim < 0 || static_cast<std::size_t>(spec.max_dim) >= spec.n_vertices)
        throw std::invalid_argument("random_complex: need 0 <= max_dim < n_vertices");

    constexpr int kRetryBudget = 16;
    std::mt19937_64 rng(spec.seed);
    std::vector<Face> accepted;
    for (std::size_t f = 0; f < spec.facet_count; ++f) {
        for (int attempt = 0; attempt <= kRetryBudget; ++attempt) {
            const bool top = bounded_draw(rng, 2) == 0;
            const auto dim = top ? spec.max_dim
                                 : static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(spec.max_dim) + 1));
            // partial Fisher-Yates for a uniform (dim+1)-subset
            std::vector<VertexId> pool(spec.n_vertices);
            for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<VertexId>(i);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(dim); ++i) {
                const auto j = i + bounded_draw(rng, pool.size() - i);
                std::swap(pool[i], pool[j]);
            }
            Face draw(std::vector<VertexId>(pool.begin(), pool.begin() + dim + 1));
            const bool comparable = std::any_of(accepted.begin(), accepted.end(), [&](const Face& g) {
                return draw.is_subset_of(g) || g.is_subset_of(draw);
            });
            if (!comparable) {
                accepted.push_back(std::move(draw));
                break;
            }
        }
    }
    return Complex::from_id_facets(std::move(accepted), numeric_labels(spec.n_vertices));
}

std::vector<RandomSpec> random_corpus_specs(std::size_t count, std::uint64_t base_seed) {
    std::vector<RandomSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomSpec s;
        s.n_vertices = 4 + i % 5;
        const auto dim_span = std::min<std::size_t>(4, s.n_vertices - 1);
        s.max_dim = 1 + static_cast<int>((i / 5) % dim_span);
        s.facet_count = 2 + (i / 3) % 6;
        s.seed = base_seed + i;
        specs.push_back(s);
    }
    return specs;
}

std::vector<std::pair<std::string, Complex>> designed_fixtures() {
    const auto two_points = Complex::from_facets({{"p"}, {"q"}});
    const auto torus = [] {
        std::vector<std::vector<VertexId>> facets;
        for (VertexId i = 0; i < 7; ++i) {
            facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
            facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return from_index_facets(facets, 7);
    }();

    std::vector<std::pair<std::string, Complex>> out;
    out.emplace_back("point", simplex(0));
    for (int n = 1; n <= 5; ++n) out.emplace_back("simplex:" + std::to_string(n), simplex(n));
    for (int n = 2; n <= 5; ++n) out.emplace_back("boundary-simplex:" + std::to_string(n), boundary_simplex(n));
    out.emplace_back("cycle:3", cycle(3));
    out.emplace_back("cycle:5", cycle(5));
    out.emplace_back("bowtie", bowtie());
    out.emplace_back("two-triangles", disjoint_union(simplex(2), simplex(2)));
    out.emplace_back("triangle+edge", Complex::from_facets({{"a", "b", "c"}, {"d", "e"}}));
    out.emplace_back("triangle+whisker", Complex::from_facets({{"a", "b", "c"}, {"c", "d"}}));
    out.emplace_back("tetrahedron+triangle", Complex::from_facets({{"a", "b", "c", "d"}, {"d", "e", "f"}, {"e", "f", "g"}}));
    out.emplace_back("two-points", two_points);
    out.emplace_back("square", join(two_points, two_points));
    out.emplace_back("octahedron", join(join(two_points, two_points), two_points));
    out.emplace_back("suspended-triangle", join(cycle(3), two_points));
    out.emplace_back("rp2", rp2_minimal());
    out.emplace_back("cone-rp2", cone(rp2_minimal()));
    out.emplace_back("cone-bowtie", cone(bowtie()));
    out.emplace_back("rp2+edge", disjoint_union(rp2_minimal(), simplex(1)));
    out.emplace_back("torus", torus);
    return out;
}

}  // namespace serrecheck
