#include "serrecheck/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace serrecheck {

// ---------------------------------------------------------------- Face

Face::Face(std::initializer_list<VertexId> vertices) : Face(std::vector<VertexId>(vertices)) {}

Face::Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Face::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Face::is_disjoint_from(const Face& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Face Face::minus(const Face& other) const {
    Face out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Face Face::united_with(const Face& other) const {
    Face out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out.vertices_));
    return out;
}

Face Face::without_index(std::size_t i) const {
    Face out;
    out.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i) out.vertices_.push_back(vertices_[j]);
    return out;
}

// ---------------------------------------------------------------- Complex

namespace {

// Drops duplicates and faces contained in another face.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });

    std::vector<Face> kept;
    kept.reserve(faces.size());
    for (auto& f : faces) {
        bool dominated = false;
        for (const auto& g : kept) {
            if (g.size() == f.size()) break;  // kept is size-descending
            if (f.is_subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void append_combinations(const Face& facet, std::size_t k, std::vector<Face>& out) {
    const auto n = facet.size();
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<VertexId> buf(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) buf[i] = facet[idx[i]];
        out.emplace_back(buf);
        // advance to the next k-subset in lexicographic index order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Complex::Complex() : cache_(std::make_shared<FaceCache>()) {}

Complex Complex::empty_face_complex() {
    Complex K;
    K.facets_.emplace_back();
    return K;
}

Complex Complex::from_facets(const std::vector<std::vector<std::string>>& raw) {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> labels;
    std::vector<Face> faces;
    faces.reserve(raw.size());
    for (const auto& tokens : raw) {
        std::vector<VertexId> verts;
        verts.reserve(tokens.size());
        for (const auto& t : tokens) {
            auto [it, inserted] = ids.try_emplace(t, static_cast<VertexId>(labels.size()));
            if (inserted) labels.push_back(t);
            verts.push_back(it->second);
        }
        faces.emplace_back(std::move(verts));
    }
    return from_id_facets(std::move(faces), labels);
}

Complex Complex::from_id_facets(std::vector<Face> faces, std::span<const std::string> labels) {
    Complex K;
    auto facets = maximal_faces(std::move(faces));

    std::vector<VertexId> used;
    for (const auto& f : facets)
        for (VertexId v : f.vertices()) {
            if (v >= labels.size()) throw std::out_of_range("vertex id without a label");
            used.push_back(v);
        }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<VertexId> remap(labels.size(), 0);
    K.labels_.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) {
        remap[used[i]] = static_cast<VertexId>(i);
        K.labels_.push_back(labels[used[i]]);
    }

    K.facets_.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<VertexId> verts;
        verts.reserve(f.size());
        for (VertexId v : f.vertices()) verts.push_back(remap[v]);
        K.facets_.emplace_back(std::move(verts));
    }
    // monotone renumbering keeps the lexicographic order intact
    return K;
}

int Complex::dim() const {
    if (facets_.empty()) return kVoidDim;
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dim());
    return d;
}

std::vector<std::string> Complex::labels_of(const Face& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (VertexId v : f.vertices()) out.push_back(labels_.at(v));
    return out;
}

const std::vector<Face>& Complex::faces(int i) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_dim.find(i);
    if (it != cache_->by_dim.end()) return it->second;

    std::vector<Face> out;
    if (!is_void() && i >= -1) {
        if (i == -1) {
            out.emplace_back();
        } else {
            const auto k = static_cast<std::size_t>(i + 1);
            for (const auto& f : facets_) append_combinations(f, k, out);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    }
    return cache_->by_dim.emplace(i, std::move(out)).first->second;
}

std::vector<std::size_t> Complex::f_vector() const {
    std::vector<std::size_t> f;
    for (int i = -1; i <= dim(); ++i) f.push_back(face_count(i));
    return f;
}

bool Complex::contains(const Face& f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return f.is_subset_of(g); });
}

bool operator==(const Complex& a, const Complex& b) {
    if (a.facets_.size() != b.facets_.size() || a.labels_.size() != b.labels_.size())
        return false;
    auto labelled = [](const Complex& K) {
        std::set<std::vector<std::string>> out;
        for (const auto& f : K.facets_) {
            auto names = K.labels_of(f);
            std::sort(names.begin(), names.end());
            out.insert(std::move(names));
        }
        return out;
    };
    return labelled(a) == labelled(b);
}

// ---------------------------------------------------------------- operators

Complex link(const Complex& K, const Face& sigma) {
    if (!K.contains(sigma))
        throw std::invalid_argument("link: face " + to_string(K, sigma) + " is not in the complex");
    std::vector<Face> parts;
    for (const auto& f : K.facets())
        if (sigma.is_subset_of(f)) parts.push_back(f.minus(sigma));
    return Complex::from_id_facets(std::move(parts), K.labels());
}

namespace {

void require_dimension_index(const Complex& K, int m, const char* what) {
    if (m < 0 || m > K.dim())
        throw std::invalid_argument(std::string(what) + ": m = " + std::to_string(m) +
                                    " outside [0, " + std::to_string(K.dim()) + "]");
}

}  // namespace

Complex pure_skeleton(const Complex& K, int m) {
    require_dimension_index(K, m, "pure_skeleton");
    return Complex::from_id_facets(K.faces(m), K.labels());
}

Complex facet_closure(const Complex& K, int m) {
    require_dimension_index(K, m, "facet_closure");
    std::vector<Face> kept;
    for (const auto& f : K.facets())
        if (f.dim() >= m) kept.push_back(f);
    return Complex::from_id_facets(std::move(kept), K.labels());
}

Complex skeleton(const Complex& K, int m) {
    if (m < -1) throw std::invalid_argument("skeleton: m must be >= -1");
    if (K.is_void()) return K;
    std::vector<Face> kept = K.faces(m);
    for (const auto& f : K.facets())
        if (f.dim() < m) kept.push_back(f);
    return Complex::from_id_facets(std::move(kept), K.labels());
}

bool is_pure(const Complex& K) {
    if (K.is_void()) throw std::invalid_argument("is_pure: void complex");
    const int d = K.dim();
    return std::all_of(K.facets().begin(), K.facets().end(),
                       [d](const Face& f) { return f.dim() == d; });
}

Complex relabel(const Complex& K, std::span<const VertexId> perm) {
    const auto n = K.n_vertices();
    if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::string> labels(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || hit[perm[i]]) throw std::invalid_argument("relabel: not a permutation");
        hit[perm[i]] = true;
        labels[perm[i]] = K.labels()[i];
    }
    std::vector<Face> faces;
    for (const auto& f : K.facets()) {
        std::vector<VertexId> verts;
        for (VertexId v : f.vertices()) verts.push_back(perm[v]);
        faces.emplace_back(std::move(verts));
    }
    return Complex::from_id_facets(std::move(faces), labels);
}

Face translate_face(const Complex& from, const Face& f, const Complex& to) {
    std::vector<VertexId> verts;
    verts.reserve(f.size());
    for (VertexId v : f.vertices()) {
        const auto& name = from.label(v);
        const auto& target = to.labels();
        auto it = std::find(target.begin(), target.end(), name);
        if (it == target.end()) throw std::invalid_argument("translate_face: no vertex labelled '" + name + "'");
        verts.push_back(static_cast<VertexId>(it - target.begin()));
    }
    return Face(std::move(verts));
}

std::string to_string(const Complex& K, const Face& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ' ';
        os << (f[i] < K.n_vertices() ? K.label(f[i]) : "#" + std::to_string(f[i]));
    }
    os << '}';
    return os.str();
}

std::string to_string(const Complex& K) {
    if (K.is_void()) return "void";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < K.facets().size(); ++i) {
        if (i) os << ", ";
        os << to_string(K, K.facets()[i]);
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Complex& K) { return os << to_string(K); }

std::ostream& operator<<(std::ostream& os, const Face& f) {
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    return os << ']';
}

}  // namespace serrecheck
