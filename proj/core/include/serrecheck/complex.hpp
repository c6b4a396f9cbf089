#ifndef SERRECHECK_COMPLEX_HPP
#define SERRECHECK_COMPLEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace serrecheck {

/// Dense vertex index, 0..n-1 within one Complex.
using VertexId = std::uint32_t;

/// Dimension reported for the void complex (the complex with no faces).
inline constexpr int kVoidDim = -2;

/**
 * A face: a strictly increasing list of vertex ids. The empty face has
 * dimension -1 and is an ordinary value.
 *
 * Faces compare lexicographically on their vertex lists.
 */
class Face {
public:
    Face() = default;
    Face(std::initializer_list<VertexId> vertices);
    /// Sorts and deduplicates.
    explicit Face(std::vector<VertexId> vertices);

    [[nodiscard]] int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] bool empty() const { return vertices_.empty(); }
    [[nodiscard]] std::span<const VertexId> vertices() const { return vertices_; }
    [[nodiscard]] VertexId operator[](std::size_t i) const { return vertices_[i]; }

    [[nodiscard]] bool contains(VertexId v) const;
    [[nodiscard]] bool is_subset_of(const Face& other) const;
    [[nodiscard]] bool is_disjoint_from(const Face& other) const;

    /// Vertices of this face not in `other`.
    [[nodiscard]] Face minus(const Face& other) const;
    [[nodiscard]] Face united_with(const Face& other) const;
    /// The face with its i-th smallest vertex deleted.
    [[nodiscard]] Face without_index(std::size_t i) const;

    auto operator<=>(const Face&) const = default;
    bool operator==(const Face&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// Orders faces by dimension first, then lexicographically.
struct DimLexLess {
    bool operator()(const Face& a, const Face& b) const {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a < b;
    }
};

/**
 * Immutable finite abstract simplicial complex.
 *
 * Stored as the antichain of its facets, sorted lexicographically. Vertex
 * ids are dense and every id occurs in some facet; each id keeps the string
 * label it was read with. The void complex (no faces) and the complex {∅}
 * (whose only facet is the empty face) are distinct values.
 *
 * Faces of a given dimension are enumerated on first request and cached.
 * The cache is shared between copies and is safe for concurrent readers.
 */
class Complex {
public:
    /// The void complex.
    Complex();

    /// Canonicalizes raw facet lists given as labels. Tokens get ids in
    /// first-seen order; duplicate and dominated faces are dropped.
    static Complex from_facets(const std::vector<std::vector<std::string>>& raw);

    /**
     * Builds a complex from faces over an existing label table. Ids that do
     * not occur in any resulting facet are dropped and the rest renumbered
     * in increasing order, so relative vertex order (and hence lexicographic
     * face order) is preserved.
     */
    static Complex from_id_facets(std::vector<Face> faces, std::span<const std::string> labels);

    /// The complex {∅}.
    static Complex empty_face_complex();

    [[nodiscard]] bool is_void() const { return facets_.empty(); }
    /// Max facet dimension; -1 for {∅}; kVoidDim for the void complex.
    [[nodiscard]] int dim() const;
    [[nodiscard]] std::size_t n_vertices() const { return labels_.size(); }
    [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(VertexId v) const { return labels_.at(v); }
    [[nodiscard]] std::vector<std::string> labels_of(const Face& f) const;

    /// Lexicographically sorted i-faces. faces(-1) is {∅} for non-void complexes.
    [[nodiscard]] const std::vector<Face>& faces(int i) const;
    [[nodiscard]] std::size_t face_count(int i) const { return faces(i).size(); }
    /// f-vector indexed from degree -1.
    [[nodiscard]] std::vector<std::size_t> f_vector() const;

    [[nodiscard]] bool contains(const Face& f) const;

    /// Equality of labelled structure: same vertex labels spanning the same
    /// facets. Id assignment is not compared.
    friend bool operator==(const Complex& a, const Complex& b);

private:
    struct FaceCache {
        std::mutex mutex;
        std::map<int, std::vector<Face>> by_dim;
    };

    std::vector<Face> facets_;
    std::vector<std::string> labels_;
    std::shared_ptr<FaceCache> cache_;
};

/// { τ : τ ∩ σ = ∅, τ ∪ σ ∈ K }. Throws std::invalid_argument if σ ∉ K.
Complex link(const Complex& K, const Face& sigma);

/// Subcomplex generated by the m-faces of K. Requires 0 <= m <= dim K.
Complex pure_skeleton(const Complex& K, int m);

/// Subcomplex generated by facets of dimension >= m. Requires 0 <= m <= dim K.
Complex facet_closure(const Complex& K, int m);

/// The ordinary m-skeleton: all faces of dimension <= m. Requires m >= -1.
Complex skeleton(const Complex& K, int m);

/// All facets have dimension dim K. Requires K non-void.
bool is_pure(const Complex& K);

/// Applies the vertex permutation old id i -> perm[i]; labels travel with
/// their vertices.
Complex relabel(const Complex& K, std::span<const VertexId> perm);

/// The same face expressed in another complex's ids, matched by label.
/// Throws std::invalid_argument if some vertex label is missing from `to`.
Face translate_face(const Complex& from, const Face& f, const Complex& to);

/// Facets rendered as label lists, for diagnostics.
std::string to_string(const Complex& K);
std::string to_string(const Complex& K, const Face& f);
std::ostream& operator<<(std::ostream& os, const Complex& K);
std::ostream& operator<<(std::ostream& os, const Face& f);

}  // namespace serrecheck

#endif  // SERRECHECK_COMPLEX_HPP
