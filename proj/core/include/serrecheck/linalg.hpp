#ifndef SERRECHECK_LINALG_HPP
#define SERRECHECK_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace serrecheck {

/// Coefficient field: the rationals, or GF(p) for a word-size prime p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws std::invalid_argument unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    /// "q", "Q", "0" select the rationals; anything else must be a prime.
    static FieldSpec parse(std::string_view text);

    [[nodiscard]] bool is_rational() const { return characteristic_ == 0; }
    [[nodiscard]] std::uint64_t characteristic() const { return characteristic_; }
    /// "Q" or "GF(p)".
    [[nodiscard]] std::string name() const;
    /// "q" or the decimal prime; parse(token()) round-trips.
    [[nodiscard]] std::string token() const;

    auto operator<=>(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint64_t c) : characteristic_(c) {}
    std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// One stored entry of a SparseMatrix.
struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
    auto operator<=>(const MatrixEntry&) const = default;
};

/**
 * Integer sparse matrix. Entries are read in a field through the canonical
 * map Z -> F, so a single boundary matrix serves every coefficient field.
 * Stored entries are nonzero, in range, at unique positions, and kept in
 * (row, col) order.
 */
class SparseMatrix {
public:
    SparseMatrix() = default;
    /// Throws std::invalid_argument on out-of-range, duplicate, or zero entries.
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<MatrixEntry>& entries() const { return entries_; }
    [[nodiscard]] std::int64_t at(std::size_t r, std::size_t c) const;
    [[nodiscard]] SparseMatrix transpose() const;

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

/**
 * Exact rank of M over F.
 *
 * Sparse Gaussian elimination. The pivot column is the first column (by
 * index) among those with the fewest active nonzeros; within it the pivot
 * row is the shortest active row, lowest index first. Over GF(p) rows are
 * combined with modular inverses; over Q rows are combined fraction-free on
 * arbitrary-precision integers and divided by their content after each
 * update.
 */
std::size_t rank(const SparseMatrix& M, const FieldSpec& F);

}  // namespace serrecheck

#endif  // SERRECHECK_LINALG_HPP
