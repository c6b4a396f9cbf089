#include "serrecheck/linalg.hpp"

#include <gmp.h>
#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <utility>

namespace serrecheck {

// ---------------------------------------------------------------- FieldSpec

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    // GMP's BPSW test has no known counterexample below 2^64.
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q" || text == "0") return rationals();
    std::uint64_t p = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, p);
    if (ec != std::errc() || ptr != end || text.empty())
        throw std::invalid_argument("unrecognized field '" + std::string(text) + "'");
    return prime(p);
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

std::string FieldSpec::token() const {
    return is_rational() ? "q" : std::to_string(characteristic_);
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.row >= rows_ || e.col >= cols_) throw std::invalid_argument("matrix entry out of range");
        if (e.value == 0) throw std::invalid_argument("matrix entry is zero");
        if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
            throw std::invalid_argument("duplicate matrix entry");
    }
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{r, c, std::numeric_limits<std::int64_t>::min()});
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return 0;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
}

// ---------------------------------------------------------------- elimination

namespace {

template <class T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

class ModP {
public:
    using Value = std::uint64_t;

    explicit ModP(std::uint64_t p) : p_(p) {}

    [[nodiscard]] Value from_int(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())
                                                     ? 0
                                                     : p_);
        if (m == 0) {
            // p exceeds int64 range, so v is already a canonical residue up to sign
            return v >= 0 ? static_cast<Value>(v) : p_ - static_cast<Value>(-(v + 1)) - 1;
        }
        auto r = v % m;
        if (r < 0) r += m;
        return static_cast<Value>(r);
    }

    [[nodiscard]] bool is_zero(const Value& v) const { return v == 0; }

    // target <- target - (target[c] / pivot[c]) * pivot
    [[nodiscard]] Row<Value> combine(const Row<Value>& target, const Value& t_c, const Row<Value>& pivot,
                                     const Value& p_c) const {
        const Value factor = mul(t_c, inverse(p_c));
        Row<Value> out;
        out.reserve(target.size() + pivot.size());
        auto a = target.begin();
        auto b = pivot.begin();
        while (a != target.end() || b != pivot.end()) {
            if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == target.end() || b->first < a->first) {
                out.emplace_back(b->first, sub(0, mul(factor, b->second)));
                ++b;
            } else {
                Value v = sub(a->second, mul(factor, b->second));
                if (v != 0) out.emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
        return out;
    }

private:
    [[nodiscard]] Value mul(Value a, Value b) const {
        return static_cast<Value>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    [[nodiscard]] Value sub(Value a, Value b) const { return a >= b ? a - b : p_ - (b - a); }
    [[nodiscard]] Value inverse(Value a) const {
        // Fermat: a^(p-2)
        Value result = 1;
        Value base = a;
        Value e = p_ - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    std::uint64_t p_;
};

class FractionFree {
public:
    using Value = mpz_class;

    [[nodiscard]] Value from_int(std::int64_t v) const { return Value(static_cast<long>(v)); }
    [[nodiscard]] bool is_zero(const Value& v) const { return sgn(v) == 0; }

    // target <- pivot[c] * target - target[c] * pivot, divided by its content
    [[nodiscard]] Row<Value> combine(const Row<Value>& target, const Value& t_c, const Row<Value>& pivot,
                                     const Value& p_c) const {
        Row<Value> out;
        out.reserve(target.size() + pivot.size());
        auto a = target.begin();
        auto b = pivot.begin();
        while (a != target.end() || b != pivot.end()) {
            if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
                out.emplace_back(a->first, p_c * a->second);
                ++a;
            } else if (a == target.end() || b->first < a->first) {
                out.emplace_back(b->first, -(t_c * b->second));
                ++b;
            } else {
                Value v = p_c * a->second - t_c * b->second;
                if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        if (!out.empty()) {
            Value g = 0;
            for (const auto& [col, v] : out) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                if (g == 1) break;
            }
            if (g > 1)
                for (auto& [col, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
        return out;
    }
};

template <class Policy>
std::size_t eliminate(const SparseMatrix& M, const Policy& field) {
    using Value = typename Policy::Value;
    const std::size_t n_rows = M.rows();
    const std::size_t n_cols = M.cols();

    std::vector<Row<Value>> rows(n_rows);
    for (const auto& e : M.entries()) {
        Value v = field.from_int(e.value);
        if (!field.is_zero(v)) rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), std::move(v));
    }

    std::vector<std::size_t> col_count(n_cols, 0);
    std::vector<std::vector<std::size_t>> col_rows(n_cols);  // may hold stale or repeated rows
    for (std::size_t r = 0; r < n_rows; ++r)
        for (const auto& [c, v] : rows[r]) {
            ++col_count[c];
            col_rows[c].push_back(r);
        }

    std::vector<bool> active(n_rows, true);
    std::vector<std::size_t> stamp(n_rows, 0);
    std::size_t epoch = 0;
    std::size_t rank = 0;

    auto value_at = [&](const Row<Value>& row, std::uint32_t c) -> const Value* {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& entry, std::uint32_t col) { return entry.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    };

    while (true) {
        std::size_t best = n_cols;
        for (std::size_t c = 0; c < n_cols; ++c)
            if (col_count[c] > 0 && (best == n_cols || col_count[c] < col_count[best])) best = c;
        if (best == n_cols) break;
        const auto c = static_cast<std::uint32_t>(best);

        ++epoch;
        std::vector<std::size_t> candidates;
        for (std::size_t r : col_rows[c]) {
            if (!active[r] || stamp[r] == epoch) continue;
            stamp[r] = epoch;
            if (value_at(rows[r], c)) candidates.push_back(r);
        }
        std::sort(candidates.begin(), candidates.end());
        col_rows[c] = candidates;

        std::size_t pivot = candidates.front();
        for (std::size_t r : candidates)
            if (rows[r].size() < rows[pivot].size()) pivot = r;
        const Value p_c = *value_at(rows[pivot], c);

        for (std::size_t r : candidates) {
            if (r == pivot) continue;
            const Value t_c = *value_at(rows[r], c);
            Row<Value> updated = field.combine(rows[r], t_c, rows[pivot], p_c);

            for (const auto& [col, v] : rows[r]) --col_count[col];
            auto old = rows[r].begin();
            for (const auto& [col, v] : updated) {
                ++col_count[col];
                while (old != rows[r].end() && old->first < col) ++old;
                if (old == rows[r].end() || old->first != col) col_rows[col].push_back(r);
            }
            rows[r] = std::move(updated);
        }

        active[pivot] = false;
        for (const auto& [col, v] : rows[pivot]) --col_count[col];
        rows[pivot].clear();
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& M, const FieldSpec& F) {
    if (M.entries().empty()) return 0;
    if (F.is_rational()) return eliminate(M, FractionFree{});
    return eliminate(M, ModP{F.characteristic()});
}

}  // namespace serrecheck
