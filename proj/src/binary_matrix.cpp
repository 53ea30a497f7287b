#include "qltc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qltc/errors.hpp"

namespace qltc {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::size_t span_weight(std::span<const std::uint64_t> w) {
    std::size_t total = 0;
    for (std::uint64_t x : w) total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

void span_xor(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}
}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

bool BitVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

void BitVector::xor_in(std::span<const std::uint64_t> other) { span_xor(words_, other); }

std::size_t BitVector::weight() const { return span_weight(words_); }

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    BinaryMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw shape_error("ragged row list");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j]) m.set(i, j, true);
    }
    return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (v)
        bits_[r * wpr_ + c / kWordBits] |= mask;
    else
        bits_[r * wpr_ + c / kWordBits] &= ~mask;
}

std::span<const std::uint64_t> BinaryMatrix::row(std::size_t r) const {
    return {bits_.data() + r * wpr_, wpr_};
}

std::span<std::uint64_t> BinaryMatrix::row(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }

BitVector BinaryMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(bits_.data() + r * wpr_, wpr_, v.words().data());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw shape_error("row length mismatch");
    std::copy_n(v.words().data(), wpr_, bits_.data() + r * wpr_);
}

void BinaryMatrix::xor_row(std::size_t dst, std::size_t src) {
    auto* d = bits_.data() + dst * wpr_;
    const auto* s = bits_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(bits_.begin() + a * wpr_, bits_.begin() + (a + 1) * wpr_, bits_.begin() + b * wpr_);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const { return span_weight(row(r)); }

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_; ++r) total += get(r, c);
    return total;
}

std::size_t BinaryMatrix::total_weight() const { return span_weight(bits_); }

bool BinaryMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BinaryMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

// ---------------------------------------------------------------------------
// free operations

BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) t.set(c, r, true);
    return t;
}

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw shape_error("mat_mul inner dimensions disagree");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        for (std::size_t i = 0; i < a.cols(); ++i)
            if (a.get(r, i)) span_xor(dst, b.row(i));
    }
    return out;
}

BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b) {
    BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (!a.get(i1, j1)) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    if (b.get(i2, j2)) out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, true);
        }
    return out;
}

BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows()) throw shape_error("hconcat row counts disagree");
    BinaryMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
    return out;
}

BinaryMatrix vconcat(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw shape_error("vconcat column counts disagree");
    BinaryMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        span_xor(dst, a.row(r));
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        auto dst = out.row(a.rows() + r);
        span_xor(dst, b.row(r));
    }
    return out;
}

BitVector mat_vec(const BinaryMatrix& m, const BitVector& x) {
    if (x.size() != m.cols()) throw shape_error("mat_vec length mismatch");
    BitVector s(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        auto row = m.row(r);
        auto xs = x.words();
        for (std::size_t i = 0; i < row.size(); ++i) acc ^= row[i] & xs[i];
        if (std::popcount(acc) & 1) s.set(r, true);
    }
    return s;
}

Rref reduced_row_echelon(const BinaryMatrix& m) {
    BinaryMatrix work = m;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    std::size_t next = 0;
    for (std::size_t c = 0; c < work.cols() && next < work.rows(); ++c) {
        std::size_t sel = next;
        while (sel < work.rows() && !work.get(sel, c)) ++sel;
        if (sel == work.rows()) continue;
        work.swap_rows(sel, next);
        for (std::size_t r = 0; r < work.rows(); ++r)
            if (r != next && work.get(r, c)) work.xor_row(r, next);
        pivot_cols.push_back(c);
        pivot_rows.push_back(next);
        ++next;
    }
    BinaryMatrix out(pivot_cols.size(), m.cols());
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        auto dst = out.row(i);
        span_xor(dst, work.row(i));
    }
    return {std::move(out), std::move(pivot_cols)};
}

std::size_t rank(const BinaryMatrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    const Rref red = reduced_row_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    BinaryMatrix basis(n - red.pivot_cols.size(), n);
    std::size_t out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.set(out, c, true);
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
            if (red.matrix.get(i, c)) basis.set(out, red.pivot_cols[i], true);
        ++out;
    }
    return basis;
}

StandardForm standard_form(const BinaryMatrix& h) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    BinaryMatrix work = h;
    BinaryMatrix g = BinaryMatrix::identity(m);
    std::vector<std::size_t> pivot_cols;
    std::size_t next = 0;
    for (std::size_t c = 0; c < n && next < m; ++c) {
        std::size_t sel = next;
        while (sel < m && !work.get(sel, c)) ++sel;
        if (sel == m) continue;
        work.swap_rows(sel, next);
        g.swap_rows(sel, next);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != next && work.get(r, c)) {
                work.xor_row(r, next);
                g.xor_row(r, next);
            }
        }
        pivot_cols.push_back(c);
        ++next;
    }
    if (pivot_cols.size() < m) throw rank_deficient_error("rows are linearly dependent");

    std::vector<std::size_t> perm;
    perm.reserve(n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c : pivot_cols) perm.push_back(c);
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) perm.push_back(c);

    return {apply_col_permutation(work, perm), std::move(g), std::move(perm)};
}

BinaryMatrix apply_col_permutation(const BinaryMatrix& m, const std::vector<std::size_t>& perm) {
    if (perm.size() != m.cols()) throw shape_error("permutation length mismatch");
    BinaryMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(r, perm[j])) out.set(r, j, true);
    return out;
}

BinaryMatrix undo_col_permutation(const BinaryMatrix& m, const std::vector<std::size_t>& perm) {
    if (perm.size() != m.cols()) throw shape_error("permutation length mismatch");
    BinaryMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(r, j)) out.set(r, perm[j], true);
    return out;
}

RowSpace::RowSpace(const BinaryMatrix& m) {
    Rref red = reduced_row_echelon(m);
    ech_ = std::move(red.matrix);
    pivots_ = std::move(red.pivot_cols);
}

bool RowSpace::contains(std::span<const std::uint64_t> v) const {
    std::vector<std::uint64_t> tmp(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((tmp[p / 64] >> (p % 64)) & 1u) span_xor(tmp, ech_.row(i));
    }
    return std::all_of(tmp.begin(), tmp.end(), [](std::uint64_t w) { return w == 0; });
}

bool RowSpace::contains(const BitVector& v) const {
    if (v.size() != ech_.cols()) throw shape_error("membership length mismatch");
    return contains(v.words());
}

bool in_row_space(const BinaryMatrix& m, const BitVector& v) { return RowSpace(m).contains(v); }

}  // namespace qltc
