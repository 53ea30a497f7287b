#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qltc {

// Bit vector over GF(2), packed into 64-bit words. Carrier for codewords,
// syndromes and chain elements. Bits past `size` in the last word stay zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);
    static BitVector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    void xor_in(std::span<const std::uint64_t> other);
    std::size_t weight() const;
    bool is_zero() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix, bit-packed row-major. Matrices with 0 rows or 0
// columns are legal and act as identities of their shape under concatenation.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);
    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::span<const std::uint64_t> row(std::size_t r) const;
    std::span<std::uint64_t> row(std::size_t r);
    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    std::size_t total_weight() const;
    bool is_zero() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

BinaryMatrix transpose(const BinaryMatrix& m);
BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix vconcat(const BinaryMatrix& a, const BinaryMatrix& b);

// Syndrome map x -> Mx, length rows(m).
BitVector mat_vec(const BinaryMatrix& m, const BitVector& x);

std::size_t rank(const BinaryMatrix& m);

// Rows form a basis of { x : Mx = 0 }; row count = cols - rank.
BinaryMatrix kernel_basis(const BinaryMatrix& m);

// Reduced row echelon form. `matrix` keeps only the independent rows, fully
// reduced, with pivot columns strictly increasing; pivots are chosen first
// nonzero column left-to-right, first nonzero row top-down, so the output is
// deterministic.
struct Rref {
    BinaryMatrix matrix;
    std::vector<std::size_t> pivot_cols;
};
Rref reduced_row_echelon(const BinaryMatrix& m);

// h_prime = row_transform * h * P where P is the permutation matrix with
// P[col_permutation[j]][j] = 1, i.e. column j of h_prime is column
// col_permutation[j] of (row_transform * h). The left rows x rows block of
// h_prime is the identity.
struct StandardForm {
    BinaryMatrix h_prime;
    BinaryMatrix row_transform;
    std::vector<std::size_t> col_permutation;
};

// Requires the rows of h to be linearly independent; throws
// rank_deficient_error otherwise (drop dependent rows first).
StandardForm standard_form(const BinaryMatrix& h);

// M with columns permuted: result column j = m column perm[j].
BinaryMatrix apply_col_permutation(const BinaryMatrix& m, const std::vector<std::size_t>& perm);
// Inverse of the above: result column perm[j] = m column j.
BinaryMatrix undo_col_permutation(const BinaryMatrix& m, const std::vector<std::size_t>& perm);

bool in_row_space(const BinaryMatrix& m, const BitVector& v);

// Echelonized row space for repeated membership queries.
class RowSpace {
public:
    explicit RowSpace(const BinaryMatrix& m);
    std::size_t dimension() const { return ech_.rows(); }
    std::size_t ambient() const { return ech_.cols(); }
    const BinaryMatrix& basis() const { return ech_; }
    bool contains(std::span<const std::uint64_t> v) const;
    bool contains(const BitVector& v) const;

private:
    BinaryMatrix ech_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qltc
