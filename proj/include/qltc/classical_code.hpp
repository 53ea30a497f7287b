#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qltc/binary_matrix.hpp"
#include "qltc/rational.hpp"

namespace qltc {

// Work limits for the exact oracles. Enumerations and coset tables refuse to
// exceed these and throw too_large_error instead.
struct Caps {
    std::uint64_t max_enumeration = std::uint64_t{1} << 24;
    std::uint64_t max_table = std::uint64_t{1} << 24;
};

// A classical linear code given by its parity-check matrix. Redundant rows
// are kept: soundness normalizes by the literal check count m.
class ClassicalCode {
public:
    explicit ClassicalCode(BinaryMatrix h);

    const BinaryMatrix& checks() const { return h_; }
    std::size_t length() const { return h_.cols(); }       // n
    std::size_t check_count() const { return h_.rows(); }  // m
    std::size_t rank() const;
    std::size_t dimension() const;  // k = n - rank

private:
    BinaryMatrix h_;
    mutable std::optional<std::size_t> rank_;
};

// Minimum weight over nonzero codewords, enumerated over the 2^k kernel span.
// nullopt means the code is trivial (k = 0, distance infinite).
std::optional<std::size_t> classical_distance(const ClassicalCode& c, const Caps& caps = {});

// Minimum weight over nonzero codewords found by searching words of
// increasing weight; independent of the kernel-enumeration route above.
std::optional<std::size_t> min_codeword_weight_search(const BinaryMatrix& h, const Caps& caps = {});

// Leader weights for every syndrome in im(H), keyed internally by coordinates
// in an echelon basis of the image; built by breadth-first search over
// syndrome space (leader(s ^ He_j) <= leader(s) + 1).
class CosetLeaderTable {
public:
    static CosetLeaderTable build(const BinaryMatrix& h, const Caps& caps = {});

    std::size_t image_rank() const { return pivot_bits_.size(); }
    std::size_t syndrome_length() const { return m_; }
    std::size_t size() const { return leader_.size(); }  // 2^rank entries

    bool contains(const BitVector& syndrome) const;
    std::size_t leader_weight(const BitVector& syndrome) const;

    // Visits every syndrome in im(H): fn(syndrome_weight, leader_weight).
    // Gray-code order over the image basis, zero syndrome included.
    void for_each(const std::function<void(std::size_t, std::size_t)>& fn) const;

private:
    std::size_t m_ = 0;
    BinaryMatrix image_basis_;             // echelonized basis of im(H), one row per coordinate
    std::vector<std::size_t> pivot_bits_;  // syndrome bit giving each coordinate
    std::vector<std::uint16_t> leader_;    // indexed by coordinates
    std::uint32_t coords_of(const BitVector& syndrome, bool* in_image) const;
};

enum class SoundnessMethod { ExactExhaustive, Sampled, CssReduction };
const char* soundness_method_name(SoundnessMethod m);

struct SoundnessInterval {
    Rational lower;
    Rational upper;
    SoundnessMethod method = SoundnessMethod::ExactExhaustive;
};

// Largest rho with |Hx|/m >= (rho/n) d(x,C) for all x, computed over
// syndromes: rho = (n/m) * min over nonzero s in im(H) of |s| / leader(s).
// Throws trivial_code_error when im(H) = {0}.
SoundnessInterval classical_soundness_exact(const ClassicalCode& c, const Caps& caps = {});

// Monte Carlo upper bound: min observed ratio over `trials` sampled words
// outside the code. lower stays 0 (sampling proves no lower bound).
SoundnessInterval classical_soundness_sampled(const ClassicalCode& c, std::uint64_t trials,
                                              std::uint64_t seed, const Caps& caps = {});

}  // namespace qltc
