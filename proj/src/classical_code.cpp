#include "qltc/classical_code.hpp"

#include <bit>
#include <deque>
#include <limits>
#include <random>

#include "qltc/errors.hpp"

namespace qltc {

namespace {

// Position of the bit flipped between Gray codes of i-1 and i.
std::size_t gray_flip(std::uint64_t i) { return static_cast<std::size_t>(std::countr_zero(i)); }

std::size_t span_weight(std::span<const std::uint64_t> w) {
    std::size_t total = 0;
    for (std::uint64_t x : w) total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

void span_xor(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

ClassicalCode::ClassicalCode(BinaryMatrix h) : h_(std::move(h)) {}

std::size_t ClassicalCode::rank() const {
    if (!rank_) rank_ = qltc::rank(h_);
    return *rank_;
}

std::size_t ClassicalCode::dimension() const { return length() - rank(); }

std::optional<std::size_t> classical_distance(const ClassicalCode& c, const Caps& caps) {
    const BinaryMatrix basis = kernel_basis(c.checks());
    const std::size_t k = basis.rows();
    if (k == 0) return std::nullopt;
    if (k >= 64 || (std::uint64_t{1} << k) > caps.max_enumeration)
        throw too_large_error("codeword enumeration 2^" + std::to_string(k) + " exceeds cap");
    std::vector<std::uint64_t> cur(basis.words_per_row(), 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        span_xor(cur, basis.row(gray_flip(i)));
        best = std::min(best, span_weight(cur));
    }
    return best;
}

std::optional<std::size_t> min_codeword_weight_search(const BinaryMatrix& h, const Caps& caps) {
    const std::size_t n = h.cols();
    if (rank(h) == n) return std::nullopt;  // only the zero codeword
    const BinaryMatrix cols = transpose(h);  // row j = syndrome of e_j
    const std::size_t words = cols.words_per_row();
    std::uint64_t budget = caps.max_enumeration;

    // Depth-first over supports of size w, keeping partial syndromes on a stack.
    std::vector<std::vector<std::uint64_t>> stack;
    std::vector<std::size_t> idx;
    for (std::size_t w = 1; w <= n; ++w) {
        stack.assign(w + 1, std::vector<std::uint64_t>(words, 0));
        idx.assign(w, 0);
        std::size_t depth = 0;
        idx[0] = 0;
        while (true) {
            if (budget-- == 0) throw too_large_error("weight search exceeded cap");
            if (idx[depth] + (w - depth) > n) {
                if (depth == 0) break;
                --depth;
                ++idx[depth];
                continue;
            }
            stack[depth + 1] = stack[depth];
            span_xor(stack[depth + 1], cols.row(idx[depth]));
            if (depth + 1 == w) {
                bool zero = true;
                for (std::uint64_t x : stack[w])
                    if (x) { zero = false; break; }
                if (zero) return w;
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = idx[depth - 1] + 1;
            }
        }
    }
    return std::nullopt;  // unreachable for k > 0
}

// ---------------------------------------------------------------------------
// CosetLeaderTable

CosetLeaderTable CosetLeaderTable::build(const BinaryMatrix& h, const Caps& caps) {
    CosetLeaderTable t;
    t.m_ = h.rows();
    const BinaryMatrix cols = transpose(h);  // row j = He_j as a length-m vector

    // Echelonized basis of the column space of H (the syndrome image).
    Rref red = reduced_row_echelon(cols);
    t.image_basis_ = std::move(red.matrix);
    t.pivot_bits_ = std::move(red.pivot_cols);
    const std::size_t r = t.pivot_bits_.size();
    if (r >= 32 || (std::uint64_t{1} << r) > caps.max_table)
        throw too_large_error("coset table 2^" + std::to_string(r) + " exceeds cap");

    // Coordinates of each column syndrome.
    std::vector<std::uint32_t> col_coords(h.cols(), 0);
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (cols.get(j, t.pivot_bits_[i])) c |= std::uint32_t{1} << i;
        col_coords[j] = c;
    }

    const std::size_t table = std::size_t{1} << r;
    t.leader_.assign(table, std::numeric_limits<std::uint16_t>::max());
    t.leader_[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        const std::uint16_t next = static_cast<std::uint16_t>(t.leader_[cur] + 1);
        for (std::uint32_t cc : col_coords) {
            const std::uint32_t nb = cur ^ cc;
            if (t.leader_[nb] > next) {
                t.leader_[nb] = next;
                queue.push_back(nb);
            }
        }
    }
    return t;
}

std::uint32_t CosetLeaderTable::coords_of(const BitVector& syndrome, bool* in_image) const {
    if (syndrome.size() != m_) throw shape_error("syndrome length mismatch");
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < pivot_bits_.size(); ++i)
        if (syndrome.get(pivot_bits_[i])) c |= std::uint32_t{1} << i;
    if (in_image) {
        // Residual must vanish for s to lie in im(H).
        std::vector<std::uint64_t> tmp(syndrome.words().begin(), syndrome.words().end());
        for (std::size_t i = 0; i < pivot_bits_.size(); ++i)
            if ((c >> i) & 1u) span_xor(tmp, image_basis_.row(i));
        *in_image = true;
        for (std::uint64_t w : tmp)
            if (w) *in_image = false;
    }
    return c;
}

bool CosetLeaderTable::contains(const BitVector& syndrome) const {
    bool in_image = false;
    coords_of(syndrome, &in_image);
    return in_image;
}

std::size_t CosetLeaderTable::leader_weight(const BitVector& syndrome) const {
    bool in_image = false;
    const std::uint32_t c = coords_of(syndrome, &in_image);
    if (!in_image) throw bad_parameter_error("syndrome outside im(H)");
    return leader_[c];
}

void CosetLeaderTable::for_each(const std::function<void(std::size_t, std::size_t)>& fn) const {
    const std::size_t r = pivot_bits_.size();
    std::vector<std::uint64_t> cur(image_basis_.words_per_row(), 0);
    fn(0, 0);
    const std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t i = 1; i < total; ++i) {
        span_xor(cur, image_basis_.row(gray_flip(i)));
        const std::uint64_t gray = i ^ (i >> 1);
        fn(span_weight(cur), leader_[static_cast<std::uint32_t>(gray)]);
    }
}

// ---------------------------------------------------------------------------
// soundness

const char* soundness_method_name(SoundnessMethod m) {
    switch (m) {
        case SoundnessMethod::ExactExhaustive: return "exact-exhaustive";
        case SoundnessMethod::Sampled: return "sampled";
        case SoundnessMethod::CssReduction: return "css-reduction";
    }
    return "?";
}

SoundnessInterval classical_soundness_exact(const ClassicalCode& c, const Caps& caps) {
    const CosetLeaderTable table = CosetLeaderTable::build(c.checks(), caps);
    if (table.image_rank() == 0) throw trivial_code_error("im(H) = {0}: soundness undefined");
    // min over nonzero syndromes of |s| / leader(s)
    std::int64_t bn = -1, bd = 1;
    table.for_each([&](std::size_t sw, std::size_t lw) {
        if (lw == 0) return;  // zero syndrome
        const auto n = static_cast<std::int64_t>(sw);
        const auto d = static_cast<std::int64_t>(lw);
        if (bn < 0 || static_cast<__int128>(n) * bd < static_cast<__int128>(bn) * d) {
            bn = n;
            bd = d;
        }
    });
    const Rational rho = Rational(static_cast<std::int64_t>(c.length()),
                                  static_cast<std::int64_t>(c.check_count())) *
                         Rational(bn, bd);
    return {rho, rho, SoundnessMethod::ExactExhaustive};
}

SoundnessInterval classical_soundness_sampled(const ClassicalCode& c, std::uint64_t trials,
                                              std::uint64_t seed, const Caps& caps) {
    if (trials == 0) throw bad_parameter_error("trials must be >= 1");
    const CosetLeaderTable table = CosetLeaderTable::build(c.checks(), caps);
    if (table.image_rank() == 0) throw trivial_code_error("im(H) = {0}: soundness undefined");
    std::mt19937_64 rng(seed);
    const std::size_t n = c.length();
    std::optional<Rational> best;
    for (std::uint64_t t = 0; t < trials; ++t) {
        BitVector x(n);
        BitVector s(0);
        do {
            for (std::size_t w = 0; w < x.word_count(); ++w) x.words()[w] = rng();
            if (n % 64) x.words()[x.word_count() - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
            s = mat_vec(c.checks(), x);
        } while (s.is_zero());  // words in the code carry no information
        const Rational ratio = Rational(static_cast<std::int64_t>(n),
                                        static_cast<std::int64_t>(c.check_count())) *
                               Rational(static_cast<std::int64_t>(s.weight()),
                                        static_cast<std::int64_t>(table.leader_weight(s)));
        if (!best || ratio < *best) best = ratio;
    }
    return {Rational(0), *best, SoundnessMethod::Sampled};
}

}  // namespace qltc
