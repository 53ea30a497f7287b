#include "qltc/css_code.hpp"

#include <bit>
#include <limits>

#include "qltc/errors.hpp"

namespace qltc {

namespace {

std::size_t span_weight(std::span<const std::uint64_t> w) {
    std::size_t total = 0;
    for (std::uint64_t x : w) total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

void span_xor(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

// min weight in ker(checks) \ rowspace(stabs); both matrices share the column
// count. Kernel route: enumerate ker(checks) over a basis split into
// stabilizer rows and logical representatives; a combination is a logical
// operator iff it touches at least one representative.
std::optional<std::size_t> logical_min_weight(const BinaryMatrix& checks, const BinaryMatrix& stabs,
                                              const Caps& caps) {
    const BinaryMatrix kernel = kernel_basis(checks);
    const Rref stab_red = reduced_row_echelon(stabs);

    // Split: representatives are kernel vectors independent modulo the stabs.
    std::vector<std::size_t> acc_pivots = stab_red.pivot_cols;
    BinaryMatrix acc = stab_red.matrix;
    std::vector<BitVector> logicals;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        BitVector v = kernel.row_vector(i);
        BitVector red = v;
        for (std::size_t j = 0; j < acc_pivots.size(); ++j)
            if (red.get(acc_pivots[j])) red.xor_in(acc.row(j));
        if (red.is_zero()) continue;
        logicals.push_back(v);
        // extend the echelon with the reduced vector
        BinaryMatrix next(acc.rows() + 1, acc.cols());
        std::size_t lead = 0;
        while (!red.get(lead)) ++lead;
        std::size_t at = 0;
        while (at < acc_pivots.size() && acc_pivots[at] < lead) ++at;
        for (std::size_t j = 0; j < at; ++j) next.set_row(j, acc.row_vector(j));
        next.set_row(at, red);
        for (std::size_t j = at; j < acc.rows(); ++j) next.set_row(j + 1, acc.row_vector(j));
        acc = std::move(next);
        acc_pivots.insert(acc_pivots.begin() + static_cast<std::ptrdiff_t>(at), lead);
    }
    const std::size_t k = logicals.size();
    if (k == 0) return std::nullopt;
    const std::size_t r = stab_red.matrix.rows();
    const std::size_t total_bits = k + r;

    if (total_bits < 63 && (std::uint64_t{1} << total_bits) <= caps.max_enumeration) {
        // Gray scan over [stabs | logicals]; track whether any logical bit is on.
        const std::size_t words = kernel.words_per_row();
        std::vector<std::uint64_t> cur(words, 0);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        const std::uint64_t total = std::uint64_t{1} << total_bits;
        for (std::uint64_t i = 1; i < total; ++i) {
            const std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
            if (bit < r)
                span_xor(cur, stab_red.matrix.row(bit));
            else
                span_xor(cur, logicals[bit - r].words());
            const std::uint64_t gray = i ^ (i >> 1);
            if (gray >> r) best = std::min(best, span_weight(cur));
        }
        return best;
    }

    // Weight-search route: smallest support whose checks-syndrome vanishes and
    // which is not a stabilizer combination.
    const std::size_t n = checks.cols();
    const BinaryMatrix cols = transpose(checks);
    const std::size_t words = cols.words_per_row();
    const RowSpace stab_space(stabs);
    std::uint64_t budget = caps.max_enumeration;
    std::vector<std::vector<std::uint64_t>> synd;
    std::vector<std::vector<std::uint64_t>> supp;
    const std::size_t vwords = (n + 63) / 64;
    std::vector<std::size_t> idx;
    for (std::size_t w = 1; w <= n; ++w) {
        synd.assign(w + 1, std::vector<std::uint64_t>(words, 0));
        supp.assign(w + 1, std::vector<std::uint64_t>(vwords, 0));
        idx.assign(w, 0);
        std::size_t depth = 0;
        while (true) {
            if (budget-- == 0) throw too_large_error("logical weight search exceeded cap");
            if (idx[depth] + (w - depth) > n) {
                if (depth == 0) break;
                --depth;
                ++idx[depth];
                continue;
            }
            synd[depth + 1] = synd[depth];
            span_xor(synd[depth + 1], cols.row(idx[depth]));
            supp[depth + 1] = supp[depth];
            supp[depth + 1][idx[depth] / 64] ^= std::uint64_t{1} << (idx[depth] % 64);
            if (depth + 1 == w) {
                bool zero = true;
                for (std::uint64_t x : synd[w])
                    if (x) { zero = false; break; }
                if (zero && !stab_space.contains(supp[w])) return w;
                ++idx[depth];
            } else {
                ++depth;
                idx[depth] = idx[depth - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CssCode::CssCode(BinaryMatrix h_x, BinaryMatrix h_z) : h_x_(std::move(h_x)), h_z_(std::move(h_z)) {
    if (h_x_.cols() != h_z_.cols()) throw shape_error("h_x and h_z column counts disagree");
    if (!mat_mul(h_x_, transpose(h_z_)).is_zero())
        throw not_commuting_error("h_x * h_z^T != 0");
}

std::size_t CssCode::rank_x() const {
    if (!rank_x_) rank_x_ = rank(h_x_);
    return *rank_x_;
}

std::size_t CssCode::rank_z() const {
    if (!rank_z_) rank_z_ = rank(h_z_);
    return *rank_z_;
}

std::size_t CssCode::dimension() const { return qubits() - rank_x() - rank_z(); }

CssDistances css_distances(const CssCode& q, const Caps& caps) {
    if (q.dimension() == 0) {
        // No logicals on the side(s) where the quotient is trivial; both
        // quotients have the same dimension k, so both are empty here.
        return {std::nullopt, std::nullopt};
    }
    return {logical_min_weight(q.h_z(), q.h_x(), caps),
            logical_min_weight(q.h_x(), q.h_z(), caps)};
}

SoundnessInterval quantum_soundness_interval(const CssCode& q, const Caps& caps) {
    const SoundnessInterval sx = classical_soundness_exact(q.x_side(), caps);
    const SoundnessInterval sz = classical_soundness_exact(q.z_side(), caps);
    const Rational lo = std::min(sx.lower, sz.lower);
    return {lo, Rational(2) * lo, SoundnessMethod::CssReduction};
}

}  // namespace qltc
