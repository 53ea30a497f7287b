#pragma once

#include <optional>

#include "qltc/classical_code.hpp"

namespace qltc {

// CSS code given by X- and Z-check matrices over the same qubits.
// Commutativity h_x * h_z^T = 0 is validated at construction.
class CssCode {
public:
    CssCode(BinaryMatrix h_x, BinaryMatrix h_z);

    const BinaryMatrix& h_x() const { return h_x_; }
    const BinaryMatrix& h_z() const { return h_z_; }
    std::size_t qubits() const { return h_x_.cols(); }
    std::size_t x_checks() const { return h_x_.rows(); }
    std::size_t z_checks() const { return h_z_.rows(); }
    std::size_t rank_x() const;
    std::size_t rank_z() const;
    std::size_t dimension() const;  // k = n - rank(h_x) - rank(h_z)

    // Classical side codes of the CSS reduction: ker(h_x) checked by h_x,
    // ker(h_z) checked by h_z.
    ClassicalCode x_side() const { return ClassicalCode(h_x_); }
    ClassicalCode z_side() const { return ClassicalCode(h_z_); }

private:
    BinaryMatrix h_x_, h_z_;
    mutable std::optional<std::size_t> rank_x_, rank_z_;
};

// d_x = min weight in ker(h_z) \ rowspace(h_x)  (minimal X-type logical),
// d_z = min weight in ker(h_x) \ rowspace(h_z); nullopt when the set is empty.
struct CssDistances {
    std::optional<std::size_t> d_x;
    std::optional<std::size_t> d_z;
    std::optional<std::size_t> min() const {
        if (!d_x) return d_z;
        if (!d_z) return d_x;
        return std::min(*d_x, *d_z);
    }
};

// Enumerates the kernel coset decomposition when 2^dim(ker) fits the cap,
// otherwise searches words of increasing weight.
CssDistances css_distances(const CssCode& q, const Caps& caps = {});

// [rho_min, 2 rho_min] where rho_min = min of the two classical side
// soundness values; the CSS reduction bounds the quantum soundness inside
// this interval.
SoundnessInterval quantum_soundness_interval(const CssCode& q, const Caps& caps = {});

}  // namespace qltc
