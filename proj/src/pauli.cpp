#include "floquet/pauli.hpp"

#include <stdexcept>

namespace floquet {

std::string to_string(Pauli p) {
    switch (p) {
        case Pauli::X: return "x";
        case Pauli::Y: return "y";
        case Pauli::Z: return "z";
    }
    return "?";
}

PauliString::PauliString(int num_qubits)
    : n_(num_qubits),
      words_((static_cast<size_t>(num_qubits) + 63) / 64),
      x_(words_, 0),
      z_(words_, 0) {
    if (num_qubits < 0) throw std::invalid_argument("negative qubit count");
}

void PauliString::set(int qubit, Pauli p) {
    const uint64_t bit = 1ull << (qubit & 63);
    const size_t w = static_cast<size_t>(qubit) >> 6;
    x_[w] &= ~bit;
    z_[w] &= ~bit;
    switch (p) {
        case Pauli::X: x_[w] |= bit; break;
        case Pauli::Y:
            x_[w] |= bit;
            z_[w] |= bit;
            r_ = (r_ + 1) & 3;  // Y = i X Z
            break;
        case Pauli::Z: z_[w] |= bit; break;
    }
}

bool PauliString::x_bit(int qubit) const {
    return (x_[static_cast<size_t>(qubit) >> 6] >> (qubit & 63)) & 1u;
}

bool PauliString::z_bit(int qubit) const {
    return (z_[static_cast<size_t>(qubit) >> 6] >> (qubit & 63)) & 1u;
}

void PauliString::multiply_right(const PauliString& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("size mismatch");
    const auto& ops = simd::active_ops();
    // Moving rhs's X block left past this->Z picks up (-1)^<z_this, x_rhs>.
    const bool swap_parity = ops.and_parity(z_.data(), rhs.x_.data(), words_);
    ops.xor_rows(x_.data(), rhs.x_.data(), words_);
    ops.xor_rows(z_.data(), rhs.z_.data(), words_);
    r_ = (r_ + rhs.r_ + (swap_parity ? 2 : 0)) & 3;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.n_ != n_) throw std::invalid_argument("size mismatch");
    const auto& ops = simd::active_ops();
    const bool p1 = ops.and_parity(x_.data(), other.z_.data(), words_);
    const bool p2 = ops.and_parity(z_.data(), other.x_.data(), words_);
    return p1 == p2;
}

bool PauliString::same_letters(const PauliString& other) const {
    if (other.n_ != n_) return false;
    return x_ == other.x_ && z_ == other.z_;
}

bool PauliString::is_identity_letters() const {
    for (size_t i = 0; i < words_; ++i)
        if (x_[i] | z_[i]) return false;
    return true;
}

std::string PauliString::str() const {
    static const char* phases[4] = {"+", "+i", "-", "-i"};
    std::string out = phases[r_];
    for (int q = 0; q < n_; ++q) {
        const bool xb = x_bit(q), zb = z_bit(q);
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

}  // namespace floquet
