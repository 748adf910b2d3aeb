#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floquet/simd.hpp"

namespace floquet {

enum class Pauli : uint8_t { X = 0, Y = 1, Z = 2 };

std::string to_string(Pauli p);

/// Pauli monomial on n qubits in the i^r * X^x * Z^z convention: per qubit the
/// X factor is written before the Z factor and all powers of i are collected
/// in r (mod 4). A literal Y on one qubit is i * X * Z, i.e. x=z=1 with r=1.
class PauliString {
  public:
    explicit PauliString(int num_qubits);

    int num_qubits() const { return n_; }

    void set(int qubit, Pauli p);
    bool x_bit(int qubit) const;
    bool z_bit(int qubit) const;
    uint8_t phase() const { return r_; }

    /// this <- this * rhs (operator product, phases tracked).
    void multiply_right(const PauliString& rhs);

    bool commutes_with(const PauliString& other) const;

    /// Identity test ignoring the phase.
    bool same_letters(const PauliString& other) const;

    bool is_identity_letters() const;

    std::string str() const;

  private:
    int n_;
    size_t words_;
    uint8_t r_ = 0;  // power of i, mod 4
    std::vector<uint64_t> x_, z_;
};

}  // namespace floquet
