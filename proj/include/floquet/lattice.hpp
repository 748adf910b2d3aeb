#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "floquet/pauli.hpp"

namespace floquet {

enum class Color : uint8_t { Red = 0, Green = 1, Blue = 2 };
enum class QubitRole : uint8_t { Code = 0, Auxiliary = 1, Unused = 2 };

std::string to_string(Color c);
std::string to_string(QubitRole r);
Color color_from_string(const std::string& s);

/// Two-body measured edge of the heavy-hex lattice: two code-qubit endpoints
/// with the auxiliary qubit that sits between them on hardware.
struct Link {
    int id = -1;
    Pauli pauli = Pauli::Z;  // orientation class: '\' -> x, '|' -> y, '/' -> z
    Color color = Color::Red;
    std::array<int, 2> endpoints{-1, -1};  // sorted ascending
    int aux = -1;
};

/// Hexagonal plaquette. Vertices are listed clockwise from the top-left
/// corner; boundary[i] is the link joining vertices[i] and vertices[(i+1)%6].
struct Plaquette {
    int id = -1;
    Color color = Color::Red;
    std::array<int, 6> vertices{};
    std::array<int, 6> boundary{};
};

struct Layout {
    std::string name;
    std::vector<QubitRole> qubits;  // indexed by qubit id
    std::vector<Link> links;
    std::vector<Plaquette> plaquettes;
    std::vector<std::pair<int, int>> coupling;  // sorted pairs, a < b

    int num_qubits() const { return static_cast<int>(qubits.size()); }
    bool has_coupling(int a, int b) const;
    std::vector<int> links_of_color(Color c) const;  // ids, ascending
};

/// Named heavy-hex devices. falcon27 carries 2 plaquettes (one red, one
/// blue), hummingbird65 carries 8 in four row pairs, eagle127 carries every
/// complete hexagon of the 127-qubit coupling graph.
Layout build_layout(const std::string& device_name);

/// Planar patch of rows x cols complete plaquettes, consecutive qubit ids.
Layout build_patch(int rows, int cols);

struct Violation {
    std::string kind;   // e.g. "link-color", "plaquette-alternation"
    int subject_id;     // link or plaquette id, -1 for layout-level
    std::string detail;
};

/// Empty result iff all link/plaquette invariants hold. Boundary links of a
/// finite patch are only checked against the plaquettes that exist.
std::vector<Violation> validate_coloring(const Layout& layout);

std::string layout_to_json(const Layout& layout);
Layout layout_from_json(const std::string& text);

/// Eq.-style plaquette operator: for the honeycomb code the Pauli at vertex k
/// follows the x,y,z,x,y,z pattern of the vertex ordering; basis x or z gives
/// the Floquet-Color-code operator W^basis instead.
PauliString plaquette_operator(const Layout& layout, const Plaquette& p);
PauliString plaquette_operator(const Layout& layout, const Plaquette& p,
                               Pauli basis);

/// Two-body link operator sigma^alpha x sigma^alpha on the endpoints.
PauliString link_operator(const Layout& layout, const Link& link);
PauliString link_operator(const Layout& layout, const Link& link, Pauli basis);

}  // namespace floquet
