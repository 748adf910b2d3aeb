#include "floquet/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace floquet {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }
int mod3(int x) { return ((x % 3) + 3) % 3; }

// chi is the (center col)/2 residue of the tri-coloring; the mapping to named
// colors is fixed so the named devices reproduce the published plaquette
// colors (falcon pair = red+blue, hummingbird rows = (red,blue)/(green,red)).
Color color_from_chi(int chi) {
    static constexpr Color table[3] = {Color::Blue, Color::Red, Color::Green};
    return table[mod3(chi)];
}

// Heavy-hex grid: horizontal qubit lines indexed by (row, col) plus rung
// auxiliaries between adjacent lines. Code qubits sit on cols matching the
// rung parity; hexagon corners sit on the rung columns of each band.
struct GridSpec {
    std::string name;
    int num_qubits = 0;
    std::vector<std::map<int, int>> rows;  // row -> col -> qubit id
    struct Rung {
        int row, col, qubit;  // between rows `row` and `row + 1`
    };
    std::vector<Rung> rungs;
    // Devices list hardware edges that are not part of the grid (dead-end
    // stubs); patches leave this empty.
    std::vector<std::pair<int, int>> extra_coupling;
    int code_col_origin = 0;
    int color_shift = 0;
};

int qubit_at(const GridSpec& g, int row, int col) {
    const auto& m = g.rows[row];
    auto it = m.find(col);
    return it == m.end() ? -1 : it->second;
}

// Column phase of a row, mod 4: hexagon corners of the band below the row sit
// on cols == D, apexes on cols == D + 2.
int row_phase(const GridSpec& g, int row) {
    for (const auto& r : g.rungs)
        if (r.row == row) return mod4(r.col);
    for (const auto& r : g.rungs)
        if (r.row == row - 1) return mod4(r.col + 2);
    throw std::invalid_argument("grid row " + std::to_string(row) +
                                " has no adjacent rungs");
}

Layout derive_layout(const GridSpec& g) {
    Layout out;
    out.name = g.name;
    out.qubits.assign(g.num_qubits, QubitRole::Unused);

    const int num_rows = static_cast<int>(g.rows.size());
    std::vector<int> phase(num_rows);
    for (int r = 0; r < num_rows; ++r) phase[r] = row_phase(g, r);

    std::map<std::pair<int, int>, int> horiz;  // (row, start col) -> link id
    std::map<std::pair<int, int>, int> vert;   // (row, col) -> link id

    auto chi_of_center = [&](int m) {
        return mod3((m - g.code_col_origin) / 2 + g.color_shift);
    };

    for (int r = 0; r < num_rows; ++r) {
        for (const auto& [c, q] : g.rows[r]) {
            if (mod4(c - phase[r]) % 2 != 0) continue;  // aux column
            const int qa = qubit_at(g, r, c + 1);
            const int qe = qubit_at(g, r, c + 2);
            if (qa < 0 || qe < 0) continue;
            Link link;
            link.id = static_cast<int>(out.links.size());
            link.endpoints = {std::min(q, qe), std::max(q, qe)};
            link.aux = qa;
            const bool apex_right = mod4(c) != mod4(phase[r] + 2);
            const int a = apex_right ? c + 2 : c;
            const int o = apex_right ? c : c + 2;
            link.pauli = (mod4(c) == phase[r]) ? Pauli::Z : Pauli::X;
            link.color = color_from_chi(chi_of_center(2 * a - o));
            horiz[{r, c}] = link.id;
            out.links.push_back(link);
        }
    }
    for (const auto& rg : g.rungs) {
        const int top = qubit_at(g, rg.row, rg.col);
        const int bot = qubit_at(g, rg.row + 1, rg.col);
        if (top < 0 || bot < 0) continue;
        Link link;
        link.id = static_cast<int>(out.links.size());
        link.endpoints = {std::min(top, bot), std::max(top, bot)};
        link.aux = rg.qubit;
        link.pauli = Pauli::Y;
        link.color = color_from_chi(chi_of_center(rg.col));
        vert[{rg.row, rg.col}] = link.id;
        out.links.push_back(link);
    }

    for (int r = 0; r + 1 < num_rows; ++r) {
        for (const auto& [key, left_id] : vert) {
            if (key.first != r) continue;
            const int c = key.second;
            auto right = vert.find({r, c + 4});
            if (right == vert.end()) continue;
            auto tl = horiz.find({r, c});
            auto tr = horiz.find({r, c + 2});
            auto bl = horiz.find({r + 1, c});
            auto br = horiz.find({r + 1, c + 2});
            if (tl == horiz.end() || tr == horiz.end() || bl == horiz.end() ||
                br == horiz.end())
                continue;
            Plaquette p;
            p.id = static_cast<int>(out.plaquettes.size());
            p.color = color_from_chi(chi_of_center(c + 2));
            p.vertices = {qubit_at(g, r, c),     qubit_at(g, r, c + 2),
                          qubit_at(g, r, c + 4), qubit_at(g, r + 1, c + 4),
                          qubit_at(g, r + 1, c + 2), qubit_at(g, r + 1, c)};
            p.boundary = {tl->second, tr->second, right->second,
                          br->second, bl->second, left_id};
            out.plaquettes.push_back(p);
        }
    }

    for (const auto& link : out.links) {
        out.qubits[link.endpoints[0]] = QubitRole::Code;
        out.qubits[link.endpoints[1]] = QubitRole::Code;
    }
    for (const auto& link : out.links) {
        if (out.qubits[link.aux] == QubitRole::Code)
            throw std::logic_error("qubit is both endpoint and aux");
        out.qubits[link.aux] = QubitRole::Auxiliary;
    }

    std::set<std::pair<int, int>> coupling;
    for (int r = 0; r < num_rows; ++r) {
        const auto& cols = g.rows[r];
        for (auto it = cols.begin(); it != cols.end(); ++it) {
            auto next = std::next(it);
            if (next != cols.end() && next->first == it->first + 1)
                coupling.insert({std::min(it->second, next->second),
                                 std::max(it->second, next->second)});
        }
    }
    for (const auto& rg : g.rungs) {
        for (int dr : {0, 1}) {
            const int q = qubit_at(g, rg.row + dr, rg.col);
            if (q >= 0)
                coupling.insert({std::min(q, rg.qubit), std::max(q, rg.qubit)});
        }
    }
    for (auto [a, b] : g.extra_coupling)
        coupling.insert({std::min(a, b), std::max(a, b)});
    out.coupling.assign(coupling.begin(), coupling.end());
    return out;
}

GridSpec falcon27_grid() {
    GridSpec g;
    g.name = "falcon27";
    g.num_qubits = 27;
    g.rows.resize(2);
    g.rows[0] = {{0, 0}, {1, 1}, {2, 4},  {3, 7},  {4, 10},
                 {5, 12}, {6, 15}, {7, 18}, {8, 21}, {9, 23}};
    g.rows[1] = {{1, 3},  {2, 5},  {3, 8},  {4, 11}, {5, 14},
                 {6, 16}, {7, 19}, {8, 22}, {9, 25}, {10, 26}};
    g.rungs = {{0, 1, 2}, {0, 5, 13}, {0, 9, 24}};
    g.extra_coupling = {{6, 7}, {8, 9}, {17, 18}, {19, 20}};
    g.code_col_origin = 1;
    return g;
}

GridSpec hummingbird65_grid() {
    GridSpec g;
    g.name = "hummingbird65";
    g.num_qubits = 65;
    g.rows.resize(5);
    for (int c = 0; c <= 9; ++c) g.rows[0][c] = c;
    for (int c = 0; c <= 10; ++c) g.rows[1][c] = 13 + c;
    for (int c = 0; c <= 10; ++c) g.rows[2][c] = 27 + c;
    for (int c = 0; c <= 10; ++c) g.rows[3][c] = 41 + c;
    for (int c = 1; c <= 10; ++c) g.rows[4][c] = 54 + c;
    g.rungs = {{0, 0, 10}, {0, 4, 11}, {0, 8, 12},  {1, 2, 24},
               {1, 6, 25}, {1, 10, 26}, {2, 0, 38}, {2, 4, 39},
               {2, 8, 40}, {3, 2, 52},  {3, 6, 53}, {3, 10, 54}};
    return g;
}

GridSpec eagle127_grid() {
    GridSpec g;
    g.name = "eagle127";
    g.num_qubits = 127;
    g.rows.resize(7);
    for (int c = 0; c <= 13; ++c) g.rows[0][c] = c;
    for (int c = 0; c <= 14; ++c) g.rows[1][c] = 18 + c;
    for (int c = 0; c <= 14; ++c) g.rows[2][c] = 37 + c;
    for (int c = 0; c <= 14; ++c) g.rows[3][c] = 56 + c;
    for (int c = 0; c <= 14; ++c) g.rows[4][c] = 75 + c;
    for (int c = 0; c <= 14; ++c) g.rows[5][c] = 94 + c;
    for (int c = 1; c <= 14; ++c) g.rows[6][c] = 112 + c;
    g.rungs = {{0, 0, 14},  {0, 4, 15},  {0, 8, 16},  {0, 12, 17},
               {1, 2, 33},  {1, 6, 34},  {1, 10, 35}, {1, 14, 36},
               {2, 0, 52},  {2, 4, 53},  {2, 8, 54},  {2, 12, 55},
               {3, 2, 71},  {3, 6, 72},  {3, 10, 73}, {3, 14, 74},
               {4, 0, 90},  {4, 4, 91},  {4, 8, 92},  {4, 12, 93},
               {5, 2, 109}, {5, 6, 110}, {5, 10, 111}, {5, 14, 112}};
    return g;
}

}  // namespace

std::string to_string(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

std::string to_string(QubitRole r) {
    switch (r) {
        case QubitRole::Code: return "code";
        case QubitRole::Auxiliary: return "auxiliary";
        case QubitRole::Unused: return "unused";
    }
    return "?";
}

Color color_from_string(const std::string& s) {
    if (s == "red") return Color::Red;
    if (s == "green") return Color::Green;
    if (s == "blue") return Color::Blue;
    throw std::invalid_argument("unknown color: " + s);
}

bool Layout::has_coupling(int a, int b) const {
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    return std::binary_search(coupling.begin(), coupling.end(), key);
}

std::vector<int> Layout::links_of_color(Color c) const {
    std::vector<int> ids;
    for (const auto& l : links)
        if (l.color == c) ids.push_back(l.id);
    return ids;
}

Layout build_layout(const std::string& device_name) {
    if (device_name == "falcon27") return derive_layout(falcon27_grid());
    if (device_name == "hummingbird65")
        return derive_layout(hummingbird65_grid());
    if (device_name == "eagle127") return derive_layout(eagle127_grid());
    throw std::invalid_argument("unknown device: " + device_name);
}

Layout build_patch(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("patch dimensions must be >= 1");
    GridSpec g;
    g.name = "patch" + std::to_string(rows) + "x" + std::to_string(cols);
    // The +1 color shift puts the single patch(1,1) plaquette on green.
    g.color_shift = 1;
    g.rows.resize(rows + 1);

    auto band_lo = [](int b) { return 2 * (b & 1); };
    auto band_hi = [&](int b) { return 2 * (b & 1) + 4 * cols; };

    int q = 0;
    for (int r = 0; r <= rows; ++r) {
        const int b0 = std::max(0, r - 1);
        const int b1 = std::min(rows - 1, r);
        const int lo = std::min(band_lo(b0), band_lo(b1));
        const int hi = std::max(band_hi(b0), band_hi(b1));
        for (int c = lo; c <= hi; ++c) g.rows[r][c] = q++;
        if (r < rows)
            for (int k = 0; k <= cols; ++k)
                g.rungs.push_back({r, 2 * (r & 1) + 4 * k, q++});
    }
    g.num_qubits = q;
    return derive_layout(g);
}

namespace {

void check_plaquette(const Layout& layout, const Plaquette& p,
                     std::vector<Violation>& out) {
    std::set<int> verts(p.vertices.begin(), p.vertices.end());
    if (verts.size() != 6)
        out.push_back({"plaquette-vertices", p.id, "duplicate vertices"});
    std::set<int> bound(p.boundary.begin(), p.boundary.end());
    if (bound.size() != 6)
        out.push_back({"plaquette-boundary", p.id, "duplicate boundary links"});

    std::array<int, 3> color_count{0, 0, 0};
    for (int k = 0; k < 6; ++k) {
        const Link& l = layout.links[p.boundary[k]];
        const Link& next = layout.links[p.boundary[(k + 1) % 6]];
        color_count[static_cast<int>(l.color)]++;
        if (l.color == p.color)
            out.push_back({"plaquette-boundary-color", p.id,
                           "boundary link " + std::to_string(l.id) +
                               " has the plaquette color"});
        if (l.color == next.color)
            out.push_back({"plaquette-alternation", p.id,
                           "links " + std::to_string(l.id) + "," +
                               std::to_string(next.id) +
                               " break color alternation"});
        const std::set<int> expect{p.vertices[k], p.vertices[(k + 1) % 6]};
        const std::set<int> got{l.endpoints[0], l.endpoints[1]};
        if (expect != got)
            out.push_back({"plaquette-walk", p.id,
                           "boundary link " + std::to_string(l.id) +
                               " does not join consecutive vertices"});
    }
    for (int c = 0; c < 3; ++c) {
        if (static_cast<Color>(c) == p.color) continue;
        if (color_count[c] != 3)
            out.push_back({"plaquette-color-count", p.id,
                           "expected 3 " + to_string(static_cast<Color>(c)) +
                               " boundary links, found " +
                               std::to_string(color_count[c])});
    }
}

}  // namespace

std::vector<Violation> validate_coloring(const Layout& layout) {
    std::vector<Violation> out;

    for (const auto& l : layout.links) {
        for (int e : l.endpoints) {
            if (e < 0 || e >= layout.num_qubits() ||
                layout.qubits[e] != QubitRole::Code)
                out.push_back({"link-endpoint-role", l.id,
                               "endpoint " + std::to_string(e) +
                                   " is not a code qubit"});
            if (!layout.has_coupling(e, l.aux))
                out.push_back({"link-coupling", l.id,
                               "pair (" + std::to_string(e) + "," +
                                   std::to_string(l.aux) +
                                   ") not in coupling"});
        }
        if (l.aux < 0 || l.aux >= layout.num_qubits() ||
            layout.qubits[l.aux] != QubitRole::Auxiliary)
            out.push_back({"link-aux-role", l.id,
                           "aux " + std::to_string(l.aux) +
                               " is not an auxiliary qubit"});
    }

    for (const auto& p : layout.plaquettes) check_plaquette(layout, p, out);

    // Side plaquettes (link on their boundary) must differ from the link
    // color and from each other; end plaquettes (sharing exactly one
    // endpoint) must match the link color. Absent neighbours of a finite
    // patch are skipped.
    for (const auto& l : layout.links) {
        std::vector<const Plaquette*> sides;
        std::vector<const Plaquette*> ends;
        for (const auto& p : layout.plaquettes) {
            const bool on_boundary =
                std::find(p.boundary.begin(), p.boundary.end(), l.id) !=
                p.boundary.end();
            int shared = 0;
            for (int v : p.vertices)
                shared += (v == l.endpoints[0] || v == l.endpoints[1]);
            if (on_boundary)
                sides.push_back(&p);
            else if (shared == 1)
                ends.push_back(&p);
        }
        for (const auto* p : sides)
            if (p->color == l.color)
                out.push_back({"link-color", l.id,
                               "side plaquette " + std::to_string(p->id) +
                                   " shares the link color"});
        if (sides.size() == 2 && sides[0]->color == sides[1]->color)
            out.push_back({"link-color", l.id, "side plaquettes match"});
        for (const auto* p : ends)
            if (p->color != l.color)
                out.push_back({"link-color", l.id,
                               "end plaquette " + std::to_string(p->id) +
                                   " does not match the link color"});
    }

    return out;
}

std::string layout_to_json(const Layout& layout) {
    nlohmann::json j;
    j["name"] = layout.name;
    nlohmann::json qubits = nlohmann::json::object();
    for (int q = 0; q < layout.num_qubits(); ++q)
        qubits[std::to_string(q)] = to_string(layout.qubits[q]);
    j["qubits"] = qubits;
    j["links"] = nlohmann::json::array();
    for (const auto& l : layout.links) {
        j["links"].push_back({{"id", l.id},
                              {"pauli", to_string(l.pauli)},
                              {"color", to_string(l.color)},
                              {"endpoints", {l.endpoints[0], l.endpoints[1]}},
                              {"aux", l.aux}});
    }
    j["plaquettes"] = nlohmann::json::array();
    for (const auto& p : layout.plaquettes) {
        j["plaquettes"].push_back({{"id", p.id},
                                   {"color", to_string(p.color)},
                                   {"vertices", p.vertices},
                                   {"boundary", p.boundary}});
    }
    j["coupling"] = nlohmann::json::array();
    for (auto [a, b] : layout.coupling) j["coupling"].push_back({a, b});
    return j.dump(2);
}

Layout layout_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Layout layout;
    layout.name = j.at("name").get<std::string>();
    const auto& qubits = j.at("qubits");
    int max_id = -1;
    for (auto it = qubits.begin(); it != qubits.end(); ++it)
        max_id = std::max(max_id, std::stoi(it.key()));
    layout.qubits.assign(max_id + 1, QubitRole::Unused);
    for (auto it = qubits.begin(); it != qubits.end(); ++it) {
        const std::string role = it.value().get<std::string>();
        QubitRole r = QubitRole::Unused;
        if (role == "code") r = QubitRole::Code;
        else if (role == "auxiliary") r = QubitRole::Auxiliary;
        else if (role != "unused")
            throw std::invalid_argument("unknown role: " + role);
        layout.qubits[std::stoi(it.key())] = r;
    }
    for (const auto& lj : j.at("links")) {
        Link l;
        l.id = lj.at("id").get<int>();
        const std::string pauli = lj.at("pauli").get<std::string>();
        if (pauli == "x") l.pauli = Pauli::X;
        else if (pauli == "y") l.pauli = Pauli::Y;
        else if (pauli == "z") l.pauli = Pauli::Z;
        else throw std::invalid_argument("unknown pauli: " + pauli);
        l.color = color_from_string(lj.at("color").get<std::string>());
        l.endpoints[0] = lj.at("endpoints").at(0).get<int>();
        l.endpoints[1] = lj.at("endpoints").at(1).get<int>();
        l.aux = lj.at("aux").get<int>();
        layout.links.push_back(l);
    }
    for (const auto& pj : j.at("plaquettes")) {
        Plaquette p;
        p.id = pj.at("id").get<int>();
        p.color = color_from_string(pj.at("color").get<std::string>());
        for (int k = 0; k < 6; ++k) {
            p.vertices[k] = pj.at("vertices").at(k).get<int>();
            p.boundary[k] = pj.at("boundary").at(k).get<int>();
        }
        layout.plaquettes.push_back(p);
    }
    for (const auto& cj : j.at("coupling")) {
        const int a = cj.at(0).get<int>(), b = cj.at(1).get<int>();
        layout.coupling.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(layout.coupling.begin(), layout.coupling.end());
    return layout;
}

PauliString plaquette_operator(const Layout& layout, const Plaquette& p) {
    static constexpr Pauli pattern[6] = {Pauli::X, Pauli::Y, Pauli::Z,
                                         Pauli::X, Pauli::Y, Pauli::Z};
    PauliString op(layout.num_qubits());
    for (int k = 0; k < 6; ++k) op.set(p.vertices[k], pattern[k]);
    return op;
}

PauliString plaquette_operator(const Layout& layout, const Plaquette& p,
                               Pauli basis) {
    PauliString op(layout.num_qubits());
    for (int k = 0; k < 6; ++k) op.set(p.vertices[k], basis);
    return op;
}

PauliString link_operator(const Layout& layout, const Link& link) {
    return link_operator(layout, link, link.pauli);
}

PauliString link_operator(const Layout& layout, const Link& link,
                          Pauli basis) {
    PauliString op(layout.num_qubits());
    op.set(link.endpoints[0], basis);
    op.set(link.endpoints[1], basis);
    return op;
}

}  // namespace floquet
