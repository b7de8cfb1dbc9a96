#include "tricm/complex.hpp"

#include <algorithm>
#include <sstream>

namespace tricm {

void write_complex(std::ostream& out, const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("cannot serialize the void complex");
    out << "dim " << c.dimension() << " vertices " << c.vertex_count() << '\n';
    for (int d = 0; d <= c.dimension(); ++d)
        for (const auto& f : c.faces(d)) {
            for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f[k];
            out << '\n';
        }
}

SimplicialComplex read_complex(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw InputError("complex file: missing header");
    std::istringstream header(line);
    std::string dim_kw;
    std::string vert_kw;
    long long dim = 0;
    long long vertex_count = 0;
    if (!(header >> dim_kw >> dim >> vert_kw >> vertex_count) || dim_kw != "dim" || vert_kw != "vertices" ||
        vertex_count < 0 || dim < -1)
        throw InputError("complex file: header must read 'dim <d> vertices <N>'");

    std::vector<Face> generators;
    while (next_line()) {
        std::istringstream tokens(line);
        Face f;
        long long v = 0;
        while (tokens >> v) {
            if (v < 0 || v >= vertex_count)
                throw InputError("complex file line " + std::to_string(line_no) + ": vertex out of range");
            f.push_back(static_cast<Vertex>(v));
        }
        if (!tokens.eof()) throw InputError("complex file line " + std::to_string(line_no) + ": expected integers");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InputError("complex file line " + std::to_string(line_no) + ": repeated vertex");
        generators.push_back(std::move(f));
    }
    SimplicialComplex c = SimplicialComplex::from_generators(static_cast<std::size_t>(vertex_count), std::move(generators));
    if (c.dimension() != dim)
        throw InputError("complex file: header declares dim " + std::to_string(dim) + " but faces give " +
                         std::to_string(c.dimension()));
    return c;
}

}  // namespace tricm
