// Follow a plane branch through the quadratic tree: print the chain of
// rational directions and the multiplicity at each infinitely near point.

#include <iostream>
#include <string>

#include "qtree/poly_io.hpp"
#include "qtree/valuation.hpp"

using namespace qtree;

int main(int argc, char** argv) {
    GFDesc d{argc > 2 ? static_cast<std::uint32_t>(std::stoul(argv[2])) : 5u};
    std::string text = argc > 1 ? argv[1] : "y^2 - x^3";
    BiPoly<GF> cur = parse_bipoly<GF>(d, text);
    QuadPath<GF> path;
    std::cout << "branch " << text << " over F_" << d.p << "\n";
    for (int level = 0; level < 8; ++level) {
        int r = cur.low_degree();
        std::cout << "level " << level << ": node " << format_path(path)
                  << "  mult " << r << "  transform " << format_bipoly(cur) << "\n";
        if (r < 1) break;
        auto dirs = directions_of(cur);
        if (dirs.size() != 1) {
            std::cout << "  branch splits (" << dirs.size() << " directions), stopping\n";
            break;
        }
        if (dirs[0].dir.kind == DirectionClass<GF>::nonrational) {
            std::cout << "  non-rational direction of degree " << dirs[0].dir.degree
                      << ", stopping\n";
            break;
        }
        Direction<GF> dir = dirs[0].dir.kind == DirectionClass<GF>::infinity
                                ? Direction<GF>::at_infinity(d)
                                : Direction<GF>::finite(dirs[0].dir.c);
        auto tr = transform_elem(QuadPath<GF>{dir}, cur);
        cur = tr.levels[1].p;
        path.push_back(dir);
        if (cur.low_degree() == 1 && initial_form(cur).degree() == 1) {
            std::cout << "level " << level + 1 << ": node " << format_path(path)
                      << "  mult 1  transform " << format_bipoly(cur) << "  (smooth)\n";
            break;
        }
    }
    return 0;
}
