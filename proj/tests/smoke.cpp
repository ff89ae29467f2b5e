#include "qtree/bi_factor.hpp"
#include "qtree/poly_io.hpp"
#include <iostream>

using namespace qtree;

int main() {
    GFDesc F5{5};
    auto f = parse_bipoly<GF>(F5, "x^2 - y^2");
    auto fac = bi_factor(f);
    for (auto& [q, m] : fac.factors)
        std::cout << format_bipoly(q) << " ^ " << m << "\n";
    auto g = parse_bipoly<GF>(F5, "y^2 - x^3");
    std::cout << "irr(y^2-x^3) = " << bi_irreducible(g) << "\n";
    auto big = parse_bipoly<GF>(F5, "x*y + x^3 + y^3");
    auto fb = bi_factor(big);
    BiPoly<GF> prod = BiPoly<GF>::constant(F5, fb.unit);
    for (auto& [q, m] : fb.factors) prod = prod * q.pow(m);
    std::cout << "roundtrip " << (prod == big) << " nfac " << fb.factors.size() << "\n";
    QQDesc QD{};
    auto h = parse_bipoly<QQ>(QD, "3*x^2*y - y^3 + 1");
    std::cout << format_bipoly(h) << "\n";
    return 0;
}
