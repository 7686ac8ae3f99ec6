// Orthogonal eigenfunctions of T on one component, with squared norms.

#include <bihom/spectral.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    const std::int64_t d = argc > 2 ? std::atoll(argv[1]) : 6;
    const std::int64_t l = argc > 2 ? std::atoll(argv[2]) : 3;
    try {
        for (const auto& v : bihom::orthogonal_eigenbasis(d, l))
            std::cout << "lambda = " << v.eigenvalue << "  |v|^2 = " << bihom::to_short_string(v.norm_squared)
                      << "\n  v = " << v.polynomial.str() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
