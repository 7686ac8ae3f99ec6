// Prints the spectrum of T on every F(d,l) with d up to the given bound.

#include <bihom/spectral.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    const std::int64_t max_d = argc > 1 ? std::atoll(argv[1]) : 8;
    for (std::int64_t d = 1; d <= max_d; ++d) {
        for (std::int64_t l = 1; l <= d; ++l) {
            auto report = bihom::spectrum(d, l, false);
            std::cout << "F(" << d << "," << l << "):";
            for (auto v : report.eigenvalues())
                std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
}
