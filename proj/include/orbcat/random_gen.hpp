#pragma once

#include <random>

#include "orbcat/complex.hpp"

namespace orbcat {

// Seeded generators for the randomized verification suites. Dimensions stay
// small (<= 3 per degree, degrees within [-2, 2]) so that exact arithmetic
// stays cheap.
class RandomGen {
public:
    explicit RandomGen(uint64_t seed) : g_(seed) {}

    int uniform(int lo, int hi);
    Scalar small_scalar(const Field& f, int bound = 2);

    Rep random_rep(const Quiver& q, const Field& f, int max_dim);
    Complex random_complex(const Quiver& q, const Field& f, int deg_lo, int deg_hi, int max_dim);
    // random element in the span of the chain maps X -> Y
    ChainMap random_chain_map(const Complex& x, const Complex& y);
    // degreewise split mono X -> cone(g) for a random g: W -> X
    ChainMap random_cofibration(const Quiver& q, const Field& f, int max_dim);

private:
    std::mt19937_64 g_;
};

}  // namespace orbcat
