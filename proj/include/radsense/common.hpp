#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radsense {

using cdouble = std::complex<double>;

// Error categories map onto the CLI exit codes (2/3/4).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// splitmix64; used to derive independent stream seeds from (seed, salt...).
uint64_t mix_seed(uint64_t seed, uint64_t salt);
uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b);

// Deterministic random stream. Hand-rolled distributions so that generated
// datasets are byte-identical across standard library implementations.
class RngStream {
public:
    explicit RngStream(uint64_t seed);

    uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    std::size_t index(std::size_t n);       // {0, ..., n-1}
    bool coin();                            // fair
    double normal();                        // N(0, 1), Box-Muller
    cdouble complex_normal(double variance);// circular, E|z|^2 = variance

private:
    uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

double median_of(std::vector<double> v);

// Angle in (-pi, pi].
double wrap_angle(double a);

// Circular median over sample angles: the sample angle minimizing the summed
// absolute circular distance to all others (lowest index wins ties).
double circular_median(const std::vector<double>& angles);

} // namespace radsense
