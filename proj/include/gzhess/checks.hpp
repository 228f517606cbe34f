#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gzhess {

struct SuiteResult {
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;  // first few only

    bool ok() const { return failed == 0 && passed > 0; }
    void record(bool good, const std::string& what);
    std::string summary() const;
};

// Each suite runs at a single n. Random suites take `cases` draws from `seed`;
// exhaustive suites ignore both.

// x-relation: exhaustive over all diagrams and admissible cells for n <= 4,
// random diagrams for larger n.
SuiteResult check_xrelation(int n, std::uint64_t seed, int cases = 200);
// Lattice-point volume against the tableau formula: every edge subset for
// n <= 4, random faces for larger n.
SuiteResult check_ehrhart(int n, std::uint64_t seed, int cases = 100);
// verify_cube for every r, plus the volume sum against the permutohedron
// oracle up to n = 5.
SuiteResult check_cubes(int n, unsigned threads = 1);
// The three volume routes for every Hessenberg function of size n.
SuiteResult check_threepath(int n, unsigned threads = 1);
// Richardson identity, plus vol(X(r)) = vol(F(r)) for n <= 4.
SuiteResult check_richardson(int n, unsigned threads = 1);
// Projection of random rational GZ points onto the cube decomposition.
SuiteResult check_projection(int n, std::uint64_t seed, int cases = 1000);

// splitmix64; fixed across platforms so seeded runs are reproducible.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace gzhess
