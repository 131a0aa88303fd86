#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preclude/graph.hpp"

namespace preclude {

// Deterministic linear congruential generator (the MMIX multiplier/increment).
// Every random family draws from this so corpora reproduce bit-for-bit;
// next_below discards the low 16 bits before reducing.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    std::uint64_t next_below(std::uint64_t bound) {
        return (next() >> 16) % bound;
    }

private:
    std::uint64_t state_;
};

// The G_k gap family: blocks a_1..a_2k, b_1..b_2k, c_1..c_k, d_1..d_k laid out
// in that order, with edges a_i b_i, a_i c_j, b_i d_j.
struct GkGraph {
    Graph graph;
    std::vector<int> a, b, c, d;  // vertex ids per block, ascending
};

GkGraph gen_gk(int k);

struct FamilySpec {
    std::string family;  // gk | complete_bipartite | cycle | path | hypercube |
                         // random_regular_bipartite | random_tree
    std::vector<long> params;
    std::optional<std::uint64_t> seed;
};

// Builds the requested family; throws invalid_spec_error on unknown names,
// wrong parameter counts, out-of-range parameters, or a missing seed for the
// random families.  Output is fully determined by (family, params, seed).
Graph gen_family(const FamilySpec& spec);

}  // namespace preclude
