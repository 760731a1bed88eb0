#ifndef TRILINK_BRAID_HPP
#define TRILINK_BRAID_HPP

#include <cstdint>
#include <vector>

#include "trilink/diagram.hpp"

namespace trilink {

// Gauss diagram of a braid closure. Generators: +i is sigma_i (the strand in
// position i passes over the one in position i+1, crossing sign +1), -i its
// inverse. Components follow the closure cycles, numbered by smallest strand
// and based at the bottom of that strand. Always realizable, which makes
// these the reference inputs for linking-number and base-point tests.
gauss_diagram braid_closure_diagram(int strands, const std::vector<int>& word);

// Seeded random pure-braid-style closure with exactly `components` cycles.
gauss_diagram random_braid_closure(std::uint64_t seed, int strands, int length, int components);

}  // namespace trilink

#endif
