#include "cforge/process_config.hpp"

namespace cforge {

SeedStreams::SeedStreams(std::uint64_t seed) : process(seed), tracking(seed) {
  Rng root(seed);
  process = root.split();
  tracking = root.split();
}

}  // namespace cforge
