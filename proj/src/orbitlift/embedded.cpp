#include "orbitlift/embedded.hpp"

#include "embedded_data.hpp"  // generated into the build tree by CMake

namespace orbitlift {

const char* embedded_goldens_tsv() { return embedded::kGoldensTsv; }
const char* embedded_orbit_names_tsv() { return embedded::kOrbitNamesTsv; }

}  // namespace orbitlift
