#ifndef ORBITLIFT_EMBEDDED_HPP
#define ORBITLIFT_EMBEDDED_HPP

namespace orbitlift {

/// Static data compiled into the library from data/*.tsv at build time.
const char* embedded_goldens_tsv();
const char* embedded_orbit_names_tsv();

}  // namespace orbitlift

#endif
