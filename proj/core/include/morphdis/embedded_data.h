// Copies of the shipped data files compiled into the library, so defaults
// work without an installed data directory.

#ifndef MORPHDIS_EMBEDDED_DATA_H_
#define MORPHDIS_EMBEDDED_DATA_H_

#include <string_view>

namespace morphdis {

// Contents of data/<name>, or an empty view for unknown names.
std::string_view DefaultDataFile(std::string_view name);

}  // namespace morphdis

#endif  // MORPHDIS_EMBEDDED_DATA_H_
