#include "diplo/map.hpp"

#include "standard_map_text.hpp"

namespace diplo {

const char* standard_map_text() { return detail::kStandardMapText; }

} // namespace diplo
