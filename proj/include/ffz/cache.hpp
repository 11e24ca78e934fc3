#pragma once

#include <cstdint>
#include <string>

#include "ffz/family.hpp"

namespace ffz {

/// Text cache of a family table.  First line `FFZLFC1;q=<q>;n=<n>`, then one
/// line per member in enumeration order: the digits a_1..a_n separated by
/// commas, a semicolon, and ahat_0..ahat_{n-1} separated by commas.
void write_cache(const std::string& path, const FamilyTable& t);
std::string cache_to_string(const FamilyTable& t);
FamilyTable read_cache(const std::string& path);
FamilyTable parse_cache(const std::string& text);

/// $FFZ_CACHE_DIR/ffz_q<q>_n<n>.lfc, or the working directory when unset.
std::string default_cache_path(std::uint32_t q, unsigned n);

}  // namespace ffz
