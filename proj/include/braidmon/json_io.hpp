#pragma once

#include <string>
#include <vector>

#include "braidmon/braid.hpp"
#include "braidmon/support.hpp"

namespace braidmon {

/// Support sets travel as JSON arrays of integer arrays:
/// [[0,0],[2,4],[5,2]].
SupportSet support_from_json(const std::string& text);
std::string support_to_json(const SupportSet& s);
SupportSet load_support(const std::string& path);

/// Words serialize as lists like ["b1","b3^-1","t^2"].
std::vector<std::string> word_to_json_list(const AnnularBraidWord& w);
AnnularBraidWord word_from_json_list(const std::vector<std::string>& items,
                                     int strands);

} // namespace braidmon
