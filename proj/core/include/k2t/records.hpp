#pragma once

#include <string>

#include "k2t/search.hpp"

namespace k2t {

/// "%.12g": every number the tools print goes through here.
std::string format_real(double x);

/// Value of x rounded to 12 significant digits (used before JSON encoding so
/// emitted numbers carry the same precision as CSV).
double round_significant(double x);

inline constexpr const char* kSearchCsvHeader = "graph6,n,t,mu,gap_upper,gap_ysh,is_ft";

/// Columns as in kSearchCsvHeader; gap_ysh is empty when t != 3.
std::string to_csv_row(const SearchRecord& r);

/// Same fields plus "violated" and "move_trace" (array of move strings).
std::string to_jsonl(const SearchRecord& r);

}  // namespace k2t
