#pragma once

#include <string>
#include <vector>

namespace mmds::csv {

// RFC 4180 field quoting.
std::string escape(const std::string& field);
std::string join(const std::vector<std::string>& fields);
// Splits one line; handles quoted fields with embedded commas and quotes.
std::vector<std::string> split(const std::string& line);

}  // namespace mmds::csv
