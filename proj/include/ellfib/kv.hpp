#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ellfib {

// "key = value" records separated by newlines or ';'; '#' starts a comment
using KeyValues = std::vector<std::pair<std::string, std::string>>;
KeyValues parse_kv(const std::string& text);
const std::string* kv_find(const KeyValues& kv, const std::string& key);
const std::string& kv_require(const KeyValues& kv, const std::string& key, const std::string& what);
std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace ellfib
