#include "ellfib/kv.hpp"

#include "ellfib/errors.hpp"

namespace ellfib {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t k = s.find(sep, start);
        out.push_back(trim(s.substr(start, k == std::string::npos ? std::string::npos : k - start)));
        if (k == std::string::npos) return out;
        start = k + 1;
    }
}

KeyValues parse_kv(const std::string& text) {
    KeyValues kv;
    int line_no = 0;
    for (auto& line : split(text, '\n')) {
        ++line_no;
        std::string l = line.substr(0, line.find('#'));
        for (auto& rec : split(l, ';')) {
            if (rec.empty()) continue;
            size_t eq = rec.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected key = value, got \"" + rec + "\"");
            kv.emplace_back(trim(rec.substr(0, eq)), trim(rec.substr(eq + 1)));
        }
    }
    return kv;
}

const std::string* kv_find(const KeyValues& kv, const std::string& key) {
    for (auto& [k, v] : kv)
        if (k == key) return &v;
    return nullptr;
}

const std::string& kv_require(const KeyValues& kv, const std::string& key, const std::string& what) {
    if (auto v = kv_find(kv, key)) return *v;
    throw Error(ErrorKind::Parse, what + ": missing '" + key + "'");
}

}  // namespace ellfib
