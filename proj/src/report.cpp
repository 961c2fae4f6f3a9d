#include "shimorin/report.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "shimorin/errors.hpp"

namespace shimorin {

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        h ^= static_cast<unsigned char>(*it);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunReport::RunReport(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["inputs"] = nlohmann::json::array();
    j_["tolerances"] = nlohmann::json::object();
}

void RunReport::add_input(const std::string& path) {
    j_["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64_file(path)}});
}

void RunReport::add_inline_input(const std::string& label, const std::string& value) {
    j_["inputs"].push_back({{"name", label}, {"value", value}});
}

void RunReport::set_verdict(const std::string& verdict, const std::string& method) {
    j_["verdict"] = verdict;
    j_["method"] = method;
}

nlohmann::json RunReport::finish() {
    j_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return j_;
}

}  // namespace shimorin
