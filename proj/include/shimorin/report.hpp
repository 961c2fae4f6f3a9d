#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

namespace shimorin {

// 64-bit FNV-1a of the file bytes, hex encoded
std::string fnv1a64_file(const std::string& path);

class RunReport {
public:
    explicit RunReport(std::string command);

    void add_input(const std::string& path);
    void add_inline_input(const std::string& label, const std::string& value);
    void set_degree(int n) { j_["truncation_degree"] = n; }
    void set_tolerance(const std::string& name, double value) { j_["tolerances"][name] = value; }
    // "exact" or the float tolerance description
    void set_verdict(const std::string& verdict, const std::string& method);
    void set_result(nlohmann::json r) { j_["result"] = std::move(r); }

    nlohmann::json finish();

private:
    nlohmann::json j_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace shimorin
