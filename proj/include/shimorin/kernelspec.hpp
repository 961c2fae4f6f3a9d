#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "shimorin/bivariate.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

using json = nlohmann::json;
using AnySeries = std::variant<DiagonalSeries, BivariateSeries>;

json to_json(const DiagonalSeries& f);
json to_json(const BivariateSeries& f);
json to_json(const AnySeries& f);
json to_json(const MultiIndex& a);

AnySeries series_from_json(const json& j);
DiagonalSeries diagonal_from_json(const json& j);
MultiIndex multi_index_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace shimorin
