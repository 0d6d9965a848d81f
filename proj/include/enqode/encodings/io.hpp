// enqode: data set import
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "enqode/encodings/dataset.hpp"

namespace enqode {

/// One value per line; complex values as "re,im". Blank lines and '#'
/// comments are skipped.
std::vector<cplx> parse_csv_values(const std::string& text);

/// Array of numbers or [re, im] pairs.
std::vector<cplx> parse_json_values(const nlohmann::json& j);

/// Reads a .csv or .json file of values.
std::vector<cplx> read_values_file(const std::string& path);

nlohmann::json to_json(const DataSet& d);
DataSet dataset_from_json(const nlohmann::json& j);

}  // namespace enqode
