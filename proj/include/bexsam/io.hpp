#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bexsam/dataset.hpp"
#include "bexsam/discovery.hpp"
#include "bexsam/evaluation.hpp"
#include "bexsam/model.hpp"

namespace bexsam {

// Malformed input data (bad CSV cell, inconsistent JSON document, ...).
// Kept distinct from usage errors so the CLI can map it to its own exit code.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string model_to_json(const BexsamModel& model);
BexsamModel model_from_json(const std::string& text);

// CSV with header v<label> per column and 0/1 body tokens.
std::string dataset_to_csv(const Dataset& data);
Dataset dataset_from_csv(const std::string& text);

// ct_ms < 0 omits the timing field.
std::string result_to_json(const DiscoveryResult& result, double ct_ms = -1.0);
DiscoveryResult result_from_json(const std::string& text);

std::string bench_to_csv(const std::vector<BenchCell>& cells);
std::string confusion_to_csv(const ConfusionCounts& confusion);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bexsam
