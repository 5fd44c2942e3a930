#ifndef EQCOLL_JSON_IO_HPP
#define EQCOLL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "eqcoll/collection.hpp"
#include "eqcoll/induce.hpp"
#include "eqcoll/kernels.hpp"
#include "eqcoll/twist.hpp"

namespace eqcoll {

using json = nlohmann::json;

/// Thrown on malformed input (wrong JSON shape, negative multiplicities,
/// unknown keys where a degree was expected).  Maps to CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const GradedDim& g);
GradedDim graded_dim_from_json(const json& j);

json to_json(const ExceptionalCollection& c);
ExceptionalCollection collection_from_json(const json& j);
ExceptionalCollection load_collection_file(const std::string& path);

json to_json(const InducedLabel& label);
InducedLabel induced_label_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const VerifyReport& report);
json to_json(const FormalKernel& kernel);
json to_json(const ActionMatrix& m);
json to_json(const TwistGroupReport& report);

}  // namespace eqcoll

#endif
