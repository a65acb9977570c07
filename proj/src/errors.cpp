#include "strateuler/errors.hpp"

namespace strateuler {

namespace {

std::string join_fields(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ", ";
    out += fields[i];
  }
  return out;
}

}  // namespace

InsufficientData::InsufficientData(std::vector<std::string> fields)
    : Error("InsufficientData: missing " + join_fields(fields)),
      fields_(std::move(fields)) {}

SchemaError::SchemaError(std::string path, const std::string& message)
    : Error("SchemaError at " + (path.empty() ? std::string("/") : path) +
            ": " + message),
      path_(std::move(path)) {}

}  // namespace strateuler
