#pragma once

#include <groupprox/common.hpp>
#include <groupprox/partition.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace groupprox {

/// File or parse failure; the message names the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Strict double parse of a whole token; throws IoError on junk.
double parse_double(const std::string& token);

/// Vector CSV: one value per line.
Vector read_vector_csv(const std::filesystem::path& path);
void write_vector_csv(const std::filesystem::path& path, const Vector& v);
void write_vector_csv(std::ostream& out, const Vector& v);

/// Matrix CSV: row-major, comma separated, no header.
Matrix read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(const std::filesystem::path& path, const Matrix& m);

/// Groups JSON: array of arrays of 0-based indices.
GroupPartition read_groups_json(const std::filesystem::path& path);
void write_groups_json(const std::filesystem::path& path, const GroupPartition& groups);

/// Opens `path` for writing or throws IoError naming it.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace groupprox
