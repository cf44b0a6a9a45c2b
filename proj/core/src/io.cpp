#include <groupprox/io.hpp>

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace groupprox {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::string where(const std::filesystem::path& path, std::size_t line) {
  return "'" + path.string() + "' line " + std::to_string(line);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  const std::string t = trim(token);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (t.size() > 1 && begin[0] == '+' && begin[1] != '-') ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (t.empty() || res.ec != std::errc{} || res.ptr != end)
    throw IoError("not a number: '" + token + "'");
  return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

Vector read_vector_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<double> values;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    try {
      values.push_back(parse_double(line));
    } catch (const IoError& e) {
      throw IoError(where(path, n) + ": " + e.what());
    }
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

void write_vector_csv(std::ostream& out, const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) out << format_double(v[i]) << '\n';
}

void write_vector_csv(const std::filesystem::path& path, const Vector& v) {
  auto out = open_output(path);
  write_vector_csv(out, v);
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(parse_double(cell));
      } catch (const IoError& e) {
        throw IoError(where(path, n) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw IoError(where(path, n) + ": expected " + std::to_string(rows.front().size()) +
                    " columns, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("'" + path.string() + "' contains no rows");
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  auto out = open_output(path);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

GroupPartition read_groups_json(const std::filesystem::path& path) {
  auto in = open_input(path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path.string() + "': invalid JSON: " + e.what());
  }
  if (!doc.is_array())
    throw IoError("'" + path.string() + "': expected an array of index arrays");
  std::vector<std::vector<Index>> groups;
  for (const auto& g : doc) {
    if (!g.is_array())
      throw IoError("'" + path.string() + "': each group must be an array");
    std::vector<Index> idx;
    for (const auto& v : g) {
      if (!v.is_number_integer())
        throw IoError("'" + path.string() + "': indices must be integers");
      idx.push_back(v.get<Index>());
    }
    groups.push_back(std::move(idx));
  }
  return GroupPartition(std::move(groups));
}

void write_groups_json(const std::filesystem::path& path, const GroupPartition& groups) {
  auto out = open_output(path);
  out << nlohmann::json(groups.groups()).dump() << '\n';
}

}  // namespace groupprox
