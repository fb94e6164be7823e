#include "rpcrank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rpcrank {
namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* first = cell.data();
  const char* last = first + cell.size();
  if (*first == '+') ++first;  // from_chars rejects an explicit plus
  if (first == last) return false;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

OrientationVector::OrientationVector(Eigen::VectorXd deltas)
    : deltas_(std::move(deltas)) {
  if (deltas_.size() < 1)
    throw std::invalid_argument("orientation vector must have at least one entry");
  for (Eigen::Index j = 0; j < deltas_.size(); ++j) {
    if (deltas_[j] != 1.0 && deltas_[j] != -1.0)
      throw std::invalid_argument("orientation entries must be +1 or -1");
  }
}

OrientationVector OrientationVector::parse(const std::string& text) {
  std::vector<double> deltas;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    token = trim(token);
    if (token == "+" || token == "+1" || token == "1") {
      deltas.push_back(1.0);
    } else if (token == "-" || token == "-1") {
      deltas.push_back(-1.0);
    } else {
      throw std::invalid_argument("bad orientation token '" + token +
                                  "' (expected + or -)");
    }
  }
  if (deltas.empty())
    throw std::invalid_argument("orientation vector must have at least one entry");
  return OrientationVector(
      Eigen::Map<const Eigen::VectorXd>(deltas.data(), deltas.size()));
}

Eigen::VectorXd OrientationVector::low_corner() const {
  return 0.5 * (Eigen::VectorXd::Ones(deltas_.size()) - deltas_);
}

Eigen::VectorXd OrientationVector::high_corner() const {
  return 0.5 * (Eigen::VectorXd::Ones(deltas_.size()) + deltas_);
}

Dataset::Dataset(std::vector<std::string> attribute_names_in,
                 std::vector<std::string> object_ids_in,
                 Eigen::MatrixXd values_in)
    : attribute_names(std::move(attribute_names_in)),
      object_ids(std::move(object_ids_in)),
      values(std::move(values_in)) {
  if (values.rows() < 1 || values.cols() < 1)
    throw std::invalid_argument("dataset must have at least one row and one column");
  if (static_cast<Eigen::Index>(attribute_names.size()) != values.cols())
    throw std::invalid_argument("attribute name count does not match column count");
  if (static_cast<Eigen::Index>(object_ids.size()) != values.rows())
    throw std::invalid_argument("object id count does not match row count");
  std::set<std::string> seen;
  for (const auto& name : attribute_names) {
    if (name.empty()) throw std::invalid_argument("attribute names must be non-empty");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate attribute name '" + name + "'");
  }
  if (!values.allFinite())
    throw std::invalid_argument("dataset values must be finite");
}

CsvLoadResult load_csv(const std::string& path,
                       const std::optional<std::string>& id_column) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(file, line))
    throw std::runtime_error("'" + path + "' is empty");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
    line.erase(0, 3);  // UTF-8 byte order mark

  const std::vector<std::string> header = split_line(line);
  Eigen::Index id_index = -1;
  if (id_column) {
    const auto it = std::find(header.begin(), header.end(), *id_column);
    if (it == header.end())
      throw std::invalid_argument("id column '" + *id_column + "' not found in header");
    id_index = it - header.begin();
  }

  std::vector<std::string> names;
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(header.size()); ++j) {
    if (j == id_index) continue;
    if (header[j].empty())
      throw std::invalid_argument("empty attribute name in header of '" + path + "'");
    names.push_back(header[j]);
  }
  if (names.empty())
    throw std::invalid_argument("'" + path + "' has no attribute columns");

  std::vector<std::string> ids;
  std::vector<double> flat;
  int dropped = 0;
  int data_row = 0;
  const std::size_t d = names.size();
  while (std::getline(file, line)) {
    if (trim(line).empty()) continue;
    ++data_row;
    const std::vector<std::string> cells = split_line(line);
    std::vector<double> row;
    row.reserve(d);
    bool ok = cells.size() == header.size();
    std::string id = id_index >= 0 && ok ? cells[id_index] : std::to_string(data_row);
    if (ok) {
      for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(cells.size()); ++j) {
        if (j == id_index) continue;
        double value = 0.0;
        if (!parse_double(cells[j], value)) {
          ok = false;
          break;
        }
        row.push_back(value);
      }
    }
    if (!ok) {
      ++dropped;
      continue;
    }
    ids.push_back(std::move(id));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (ids.empty())
    throw std::runtime_error("'" + path + "' has no usable data rows");

  Eigen::MatrixXd values(static_cast<Eigen::Index>(ids.size()),
                         static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j)
      values(i, j) = flat[static_cast<std::size_t>(i) * d + j];

  return CsvLoadResult{Dataset(std::move(names), std::move(ids), std::move(values)),
                       dropped};
}

NormalizedDataset::NormalizedDataset(Eigen::MatrixXd values_in,
                                     Eigen::VectorXd col_min_in,
                                     Eigen::VectorXd col_max_in)
    : values(std::move(values_in)),
      col_min(std::move(col_min_in)),
      col_max(std::move(col_max_in)) {
  if (values.rows() < 1 || values.cols() < 1)
    throw std::invalid_argument("normalized dataset must be non-empty");
  if (col_min.size() != values.cols() || col_max.size() != values.cols())
    throw std::invalid_argument("column bound lengths do not match column count");
  if ((values.array() < 0.0).any() || (values.array() > 1.0).any() ||
      !values.allFinite())
    throw std::invalid_argument("normalized values must lie in [0,1]");
  for (Eigen::Index j = 0; j < col_min.size(); ++j) {
    if (!(col_min[j] < col_max[j]))
      throw std::invalid_argument("column bounds must satisfy min < max");
  }
}

NormalizedDataset normalize(const Dataset& data) {
  const Eigen::VectorXd lo = data.values.colwise().minCoeff();
  const Eigen::VectorXd hi = data.values.colwise().maxCoeff();
  for (Eigen::Index j = 0; j < data.d(); ++j) {
    if (lo[j] == hi[j])
      throw std::invalid_argument("constant column '" + data.attribute_names[j] +
                                  "' cannot be normalized");
  }
  Eigen::MatrixXd scaled = data.values;
  for (Eigen::Index j = 0; j < data.d(); ++j)
    scaled.col(j) = (scaled.col(j).array() - lo[j]) / (hi[j] - lo[j]);
  return NormalizedDataset(std::move(scaled), lo, hi);
}

Ordering compare_points(const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y,
                        const OrientationVector& orientation) {
  if (x.size() != orientation.dim() || y.size() != orientation.dim())
    throw std::invalid_argument("point dimensions do not match the orientation");
  if (!x.allFinite() || !y.allFinite())
    throw std::invalid_argument("compared points must be finite");
  if ((x.array() == y.array()).all()) return Ordering::Equal;
  const Eigen::ArrayXd gap = orientation.deltas().array() * (y - x).array();
  if ((gap >= 0.0).all()) return Ordering::Precedes;
  if ((gap <= 0.0).all()) return Ordering::Succeeds;
  return Ordering::Incomparable;
}

std::vector<Eigen::VectorXd> attribute_rank_lists(const NormalizedDataset& data,
                                                  const OrientationVector& orientation) {
  if (orientation.dim() != data.d())
    throw std::invalid_argument("orientation length does not match attribute count");
  const Eigen::Index n = data.n();
  std::vector<Eigen::VectorXd> lists;
  lists.reserve(static_cast<std::size_t>(data.d()));
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < data.d(); ++j) {
    // Key ascending in preference: rank 1 is the least preferred value.
    const Eigen::VectorXd key = orientation[j] * data.values.col(j);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&key](Eigen::Index a, Eigen::Index b) { return key[a] < key[b]; });
    Eigen::VectorXd ranks(n);
    Eigen::Index i = 0;
    while (i < n) {
      Eigen::Index run = i + 1;
      while (run < n && key[order[run]] == key[order[i]]) ++run;
      const double shared = 0.5 * static_cast<double>(i + 1 + run);  // mean of i+1..run
      for (Eigen::Index k = i; k < run; ++k) ranks[order[k]] = shared;
      i = run;
    }
    lists.push_back(std::move(ranks));
  }
  return lists;
}

}  // namespace rpcrank
