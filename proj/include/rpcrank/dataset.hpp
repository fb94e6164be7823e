#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rpcrank {

/// Per-attribute sense of "better": +1 if larger raw values are preferable
/// along that attribute, -1 if smaller ones are.
class OrientationVector {
 public:
  explicit OrientationVector(Eigen::VectorXd deltas);

  /// Parses comma-separated signs, e.g. "+,+,-,-" (also accepts "+1"/"-1"/"1").
  static OrientationVector parse(const std::string& text);

  Eigen::Index dim() const { return deltas_.size(); }
  double operator[](Eigen::Index j) const { return deltas_[j]; }
  const Eigen::VectorXd& deltas() const { return deltas_; }

  /// Least preferred corner of the unit hypercube: 0.5 * (1 - deltas).
  Eigen::VectorXd low_corner() const;
  /// Most preferred corner of the unit hypercube: 0.5 * (1 + deltas).
  Eigen::VectorXd high_corner() const;

 private:
  Eigen::VectorXd deltas_;
};

/// Rectangular observation table. Rows are objects, columns are attributes;
/// every entry is finite and attribute names are unique and non-empty.
struct Dataset {
  std::vector<std::string> attribute_names;
  std::vector<std::string> object_ids;
  Eigen::MatrixXd values;

  Dataset(std::vector<std::string> attribute_names,
          std::vector<std::string> object_ids,
          Eigen::MatrixXd values);

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index d() const { return values.cols(); }
};

struct CsvLoadResult {
  Dataset dataset;
  int dropped_rows;
};

/// Reads a comma-separated table with a header row. Rows containing a
/// missing or non-numeric attribute cell are dropped and counted, not
/// errors. When id_column is empty, ids are 1-based data-row indices
/// (assigned before dropping, so ids trace back to file order).
CsvLoadResult load_csv(const std::string& path,
                       const std::optional<std::string>& id_column = std::nullopt);

/// Min-max rescaled observations. Entries lie in [0,1]; col_min[j] < col_max[j]
/// records the affine map back to original units.
struct NormalizedDataset {
  Eigen::MatrixXd values;
  Eigen::VectorXd col_min;
  Eigen::VectorXd col_max;

  NormalizedDataset(Eigen::MatrixXd values,
                    Eigen::VectorXd col_min,
                    Eigen::VectorXd col_max);

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index d() const { return values.cols(); }
};

/// Rescales each column onto [0,1] by its observed range, so every column of
/// the result attains both 0 and 1. Constant columns are errors (named in the
/// exception message).
NormalizedDataset normalize(const Dataset& data);

enum class Ordering { Precedes, Succeeds, Equal, Incomparable };

/// Componentwise comparison under the orientation: x precedes y when every
/// attribute of y is at least as preferred as x's. The relation is partial;
/// Incomparable is a normal outcome, not an error.
Ordering compare_points(const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y,
                        const OrientationVector& orientation);

/// Fractional ranks per attribute: rank 1 is the least preferred value under
/// that attribute's orientation, rank n the most preferred; exact ties share
/// the average of the positions they span. Returns one length-n vector per
/// attribute.
std::vector<Eigen::VectorXd> attribute_rank_lists(const NormalizedDataset& data,
                                                  const OrientationVector& orientation);

}  // namespace rpcrank
