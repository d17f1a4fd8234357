#pragma once

#include <iosfwd>
#include <vector>

#include "algflow/classification.hpp"

namespace algflow {

/// One sample of the partition of the time axis by flow class.
struct PartitionRecord {
  double t;
  FlowClassLabel label;
  bool commutative;
  bool associative;
};

PartitionRecord partition_record(double t, double tol = kDefaultClassifyTol);

/// Records at t = 0, step, 2 step, ... <= t_max, the endpoint t_max, and every
/// exceptional time pi k, pi/2 + pi k, 3pi/4 + pi k in [0, t_max] inserted at
/// its exact value. Sorted, without duplicates. Throws std::invalid_argument
/// unless t_max > 0 and step > 0.
std::vector<PartitionRecord> partition_grid(double t_max, double step, double tol = kDefaultClassifyTol);

/// Columns t,class,param_c,commutative,associative.
void write_partition_csv(std::ostream& out, const std::vector<PartitionRecord>& records);
/// Array of {"t", "class", "commutative", "associative"} objects.
void write_partition_json(std::ostream& out, const std::vector<PartitionRecord>& records);

}  // namespace algflow
