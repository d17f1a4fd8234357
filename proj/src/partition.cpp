#include "algflow/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "algflow/serialization.hpp"

namespace algflow {

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool coincide(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

}  // namespace

PartitionRecord partition_record(double t, double tol) {
  const Algebra a = flow_algebra(t);
  return {t, classify_time(t, tol), is_commutative(a), is_associative(a)};
}

std::vector<PartitionRecord> partition_grid(double t_max, double step, double tol) {
  if (!(std::isfinite(t_max) && t_max > 0.0)) throw std::invalid_argument("partition: t_max must be > 0");
  if (!(std::isfinite(step) && step > 0.0)) throw std::invalid_argument("partition: step must be > 0");

  std::vector<double> times;
  const auto n = static_cast<long long>(std::floor(t_max / step + 1e-9));
  for (long long i = 0; i <= n; ++i) times.push_back(static_cast<double>(i) * step);
  if (!coincide(times.back(), t_max)) times.push_back(t_max);

  constexpr double pi = std::numbers::pi;
  std::vector<double> exceptional;
  for (long long k = 0;; ++k) {
    const double base = static_cast<double>(k) * pi;
    if (base > t_max && !coincide(base, t_max)) break;
    for (double offset : {0.0, pi / 2, 3 * pi / 4}) {
      const double x = base + offset;
      if (x <= t_max || coincide(x, t_max)) exceptional.push_back(x);
    }
  }
  for (double x : exceptional) {
    auto hit = std::find_if(times.begin(), times.end(), [x](double g) { return coincide(g, x); });
    if (hit != times.end()) {
      *hit = x;
    } else {
      times.push_back(x);
    }
  }
  std::sort(times.begin(), times.end());

  std::vector<PartitionRecord> records;
  records.reserve(times.size());
  for (double t : times) records.push_back(partition_record(t, tol));
  return records;
}

void write_partition_csv(std::ostream& out, const std::vector<PartitionRecord>& records) {
  out << "t,class,param_c,commutative,associative\n";
  for (const auto& r : records) {
    out << shortest(r.t) << ',' << r.label.name() << ',';
    if (auto c = r.label.parameter()) out << shortest(*c);
    out << ',' << (r.commutative ? "true" : "false") << ',' << (r.associative ? "true" : "false") << '\n';
  }
}

void write_partition_json(std::ostream& out, const std::vector<PartitionRecord>& records) {
  io::json arr = io::json::array();
  for (const auto& r : records) {
    arr.push_back({{"t", r.t},
                   {"class", io::to_json(r.label)},
                   {"commutative", r.commutative},
                   {"associative", r.associative}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace algflow
