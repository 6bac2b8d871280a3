#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kg {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Local coordinate model of a manifold: names plus an open domain box.
class Chart {
 public:
  Chart(std::string name, std::vector<std::string> coords, std::vector<Interval> domain);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<Interval>& domain() const { return domain_; }

  /// Index of a coordinate name, or -1.
  int index_of(const std::string& coord) const;

  /// Throws DomainError naming the first coordinate outside its interval.
  void check_point(const std::vector<double>& p) const;

  bool same_coords(const Chart& other) const { return coords_ == other.coords_; }

 private:
  std::string name_;
  std::vector<std::string> coords_;
  std::vector<Interval> domain_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::string name, std::vector<std::string> coords,
                    std::vector<Interval> domain = {});

/// Throws ChartMismatch unless both charts carry the same coordinates.
void require_same_chart(const Chart& a, const Chart& b);

}  // namespace kg
