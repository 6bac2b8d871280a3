#include "koszul/chart.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/jet.hpp"

namespace kg {

Chart::Chart(std::string name, std::vector<std::string> coords, std::vector<Interval> domain)
    : name_(std::move(name)), coords_(std::move(coords)), domain_(std::move(domain)) {
  if (coords_.empty()) throw SpecError("chart '" + name_ + "' has no coordinates");
  if (dim() > kMaxDim)
    throw SpecError("chart '" + name_ + "' exceeds the supported dimension " +
                    std::to_string(kMaxDim));
  if (std::set<std::string>(coords_.begin(), coords_.end()).size() != coords_.size())
    throw SpecError("chart '" + name_ + "' repeats a coordinate name");
  if (domain_.empty()) domain_.assign(coords_.size(), Interval{-INFINITY, INFINITY});
  if (domain_.size() != coords_.size())
    throw SpecError("chart '" + name_ + "' domain size differs from its dimension");
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (!(domain_[i].lo < domain_[i].hi))
      throw SpecError("chart '" + name_ + "' has an empty interval for " + coords_[i]);
}

int Chart::index_of(const std::string& coord) const {
  for (int i = 0; i < dim(); ++i)
    if (coords_[i] == coord) return i;
  return -1;
}

void Chart::check_point(const std::vector<double>& p) const {
  if (static_cast<int>(p.size()) != dim())
    throw ChartMismatch("point has " + std::to_string(p.size()) + " coordinates, chart '" +
                        name_ + "' has " + std::to_string(dim()));
  for (int i = 0; i < dim(); ++i) {
    if (!(p[i] > domain_[i].lo && p[i] < domain_[i].hi)) {
      std::ostringstream os;
      os.precision(17);
      os << "coordinate " << coords_[i] << " = " << p[i] << " lies outside (" << domain_[i].lo
         << ", " << domain_[i].hi << ")";
      throw DomainError(os.str());
    }
  }
}

ChartPtr make_chart(std::string name, std::vector<std::string> coords,
                    std::vector<Interval> domain) {
  return std::make_shared<const Chart>(std::move(name), std::move(coords), std::move(domain));
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (&a == &b || a.same_coords(b)) return;
  throw ChartMismatch("charts '" + a.name() + "' and '" + b.name() + "' differ");
}

}  // namespace kg
