#include "ainf/graded_basis.hpp"

#include <set>

#include "ainf/rational.hpp"

namespace ainf {

int koszul_sign(std::span<const int> block_a, std::span<const int> block_b) {
  long long a = 0, b = 0;
  for (int d : block_a) a += d;
  for (int d : block_b) b += d;
  return sign_of(a * b);
}

std::string to_string(ParityConvention p) {
  return p == ParityConvention::shifted ? "shifted" : "unshifted";
}

ParityConvention parse_parity(const std::string& s) {
  if (s == "shifted") return ParityConvention::shifted;
  if (s == "unshifted") return ParityConvention::unshifted;
  throw std::invalid_argument("unknown parity convention '" + s + "'");
}

GradedBasis::GradedBasis(std::vector<BasisEntry> entries, std::optional<int> unit_index)
    : entries_(std::move(entries)), unit_(unit_index) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.label).second) throw StructureError("duplicate basis label '" + e.label + "'");
  }
  if (unit_) {
    if (*unit_ < 0 || *unit_ >= size()) throw StructureError("unit index out of range");
    if (entries_[*unit_].degree != 0) throw StructureError("unit must have degree 0");
  }
}

std::optional<int> GradedBasis::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].label == label) return i;
  return std::nullopt;
}

bool GradedBasis::variable_odd(int i, ParityConvention p) const {
  int d = p == ParityConvention::shifted ? shifted(i) : degree(i);
  return (d & 1) != 0;
}

int GradedBasis::shifted_sum(std::span<const int> tuple) const {
  int s = 0;
  for (int i : tuple) s += shifted(i);
  return s;
}

std::vector<int> GradedBasis::of_shifted_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (shifted(i) == d) out.push_back(i);
  return out;
}

std::string GradedBasis::describe(std::span<const int> tuple) const {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) s += ",";
    s += label(tuple[k]);
  }
  return s + ")";
}

bool GradedBasis::operator==(const GradedBasis& other) const {
  if (unit_ != other.unit_ || entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label != other.entries_[i].label || entries_[i].degree != other.entries_[i].degree)
      return false;
  return true;
}

}  // namespace ainf
