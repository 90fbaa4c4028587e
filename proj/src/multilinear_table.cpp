#include "ainf/multilinear_table.hpp"

namespace ainf {

namespace {
const Combination kEmpty;
const std::map<Tuple, Combination> kEmptyArity;
}  // namespace

MultilinearTable::MultilinearTable(BasisPtr source, BasisPtr target, int shifted_degree)
    : source_(std::move(source)), target_(std::move(target)), shifted_degree_(shifted_degree) {}

void MultilinearTable::check_entry(const Tuple& inputs, const Combination& value) const {
  if (inputs.empty()) throw StructureError("multilinear entries need arity >= 1");
  for (int i : inputs)
    if (i < 0 || i >= source_->size()) throw StructureError("input index out of range in entry " + std::to_string(i));
  const int expected = source_->shifted_sum(inputs) + shifted_degree_;
  for (const auto& [o, c] : value) {
    if (o < 0 || o >= target_->size()) throw StructureError("output index out of range");
    if (target_->shifted(o) != expected)
      throw StructureError("degree mismatch in entry " + source_->describe(inputs) + " -> " + target_->label(o) +
                           ": output has shifted degree " + std::to_string(target_->shifted(o)) + ", expected " +
                           std::to_string(expected));
  }
}

void MultilinearTable::set(const Tuple& inputs, const Combination& value) {
  check_entry(inputs, value);
  auto& slot = by_arity_[static_cast<int>(inputs.size())];
  if (value.empty()) {
    slot.erase(inputs);
    if (slot.empty()) by_arity_.erase(static_cast<int>(inputs.size()));
  } else {
    slot[inputs] = value;
  }
}

void MultilinearTable::add(const Tuple& inputs, int output, const Rational& c) {
  Combination v;
  add_term(v, output, c);
  add(inputs, v);
}

void MultilinearTable::add(const Tuple& inputs, const Combination& value, const Rational& c) {
  if (value.empty() || c == 0) return;
  Combination cur = at(inputs);
  add_scaled(cur, value, c);
  set(inputs, cur);
}

const Combination& MultilinearTable::at(const Tuple& inputs) const {
  auto a = by_arity_.find(static_cast<int>(inputs.size()));
  if (a == by_arity_.end()) return kEmpty;
  auto it = a->second.find(inputs);
  return it == a->second.end() ? kEmpty : it->second;
}

const std::map<Tuple, Combination>& MultilinearTable::arity(int k) const {
  auto a = by_arity_.find(k);
  return a == by_arity_.end() ? kEmptyArity : a->second;
}

int MultilinearTable::max_arity() const { return by_arity_.empty() ? 0 : by_arity_.rbegin()->first; }

std::size_t MultilinearTable::entry_count() const {
  std::size_t n = 0;
  for (const auto& [k, e] : by_arity_) n += e.size();
  return n;
}

Combination MultilinearTable::apply(std::span<const Combination> args) const {
  Combination out;
  const auto& entries = arity(static_cast<int>(args.size()));
  if (entries.empty()) return out;
  std::size_t product = 1;
  for (const auto& a : args) {
    product *= a.size();
    if (product == 0) return out;
  }
  if (product <= entries.size()) {
    expand_product(args, [&](const Tuple& t, const Rational& c) {
      auto it = entries.find(t);
      if (it != entries.end()) add_scaled(out, it->second, c);
    });
  } else {
    for (const auto& [t, v] : entries) {
      Rational c = 1;
      for (std::size_t i = 0; i < t.size() && c != 0; ++i) {
        auto f = args[i].find(t[i]);
        c = f == args[i].end() ? Rational(0) : c * f->second;
      }
      if (c != 0) add_scaled(out, v, c);
    }
  }
  return out;
}

MultilinearTable MultilinearTable::truncated(int max_arity) const {
  MultilinearTable out(source_, target_, shifted_degree_);
  for (const auto& [k, e] : by_arity_)
    if (k <= max_arity) out.by_arity_[k] = e;
  return out;
}

}  // namespace ainf

namespace ainf {

std::string render(const GradedBasis& basis, const Combination& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, v] : c) {
    if (!first) s += " + ";
    first = false;
    s += to_string(v) + "*" + basis.label(i);
  }
  return s;
}

}  // namespace ainf
