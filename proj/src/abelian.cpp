#include "modcat/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modcat {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factor < 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  for (long long m : factors_) order_ *= m;
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(const std::vector<long long>& ns) {
  // Split into prime powers, then greedily stack the largest power of each
  // prime into the last invariant factor, the next largest into the previous
  // one, and so on.
  std::map<long long, std::vector<long long>> powers;  // p -> descending p^e list
  for (long long n : ns) {
    if (n < 1) throw std::invalid_argument("cyclic factor must be positive");
    if (n == 1) continue;
    for (auto [p, e] : factorize(n)) {
      long long pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      powers[p].push_back(pe);
    }
  }
  size_t slots = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    slots = std::max(slots, list.size());
  }
  std::vector<long long> inv(slots, 1);
  for (auto& [p, list] : powers)
    for (size_t i = 0; i < list.size(); ++i) inv[i] *= list[i];
  std::reverse(inv.begin(), inv.end());  // ascending, so the chain divides upward
  return FiniteAbelianGroup(std::move(inv));
}

GroupElement FiniteAbelianGroup::reduce(std::vector<long long> coords) const {
  if (coords.size() != factors_.size())
    throw std::invalid_argument("coordinate arity mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = mod_ll(coords[i], factors_[i]);
  return {std::move(coords)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<long long> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i)
    c[i] = mod_ll(a.coords[i] + b.coords[i], factors_[i]);
  return {std::move(c)};
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  std::vector<long long> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) c[i] = mod_ll(-a.coords[i], factors_[i]);
  return {std::move(c)};
}

GroupElement FiniteAbelianGroup::scale(long long k, const GroupElement& a) const {
  std::vector<long long> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) c[i] = mod_ll(k * a.coords[i], factors_[i]);
  return {std::move(c)};
}

GroupElement FiniteAbelianGroup::generator(size_t i) const {
  std::vector<long long> c(factors_.size(), 0);
  c.at(i) = 1;
  return {std::move(c)};
}

long long FiniteAbelianGroup::element_order(const GroupElement& a) const {
  long long ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i)
    ord = lcm_ll(ord, factors_[i] / std::gcd(a.coords[i], factors_[i]));
  return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  std::vector<long long> cur(factors_.size(), 0);
  for (long long n = 0; n < order_; ++n) {
    out.push_back({cur});
    for (size_t i = factors_.size(); i-- > 0;) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

long long FiniteAbelianGroup::index_of(const GroupElement& a) const {
  long long idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a.coords[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
  std::vector<long long> c(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return {std::move(c)};
}

Cyclotomic FiniteAbelianGroup::character(const GroupElement& t, const GroupElement& g) const {
  Cyclotomic v = Cyclotomic::from_integer(1);
  for (size_t i = 0; i < factors_.size(); ++i)
    v = v * Cyclotomic::root_of_unity(factors_[i], t.coords[i] * g.coords[i]);
  return v;
}

GroupElement FiniteAbelianGroup::act(const std::vector<GroupElement>& images,
                                     const GroupElement& g) const {
  GroupElement out = zero();
  for (size_t i = 0; i < factors_.size(); ++i)
    out = add(out, scale(g.coords[i], images[i]));
  return out;
}

std::vector<std::vector<GroupElement>> FiniteAbelianGroup::automorphisms() const {
  std::vector<std::vector<GroupElement>> out;
  size_t k = factors_.size();
  if (k == 0) return {std::vector<GroupElement>{}};
  std::vector<GroupElement> all = elements();
  // candidate images per generator: elements whose order divides the factor
  std::vector<std::vector<GroupElement>> cand(k);
  for (size_t i = 0; i < k; ++i)
    for (const GroupElement& g : all)
      if (factors_[i] % element_order(g) == 0) cand[i].push_back(g);
  std::vector<size_t> pick(k, 0);
  std::vector<GroupElement> images(k);
  while (true) {
    for (size_t i = 0; i < k; ++i) images[i] = cand[i][pick[i]];
    // bijective iff the images generate the whole group
    std::vector<char> seen(order_, 0);
    std::vector<long long> stack;
    seen[0] = 1;
    stack.push_back(0);
    long long count = 1;
    while (!stack.empty()) {
      GroupElement g = element_at(stack.back());
      stack.pop_back();
      for (size_t i = 0; i < k; ++i) {
        long long nxt = index_of(add(g, images[i]));
        if (!seen[nxt]) {
          seen[nxt] = 1;
          ++count;
          stack.push_back(nxt);
        }
      }
    }
    if (count == order_) out.push_back(images);
    size_t i = k;
    while (i-- > 0) {
      if (++pick[i] < cand[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << "Z" << factors_[i];
  }
  return os.str();
}

}  // namespace modcat
