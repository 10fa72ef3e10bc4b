#include "starsurg/dualize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "starsurg/errors.hpp"

namespace starsurg {

HJString::HJString(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("empty Hirzebruch-Jung string");
  if (entries_.size() == 1 && entries_[0] == 1) return;
  for (auto a : entries_)
    if (a < 2) throw DomainError("Hirzebruch-Jung entries must be >= 2");
}

HJString hj_expand(const Integer& p, const Integer& q) {
  if (!(q >= 1 && p > q)) throw DomainError("hj_expand requires p > q >= 1");
  if (boost::multiprecision::gcd(p, q) != 1) throw DomainError("hj_expand requires gcd(p, q) = 1");
  std::vector<std::int64_t> out;
  Integer num = p, den = q;
  while (den != 0) {
    // a = ceil(num/den); num/den = a - den'/num' with den' = a*den - num.
    Integer a = (num + den - 1) / den;
    out.push_back(static_cast<std::int64_t>(a));
    Integer next_den = a * den - num;
    num = den;
    den = next_den;
  }
  return HJString(std::move(out));
}

Fraction hj_value(const HJString& s) {
  const auto& e = s.entries();
  Integer num = e.back(), den = 1;
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    Integer next = e[i] * num - den;
    den = num;
    num = next;
  }
  return {num, den};
}

HJString hj_dual(const HJString& s) {
  if (s.is_unit()) throw DomainError("the unit string has no dual");
  Fraction f = hj_value(s);
  return hj_expand(f.p, f.p - f.q);
}

StarPlumbing dual_cap(const StarPlumbing& g) {
  if (!is_dually_positive(g)) throw DomainError("dual_cap requires a dually-positive star plumbing");
  std::vector<std::vector<Weight>> arms;
  for (const auto& arm : g.arms()) {
    std::vector<std::int64_t> negated;
    for (Weight w : arm) negated.push_back(-w);
    const HJString dual = hj_dual(HJString(negated));
    std::vector<Weight> cap_arm;
    for (auto a : dual.entries()) cap_arm.push_back(-a);
    arms.push_back(std::move(cap_arm));
  }
  const Weight padding = -g.center_weight() - 1 - g.arm_count();
  for (Weight i = 0; i < padding; ++i) arms.push_back({-1});
  return StarPlumbing(1, std::move(arms), Side::Cap);
}

CapEmbedding canonical_embedding(const StarPlumbing& g) {
  const StarPlumbing cap = dual_cap(g);
  CapEmbedding emb;
  emb.classes.reserve(cap.vertex_count());
  emb.classes.push_back(LatticeClass::line());
  const ExcLabel shared(1);
  int next = 2;
  for (const auto& arm : cap.arms()) {
    int last_fresh = 0;
    for (std::size_t d = 0; d < arm.size(); ++d) {
      LatticeClass c;
      Weight fresh;
      if (d == 0) {
        c = LatticeClass::line();
        c.set_coefficient(shared, -1);
        fresh = -arm[d];
      } else {
        c.set_coefficient(ExcLabel(last_fresh), 1);
        fresh = -arm[d] - 1;
      }
      for (Weight k = 0; k < fresh; ++k) {
        c.set_coefficient(ExcLabel(next), -1);
        last_fresh = next++;
      }
      emb.classes.push_back(std::move(c));
    }
  }
  return emb;
}

}  // namespace starsurg
