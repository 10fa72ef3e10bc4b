#include "starsurg/obstruction.hpp"

#include <deque>
#include <sstream>

#include "starsurg/dualize.hpp"
#include "starsurg/errors.hpp"

namespace starsurg {

std::vector<BlowupSide> parse_sides(const std::string& text) {
  std::vector<BlowupSide> out;
  for (char c : text) {
    if (c == 'L' || c == 'l')
      out.push_back(BlowupSide::L);
    else if (c == 'R' || c == 'r')
      out.push_back(BlowupSide::R);
    else
      throw ParseError(std::string("blow-up sides must be L or R, got '") + c + "'");
  }
  return out;
}

std::string format_sides(const std::vector<BlowupSide>& sides) {
  std::string out;
  for (auto s : sides) out += s == BlowupSide::L ? 'L' : 'R';
  return out;
}

ParkDescriptor park_descriptor(const std::vector<BlowupSide>& sides) {
  ParkDescriptor d;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i == 0 || sides[i] != sides[i - 1])
      d.m.push_back(1);
    else
      ++d.m.back();
  }
  return d;
}

LinearChain park_chain_recursive(const std::vector<BlowupSide>& sides) {
  // Vertices other than the (-1) vertex, counterclockwise from its
  // counterclockwise neighbour to its clockwise neighbour.
  std::deque<Weight> cycle{-4};
  for (auto side : sides) {
    // The old (-1) vertex drops to -2 and joins the chain on the far side of
    // the new (-1) vertex.
    if (side == BlowupSide::L) {
      cycle.front() -= 1;
      cycle.push_back(-2);
    } else {
      cycle.back() -= 1;
      cycle.push_front(-2);
    }
  }
  return LinearChain(std::vector<Weight>(cycle.begin(), cycle.end()));
}

LinearChain park_chain_fraction(const Integer& p, const Integer& q) {
  if (p < 2 || !(q >= 1 && q < p) || boost::multiprecision::gcd(p, q) != 1)
    throw DomainError("park_chain_fraction requires p > q >= 1, p >= 2, gcd(p, q) = 1");
  const HJString s = hj_expand(p * p, p * q - 1);
  std::vector<Weight> w;
  for (auto a : s.entries()) w.push_back(-a);
  return LinearChain(std::move(w));
}

std::optional<ParkParameters> park_parameters(const LinearChain& chain) {
  std::vector<std::int64_t> entries;
  for (Weight w : chain.weights) {
    if (w > -2) return std::nullopt;
    entries.push_back(-w);
  }
  const Fraction f = hj_value(HJString(entries));
  const Integer p = boost::multiprecision::sqrt(f.p);
  if (p * p != f.p || p < 2) return std::nullopt;
  if ((f.q + 1) % p != 0) return std::nullopt;
  const Integer q = (f.q + 1) / p;
  if (!(q >= 1 && q < p) || boost::multiprecision::gcd(p, q) != 1) return std::nullopt;
  return ParkParameters{p, q};
}

bool divisibility_criterion(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("divisibility_criterion requires a, b >= 2");
  return (a * b + 1) % (a + b) == 0;
}

bool weight_filter(const std::vector<Weight>& weights, const Integer& modulus) {
  if (modulus < 4) throw DomainError("weight_filter requires modulus >= 4");
  for (Weight w : weights)
    if (Integer(w + 2) % modulus != 0) return false;
  return true;
}

bool weight_filter(const LinearChain& chain, const Integer& modulus) { return weight_filter(chain.weights, modulus); }

bool weight_filter(const StarPlumbing& star, const Integer& modulus) {
  std::vector<Weight> all{star.center_weight()};
  for (const auto& arm : star.arms()) all.insert(all.end(), arm.begin(), arm.end());
  return weight_filter(all, modulus);
}

const char* outcome_name(Outcome o) { return o == Outcome::RuledOut ? "RuledOut" : "Inconclusive"; }

Verdict single_blowdown_verdict(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("single_blowdown_verdict requires a, b >= 2");
  Verdict v;
  v.a = a;
  v.b = b;
  // Euler characteristic drops from 2ab-a-b+2 to ab-a-b+2.
  v.required_size = a * b;
  const int modulus = a + b;

  {
    // Park chains: weights -4-m_1, -2-m_2, ..., -2-m_n and (-2)'s, with
    // 1 + sum(m) vertices. The filter forces (a+b) | 2+m_1 and (a+b) | m_j,
    // hence (a+b) | 2 + sum(m) = ab + 1.
    FamilyCheck f{"linear Park chains p^2/(pq-1)", false, ""};
    const int total = 2 + (v.required_size - 1);
    std::ostringstream why;
    if (total % modulus != 0) {
      f.eliminated = true;
      why << "a chain with " << v.required_size << " vertices passing the filter needs " << modulus << " | "
          << total << " (= ab+1), which fails";
    } else {
      // m_1 = a+b-2, then (a-1)(b-1)/(a+b) runs of length a+b.
      std::vector<BlowupSide> sides(modulus - 2, BlowupSide::L);
      const int runs = (a - 1) * (b - 1) / modulus;
      for (int r = 0; r < runs; ++r)
        sides.insert(sides.end(), modulus, r % 2 == 0 ? BlowupSide::R : BlowupSide::L);
      LinearChain chain = park_chain_recursive(sides);
      why << modulus << " | " << total << " (= ab+1); chain " << chain.to_string() << " from sides "
          << format_sides(sides) << " has " << chain.weights.size() << " vertices and passes the filter";
      v.witness = std::move(chain);
    }
    f.reason = why.str();
    v.families.push_back(std::move(f));
  }
  {
    FamilyCheck f{"three/four-armed graphs with a (-3) or (-4) sphere", false, ""};
    const bool m3 = weight_filter(std::vector<Weight>{-3}, modulus);
    const bool m4 = weight_filter(std::vector<Weight>{-4}, modulus);
    f.eliminated = !m3 && !m4;
    f.reason = std::string("square+2 of a (-3) sphere is -1 and of a (-4) sphere is -2; ") +
               (f.eliminated ? "neither is divisible by " : "one is divisible by ") + std::to_string(modulus);
    v.families.push_back(std::move(f));
  }
  {
    FamilyCheck f{"family of 5+q spheres with a (-6) sphere", false, ""};
    const bool m6 = weight_filter(std::vector<Weight>{-6}, modulus);
    const bool size_ok = v.required_size >= 5;
    f.eliminated = !m6 || !size_ok;
    if (!m6)
      f.reason = "square+2 of the (-6) sphere is -4, not divisible by " + std::to_string(modulus);
    else if (!size_ok)
      f.reason = "size 5+q >= 5 cannot equal " + std::to_string(v.required_size);
    else
      f.reason = "neither the filter nor the size equation excludes it";
    v.families.push_back(std::move(f));
  }

  bool all = true;
  for (const auto& f : v.families) all = all && f.eliminated;
  v.outcome = all ? Outcome::RuledOut : Outcome::Inconclusive;
  return v;
}

std::string Verdict::certificate() const {
  std::ostringstream os;
  os << "(a,b) = (" << a << "," << b << "): " << outcome_name(outcome) << "\n";
  os << "a single rational blow-down must remove " << required_size << " spheres (Euler characteristic "
     << 2 * a * b - a - b + 2 << " -> " << a * b - a - b + 2 << ")\n";
  os << "every sphere S of the candidate needs (a+b) = " << a + b << " | S.S + 2\n";
  for (const auto& f : families)
    os << "  [" << (f.eliminated ? "eliminated" : "open") << "] " << f.family << ": " << f.reason << "\n";
  if (outcome == Outcome::Inconclusive)
    os << "the check is necessary only; an open family does not show that the blow-down exists\n";
  return os.str();
}

}  // namespace starsurg
