#include "opaque/inequality_chain.hpp"

#include <algorithm>
#include <optional>

#include "opaque/error.hpp"

namespace opaque {

ChainSum replay_chain(const InequalityChain& chain) {
  ChainSum sum;
  for (const ChainTerm& term : chain.terms) {
    sum.constant += term.coefficient * term.lhs_const;
    for (const auto& [symbol, coeff] : term.rhs) {
      if (std::find(chain.symbols.begin(), chain.symbols.end(), symbol) == chain.symbols.end()) {
        throw DomainError("inequality " + term.id + " uses undeclared symbol " + symbol);
      }
      sum.combo[symbol] += term.coefficient * coeff;
    }
  }
  std::erase_if(sum.combo, [](const auto& kv) { return kv.second.numerator() == 0; });
  return sum;
}

FactoredSum factor_total_length(const ChainSum& sum, const std::vector<std::string>& classes) {
  FactoredSum out;
  out.remainder = sum.combo;
  std::optional<Rational> t;
  for (const std::string& c : classes) {
    const auto it = sum.combo.find(c);
    const Rational v = it == sum.combo.end() ? Rational(0) : it->second;
    if (!t || v < *t) t = v;
  }
  if (!t) return out;
  out.total_length_coefficient = *t;
  for (const std::string& c : classes) out.remainder[c] -= *t;
  std::erase_if(out.remainder, [](const auto& kv) { return kv.second.numerator() == 0; });
  return out;
}

namespace chains {

namespace {

using Combo = std::map<std::string, Rational>;

ChainTerm term(std::string id, Rational lhs, Combo rhs) {
  return {Rational(1), std::move(id), lhs, std::move(rhs)};
}

}  // namespace

InequalityChain right_corner() {
  InequalityChain chain;
  chain.symbols = {"B0", "B60", "B120", "X1", "B0&P1", "B0&P2", "B120&P1", "B120&P2"};
  // X1 stands for |(B_{2pi/3} u B_0) n X1|, "S&P" for |B_S n P|.
  chain.terms.push_back(term("zone-2pi/3", Rational(1, 14),
                             {{"X1", 1}, {"B120&P1", 1}, {"B120&P2", 1}, {"B0&P1", 1}, {"B0&P2", 1}}));
  chain.terms.push_back(term("cover-0-without-P1", Rational(2),
                             {{"B60", 1}, {"B120", 1}, {"B0", 2}, {"B120&P1", -1}, {"B0&P1", -1}}));
  chain.terms.push_back(term("cover-2pi/3-without-P2", Rational(2),
                             {{"B0", 1}, {"B60", 1}, {"B120", 2}, {"B0&P2", -1}, {"B120&P2", -1}}));
  chain.terms.push_back(term("cover-pi/3", Rational(2), {{"B0", 1}, {"B120", 1}, {"B60", 2}}));
  return chain;
}

InequalityChain left_corner() {
  InequalityChain chain;
  chain.symbols = {"B0", "B60", "B120", "X2", "B60&P3", "B60&P4", "B120&P3", "B120&P4"};
  // X2 stands for |(B_{pi/3} u B_{2pi/3}) n X2|.
  chain.terms.push_back(term("zone-pi/3", Rational(2, 7),
                             {{"X2", 1},
                              {"B60&P3", 1},
                              {"B60&P4", 1},
                              {"B120&P3", 1},
                              {"B120&P4", 1},
                              {"B0", Rational(1, 2)}}));
  chain.terms.push_back(term("cover-0-without-P3", Rational(2),
                             {{"B60", 1}, {"B120", 1}, {"B0", 2}, {"B60&P3", -1}, {"B120&P3", -1}}));
  chain.terms.push_back(term("cover-pi/2-without-P4", Rational(1),
                             {{"B60", 1}, {"B120", 1}, {"B60&P4", -1}, {"B120&P4", -1}}));
  return chain;
}

}  // namespace chains

}  // namespace opaque
