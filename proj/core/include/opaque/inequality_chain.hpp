#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace opaque {

using Rational = boost::rational<long long>;

/// One inequality  lhs_const <= sum of rhs[symbol] * symbol,  entering the
/// sum with weight `coefficient`.
struct ChainTerm {
  Rational coefficient{1};
  std::string id;
  Rational lhs_const{0};
  std::map<std::string, Rational> rhs;
};

/// A weighted sum of linear inequalities over declared symbols.
struct InequalityChain {
  std::vector<std::string> symbols;
  std::vector<ChainTerm> terms;
};

/// The summed inequality  constant <= sum of combo[symbol] * symbol.
/// Symbols whose coefficients cancel are dropped.
struct ChainSum {
  Rational constant{0};
  std::map<std::string, Rational> combo;
};

/// Exact weighted sum. Throws DomainError when a term uses a symbol that
/// the chain does not declare.
ChainSum replay_chain(const InequalityChain& chain);

/// Splits combo into t * (sum of `classes`) plus a remainder, with t the
/// smallest coefficient among the classes.
struct FactoredSum {
  Rational total_length_coefficient{0};
  std::map<std::string, Rational> remainder;
};
FactoredSum factor_total_length(const ChainSum& sum, const std::vector<std::string>& classes);

namespace chains {
/// Class symbols |B_0|, |B_{pi/3}|, |B_{2pi/3}|.
inline const std::vector<std::string> kClasses{"B0", "B60", "B120"};

/// The four projection-cover inequalities around the right corner zone X1:
/// the zone itself at 2pi/3, U at 0 without P1, U at 2pi/3 without P2,
/// and U at pi/3.
InequalityChain right_corner();

/// The three projection-cover inequalities around the left corner zone X2:
/// the zone at pi/3, U at 0 without P3, U at pi/2 without P4.
InequalityChain left_corner();
}  // namespace chains

}  // namespace opaque
