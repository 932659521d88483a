#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "attractor/thirds.hpp"

namespace attractor {

// A base key is a nonempty vector of positive integers. Keys of length 1
// index the heteroclinic sectors; longer keys index nested homoclinic strips.
using VecKey = std::vector<int>;

std::string key_str(const VecKey& v);  // "2,1,1"

enum class Parity { Even, Odd };
enum class EndKind { Alpha, Omega };

struct FeasibleError : std::runtime_error {
  enum class Code {
    EmptyBase,
    MissingPrefix,
    MissingSibling,
    RhoSigmaOutOfRange,
    NoLengthTwoKey,
    ConditionIII,
    ConditionIV,
    PrefixTie,
  };

  FeasibleError(Code c, VecKey k, const std::string& msg)
      : std::runtime_error(msg), code(c), key(std::move(k)) {}

  Code code;
  VecKey key;  // offending key ((i) for ConditionIII)
};

// Finite prefix- and sibling-closed key set. lambda(v) is the largest j with
// (v,j) in the set (0 if none); lambda of the empty key counts the length-1
// keys.
class CompleteBase {
public:
  CompleteBase() = default;  // empty; validate() is the real constructor

  static CompleteBase validate(const std::set<VecKey>& keys);

  int lambda(const VecKey& v) const;
  int lambda_root() const { return lambda_root_; }
  bool contains(const VecKey& v) const { return lambda_.count(v) > 0; }
  const std::map<VecKey, int>& lambdas() const { return lambda_; }
  std::size_t size() const { return lambda_.size(); }

  friend bool operator==(const CompleteBase&, const CompleteBase&) = default;

private:
  std::map<VecKey, int> lambda_;
  int lambda_root_ = 0;
};

// One element (v, k) of a feasible set: base key plus a final entry in
// {n/3}. All elements are derived from (base, rho, sigma), never stored
// independently.
struct Element {
  VecKey key;
  Third last;

  friend bool operator==(const Element&, const Element&) = default;
};

std::string element_str(const Element& e);  // "(2,1,8/3)"

// Componentwise numeric comparison; key entries compare as integers against
// the final Third. A strict prefix tie cannot occur between elements of a
// valid set and is reported as a hard error.
std::strong_ordering compare_lex(const Element& a, const Element& b);

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return compare_lex(a, b) == std::strong_ordering::less;
  }
};

class FeasibleSet {
public:
  // Checks conditions (i)-(iv) and materializes the element list.
  static FeasibleSet validate(CompleteBase base, std::map<VecKey, int> rho,
                              std::map<VecKey, int> sigma);

  const CompleteBase& base() const { return base_; }
  int lambda(const VecKey& v) const { return base_.lambda(v); }
  // rho is 0 by convention for length-1 keys; this unifies the two parity
  // clauses and is tested against the literal length-1 rule.
  int rho(const VecKey& v) const;
  int sigma(const VecKey& v) const;
  const std::map<VecKey, int>& rho_map() const { return rho_; }
  const std::map<VecKey, int>& sigma_map() const { return sigma_; }

  int sector_count() const { return base_.lambda_root(); }  // t
  int max_key_length() const { return max_len_; }           // n

  const std::vector<Element>& elements() const { return elements_; }

  friend bool operator==(const FeasibleSet&, const FeasibleSet&) = default;

private:
  FeasibleSet() = default;
  CompleteBase base_;
  std::map<VecKey, int> rho_;
  std::map<VecKey, int> sigma_;
  std::vector<Element> elements_;  // sorted by compare_lex
  int max_len_ = 0;
};

// Element list implied by (base, rho, sigma), sorted by compare_lex. Does
// not check conditions (iii)/(iv); validate() builds on top of this.
std::vector<Element> derive_elements(const CompleteBase& base,
                                     const std::map<VecKey, int>& rho,
                                     const std::map<VecKey, int>& sigma);

// Length-1 keys are Even; a child (v,j) keeps the parity of v exactly when
// rho(v) < j <= sigma(v).
std::map<VecKey, Parity> parity_map(const FeasibleSet& L);

EndKind end_kind(const FeasibleSet& L, const std::map<VecKey, Parity>& parity,
                 const Element& e);

// One entry per L.elements(), same order.
std::vector<EndKind> classify_ends(const FeasibleSet& L);

}  // namespace attractor
