#pragma once

// Named operators for one parameter choice, all as (sqrt2-scaled) WeylOps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdef/lie.hpp"
#include "hdef/ncqm.hpp"

namespace hdef {

template <Scalar C>
struct OperatorDictionary {
  std::map<std::string, ScaledWeyl<C>> entries;
  std::vector<std::string> notes;

  bool contains(const std::string& name) const { return entries.count(name) != 0; }
  const ScaledWeyl<C>& at(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::out_of_range("dictionary has no operator named " + name);
    return it->second;
  }
  /// The operator itself; throws in exact mode if it carries an odd power of 1/sqrt2.
  WeylOp<C> op(const std::string& name) const { return at(name).value(); }

  void put(const std::string& name, WeylOp<C> op, unsigned sqrt2_power = 0) {
    entries[name] = ScaledWeyl<C>{std::move(op), sqrt2_power}.normalized();
  }
};

template <Scalar C>
struct DictionaryParams {
  std::optional<C> alpha;
  std::optional<C> theta;  // with gamma: the (Q, P) representation
  std::optional<C> gamma;
  SignBranch branch = SignBranch::upper;
};

template <Scalar C>
OperatorDictionary<C> build_dictionary(const DictionaryParams<C>& params) {
  OperatorDictionary<C> d;
  for (int mode : {1, 2}) {
    const std::string i = std::to_string(mode);
    d.put("a" + i, WeylOp<C>::annihilation(mode));
    d.put("a" + i + "_dag", WeylOp<C>::creation(mode));
  }
  auto j = undeformed_generators<C>();
  for (std::size_t k = 0; k < j.size(); ++k) d.put(j.names[k], j.elements[k]);

  if (params.theta || params.gamma) {
    if (!params.theta || !params.gamma) throw std::invalid_argument("the (Q, P) representation needs both theta and gamma");
    const auto qp = QPParameters<C>::from(*params.theta, *params.gamma, params.branch);
    for (int mode : {1, 2}) {
      const std::string i = std::to_string(mode);
      auto q = position_operator<C>(mode), p = momentum_operator<C>(mode);
      d.put("q" + i, q.op, q.sqrt2_power);
      d.put("p" + i, p.op, p.sqrt2_power);
    }
    const auto ops = qp_operators(qp);
    d.put("Q1", ops.Q1.op, ops.Q1.sqrt2_power);
    d.put("Q2", ops.Q2.op, ops.Q2.sqrt2_power);
    d.put("P1", ops.P1.op, ops.P1.sqrt2_power);
    d.put("P2", ops.P2.op, ops.P2.sqrt2_power);
    const auto [A1, A2, A1d, A2d] = modified_bosons(ops);
    d.put("A1", A1);
    d.put("A2", A2);
    d.put("A1_dag", A1d);
    d.put("A2_dag", A2d);
  }

  if (params.alpha) {
    const auto p = AlphaPoint<C>::from(*params.alpha);
    for (int mode : {1, 2}) {
      const std::string i = std::to_string(mode);
      d.put("a" + i + "_alpha", alpha_annihilation(p, mode));
      d.put("a" + i + "_alpha_dag", alpha_creation(p, mode));
    }
    auto ja = bilinear_generators(p);
    for (std::size_t k = 0; k < ja.size(); ++k) d.put(ja.names[k], ja.elements[k]);
    auto x = basis_change(ja, p.theta);
    for (std::size_t k = 0; k < x.size(); ++k) d.put(x.names[k], x.elements[k]);
    try {
      auto z = rescale(x, p.theta);
      for (std::size_t k = 0; k < 3; ++k) d.put(z.names[k], z.elements[k]);
    } catch (const std::domain_error& e) {
      d.notes.push_back(std::string("Z generators omitted: ") + e.what());
    }
  }
  return d;
}

}  // namespace hdef
