#ifndef ISORD_SUBGROUPS_HPP_
#define ISORD_SUBGROUPS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam.hpp"
#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"
#include "stepping.hpp"

namespace isord {

  inline std::shared_ptr<CyclicStepping const>
  cyclic_stepping(std::shared_ptr<CyclicGroup const> left,
                  std::int64_t                       p,
                  std::shared_ptr<CyclicGroup const> right,
                  std::int64_t                       q) {
    return CyclicStepping::make(std::move(left), p, std::move(right), q);
  }

  inline std::shared_ptr<ModKernelStepping const>
  modkernel_stepping(GroupPtr G, ExponentMap e, std::int64_t p) {
    return ModKernelStepping::make(std::move(G), std::move(e), p);
  }

  // The homomorphism on X restricting to eG and eH.  They must agree on A;
  // this is checked on a_min powers and on floors of small factor balls.
  inline ExponentMap exponent_pushforward(ExponentMap         eG,
                                          ExponentMap         eH,
                                          AmalgamPtr const&   X,
                                          std::size_t         radius = 2) {
    auto const& A = *X->stepping();
    if (eG.group() != X->factor(Side::Left)
        || eH.group() != X->factor(Side::Right)) {
      throw ConstructionError("exponent map: factor maps do not match the "
                              "factors of "
                              + X->label());
    }
    auto agree = [&](Element const& a) {
      Element const b = A.translate(Side::Left, a);
      if (eG(a) != eH(b)) {
        throw ConstructionError(
            "exponent map: factor maps disagree on the amalgamated subgroup "
            "of "
            + X->label() + ": e(" + format(*X->factor(Side::Left), a)
            + ") = " + std::to_string(eG(a)) + " but e("
            + format(*X->factor(Side::Right), b) + ") = "
            + std::to_string(eH(b)));
      }
    };
    auto const& L = *X->factor(Side::Left);
    auto const& R = *X->factor(Side::Right);
    for (std::int64_t k = -2; k <= 2; ++k) {
      agree(pow(L, A.a_min(Side::Left), k));
    }
    for (auto const& z : generator_ball(L, radius, 20000)) {
      agree(A.floor(Side::Left, z));
    }
    for (auto const& z : generator_ball(R, radius, 20000)) {
      agree(A.translate(Side::Right, A.floor(Side::Right, z)));
    }
    return make_amalgam_exponent_map(X, std::move(eG), std::move(eH));
  }

  // Builds e: G -> Z from integer images of every generator name of G.
  inline ExponentMap
  make_exponent_map(GroupPtr const&                            G,
                    std::map<std::string, std::int64_t> const& images) {
    for (auto const& [name, value] : images) {
      bool known = false;
      for (auto const& g : G->generators()) {
        known = known || g.name == name;
      }
      if (!known) {
        throw ConstructionError("exponent map: " + G->label()
                                + " has no generator named " + name);
      }
    }
    if (auto X = std::dynamic_pointer_cast<AmalgamGroup const>(G)) {
      std::optional<ExponentMap> parts[2];
      for (Side s : {Side::Left, Side::Right}) {
        std::map<std::string, std::int64_t> sub;
        std::string const                   prefix = X->name_prefix(s);
        for (auto const& g : X->factor(s)->generators()) {
          auto it = images.find(prefix + g.name);
          if (it != images.end()) {
            sub.emplace(g.name, it->second);
          }
        }
        parts[s == Side::Left ? 0 : 1] = make_exponent_map(X->factor(s), sub);
      }
      return exponent_pushforward(*parts[0], *parts[1], X);
    }
    auto const& gens = G->generators();
    if (gens.size() != 1) {
      throw ConstructionError("exponent map: unsupported group " + G->label());
    }
    auto it = images.find(gens.front().name);
    if (it == images.end()) {
      throw ConstructionError("exponent map: no value for generator "
                              + gens.front().name + " of " + G->label());
    }
    return ExponentMap::cyclic(G, it->second);
  }

}  // namespace isord

#endif  // ISORD_SUBGROUPS_HPP_
