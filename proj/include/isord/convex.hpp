#ifndef ISORD_CONVEX_HPP_
#define ISORD_CONVEX_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "amalgam.hpp"
#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"

namespace isord {

  // Hull membership is only semi-decidable by bounded search, so a verdict is
  // either a witness n with seed^-n <= x <= seed^n, or Unknown.
  struct ConvexVerdict {
    enum class Kind { In, Unknown };

    Kind        kind;
    std::size_t witness = 0;

    static ConvexVerdict in(std::size_t n) {
      return {Kind::In, n};
    }

    static ConvexVerdict unknown() {
      return {Kind::Unknown, 0};
    }

    bool is_in() const noexcept {
      return kind == Kind::In;
    }

    std::string to_string() const {
      return is_in() ? "IN " + std::to_string(witness) : "UNKNOWN";
    }

    friend bool operator==(ConvexVerdict const&, ConvexVerdict const&)
        = default;
  };

  // The convex hull of the cyclic subgroup generated by a positive seed,
  // explored through the cofinal ladder seed^0 < seed^1 < ... < seed^limit.
  class ConvexLadder {
   public:
    ConvexLadder(GroupPtr host, Element seed, std::size_t search_limit)
        : _host(std::move(host)), _seed(std::move(seed)), _limit(search_limit) {
      if (!_host) {
        throw PreconditionError("convex ladder: missing host group");
      }
      _host->check(_seed);
      if (!is_positive(*_host, _seed)) {
        throw PreconditionError("convex ladder: seed "
                                + format(*_host, _seed) + " is not positive");
      }
      _up.push_back(_host->identity());
      _down.push_back(_host->identity());
      Element const seed_inv = _host->inv(_seed);
      for (std::size_t n = 1; n <= _limit; ++n) {
        _up.push_back(_host->mul(_up.back(), _seed));
        _down.push_back(_host->mul(_down.back(), seed_inv));
        if (_host->compare(_up[n - 1], _up[n]) != Ordering3::Less) {
          throw EngineError("convex ladder is not increasing at step "
                            + std::to_string(n));
        }
      }
    }

    GroupPtr const& host() const noexcept {
      return _host;
    }

    Element const& seed() const noexcept {
      return _seed;
    }

    std::size_t search_limit() const noexcept {
      return _limit;
    }

    // seed^n for |n| <= search_limit.
    Element const& rung(long n) const {
      return n >= 0 ? _up.at(static_cast<std::size_t>(n))
                    : _down.at(static_cast<std::size_t>(-n));
    }

    ConvexLadder with_limit(std::size_t limit) const {
      return ConvexLadder(_host, _seed, limit);
    }

   private:
    GroupPtr             _host;
    Element              _seed;
    std::size_t          _limit;
    std::vector<Element> _up;
    std::vector<Element> _down;
  };

  inline ConvexVerdict conv_member(Element const& x, ConvexLadder const& B) {
    auto const& G = *B.host();
    G.check(x);
    for (std::size_t n = 0; n <= B.search_limit(); ++n) {
      long const k = static_cast<long>(n);
      if (G.compare(B.rung(-k), x) != Ordering3::Greater
          && G.compare(x, B.rung(k)) != Ordering3::Greater) {
        return ConvexVerdict::in(n);
      }
    }
    return ConvexVerdict::unknown();
  }

  // Membership through the A-floor: floor(x) <= x < floor(x) a_min, and a_min
  // lies in the hull, so x is in the hull exactly when floor(x) is.
  inline ConvexVerdict conv_member_via_floor(Element const&      x,
                                             ConvexLadder const& B) {
    auto X = std::dynamic_pointer_cast<AmalgamGroup const>(B.host());
    if (!X) {
      throw PreconditionError(
          "conv_member_via_floor: host is not an amalgamated product");
    }
    if (!X->in_amalgamated(B.seed())) {
      throw PreconditionError("conv_member_via_floor: seed "
                              + format(*X, B.seed())
                              + " is not in the amalgamated subgroup");
    }
    if (X->compare(X->a_min(), B.rung(static_cast<long>(B.search_limit())))
        == Ordering3::Greater) {
      throw PreconditionError(
          "conv_member_via_floor: ladder never reaches a_min");
    }
    return conv_member(X->a_floor(x), B);
  }

  struct ClosureReport {
    std::size_t              checked   = 0;
    std::size_t              witnessed = 0;
    std::size_t              unknown   = 0;
    std::vector<std::string> violations;

    bool closure_witnessed() const noexcept {
      return violations.empty() && unknown == 0;
    }

    std::string status() const {
      if (!violations.empty()) {
        return "violation";
      }
      return unknown == 0 ? "witnessed closure" : "no counterexample found";
    }
  };

  // Samples products and inverses of ball elements judged In and checks that
  // they are In (witnessed) or Unknown, never inconsistent: an In verdict
  // must survive a doubled search limit with the same witness.
  inline ClosureReport strongly_convex_check(ConvexLadder const& B,
                                             std::size_t         radius,
                                             std::size_t         max_pairs
                                             = 20000) {
    auto const&        G       = *B.host();
    ConvexLadder const wider   = B.with_limit(2 * B.search_limit() + 1);
    ClosureReport      report;
    std::vector<Element> inside;
    for (auto const& z : generator_ball(G, radius)) {
      if (conv_member(z, B).is_in()) {
        inside.push_back(z);
      }
    }
    auto judge = [&](Element const& w, std::string const& expr) {
      ++report.checked;
      ConvexVerdict const v = conv_member(w, B);
      ConvexVerdict const u = conv_member(w, wider);
      if (v.is_in() && !(u == v)) {
        report.violations.push_back(expr + " " + format(G, w));
      }
      if (v.is_in()) {
        ++report.witnessed;
      } else {
        ++report.unknown;
      }
    };
    for (auto const& u : inside) {
      judge(G.inv(u), "inverse");
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < inside.size() && pairs < max_pairs; ++i) {
      for (std::size_t j = 0; j < inside.size() && pairs < max_pairs; ++j) {
        judge(G.mul(inside[i], inside[j]), "product");
        ++pairs;
      }
    }
    return report;
  }

}  // namespace isord

#endif  // ISORD_CONVEX_HPP_
