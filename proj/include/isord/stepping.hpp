#ifndef ISORD_STEPPING_HPP_
#define ISORD_STEPPING_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"

namespace isord {

  // A subgroup A common to two ordered groups (the left and right factor of
  // an amalgam), with closed-form floor maps.  floor(s, x) is the largest
  // element of A below or equal to x in the ordering of factor s; the least
  // element of A strictly above x is floor(s, x) * a_min(s).
  class SteppingSubgroup {
   public:
    virtual ~SteppingSubgroup() = default;

    virtual GroupPtr group(Side s) const = 0;

    virtual bool member(Side s, Element const& x) const = 0;

    // Image under the identification of the two copies of A; x must lie in A
    // as seen from side `from`.
    virtual Element translate(Side from, Element const& x) const = 0;

    virtual Element floor(Side s, Element const& x) const = 0;

    virtual Element a_min(Side s) const = 0;

    virtual std::string describe() const = 0;

    // Notices produced while building (e.g. sign normalisation).
    std::vector<std::string> const& notices() const noexcept {
      return _notices;
    }

    Element ceil(Side s, Element const& x) const {
      return group(s)->mul(floor(s, x), a_min(s));
    }

   protected:
    std::vector<std::string> _notices;
  };

  using SteppingPtr = std::shared_ptr<SteppingSubgroup const>;

  ////////////////////////////////////////////////////////////////////////
  // A = Z embedded as x -> x^p, y -> y^q
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
      return a - floor_div(a, b) * b;
    }

    inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw PreconditionError("exponent overflow");
      }
      return r;
    }
  }  // namespace detail

  class CyclicStepping final : public SteppingSubgroup {
   public:
    // The exponents may be negative; a sign mismatch between p and q breaks
    // sign agreement and is rejected when the amalgam is built.
    CyclicStepping(std::shared_ptr<CyclicGroup const> left,
                   std::int64_t                       p,
                   std::shared_ptr<CyclicGroup const> right,
                   std::int64_t                       q)
        : _left(std::move(left)), _right(std::move(right)), _p(p), _q(q) {
      if (!_left || !_right) {
        throw ConstructionError("cyclic stepping needs two cyclic groups");
      }
      if (p > -2 && p < 2) {
        throw ConstructionError("cyclic stepping: |p| must be at least 2, got "
                                + std::to_string(p));
      }
      if (q > -2 && q < 2) {
        throw ConstructionError("cyclic stepping: |q| must be at least 2, got "
                                + std::to_string(q));
      }
    }

    static std::shared_ptr<CyclicStepping const>
    make(std::shared_ptr<CyclicGroup const> left,
         std::int64_t                       p,
         std::shared_ptr<CyclicGroup const> right,
         std::int64_t                       q) {
      return std::make_shared<CyclicStepping const>(
          std::move(left), p, std::move(right), q);
    }

    GroupPtr group(Side s) const override {
      return s == Side::Left ? GroupPtr(_left) : GroupPtr(_right);
    }

    bool member(Side s, Element const& x) const override {
      group(s)->check(x);
      return x.exponent() % index(s) == 0;
    }

    Element translate(Side from, Element const& x) const override {
      if (!member(from, x)) {
        throw PreconditionError("translate: element is not in the subgroup");
      }
      auto const k = x.exponent() / multiplier(from);
      return Element::power(detail::checked_mul(k, multiplier(other(from))));
    }

    Element floor(Side s, Element const& x) const override {
      group(s)->check(x);
      auto const n = index(s);
      return Element::power(detail::floor_div(x.exponent(), n) * n);
    }

    Element a_min(Side s) const override {
      // Positive generator of A in the left copy, carried across.
      auto const left = Element::power(index(Side::Left));
      return s == Side::Left ? left : translate(Side::Left, left);
    }

    std::string describe() const override {
      return "cyclic(" + _left->generator_name() + "^" + std::to_string(_p)
             + " = " + _right->generator_name() + "^" + std::to_string(_q)
             + ")";
    }

   private:
    std::int64_t multiplier(Side s) const noexcept {
      return s == Side::Left ? _p : _q;
    }

    std::int64_t index(Side s) const noexcept {
      auto const m = multiplier(s);
      return m < 0 ? -m : m;
    }

    std::shared_ptr<CyclicGroup const> _left;
    std::shared_ptr<CyclicGroup const> _right;
    std::int64_t                       _p;
    std::int64_t                       _q;
  };

  ////////////////////////////////////////////////////////////////////////
  // Integer-valued homomorphisms on towers
  ////////////////////////////////////////////////////////////////////////

  // A homomorphism e: G -> Z.  On a cyclic group it is multiplication by a
  // weight; on an amalgam it is the sum of the factor maps over syllables, so
  // the two factor maps must agree on the amalgamated subgroup (see
  // exponent_pushforward).
  class ExponentMap {
   public:
    static ExponentMap cyclic(GroupPtr G, std::int64_t weight) {
      if (!G || G->factor(Side::Left)) {
        throw PreconditionError("ExponentMap::cyclic needs a cyclic group");
      }
      ExponentMap e;
      e._group  = std::move(G);
      e._weight = weight;
      return e;
    }

    GroupPtr const& group() const noexcept {
      return _group;
    }

    std::int64_t operator()(Element const& x) const {
      if (!_left) {
        _group->check(x);
        return detail::checked_mul(_weight, x.exponent());
      }
      _group->check(x);
      std::int64_t total = 0;
      for (auto const& s : x.syllables()) {
        auto const& sub = s.side == Side::Left ? *_left : *_right;
        if (__builtin_add_overflow(total, sub(s.value), &total)) {
          throw PreconditionError("exponent overflow");
        }
      }
      return total;
    }

    ExponentMap negated() const {
      ExponentMap e = *this;
      e._weight     = -_weight;
      if (_left) {
        e._left  = std::make_shared<ExponentMap const>(_left->negated());
        e._right = std::make_shared<ExponentMap const>(_right->negated());
      }
      return e;
    }

    std::shared_ptr<ExponentMap const> const& part(Side s) const noexcept {
      return s == Side::Left ? _left : _right;
    }

   private:
    friend ExponentMap make_amalgam_exponent_map(GroupPtr,
                                                 ExponentMap,
                                                 ExponentMap);

    ExponentMap() = default;

    GroupPtr                           _group;
    std::int64_t                       _weight = 0;
    std::shared_ptr<ExponentMap const> _left;
    std::shared_ptr<ExponentMap const> _right;
  };

  // Unchecked assembly of an amalgam map from its factor maps; callers use
  // exponent_pushforward, which validates compatibility first.
  inline ExponentMap make_amalgam_exponent_map(GroupPtr    X,
                                               ExponentMap left,
                                               ExponentMap right) {
    ExponentMap e;
    e._group = std::move(X);
    e._left  = std::make_shared<ExponentMap const>(std::move(left));
    e._right = std::make_shared<ExponentMap const>(std::move(right));
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // A = kernel of x -> e(x) mod p, inside one discrete group
  ////////////////////////////////////////////////////////////////////////

  // With m the minimal positive element and e normalised so that e(m) = 1,
  // the successors of x are x m, x m^2, ... so the largest kernel element
  // below x is x m^{-r} with r = e(x) mod p in {0, ..., p-1}.
  class ModKernelStepping final : public SteppingSubgroup {
   public:
    ModKernelStepping(GroupPtr G, ExponentMap e, std::int64_t p)
        : _group(std::move(G)), _e(std::move(e)), _p(p) {
      if (!_group) {
        throw ConstructionError("modkernel: missing group");
      }
      if (p < 2) {
        throw ConstructionError("modkernel: p must be at least 2, got "
                                + std::to_string(p));
      }
      if (_e.group() != _group) {
        throw ConstructionError("modkernel: exponent map is defined on "
                                + _e.group()->label() + ", not on "
                                + _group->label());
      }
      auto const m = _group->min_positive();
      if (!m) {
        throw ConstructionError("modkernel: " + _group->label()
                                + " is not discrete");
      }
      _m                 = *m;
      std::int64_t const em = _e(_m);
      if (em == -1) {
        _e = _e.negated();
        _notices.push_back("modkernel: exponent map negated so that e("
                           + format(*_group, _m) + ") = 1");
      } else if (em != 1) {
        throw ConstructionError(
            "modkernel: the exponent map must send the minimal positive "
            "element "
            + format(*_group, _m) + " to +1 or -1, got " + std::to_string(em));
      }
      check_homomorphism();
      _m_inv = _group->inv(_m);
      _a_min = pow(*_group, _m, p);
    }

    static std::shared_ptr<ModKernelStepping const>
    make(GroupPtr G, ExponentMap e, std::int64_t p) {
      return std::make_shared<ModKernelStepping const>(
          std::move(G), std::move(e), p);
    }

    GroupPtr group(Side) const override {
      return _group;
    }

    bool member(Side, Element const& x) const override {
      return residue(x) == 0;
    }

    Element translate(Side from, Element const& x) const override {
      if (!member(from, x)) {
        throw PreconditionError("translate: element is not in the subgroup");
      }
      return x;
    }

    Element floor(Side, Element const& x) const override {
      auto const r = residue(x);
      return r == 0 ? x : _group->mul(x, pow(*_group, _m_inv, r));
    }

    Element a_min(Side) const override {
      return _a_min;
    }

    std::string describe() const override {
      return "modkernel(" + _group->label() + ", p=" + std::to_string(_p)
             + ")";
    }

    // Sign-normalised exponent map.
    ExponentMap const& exponent_map() const noexcept {
      return _e;
    }

    std::int64_t modulus() const noexcept {
      return _p;
    }

   private:
    std::int64_t residue(Element const& x) const {
      return detail::floor_mod(_e(x), _p);
    }

    void check_homomorphism() const {
      auto const ball = generator_ball(*_group, 2, 5000);
      for (auto const& u : ball) {
        for (auto const& v : ball) {
          if (_e(_group->mul(u, v)) != _e(u) + _e(v)) {
            throw ConstructionError("modkernel: exponent map is not a "
                                    "homomorphism at ("
                                    + format(*_group, u) + ", "
                                    + format(*_group, v) + ")");
          }
        }
      }
    }

    GroupPtr     _group;
    ExponentMap  _e;
    std::int64_t _p;
    Element      _m     = Element::power(0);
    Element      _m_inv = Element::power(0);
    Element      _a_min = Element::power(0);
  };

}  // namespace isord

#endif  // ISORD_STEPPING_HPP_
