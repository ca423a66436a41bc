#ifndef ISORD_ORDERED_GROUP_HPP_
#define ISORD_ORDERED_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"

namespace isord {

  struct Generator {
    std::string name;
    Element     value;
  };

  // A group together with a left-invariant total order on it.
  //
  // Implementations are immutable after construction and every member is
  // safe to call concurrently.  Elements passed in must have been produced by
  // the same group; results are always in reduced form.
  class OrderedGroup {
   public:
    virtual ~OrderedGroup() = default;

    virtual Element identity() const = 0;
    virtual Element mul(Element const& x, Element const& y) const = 0;
    virtual Element inv(Element const& x) const = 0;
    virtual Ordering3 compare(Element const& x, Element const& y) const = 0;

    // Elements are stored in a canonical reduced form, so equality in the
    // group is structural equality.
    virtual bool eq(Element const& x, Element const& y) const {
      return x == y;
    }

    virtual std::vector<Generator> const& generators() const = 0;

    // Minimal positive element, when the ordering is discrete.
    virtual std::optional<Element> min_positive() const = 0;

    // A finite set whose positivity pins down the ordering, and one that pins
    // it down among orderings with a fixed restriction to an amalgamated
    // subgroup.  Declared metadata: never derived by search.
    virtual std::vector<Element> declared_char_set() const = 0;
    virtual std::vector<Element> declared_relative_char_set() const = 0;

    // Throws DomainError when x cannot be an element of this group.
    virtual void check(Element const& x) const = 0;

    // Appends x written as a word over generator names, each name prefixed
    // by `prefix`.
    virtual void format(std::string& out,
                        Element const& x,
                        std::string const& prefix) const = 0;

    // Factors of an amalgamated product; nullptr for primitive groups.
    virtual std::shared_ptr<OrderedGroup const> factor(Side) const {
      return nullptr;
    }

    // Prefix that distinguishes the generators of factor `s` in this group's
    // namespace ("" unless the two factors have clashing names).
    virtual std::string name_prefix(Side) const {
      return "";
    }

    // Number of amalgam constructions below this group.
    virtual std::size_t depth() const {
      return 0;
    }

    std::string const& label() const noexcept {
      return _label;
    }

   protected:
    explicit OrderedGroup(std::string label) : _label(std::move(label)) {}

   private:
    std::string _label;
  };

  using GroupPtr = std::shared_ptr<OrderedGroup const>;

  ////////////////////////////////////////////////////////////////////////
  // Helpers shared by every group
  ////////////////////////////////////////////////////////////////////////

  inline std::string format(OrderedGroup const& G, Element const& x) {
    std::string out;
    G.format(out, x, "");
    return out;
  }

  inline bool is_positive(OrderedGroup const& G, Element const& x) {
    return G.compare(G.identity(), x) == Ordering3::Less;
  }

  inline Ordering3 sign(OrderedGroup const& G, Element const& x) {
    return G.compare(x, G.identity());
  }

  // x^k by repeated squaring.
  inline Element pow(OrderedGroup const& G, Element const& x, std::int64_t k) {
    Element base   = k < 0 ? G.inv(x) : x;
    Element result = G.identity();
    // k == INT64_MIN cannot be negated; such powers are out of range anyway.
    if (k == INT64_MIN) {
      throw PreconditionError("exponent out of range");
    }
    std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
    while (n != 0) {
      if (n & 1) {
        result = G.mul(result, base);
      }
      n >>= 1;
      if (n != 0) {
        base = G.mul(base, base);
      }
    }
    return result;
  }

  inline Element require_min_positive(OrderedGroup const& G) {
    auto m = G.min_positive();
    if (!m) {
      throw NotDiscreteError("group " + G.label()
                             + " has no minimal positive element");
    }
    return *m;
  }

  // The immediate successor x * min_positive of x in a discrete ordering.
  inline Element successor(OrderedGroup const& G, Element const& x) {
    return G.mul(x, require_min_positive(G));
  }

  inline Element predecessor(OrderedGroup const& G, Element const& x) {
    return G.mul(x, G.inv(require_min_positive(G)));
  }

  // Generators followed by their inverses, without repeats.
  inline std::vector<Element> letters(OrderedGroup const& G) {
    std::vector<Element>                   out;
    std::set<Element, StructuralLess> seen;
    auto push = [&](Element e) {
      if (seen.insert(e).second) {
        out.push_back(std::move(e));
      }
    };
    for (auto const& g : G.generators()) {
      push(g.value);
    }
    for (auto const& g : G.generators()) {
      push(G.inv(g.value));
    }
    return out;
  }

  // Every element of word length <= radius over the generators, identity
  // first, then by increasing length.  Throws OverflowError past `cap`.
  inline std::vector<Element> generator_ball(OrderedGroup const& G,
                                             std::size_t         radius,
                                             std::size_t         cap = 200000) {
    auto const                        alphabet = letters(G);
    std::vector<Element>              ball{G.identity()};
    std::set<Element, StructuralLess> seen{G.identity()};
    std::size_t                       layer_begin = 0;
    for (std::size_t r = 0; r < radius; ++r) {
      std::size_t const layer_end = ball.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (auto const& a : alphabet) {
          Element next = G.mul(ball[i], a);
          if (seen.insert(next).second) {
            if (ball.size() >= cap) {
              throw OverflowError("ball of radius " + std::to_string(radius)
                                  + " in " + G.label() + " exceeds cap "
                                  + std::to_string(cap));
            }
            ball.push_back(std::move(next));
          }
        }
      }
      layer_begin = layer_end;
    }
    return ball;
  }

  ////////////////////////////////////////////////////////////////////////
  // Infinite cyclic group with its standard ordering
  ////////////////////////////////////////////////////////////////////////

  class CyclicGroup final : public OrderedGroup {
   public:
    CyclicGroup(std::string label, std::string generator)
        : OrderedGroup(std::move(label)),
          _generators{Generator{std::move(generator), Element::power(1)}} {}

    static std::shared_ptr<CyclicGroup const> make(std::string label,
                                                   std::string generator) {
      return std::make_shared<CyclicGroup const>(std::move(label),
                                                 std::move(generator));
    }

    std::string const& generator_name() const noexcept {
      return _generators.front().name;
    }

    Element identity() const override {
      return Element::power(0);
    }

    Element mul(Element const& x, Element const& y) const override {
      check(x);
      check(y);
      std::int64_t r;
      if (__builtin_add_overflow(x.exponent(), y.exponent(), &r)) {
        throw PreconditionError("exponent overflow in " + label());
      }
      return Element::power(r);
    }

    Element inv(Element const& x) const override {
      check(x);
      if (x.exponent() == INT64_MIN) {
        throw PreconditionError("exponent overflow in " + label());
      }
      return Element::power(-x.exponent());
    }

    Ordering3 compare(Element const& x, Element const& y) const override {
      check(x);
      check(y);
      return compare_values(x.exponent(), y.exponent());
    }

    std::vector<Generator> const& generators() const override {
      return _generators;
    }

    std::optional<Element> min_positive() const override {
      return Element::power(1);
    }

    std::vector<Element> declared_char_set() const override {
      return {Element::power(1)};
    }

    std::vector<Element> declared_relative_char_set() const override {
      return {Element::power(1)};
    }

    void check(Element const& x) const override {
      if (!x.is_cyclic()) {
        throw DomainError("element is not a member of cyclic group "
                          + label());
      }
    }

    void format(std::string&       out,
                Element const&     x,
                std::string const& prefix) const override {
      check(x);
      auto const k = x.exponent();
      if (k == 0) {
        out += "1";
        return;
      }
      out += prefix;
      out += generator_name();
      if (k != 1) {
        out += "^";
        out += std::to_string(k);
      }
    }

   private:
    std::vector<Generator> _generators;
  };

}  // namespace isord

#endif  // ISORD_ORDERED_GROUP_HPP_
