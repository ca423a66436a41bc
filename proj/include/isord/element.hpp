#ifndef ISORD_ELEMENT_HPP_
#define ISORD_ELEMENT_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace isord {

  enum class Ordering3 : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

  constexpr Ordering3 reverse(Ordering3 o) noexcept {
    return static_cast<Ordering3>(-static_cast<std::int8_t>(o));
  }

  inline char const* to_string(Ordering3 o) noexcept {
    switch (o) {
      case Ordering3::Less:
        return "LT";
      case Ordering3::Equal:
        return "EQ";
      default:
        return "GT";
    }
  }

  template <typename T>
  constexpr Ordering3 compare_values(T const& a, T const& b) noexcept {
    return a < b ? Ordering3::Less
                 : (b < a ? Ordering3::Greater : Ordering3::Equal);
  }

  // Which factor of an amalgamated product a syllable belongs to, as written
  // in the declaration amalgam(left, right, ...).
  enum class Side : std::uint8_t { Left, Right };

  constexpr Side other(Side s) noexcept {
    return s == Side::Left ? Side::Right : Side::Left;
  }

  struct Syllable;

  // A group element.  Leaves of the tower are exponents of an infinite cyclic
  // group; amalgam elements are alternating syllable sequences whose entries
  // are elements of the two factors.  The empty sequence is the identity.
  class Element {
   public:
    using Word = std::vector<Syllable>;

    static Element power(std::int64_t exponent) {
      return Element(Rep(std::in_place_index<0>, exponent));
    }

    static Element word(Word syllables);

    bool is_cyclic() const noexcept {
      return _rep.index() == 0;
    }

    bool is_word() const noexcept {
      return _rep.index() == 1;
    }

    std::int64_t exponent() const {
      return std::get<0>(_rep);
    }

    Word const& syllables() const {
      return std::get<1>(_rep);
    }

    friend bool operator==(Element const& a, Element const& b);

    friend bool operator!=(Element const& a, Element const& b) {
      return !(a == b);
    }

    // Structural lexicographic order, used only for containers.  Unrelated to
    // any group ordering.
    friend bool structural_less(Element const& a, Element const& b);

   private:
    using Rep = std::variant<std::int64_t, Word>;

    explicit Element(Rep rep) : _rep(std::move(rep)) {}

    Rep _rep;
  };

  struct Syllable {
    Side    side;
    Element value;
  };

  inline Element Element::word(Word syllables) {
    return Element(Rep(std::in_place_index<1>, std::move(syllables)));
  }

  inline bool operator==(Syllable const& a, Syllable const& b) {
    return a.side == b.side && a.value == b.value;
  }

  inline bool operator==(Element const& a, Element const& b) {
    return a._rep == b._rep;
  }

  inline bool structural_less(Element const& a, Element const& b) {
    if (a._rep.index() != b._rep.index()) {
      return a._rep.index() < b._rep.index();
    }
    if (a.is_cyclic()) {
      return a.exponent() < b.exponent();
    }
    auto const& u = a.syllables();
    auto const& v = b.syllables();
    for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
      if (u[i].side != v[i].side) {
        return u[i].side < v[i].side;
      }
      if (structural_less(u[i].value, v[i].value)) {
        return true;
      }
      if (structural_less(v[i].value, u[i].value)) {
        return false;
      }
    }
    return u.size() < v.size();
  }

  struct StructuralLess {
    bool operator()(Element const& a, Element const& b) const {
      return structural_less(a, b);
    }
  };

  // Position in the filtration A = F_{-0.5} < F_0 = H < F_{0.5} = G u H <
  // F_1 = GH < F_2 = HGH < ...  stored doubled so every step is an integer.
  struct FiltrationLevel {
    int twice;

    double value() const noexcept {
      return twice / 2.0;
    }

    std::string to_string() const {
      if (twice % 2 == 0) {
        return std::to_string(twice / 2);
      }
      return (twice < 0 ? "-" : "") + std::to_string(std::abs(twice) / 2)
             + ".5";
    }

    friend auto operator<=>(FiltrationLevel, FiltrationLevel) = default;
  };

}  // namespace isord

#endif  // ISORD_ELEMENT_HPP_
