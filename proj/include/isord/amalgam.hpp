#ifndef ISORD_AMALGAM_HPP_
#define ISORD_AMALGAM_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"
#include "stepping.hpp"

namespace isord {

  // Variant One orders the amalgam with the left factor in the role of G and
  // the right factor in the role of H.  Variant Two swaps the roles.
  enum class Variant { One = 1, Two = 2 };

  // Deliberate corruptions of the engine, used to show that the property
  // suites are not vacuous.
  enum class Mutation {
    None,
    InvertTieBreak,  // reverse the comparison inside a single coset gap
    InvertBaseGap    // put the G-block before the H-block in each A-gap
  };

  struct BuildOptions {
    std::size_t validation_radius = 2;
    Mutation    mutation          = Mutation::None;
  };

  // x = g * h with g in the G-role factor and h in the H-role factor.
  struct LowSplit {
    Element g;
    Element h;
  };

  // x = head * tail where head lies in the factor that leads at the level of
  // x and tail lies one filtration step lower.
  struct TopSplit {
    Element head;
    Element tail;
  };

  // The amalgamated free product of two discretely ordered groups over a
  // stepping subgroup, ordered by the recursive gap-insertion construction.
  //
  // Elements are alternating syllable words.  The canonical form pushes every
  // amalgamated factor to the left: each syllable after the first satisfies
  // floor(t) = 1 in its factor, and an element of A is stored as one
  // left-side syllable.
  class AmalgamGroup final : public OrderedGroup {
    struct Token {};

   public:
    static std::shared_ptr<AmalgamGroup const> build(std::string  label,
                                                     GroupPtr     left,
                                                     GroupPtr     right,
                                                     SteppingPtr  stepping,
                                                     Variant      variant,
                                                     BuildOptions opts = {}) {
      auto X = std::make_shared<AmalgamGroup>(Token{},
                                              std::move(label),
                                              std::move(left),
                                              std::move(right),
                                              std::move(stepping),
                                              variant,
                                              opts);
      return X;
    }

    AmalgamGroup(Token,
                 std::string  label,
                 GroupPtr     left,
                 GroupPtr     right,
                 SteppingPtr  stepping,
                 Variant      variant,
                 BuildOptions opts)
        : OrderedGroup(std::move(label)),
          _factors{std::move(left), std::move(right)},
          _A(std::move(stepping)),
          _variant(variant),
          _mutation(opts.mutation),
          _gside(variant == Variant::One ? Side::Left : Side::Right),
          _hside(other(_gside)) {
      validate(opts.validation_radius);
      init_constants();
      init_generators();
    }

    ////////////////////////////////////////////////////////////////////////
    // Structure
    ////////////////////////////////////////////////////////////////////////

    GroupPtr factor(Side s) const override {
      return _factors[index(s)];
    }

    std::string name_prefix(Side s) const override {
      return _prefix[index(s)];
    }

    std::size_t depth() const override {
      return 1 + std::max(_factors[0]->depth(), _factors[1]->depth());
    }

    Variant variant() const noexcept {
      return _variant;
    }

    Mutation mutation() const noexcept {
      return _mutation;
    }

    SteppingPtr const& stepping() const noexcept {
      return _A;
    }

    // Factor playing the role of G (resp. H) in the construction.
    Side g_side() const noexcept {
      return _gside;
    }

    Side h_side() const noexcept {
      return _hside;
    }

    // Minimal positive element of A, as an element of X.
    Element a_min() const {
      return embed(Side::Left, _A->a_min(Side::Left));
    }

    Element g_min() const {
      return embed(_gside, _g_min);
    }

    Element h_min() const {
      return embed(_hside, _h_min);
    }

    Element g_M() const {
      return embed(_gside, _g_M);
    }

    Element h_M() const {
      return embed(_hside, _h_M);
    }

    // The image of a factor element in X.
    Element embed(Side s, Element const& x) const {
      factor(s)->check(x);
      return reduce({Syllable{s, x}});
    }

    bool in_amalgamated(Element const& x) const {
      return level(x).twice == -1;
    }

    ////////////////////////////////////////////////////////////////////////
    // Group operations
    ////////////////////////////////////////////////////////////////////////

    Element identity() const override {
      return Element::word({});
    }

    Element mul(Element const& x, Element const& y) const override {
      check(x);
      check(y);
      if (x.syllables().empty()) {
        return y;
      }
      if (y.syllables().empty()) {
        return x;
      }
      Element::Word w = x.syllables();
      w.insert(w.end(), y.syllables().begin(), y.syllables().end());
      return reduce(std::move(w));
    }

    Element inv(Element const& x) const override {
      check(x);
      Element::Word w;
      auto const&   s = x.syllables();
      w.reserve(s.size());
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        w.push_back(Syllable{it->side, factor(it->side)->inv(it->value)});
      }
      return reduce(std::move(w));
    }

    // Merges adjacent syllables from the same factor, absorbs syllables that
    // lie in A into a neighbour and returns the canonical form.
    Element reduce(Element::Word raw) const {
      Element::Word st;
      st.reserve(raw.size());
      for (auto& s : raw) {
        push(st, s.side, std::move(s.value));
      }
      canonicalize(st);
      return Element::word(std::move(st));
    }

    ////////////////////////////////////////////////////////////////////////
    // Filtration and decompositions
    ////////////////////////////////////////////////////////////////////////

    FiltrationLevel level(Element const& x) const {
      check(x);
      auto const& s = x.syllables();
      if (s.empty()) {
        return {-1};
      }
      if (s.size() == 1) {
        if (_A->member(s[0].side, s[0].value)) {
          return {-1};
        }
        return {s[0].side == _hside ? 0 : 1};
      }
      int const padded
          = static_cast<int>(s.size()) + (s.back().side == _gside ? 1 : 0);
      return {2 * (padded - 1)};
    }

    // Factor leading the words of integer level n >= 1.
    Side leading_side(int n) const noexcept {
      return n % 2 == 1 ? _gside : _hside;
    }

    LowSplit low_split(Element const& x) const {
      auto const L = level(x).twice;
      if (L > 2) {
        throw PreconditionError("low_split: level above 1");
      }
      auto const& G = *factor(_gside);
      auto const& H = *factor(_hside);
      auto const& s = x.syllables();
      if (s.empty()) {
        return {G.identity(), H.identity()};
      }
      if (s.size() == 1) {
        if (s[0].side == _gside) {
          return {s[0].value, H.identity()};
        }
        if (L == -1) {
          return {_A->translate(_hside, s[0].value), H.identity()};
        }
        return {G.identity(), s[0].value};
      }
      return {s[0].value, s[1].value};
    }

    TopSplit top_split(Element const& x) const {
      auto const L = level(x).twice;
      if (L < 4) {
        throw PreconditionError("top_split: level below 2");
      }
      auto const& s = x.syllables();
      return {s.front().value,
              Element::word(Element::Word(s.begin() + 1, s.end()))};
    }

    ////////////////////////////////////////////////////////////////////////
    // The ordering
    ////////////////////////////////////////////////////////////////////////

    // The ordering on G u H: the factor orders, plus, for g in G - A and h in
    // H - A, h < g exactly when floor(h) <= floor(g).
    Ordering3 base_compare(Element const& u, Element const& v) const {
      if (level(u).twice > 1 || level(v).twice > 1) {
        throw PreconditionError("base_compare: operand outside G u H");
      }
      auto const [su, eu] = as_factor(u);
      auto const [sv, ev] = as_factor(v);
      if (su == sv) {
        return factor(su)->compare(eu, ev);
      }
      if (_A->member(su, eu)) {
        return factor(sv)->compare(_A->translate(su, eu), ev);
      }
      if (_A->member(sv, ev)) {
        return factor(su)->compare(eu, _A->translate(sv, ev));
      }
      bool const     u_is_h = su == _hside;
      Element const& h      = u_is_h ? eu : ev;
      Element const& g      = u_is_h ? ev : eu;
      Ordering3 const floors = factor(_gside)->compare(
          _A->translate(_hside, _A->floor(_hside, h)), _A->floor(_gside, g));
      bool const h_below = _mutation == Mutation::InvertBaseGap
                               ? floors == Ordering3::Less
                               : floors != Ordering3::Greater;
      Ordering3 const h_vs_g = h_below ? Ordering3::Less : Ordering3::Greater;
      return u_is_h ? h_vs_g : reverse(h_vs_g);
    }

    // Greatest element of the next-but-one lower filtration step below x.
    // For x = g h of level <= 1 this is floor(g floor(h)) h_M; above that,
    // c(s y) = s c(y).
    Element c_map(Element const& x) const {
      auto const L = level(x).twice;
      if (L < 1) {
        throw PreconditionError("c_map: argument lies in H");
      }
      if (L <= 2) {
        return c_map_low(low_split(x));
      }
      return c_map_top(top_split(x), L);
    }

    Element c_map_low(LowSplit const& x) const {
      auto const& G = *factor(_gside);
      auto const& H = *factor(_hside);
      if (_A->member(_gside, x.g)) {
        throw PreconditionError("c_map: G-part lies in A");
      }
      Element const shifted
          = G.mul(x.g, _A->translate(_hside, _A->floor(_hside, x.h)));
      Element const a = _A->translate(_gside, _A->floor(_gside, shifted));
      Element const c = embed(_hside, H.mul(a, _h_M));
      if (level(c).twice != 0) {
        throw EngineError("c_map: value " + isord::format(*this, c)
                          + " left H - A");
      }
      return c;
    }

    // `twice_level` is the doubled level of head * tail.
    Element c_map_top(TopSplit const& x, int twice_level) const {
      Side const    lead = leading_side(twice_level / 2);
      Element const c    = c_map(x.tail);
      Element::Word w{Syllable{lead, x.head}};
      w.insert(w.end(), c.syllables().begin(), c.syllables().end());
      Element    result = reduce(std::move(w));
      int const  lc     = level(result).twice;
      if (lc <= twice_level - 6 || lc > twice_level - 4) {
        throw EngineError("c_map: level of " + isord::format(*this, result)
                          + " is not two steps below level "
                          + FiltrationLevel{twice_level}.to_string());
      }
      return result;
    }

    Ordering3 compare(Element const& x, Element const& y) const override {
      if (x == y) {
        return Ordering3::Equal;
      }
      int const lx  = level(x).twice;
      int const ly  = level(y).twice;
      int const top = std::max(lx, ly);
      if (top <= 1) {
        return base_compare(x, y);
      }
      if (top == 2) {
        return compare_low(low_split(x), low_split(y));
      }
      if (lx == ly) {
        return compare_top(top_split(x), top_split(y), top);
      }
      // The higher operand sits in the open gap just above its c-value, and
      // that gap contains nothing of lower level.
      if (ly > lx) {
        Element const c = c_map(y);
        require_descent(std::max(lx, level(c).twice), top);
        return compare(x, c) == Ordering3::Greater ? Ordering3::Greater
                                                   : Ordering3::Less;
      }
      Element const c = c_map(x);
      require_descent(std::max(ly, level(c).twice), top);
      return compare(c, y) == Ordering3::Less ? Ordering3::Less
                                              : Ordering3::Greater;
    }

    // Order on GH: compare g floor(h) in G, and inside one gap compare the
    // H-parts after moving both into the same coset.
    Ordering3 compare_low(LowSplit const& x, LowSplit const& y) const {
      auto const&   G  = *factor(_gside);
      auto const&   H  = *factor(_hside);
      Element const gx = G.mul(x.g, _A->translate(_hside, _A->floor(_hside, x.h)));
      Element const gy = G.mul(y.g, _A->translate(_hside, _A->floor(_hside, y.h)));
      Ordering3 const r = G.compare(gx, gy);
      if (r != Ordering3::Equal) {
        return r;
      }
      Element const shift = G.mul(G.inv(x.g), y.g);
      if (!_A->member(_gside, shift)) {
        throw EngineError("compare: equal gap anchors but g^-1 g' = "
                          + isord::format(G, shift) + " is not in A");
      }
      Ordering3 const inner
          = H.compare(x.h, H.mul(_A->translate(_gside, shift), y.h));
      return _mutation == Mutation::InvertTieBreak ? reverse(inner) : inner;
    }

    // Both operands at doubled level `twice_level` >= 4.
    Ordering3 compare_top(TopSplit const& x,
                          TopSplit const& y,
                          int             twice_level) const {
      Side const lead = leading_side(twice_level / 2);
      auto const& F   = *factor(lead);
      Element const cx = c_map_top(x, twice_level);
      Element const cy = c_map_top(y, twice_level);
      require_descent(std::max(level(cx).twice, level(cy).twice), twice_level);
      Ordering3 const r = compare(cx, cy);
      if (r != Ordering3::Equal) {
        return r;
      }
      Element const shift = F.mul(F.inv(x.head), y.head);
      if (!_A->member(lead, shift)) {
        throw EngineError("compare: equal c-values but s^-1 s' = "
                          + isord::format(F, shift) + " is not in A");
      }
      Element::Word w{Syllable{lead, shift}};
      w.insert(w.end(), y.tail.syllables().begin(), y.tail.syllables().end());
      Element const shifted = reduce(std::move(w));
      require_descent(std::max(level(x.tail).twice, level(shifted).twice),
                      twice_level);
      return compare(x.tail, shifted);
    }

    ////////////////////////////////////////////////////////////////////////
    // A as a stepping subgroup of X
    ////////////////////////////////////////////////////////////////////////

    // Largest element of A below or equal to x: follow c-values down into
    // G u H and take the factor floor there.
    Element a_floor(Element const& x) const {
      Element cur = x;
      while (level(cur).twice >= 2) {
        cur = c_map(cur);
      }
      auto const& s = cur.syllables();
      if (s.empty() || _A->member(s[0].side, s[0].value)) {
        return cur;
      }
      return embed(s[0].side, _A->floor(s[0].side, s[0].value));
    }

    // Least element of A strictly above x.
    Element a_ceil(Element const& x) const {
      return mul(a_floor(x), a_min());
    }

    ////////////////////////////////////////////////////////////////////////
    // OrderedGroup metadata
    ////////////////////////////////////////////////////////////////////////

    std::vector<Generator> const& generators() const override {
      return _generators;
    }

    std::optional<Element> min_positive() const override {
      return _min_positive;
    }

    // Characteristic positive sets of the factors plus h_min a_min^-1 g_min.
    std::vector<Element> characteristic_set() const {
      return _char_set;
    }

    std::vector<Element> declared_char_set() const override {
      return _char_set;
    }

    std::vector<Element> declared_relative_char_set() const override {
      return _char_set;
    }

    void check(Element const& x) const override {
      if (!x.is_word()) {
        throw DomainError("element is not a member of amalgam " + label());
      }
    }

    void format(std::string&       out,
                Element const&     x,
                std::string const& prefix) const override {
      check(x);
      auto const& s = x.syllables();
      if (s.empty()) {
        out += "1";
        return;
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0) {
          out += "*";
        }
        factor(s[i].side)->format(out, s[i].value, prefix + name_prefix(s[i].side));
      }
    }

   private:
    static std::size_t index(Side s) noexcept {
      return s == Side::Left ? 0 : 1;
    }

    void require_descent(int inner, int outer) const {
      if (inner >= outer) {
        throw EngineError("compare: recursion did not descend in level ("
                          + FiltrationLevel{inner}.to_string()
                          + " >= " + FiltrationLevel{outer}.to_string() + ")");
      }
    }

    std::pair<Side, Element> as_factor(Element const& x) const {
      auto const& s = x.syllables();
      if (s.empty()) {
        return {Side::Left, factor(Side::Left)->identity()};
      }
      return {s[0].side, s[0].value};
    }

    // Appends one syllable to a reduced stack.
    void push(Element::Word& st, Side side, Element v) const {
      auto const& F = *factor(side);
      if (F.eq(v, F.identity())) {
        return;
      }
      if (st.empty()) {
        st.push_back(Syllable{side, std::move(v)});
        return;
      }
      Syllable& top = st.back();
      if (top.side == side) {
        top.value = F.mul(top.value, v);
        settle_top(st);
        return;
      }
      if (_A->member(side, v)) {
        top.value = factor(top.side)->mul(top.value, _A->translate(side, v));
        settle_top(st);
        return;
      }
      if (st.size() == 1 && _A->member(top.side, top.value)) {
        Element a = _A->translate(top.side, top.value);
        st.pop_back();
        st.push_back(Syllable{side, F.mul(a, v)});
        return;
      }
      st.push_back(Syllable{side, std::move(v)});
    }

    void settle_top(Element::Word& st) const {
      Syllable& top = st.back();
      auto const& F = *factor(top.side);
      if (F.eq(top.value, F.identity())) {
        st.pop_back();
        return;
      }
      if (st.size() >= 2 && _A->member(top.side, top.value)) {
        Element a = _A->translate(top.side, top.value);
        st.pop_back();
        Syllable& below = st.back();
        below.value     = factor(below.side)->mul(below.value, a);
      }
    }

    // Moves A-parts leftwards so that each syllable after the first has
    // floor 1; a lone A-syllable is stored on the left.
    void canonicalize(Element::Word& st) const {
      for (std::size_t i = st.size(); i-- > 1;) {
        auto const& F = *factor(st[i].side);
        Element     f = _A->floor(st[i].side, st[i].value);
        if (F.eq(f, F.identity())) {
          continue;
        }
        st[i].value   = F.mul(F.inv(f), st[i].value);
        auto const& P = *factor(st[i - 1].side);
        st[i - 1].value
            = P.mul(st[i - 1].value, _A->translate(st[i].side, f));
      }
      if (st.size() == 1 && st[0].side == Side::Right
          && _A->member(Side::Right, st[0].value)) {
        st[0] = Syllable{Side::Left, _A->translate(Side::Right, st[0].value)};
      }
    }

    void validate(std::size_t radius) const {
      auto const& L = _factors[0];
      auto const& R = _factors[1];
      if (!L || !R || !_A) {
        throw ConstructionError("amalgam " + label()
                                + ": missing factor or subgroup");
      }
      if (_A->group(Side::Left) != L || _A->group(Side::Right) != R) {
        throw ConstructionError("amalgam " + label() + ": subgroup "
                                + _A->describe() + " is declared over "
                                + _A->group(Side::Left)->label() + " and "
                                + _A->group(Side::Right)->label() + ", not "
                                + L->label() + " and " + R->label());
      }
      for (auto const& F : _factors) {
        if (!F->min_positive()) {
          throw ConstructionError("amalgam " + label() + ": factor "
                                  + F->label() + " is not discrete");
        }
      }
      if (factor(_gside)->declared_char_set().empty()) {
        throw ConstructionError("amalgam " + label() + ": factor "
                                + factor(_gside)->label()
                                + " declares no characteristic set");
      }
      if (factor(_hside)->declared_relative_char_set().empty()) {
        throw ConstructionError("amalgam " + label() + ": factor "
                                + factor(_hside)->label()
                                + " declares no relative characteristic set");
      }
      for (Side s : {Side::Left, Side::Right}) {
        auto const& F = *factor(s);
        if (_A->member(s, *F.min_positive())) {
          throw ConstructionError("amalgam " + label()
                                  + ": amalgamated subgroup is all of "
                                  + F.label());
        }
        Element const a = _A->a_min(s);
        if (!_A->member(s, a) || !is_positive(F, a)) {
          throw ConstructionError(
              "amalgam " + label() + ": sign agreement fails, a_min = "
              + isord::format(F, a) + " is not a positive member of A in "
              + F.label());
        }
      }
      if (_A->translate(Side::Left, _A->a_min(Side::Left))
          != _A->a_min(Side::Right)) {
        throw ConstructionError("amalgam " + label()
                                + ": a_min differs between the two copies");
      }
      for (Side s : {Side::Left, Side::Right}) {
        auto const& F    = *factor(s);
        auto const& T    = *factor(other(s));
        auto const  ball = generator_ball(F, radius, 20000);
        Element const a_min = _A->a_min(s);
        std::vector<Element> members;
        for (auto const& z : ball) {
          if (_A->member(s, z)) {
            members.push_back(z);
          }
        }
        for (auto const& z : ball) {
          Element const f = _A->floor(s, z);
          if (!_A->member(s, f) || F.compare(f, z) == Ordering3::Greater
              || F.compare(z, F.mul(f, a_min)) != Ordering3::Less) {
            throw ConstructionError("amalgam " + label()
                                    + ": floor soundness fails at "
                                    + isord::format(F, z) + " in "
                                    + F.label());
          }
          for (auto const& a : members) {
            if (F.compare(f, a) == Ordering3::Less
                && F.compare(a, z) != Ordering3::Greater) {
              throw ConstructionError("amalgam " + label()
                                      + ": floor of " + isord::format(F, z)
                                      + " is not maximal in " + F.label());
            }
          }
          std::vector<Element> samples{f, F.inv(f), F.mul(f, a_min)};
          for (auto const& a : samples) {
            Element const b = _A->translate(s, a);
            if (sign(F, a) != sign(T, b)) {
              throw ConstructionError(
                  "amalgam " + label()
                  + ": sign agreement on the amalgamated subgroup fails at "
                  + isord::format(F, a) + " = " + isord::format(T, b));
            }
            if (_A->translate(other(s), b) != a) {
              throw ConstructionError("amalgam " + label()
                                      + ": subgroup identification is not "
                                        "invertible at "
                                      + isord::format(F, a));
            }
          }
        }
        for (auto const& c : s == _gside ? F.declared_char_set()
                                         : F.declared_relative_char_set()) {
          if (!is_positive(F, c)) {
            throw ConstructionError("amalgam " + label()
                                    + ": declared characteristic element "
                                    + isord::format(F, c) + " of "
                                    + F.label() + " is not positive");
          }
        }
      }
    }

    void init_constants() {
      auto const& G = *factor(_gside);
      auto const& H = *factor(_hside);
      _g_min        = *G.min_positive();
      _h_min        = *H.min_positive();
      _g_M          = G.mul(_A->a_min(_gside), G.inv(_g_min));
      _h_M          = H.mul(_A->a_min(_hside), H.inv(_h_min));
      if (_A->member(_hside, _h_M) || !is_positive(H, _h_M)) {
        throw ConstructionError("amalgam " + label()
                                + ": h_M is not a positive element of H - A");
      }
      // h_min a_min^-1 g_min with a_min^-1 written in H.
      _min_positive = reduce(
          {Syllable{_hside, H.mul(_h_min, H.inv(_A->a_min(_hside)))},
           Syllable{_gside, _g_min}});
      for (Side s : {Side::Left, Side::Right}) {
        auto const& F   = *factor(s);
        auto const  set = s == _gside ? F.declared_char_set()
                                      : F.declared_relative_char_set();
        for (auto const& c : set) {
          _char_set.push_back(embed(s, c));
        }
      }
      _char_set.push_back(_min_positive);
    }

    void init_generators() {
      std::set<std::string> left_names;
      for (auto const& g : _factors[0]->generators()) {
        left_names.insert(g.name);
      }
      bool clash = false;
      for (auto const& g : _factors[1]->generators()) {
        clash = clash || left_names.count(g.name) != 0;
      }
      if (clash) {
        _prefix[0] = "L.";
        _prefix[1] = "R.";
      }
      for (Side s : {Side::Left, Side::Right}) {
        for (auto const& g : factor(s)->generators()) {
          _generators.push_back(
              Generator{_prefix[index(s)] + g.name, embed(s, g.value)});
        }
      }
    }

    GroupPtr               _factors[2];
    SteppingPtr            _A;
    Variant                _variant;
    Mutation               _mutation;
    Side                   _gside;
    Side                   _hside;
    std::string            _prefix[2];
    Element                _g_min        = Element::word({});
    Element                _h_min        = Element::word({});
    Element                _g_M          = Element::word({});
    Element                _h_M          = Element::word({});
    Element                _min_positive = Element::word({});
    std::vector<Element>   _char_set;
    std::vector<Generator> _generators;
  };

  using AmalgamPtr = std::shared_ptr<AmalgamGroup const>;

  inline AmalgamPtr build_amalgam(std::string  label,
                                  GroupPtr     left,
                                  GroupPtr     right,
                                  SteppingPtr  stepping,
                                  Variant      variant,
                                  BuildOptions opts = {}) {
    return AmalgamGroup::build(std::move(label),
                               std::move(left),
                               std::move(right),
                               std::move(stepping),
                               variant,
                               opts);
  }

}  // namespace isord

#endif  // ISORD_AMALGAM_HPP_
