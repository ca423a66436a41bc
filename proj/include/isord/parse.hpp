#ifndef ISORD_PARSE_HPP_
#define ISORD_PARSE_HPP_

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"

namespace isord {

  struct Location {
    std::size_t line   = 1;
    std::size_t column = 1;
  };

  struct Ident {
    std::string name;
    Location    where;
  };

  ////////////////////////////////////////////////////////////////////////
  // Tower file syntax tree
  ////////////////////////////////////////////////////////////////////////

  // group <id> = Z(<gen>)
  struct CyclicDecl {
    Ident id;
    Ident generator;
  };

  // group <id> = amalgam(<left>, <right>, <subgroup>, variant=<1|2>)
  struct AmalgamDecl {
    Ident    id;
    Ident    left;
    Ident    right;
    Ident    subgroup;
    int      variant = 1;
    Location variant_where;
  };

  // subgroup <id> = cyclic(<G>: <g>^<p>, <H>: <h>^<q>)
  struct CyclicSubgroupDecl {
    Ident        id;
    Ident        left;
    Ident        left_generator;
    std::int64_t p = 0;
    Ident        right;
    Ident        right_generator;
    std::int64_t q = 0;
  };

  // subgroup <id> = modkernel(<G>, <map>, p=<int>)
  struct ModKernelDecl {
    Ident        id;
    Ident        group;
    Ident        map;
    std::int64_t p = 0;
    Location     p_where;
  };

  // map <id> = exponents(<G>: <gen>=<int>, ...)
  struct ExponentsDecl {
    struct Entry {
      Ident        generator;
      std::int64_t value;
    };
    Ident              id;
    Ident              group;
    std::vector<Entry> entries;
  };

  using Declaration = std::variant<CyclicDecl,
                                   AmalgamDecl,
                                   CyclicSubgroupDecl,
                                   ModKernelDecl,
                                   ExponentsDecl>;

  struct TowerFile {
    std::vector<Declaration> declarations;
  };

  inline Ident const& declared_id(Declaration const& d) {
    return std::visit([](auto const& x) -> Ident const& { return x.id; }, d);
  }

  namespace detail {

    inline bool is_name_start(char c) noexcept {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }

    inline bool is_name_char(char c) noexcept {
      return is_name_start(c) || (c >= '0' && c <= '9') || c == '.';
    }

    inline bool is_digit(char c) noexcept {
      return c >= '0' && c <= '9';
    }

    inline std::string describe_char(char c) {
      if (c == '\n') {
        return "end of line";
      }
      auto const u = static_cast<unsigned char>(c);
      if (u < 0x20 || u >= 0x7f) {
        static char const hex[] = "0123456789abcdef";
        return std::string("byte 0x") + hex[u >> 4] + hex[u & 0xf];
      }
      return std::string("'") + c + "'";
    }

    // Character cursor with line/column tracking.  Every accessor is
    // bounds-checked, so the parsers built on it are total.
    class Cursor {
     public:
      explicit Cursor(std::string_view text) : _text(text) {}

      bool done() const noexcept {
        return _pos >= _text.size();
      }

      char peek(std::size_t ahead = 0) const noexcept {
        return _pos + ahead < _text.size() ? _text[_pos + ahead] : '\0';
      }

      char get() noexcept {
        char const c = peek();
        if (done()) {
          return c;
        }
        ++_pos;
        if (c == '\n') {
          ++_where.line;
          _where.column = 1;
        } else {
          ++_where.column;
        }
        return c;
      }

      Location where() const noexcept {
        return _where;
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _where.line, _where.column);
      }

      [[noreturn]] void fail_at(Location w, std::string const& msg) const {
        throw ParseError(msg, w.line, w.column);
      }

      [[noreturn]] void unexpected(std::string const& wanted) const {
        fail("expected " + wanted + ", found "
             + (done() ? std::string("end of input") : describe_char(peek())));
      }

      // Spaces, tabs, carriage returns and (when allowed) newlines and
      // comments running to the end of the line.
      void skip_blank(bool newlines) {
        for (;;) {
          char const c = peek();
          if (c == ' ' || c == '\t' || c == '\r') {
            get();
          } else if (newlines && c == '\n') {
            get();
          } else if (c == '#') {
            while (!done() && peek() != '\n') {
              get();
            }
          } else {
            return;
          }
        }
      }

      Ident name(std::string const& what) {
        Location const w = _where;
        if (!is_name_start(peek())) {
          unexpected(what);
        }
        std::string s;
        while (is_name_char(peek())) {
          s.push_back(get());
        }
        return {std::move(s), w};
      }

      std::int64_t integer(std::string const& what) {
        Location const w = _where;
        std::string    s;
        if (peek() == '-' || peek() == '+') {
          s.push_back(get());
        }
        if (!is_digit(peek())) {
          unexpected(what);
        }
        while (is_digit(peek())) {
          s.push_back(get());
        }
        std::int64_t v  = 0;
        char const*  b  = s.data() + (s[0] == '+' ? 1 : 0);
        auto const   rc = std::from_chars(b, s.data() + s.size(), v);
        if (rc.ec != std::errc() || rc.ptr != s.data() + s.size()) {
          fail_at(w, "integer out of range: " + s);
        }
        return v;
      }

      void expect(char c) {
        if (peek() != c) {
          unexpected(std::string("'") + c + "'");
        }
        get();
      }

      bool accept(char c) {
        if (peek() == c) {
          get();
          return true;
        }
        return false;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
      Location         _where;
    };

    class TowerParser {
     public:
      explicit TowerParser(std::string_view text) : _in(text) {}

      TowerFile parse() {
        TowerFile out;
        _in.skip_blank(true);
        while (!_in.done()) {
          out.declarations.push_back(declaration());
          _in.skip_blank(false);
          if (!_in.done() && _in.peek() != '\n') {
            _in.unexpected("end of line");
          }
          _in.skip_blank(true);
        }
        return out;
      }

     private:
      void blank() {
        _in.skip_blank(false);
      }

      void punct(char c) {
        blank();
        _in.expect(c);
        blank();
      }

      Ident id(std::string const& what) {
        blank();
        Ident r = _in.name(what);
        if (r.name.find('.') != std::string::npos) {
          _in.fail_at(r.where, "identifier may not contain '.': " + r.name);
        }
        return r;
      }

      void keyword_arg(std::string const& key) {
        blank();
        Ident const k = _in.name("'" + key + "='");
        if (k.name != key) {
          _in.fail_at(k.where, "expected '" + key + "=', found " + k.name);
        }
        punct('=');
      }

      void head(std::string const& constructor) {
        blank();
        Ident const c = _in.name(constructor);
        if (c.name != constructor) {
          _in.fail_at(c.where,
                      "unknown constructor " + c.name + ", expected "
                          + constructor);
        }
        punct('(');
      }

      Declaration declaration() {
        Ident const kw = _in.name("'group', 'subgroup' or 'map'");
        if (kw.name == "group") {
          return group();
        }
        if (kw.name == "subgroup") {
          return subgroup();
        }
        if (kw.name == "map") {
          return map();
        }
        _in.fail_at(kw.where,
                    "unknown declaration '" + kw.name
                        + "', expected 'group', 'subgroup' or 'map'");
      }

      Declaration group() {
        Ident name = id("group identifier");
        punct('=');
        Ident const ctor = _in.name("'Z' or 'amalgam'");
        if (ctor.name == "Z") {
          punct('(');
          Ident gen = _in.name("generator name");
          punct(')');
          return CyclicDecl{std::move(name), std::move(gen)};
        }
        if (ctor.name == "amalgam") {
          punct('(');
          AmalgamDecl d;
          d.id = std::move(name);
          d.left = id("group identifier");
          punct(',');
          d.right = id("group identifier");
          punct(',');
          d.subgroup = id("subgroup identifier");
          punct(',');
          keyword_arg("variant");
          d.variant_where      = _in.where();
          std::int64_t const v = _in.integer("variant number");
          if (v != 1 && v != 2) {
            _in.fail_at(d.variant_where,
                        "variant must be 1 or 2, got " + std::to_string(v));
          }
          d.variant = static_cast<int>(v);
          punct(')');
          return d;
        }
        _in.fail_at(ctor.where, "unknown group constructor '" + ctor.name
                                    + "', expected 'Z' or 'amalgam'");
      }

      Declaration subgroup() {
        Ident name = id("subgroup identifier");
        punct('=');
        Ident const ctor = _in.name("'cyclic' or 'modkernel'");
        if (ctor.name == "cyclic") {
          punct('(');
          CyclicSubgroupDecl d;
          d.id = std::move(name);
          std::tie(d.left, d.left_generator, d.p) = embedding();
          punct(',');
          std::tie(d.right, d.right_generator, d.q) = embedding();
          punct(')');
          return d;
        }
        if (ctor.name == "modkernel") {
          punct('(');
          ModKernelDecl d;
          d.id    = std::move(name);
          d.group = id("group identifier");
          punct(',');
          d.map = id("map identifier");
          punct(',');
          keyword_arg("p");
          d.p_where = _in.where();
          d.p       = _in.integer("modulus");
          punct(')');
          return d;
        }
        _in.fail_at(ctor.where, "unknown subgroup constructor '" + ctor.name
                                    + "', expected 'cyclic' or 'modkernel'");
      }

      // <group>: <gen>^<int>
      std::tuple<Ident, Ident, std::int64_t> embedding() {
        Ident g = id("group identifier");
        punct(':');
        Ident gen = _in.name("generator name");
        _in.expect('^');
        std::int64_t const k = _in.integer("exponent");
        return {std::move(g), std::move(gen), k};
      }

      Declaration map() {
        ExponentsDecl d;
        d.id = id("map identifier");
        punct('=');
        head("exponents");
        d.group = id("group identifier");
        punct(':');
        for (;;) {
          blank();
          Ident gen = _in.name("generator name");
          punct('=');
          std::int64_t const v = _in.integer("integer");
          d.entries.push_back({std::move(gen), v});
          blank();
          if (_in.accept(')')) {
            break;
          }
          punct(',');
        }
        return d;
      }

      Cursor _in;
    };

  }  // namespace detail

  // Total: any input yields a TowerFile or a ParseError with a location.
  inline TowerFile parse_tower(std::string_view text) {
    return detail::TowerParser(text).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  struct WordFactor {
    Ident        generator;
    std::int64_t exponent = 1;
  };

  // word := factor ('*' factor)*, factor := name ('^' integer)?, or the
  // literal "1".  Blanks are allowed around '*' but not inside factors.
  inline std::vector<WordFactor> parse_word_syntax(std::string_view text) {
    detail::Cursor in(text);
    in.skip_blank(false);
    std::vector<WordFactor> out;
    if (in.peek() == '1' && !detail::is_digit(in.peek(1))) {
      in.get();
      in.skip_blank(false);
      if (!in.done()) {
        in.unexpected("end of word");
      }
      return out;
    }
    for (;;) {
      WordFactor f;
      f.generator = in.name("generator name");
      if (in.accept('^')) {
        f.exponent = in.integer("exponent");
      }
      out.push_back(std::move(f));
      in.skip_blank(false);
      if (in.done()) {
        return out;
      }
      in.expect('*');
      in.skip_blank(false);
    }
  }

  // Parses and evaluates a word in G; generator names are those of
  // G.generators(), including copy prefixes such as L. and R.
  inline Element parse_word(std::string_view text, OrderedGroup const& G) {
    auto const factors = parse_word_syntax(text);
    auto const gens    = G.generators();
    Element    w       = G.identity();
    for (auto const& f : factors) {
      Generator const* g = nullptr;
      for (auto const& cand : gens) {
        if (cand.name == f.generator.name) {
          g = &cand;
        }
      }
      if (g == nullptr) {
        throw ParseError("unknown generator " + f.generator.name + " in "
                             + G.label(),
                         f.generator.where.line,
                         f.generator.where.column);
      }
      try {
        w = G.mul(w, pow(G, g->value, f.exponent));
      } catch (Error const& e) {
        throw ParseError(e.what(),
                         f.generator.where.line,
                         f.generator.where.column);
      }
    }
    return w;
  }

}  // namespace isord

#endif  // ISORD_PARSE_HPP_
