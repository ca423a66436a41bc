#ifndef ISORD_TOWER_HPP_
#define ISORD_TOWER_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amalgam.hpp"
#include "error.hpp"
#include "ordered_group.hpp"
#include "parse.hpp"
#include "stepping.hpp"
#include "subgroups.hpp"

namespace isord {

  // Every object a tower file can name.
  struct TowerEntry {
    enum class Kind { Group, Subgroup, Map };

    Kind                       kind;
    Location                   where;
    GroupPtr                   group;
    SteppingPtr                subgroup;
    std::optional<ExponentMap> map;
  };

  class Tower {
   public:
    // Builds every declaration in order.  Construction failures are
    // reported as ParseErrors at the offending declaration.
    static Tower build(TowerFile const& file, BuildOptions const& opts = {}) {
      Tower t;
      t._options = opts;
      for (auto const& d : file.declarations) {
        Ident const& id = declared_id(d);
        if (t._entries.count(id.name) != 0) {
          fail(id.where,
               "duplicate definition of " + id.name + " (first defined at "
                   + std::to_string(t._entries.at(id.name).where.line) + ":"
                   + std::to_string(t._entries.at(id.name).where.column)
                   + ")");
        }
        TowerEntry e = std::visit([&](auto const& x) { return t.make(x); }, d);
        e.where      = id.where;
        if (e.kind == TowerEntry::Kind::Group) {
          t._last_group = id.name;
        }
        t._entries.emplace(id.name, std::move(e));
      }
      if (t._last_group.empty()) {
        throw ParseError("tower defines no group", 1, 1);
      }
      return t;
    }

    static Tower parse(std::string_view text, BuildOptions const& opts = {}) {
      return build(parse_tower(text), opts);
    }

    // The named group, or the last group declared when `id` is empty.
    GroupPtr group(std::string const& id = "") const {
      std::string const& key = id.empty() ? _last_group : id;
      auto               it  = _entries.find(key);
      if (it == _entries.end() || it->second.kind != TowerEntry::Kind::Group) {
        throw PreconditionError("no group named " + key + " in tower");
      }
      return it->second.group;
    }

    std::string const& last_group() const noexcept {
      return _last_group;
    }

    std::vector<std::string> const& notices() const noexcept {
      return _notices;
    }

    std::map<std::string, TowerEntry> const& entries() const noexcept {
      return _entries;
    }

   private:
    Tower() = default;

    [[noreturn]] static void fail(Location w, std::string const& msg) {
      throw ParseError(msg, w.line, w.column);
    }

    TowerEntry const& lookup(Ident const& id, TowerEntry::Kind kind) const {
      auto it = _entries.find(id.name);
      if (it == _entries.end()) {
        fail(id.where, "unknown identifier " + id.name);
      }
      if (it->second.kind != kind) {
        static char const* const names[] = {"group", "subgroup", "map"};
        fail(id.where,
             id.name + " is a " + names[static_cast<int>(it->second.kind)]
                 + ", expected a " + names[static_cast<int>(kind)]);
      }
      return it->second;
    }

    std::shared_ptr<CyclicGroup const> cyclic(Ident const& id,
                                              Ident const& generator) const {
      auto G = std::dynamic_pointer_cast<CyclicGroup const>(
          lookup(id, TowerEntry::Kind::Group).group);
      if (!G) {
        fail(id.where, id.name + " is not a cyclic group");
      }
      if (G->generator_name() != generator.name) {
        fail(generator.where,
             id.name + " has no generator named " + generator.name);
      }
      return G;
    }

    // Runs a constructor, converting its errors to located diagnostics.
    template <typename F>
    static auto located(Location w, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        fail(w, e.what());
      }
    }

    TowerEntry make(CyclicDecl const& d) {
      TowerEntry e{TowerEntry::Kind::Group, d.id.where, nullptr, nullptr, {}};
      e.group = located(d.id.where, [&] {
        return CyclicGroup::make(d.id.name, d.generator.name);
      });
      return e;
    }

    TowerEntry make(AmalgamDecl const& d) {
      GroupPtr const    G = lookup(d.left, TowerEntry::Kind::Group).group;
      GroupPtr const    H = lookup(d.right, TowerEntry::Kind::Group).group;
      SteppingPtr const A
          = lookup(d.subgroup, TowerEntry::Kind::Subgroup).subgroup;
      if (A->group(Side::Left) != G || A->group(Side::Right) != H) {
        fail(d.subgroup.where,
             "subgroup " + d.subgroup.name + " lives in "
                 + A->group(Side::Left)->label() + " and "
                 + A->group(Side::Right)->label() + ", not in " + d.left.name
                 + " and " + d.right.name);
      }
      TowerEntry e{TowerEntry::Kind::Group, d.id.where, nullptr, nullptr, {}};
      e.group = located(d.id.where, [&] {
        return build_amalgam(d.id.name,
                             G,
                             H,
                             A,
                             d.variant == 1 ? Variant::One : Variant::Two,
                             _options);
      });
      return e;
    }

    TowerEntry make(CyclicSubgroupDecl const& d) {
      auto       G = cyclic(d.left, d.left_generator);
      auto       H = cyclic(d.right, d.right_generator);
      TowerEntry e{TowerEntry::Kind::Subgroup, d.id.where, nullptr, nullptr, {}};
      e.subgroup = located(d.id.where,
                           [&] { return cyclic_stepping(G, d.p, H, d.q); });
      return e;
    }

    TowerEntry make(ModKernelDecl const& d) {
      GroupPtr const     G = lookup(d.group, TowerEntry::Kind::Group).group;
      ExponentMap const& m = *lookup(d.map, TowerEntry::Kind::Map).map;
      if (m.group() != G) {
        fail(d.map.where,
             "map " + d.map.name + " is defined on " + m.group()->label()
                 + ", not on " + d.group.name);
      }
      TowerEntry e{TowerEntry::Kind::Subgroup, d.id.where, nullptr, nullptr, {}};
      auto       A = located(d.id.where,
                       [&] { return modkernel_stepping(G, m, d.p); });
      for (auto const& n : A->notices()) {
        _notices.push_back(d.id.name + ": " + n);
      }
      e.subgroup = std::move(A);
      return e;
    }

    TowerEntry make(ExponentsDecl const& d) {
      GroupPtr const                      G = lookup(d.group, TowerEntry::Kind::Group).group;
      std::map<std::string, std::int64_t> images;
      for (auto const& entry : d.entries) {
        if (!images.emplace(entry.generator.name, entry.value).second) {
          fail(entry.generator.where,
               "generator " + entry.generator.name + " given twice");
        }
      }
      TowerEntry e{TowerEntry::Kind::Map, d.id.where, nullptr, nullptr, {}};
      e.map = located(d.id.where, [&] { return make_exponent_map(G, images); });
      return e;
    }

    BuildOptions                      _options;
    std::map<std::string, TowerEntry> _entries;
    std::string                       _last_group;
    std::vector<std::string>          _notices;
  };

}  // namespace isord

#endif  // ISORD_TOWER_HPP_
