#ifndef ISORD_HARNESS_HPP_
#define ISORD_HARNESS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "amalgam.hpp"
#include "convex.hpp"
#include "element.hpp"
#include "error.hpp"
#include "ordered_group.hpp"

namespace isord {

  // All elements of word length <= radius, deduplicated by group equality.
  struct Ball {
    GroupPtr             group;
    std::size_t          radius;
    std::vector<Element> elements;
  };

  inline Ball enumerate_ball(GroupPtr const& G,
                             std::size_t     radius,
                             std::size_t     cap = 200000) {
    return Ball{G, radius, generator_ball(*G, radius, cap)};
  }

  struct PropertyReport {
    std::string                           name;
    std::size_t                           checked = 0;
    std::size_t                           violation_count = 0;
    std::vector<std::vector<std::string>> witnesses;  // first few, replayable
    std::string                           sampling;

    bool pass() const noexcept {
      return violation_count == 0;
    }
  };

  // PROP <name> <pass|fail> checked=<n> violations=<k>, then one WITNESS line
  // per recorded violation.
  inline void write_report(std::ostream& os, PropertyReport const& r) {
    os << "PROP " << r.name << ' ' << (r.pass() ? "pass" : "fail")
       << " checked=" << r.checked << " violations=" << r.violation_count
       << '\n';
    for (auto const& w : r.witnesses) {
      os << "WITNESS";
      for (auto const& e : w) {
        os << ' ' << e;
      }
      os << '\n';
    }
  }

  struct SuiteConfig {
    std::size_t   radius             = 4;
    std::uint64_t seed               = 1;
    std::size_t   samples            = 10000;
    std::size_t   sample_word_length = 12;
    std::size_t   cap                = 200000;
    std::size_t   convex_limit       = 8;
    std::size_t   max_witnesses      = 10;
    std::size_t   threads            = 0;  // 0: hardware concurrency
  };

  namespace suite {
    inline constexpr char const* total_order     = "total-order";
    inline constexpr char const* left_invariance = "left-invariance";
    inline constexpr char const* discreteness    = "discreteness";
    inline constexpr char const* extension       = "extension";
    inline constexpr char const* base_order      = "base-order";
    inline constexpr char const* pingpong_p1     = "pingpong-p1";
    inline constexpr char const* pingpong_gap    = "pingpong-gap";
    inline constexpr char const* decomposition   = "decomposition";
    inline constexpr char const* partition       = "partition";
    inline constexpr char const* stepping        = "stepping";
    inline constexpr char const* floor_contract  = "floor-contract";
    inline constexpr char const* charset         = "charset";
    inline constexpr char const* convex          = "convex";

    inline std::vector<std::string> all() {
      return {total_order,
              left_invariance,
              discreteness,
              extension,
              base_order,
              pingpong_p1,
              pingpong_gap,
              decomposition,
              partition,
              stepping,
              floor_contract,
              charset,
              convex};
    }
  }  // namespace suite

  namespace detail {

    class Recorder {
     public:
      Recorder(std::string name, std::size_t max_witnesses)
          : _max(max_witnesses) {
        _report.name = std::move(name);
      }

      void count(std::size_t n = 1) {
        _report.checked += n;
      }

      void fail(std::vector<std::string> witness) {
        ++_report.violation_count;
        if (_report.witnesses.size() < _max) {
          _report.witnesses.push_back(std::move(witness));
        }
      }

      // Runs one check; an exception counts as a violation.
      template <typename F>
      void check(F&& f, std::function<std::vector<std::string>()> describe) {
        ++_report.checked;
        bool ok;
        try {
          ok = f();
        } catch (Error const& e) {
          auto w = describe();
          w.push_back(std::string("error=\"") + e.what() + "\"");
          ++_report.violation_count;
          if (_report.witnesses.size() < _max) {
            _report.witnesses.push_back(std::move(w));
          }
          return;
        }
        if (!ok) {
          fail(describe());
        }
      }

      void sampling(std::string s) {
        _report.sampling = std::move(s);
      }

      PropertyReport take() {
        return std::move(_report);
      }

     private:
      PropertyReport _report;
      std::size_t    _max;
    };

    inline bool lt(OrderedGroup const& G, Element const& a, Element const& b) {
      return G.compare(a, b) == Ordering3::Less;
    }

    inline bool le(OrderedGroup const& G, Element const& a, Element const& b) {
      return G.compare(a, b) != Ordering3::Greater;
    }

    inline Element random_word(OrderedGroup const&         G,
                               std::vector<Element> const& alphabet,
                               std::size_t                 max_length,
                               std::mt19937_64&            rng) {
      std::uniform_int_distribution<std::size_t> len(0, max_length);
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      Element w = G.identity();
      for (std::size_t n = len(rng); n > 0; --n) {
        w = G.mul(w, alphabet[pick(rng)]);
      }
      return w;
    }

    // Pairwise comparison table, filled in parallel.  Entries that raised an
    // error are recorded as nullopt-like sentinel 2.
    inline std::vector<std::int8_t> compare_table(OrderedGroup const& G,
                                                  std::vector<Element> const& B,
                                                  std::size_t threads) {
      std::size_t const          n = B.size();
      std::vector<std::int8_t>   table(n * n, 0);
      std::size_t const hw = threads != 0 ? threads
                                          : std::max<std::size_t>(
                                              1, std::thread::hardware_concurrency());
      std::size_t const workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, n));
      auto fill = [&](std::size_t first) {
        for (std::size_t i = first; i < n; i += workers) {
          for (std::size_t j = 0; j < n; ++j) {
            std::int8_t v;
            try {
              v = static_cast<std::int8_t>(G.compare(B[i], B[j]));
            } catch (Error const&) {
              v = 2;
            }
            table[i * n + j] = v;
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 1; t < workers; ++t) {
        pool.emplace_back(fill, t);
      }
      fill(0);
      for (auto& t : pool) {
        t.join();
      }
      return table;
    }

    inline std::string fmt(OrderedGroup const& G, Element const& x) {
      return format(G, x);
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Individual suites
  ////////////////////////////////////////////////////////////////////////

  // Reflexivity, antisymmetry, transitivity and eq <=> Equal on every pair and
  // triple of the ball.
  inline PropertyReport check_total_order(OrderedGroup const&         G,
                                          std::vector<Element> const& B,
                                          SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::total_order, cfg.max_witnesses);
    std::size_t const n = B.size();
    auto const table    = detail::compare_table(G, B, cfg.threads);
    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rec.count();
        auto const c = at(i, j);
        bool const same = G.eq(B[i], B[j]);
        bool const by_word
            = G.eq(G.mul(G.inv(B[i]), B[j]), G.identity());
        if (c == 2 || (c == 0) != same || same != by_word
            || at(j, i) != -c) {
          rec.fail({detail::fmt(G, B[i]), detail::fmt(G, B[j])});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (at(i, j) != -1) {
          rec.count(n);
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          rec.count();
          if (at(j, k) == -1 && at(i, k) != -1) {
            rec.fail({detail::fmt(G, B[i]),
                      detail::fmt(G, B[j]),
                      detail::fmt(G, B[k])});
          }
        }
      }
    }
    rec.sampling("exhaustive, " + std::to_string(n) + " ball elements");
    return rec.take();
  }

  inline PropertyReport check_left_invariance(OrderedGroup const& G,
                                              SuiteConfig const&  cfg) {
    detail::Recorder rec(suite::left_invariance, cfg.max_witnesses);
    std::mt19937_64  rng(cfg.seed);
    auto const       alphabet = letters(G);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      Element const z = detail::random_word(G, alphabet, cfg.sample_word_length, rng);
      Element const u = detail::random_word(G, alphabet, cfg.sample_word_length, rng);
      Element const v = detail::random_word(G, alphabet, cfg.sample_word_length, rng);
      rec.check(
          [&] { return G.compare(u, v) == G.compare(G.mul(z, u), G.mul(z, v)); },
          [&] {
            return std::vector<std::string>{
                detail::fmt(G, z), detail::fmt(G, u), detail::fmt(G, v)};
          });
    }
    rec.sampling("random words of length <= "
                 + std::to_string(cfg.sample_word_length) + ", seed "
                 + std::to_string(cfg.seed));
    return rec.take();
  }

  // No ball element strictly between 1 and the minimal positive element, and
  // x m^-1 < x < x m for every ball element.
  inline PropertyReport check_discreteness(OrderedGroup const&         G,
                                           std::vector<Element> const& B,
                                           SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::discreteness, cfg.max_witnesses);
    auto const       m = G.min_positive();
    if (!m) {
      rec.fail({"no-minimal-positive-element"});
      return rec.take();
    }
    Element const one = G.identity();
    rec.check([&] { return detail::lt(G, one, *m); },
              [&] { return std::vector<std::string>{detail::fmt(G, *m)}; });
    for (auto const& z : B) {
      rec.check(
          [&] { return !(detail::lt(G, one, z) && detail::lt(G, z, *m)); },
          [&] { return std::vector<std::string>{detail::fmt(G, z)}; });
      rec.check(
          [&] {
            return detail::lt(G, predecessor(G, z), z)
                   && detail::lt(G, z, successor(G, z));
          },
          [&] { return std::vector<std::string>{detail::fmt(G, z)}; });
    }
    rec.sampling("exhaustive over " + std::to_string(B.size())
                 + " ball elements");
    return rec.take();
  }

  // The amalgam ordering restricts to the factor orderings.
  inline PropertyReport check_extension(AmalgamGroup const& X,
                                        SuiteConfig const&  cfg) {
    detail::Recorder rec(suite::extension, cfg.max_witnesses);
    for (Side s : {Side::Left, Side::Right}) {
      auto const& F    = *X.factor(s);
      auto const  ball = generator_ball(F, cfg.radius, cfg.cap);
      std::vector<Element> images;
      for (auto const& u : ball) {
        images.push_back(X.embed(s, u));
      }
      for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = 0; j < ball.size(); ++j) {
          rec.check(
              [&] {
                return X.compare(images[i], images[j])
                       == F.compare(ball[i], ball[j]);
              },
              [&] {
                return std::vector<std::string>{detail::fmt(X, images[i]),
                                                detail::fmt(X, images[j])};
              });
        }
      }
    }
    rec.sampling("all pairs of factor balls of radius "
                 + std::to_string(cfg.radius));
    return rec.take();
  }

  // Block structure on G u H: in each gap [a, a a_min) of A the H-part
  // (a, a h_M] precedes the G-part [a g_min, a a_min); mixed pairs follow the
  // floor rule.
  inline PropertyReport check_base_order(AmalgamGroup const&         X,
                                         std::vector<Element> const& B,
                                         SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::base_order, cfg.max_witnesses);
    auto const& A = *X.stepping();
    Side const  gs = X.g_side();
    Side const  hs = X.h_side();
    std::vector<Element> low;
    for (auto const& z : B) {
      auto const L = X.level(z).twice;
      if (L == 0 || L == 1) {
        low.push_back(z);
      }
    }
    for (auto const& z : low) {
      rec.check(
          [&] {
            Element const f = X.a_floor(z);
            if (X.level(z).twice == 0) {
              return detail::lt(X, f, z)
                     && detail::le(X, z, X.mul(f, X.h_M()))
                     && detail::lt(X, X.mul(f, X.h_M()), X.mul(f, X.g_min()));
            }
            return detail::le(X, X.mul(f, X.g_min()), z)
                   && detail::lt(X, z, X.mul(f, X.a_min()));
          },
          [&] { return std::vector<std::string>{detail::fmt(X, z)}; });
    }
    auto const& G = *X.factor(gs);
    for (auto const& u : low) {
      for (auto const& v : low) {
        if (X.level(u).twice != 0 || X.level(v).twice != 1) {
          continue;
        }
        rec.check(
            [&] {
              Element const h = u.syllables().front().value;
              Element const g = v.syllables().front().value;
              bool const expect_h_below
                  = detail::le(G, A.translate(hs, A.floor(hs, h)), A.floor(gs, g));
              return X.base_compare(u, v)
                     == (expect_h_below ? Ordering3::Less : Ordering3::Greater);
            },
            [&] {
              return std::vector<std::string>{detail::fmt(X, u),
                                              detail::fmt(X, v)};
            });
      }
    }
    rec.sampling("ball elements of level 0 and 0.5");
    return rec.take();
  }

  // c(s y) = s c(y) and c lowers the level by two steps.
  inline PropertyReport check_pingpong_p1(AmalgamGroup const&         X,
                                          std::vector<Element> const& B,
                                          SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::pingpong_p1, cfg.max_witnesses);
    for (auto const& x : B) {
      int const L = X.level(x).twice;
      if (L < 1) {
        continue;
      }
      rec.check(
          [&] {
            Element const c  = X.c_map(x);
            int const     lc = X.level(c).twice;
            if (L <= 2) {
              return lc == 0;
            }
            auto const    sp   = X.top_split(x);
            Side const    lead = X.leading_side(L / 2);
            Element const rec_c
                = X.mul(X.embed(lead, sp.head), X.c_map(sp.tail));
            return X.eq(c, rec_c) && lc > L - 6 && lc <= L - 4;
          },
          [&] { return std::vector<std::string>{detail::fmt(X, x)}; });
    }
    rec.sampling("ball elements of level >= 0.5");
    return rec.take();
  }

  // The c-value gap (c, c h_min) holds x and nothing of lower filtration, and
  // x itself has nothing of its own stratum between it and x h_min.
  inline PropertyReport check_pingpong_gap(AmalgamGroup const&         X,
                                           std::vector<Element> const& B,
                                           SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::pingpong_gap, cfg.max_witnesses);
    Element const    h_min = X.h_min();
    std::vector<int> lv;
    for (auto const& z : B) {
      lv.push_back(X.level(z).twice);
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
      auto const& x = B[i];
      int const   L = lv[i];
      if (L < 1) {
        continue;
      }
      Element const xs = X.mul(x, h_min);
      // When the last syllable of x is a h_M, multiplying by h_min absorbs it
      // into A and the interval (x, x h_min) holds lower elements, e.g.
      // x^-1 y^2 < 1 < x in the trefoil group.  The successor claim is made
      // only when x h_min keeps the syllable structure of x.
      bool const same_stratum
          = xs.syllables().size() >= x.syllables().size();
      int const     successor_bound = std::max(4, L + 2);
      for (std::size_t j = 0; j < B.size() && same_stratum; ++j) {
        if (lv[j] > successor_bound) {
          continue;
        }
        rec.check(
            [&] {
              return !(detail::lt(X, x, B[j]) && detail::lt(X, B[j], xs));
            },
            [&] {
              return std::vector<std::string>{
                  "successor", detail::fmt(X, x), detail::fmt(X, B[j])};
            });
      }
      Element const c  = X.c_map(x);
      Element const cs = X.mul(c, h_min);
      rec.check(
          [&] { return detail::lt(X, c, x) && detail::lt(X, x, cs); },
          [&] {
            return std::vector<std::string>{"gap", detail::fmt(X, x)};
          });
      int const gap_bound = L <= 2 ? 0 : L - 2;
      for (std::size_t j = 0; j < B.size(); ++j) {
        if (lv[j] > gap_bound) {
          continue;
        }
        rec.check(
            [&] {
              return !(detail::lt(X, c, B[j]) && detail::lt(X, B[j], cs));
            },
            [&] {
              return std::vector<std::string>{
                  "c-gap", detail::fmt(X, x), detail::fmt(X, B[j])};
            });
      }
    }
    rec.sampling("exhaustive over ball pairs");
    return rec.take();
  }

  // Comparing through (s a, a^-1 y) gives the same answer as through (s, y).
  inline PropertyReport check_decomposition(AmalgamGroup const&         X,
                                            std::vector<Element> const& B,
                                            SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::decomposition, cfg.max_witnesses);
    auto const& A  = *X.stepping();
    Side const  gs = X.g_side();
    Side const  hs = X.h_side();
    std::vector<Element> shifts;  // in the G-role copy of A
    for (long k = -2; k <= 2; ++k) {
      shifts.push_back(pow(*X.factor(gs), A.a_min(gs), k));
    }
    for (auto const& z : generator_ball(*X.factor(gs), 1, cfg.cap)) {
      shifts.push_back(A.floor(gs, z));
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, B.size() - 1);
    for (auto const& x : B) {
      int const L = X.level(x).twice;
      if (L < 1) {
        continue;
      }
      for (int trial = 0; trial < 4; ++trial) {
        Element const& y = B[pick(rng)];
        if (X.level(y).twice != L && !(L <= 2 && X.level(y).twice <= 2)) {
          continue;
        }
        for (auto const& a : shifts) {
          rec.check(
              [&] {
                Ordering3 const expect = X.compare(x, y);
                if (L <= 2) {
                  auto const& G  = *X.factor(gs);
                  auto const& H  = *X.factor(hs);
                  auto        sx = X.low_split(x);
                  Element const ah = A.translate(gs, a);
                  LowSplit const shifted{G.mul(sx.g, a),
                                         H.mul(H.inv(ah), sx.h)};
                  return X.compare_low(shifted, X.low_split(y)) == expect;
                }
                Side const  lead = X.leading_side(L / 2);
                auto const& F    = *X.factor(lead);
                Element const al = lead == gs ? a : A.translate(gs, a);
                auto          sx = X.top_split(x);
                TopSplit const shifted{
                    F.mul(sx.head, al),
                    X.mul(X.embed(lead, F.inv(al)), sx.tail)};
                return X.compare_top(shifted, X.top_split(y), L) == expect;
              },
              [&] {
                return std::vector<std::string>{detail::fmt(X, x),
                                                detail::fmt(X, y),
                                                detail::fmt(*X.factor(gs), a)};
              });
        }
      }
    }
    rec.sampling("4 random partners per element, seed "
                 + std::to_string(cfg.seed));
    return rec.take();
  }

  // Even strata lie in the H-part of their A-gap, odd strata in the G-part.
  inline PropertyReport check_partition(AmalgamGroup const&         X,
                                        std::vector<Element> const& B,
                                        SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::partition, cfg.max_witnesses);
    for (auto const& x : B) {
      int const L = X.level(x).twice;
      if (L < 0) {
        continue;
      }
      // Doubled levels 0, 4, 8, ... are even strata; 1, 2, 6, 10, ... odd.
      bool const even = L % 4 == 0;
      rec.check(
          [&] {
            Element const f = X.a_floor(x);
            if (even) {
              return detail::lt(X, f, x) && detail::le(X, x, X.mul(f, X.h_M()));
            }
            return detail::le(X, X.mul(f, X.g_min()), x)
                   && detail::lt(X, x, X.a_ceil(x));
          },
          [&] {
            return std::vector<std::string>{even ? "even" : "odd",
                                            detail::fmt(X, x)};
          });
    }
    rec.sampling("ball elements outside A");
    return rec.take();
  }

  // A is a stepping subgroup of X: floor(z) in A, floor(z) <= z < ceil(z),
  // and no ball element of A strictly between floor(z) and z or between z
  // and ceil(z).
  inline PropertyReport check_stepping(AmalgamGroup const&         X,
                                       std::vector<Element> const& B,
                                       SuiteConfig const&          cfg) {
    detail::Recorder     rec(suite::stepping, cfg.max_witnesses);
    std::vector<Element> members;
    for (auto const& z : B) {
      if (X.in_amalgamated(z)) {
        members.push_back(z);
      }
    }
    for (auto const& z : B) {
      rec.check(
          [&] {
            Element const f = X.a_floor(z);
            Element const c = X.a_ceil(z);
            if (!X.in_amalgamated(f) || !X.in_amalgamated(c)
                || !detail::le(X, f, z) || !detail::lt(X, z, c)
                || !X.eq(c, X.mul(f, X.a_min()))) {
              return false;
            }
            for (auto const& a : members) {
              if ((detail::lt(X, f, a) && detail::le(X, a, z))
                  || (detail::lt(X, z, a) && detail::lt(X, a, c))) {
                return false;
              }
            }
            return true;
          },
          [&] { return std::vector<std::string>{detail::fmt(X, z)}; });
    }
    rec.sampling("exhaustive over " + std::to_string(B.size())
                 + " ball elements, " + std::to_string(members.size())
                 + " in A");
    return rec.take();
  }

  // Floors of the amalgamated subgroup inside each factor.
  inline PropertyReport check_floor_contract(AmalgamGroup const& X,
                                             SuiteConfig const&  cfg) {
    detail::Recorder rec(suite::floor_contract, cfg.max_witnesses);
    auto const&      A = *X.stepping();
    for (Side s : {Side::Left, Side::Right}) {
      auto const& F    = *X.factor(s);
      auto const& T    = *X.factor(other(s));
      auto const  ball = generator_ball(F, cfg.radius, cfg.cap);
      std::vector<Element> members;
      for (auto const& z : ball) {
        if (A.member(s, z)) {
          members.push_back(z);
        }
      }
      for (auto const& z : ball) {
        rec.check(
            [&] {
              Element const f    = A.floor(s, z);
              Element const ceil = A.ceil(s, z);
              if (!A.member(s, f) || !A.member(s, ceil) || !detail::le(F, f, z)
                  || !detail::lt(F, z, ceil)) {
                return false;
              }
              for (auto const& a : members) {
                if ((detail::lt(F, f, a) && detail::le(F, a, z))
                    || (detail::lt(F, z, a) && detail::lt(F, a, ceil))) {
                  return false;
                }
              }
              return true;
            },
            [&] {
              return std::vector<std::string>{F.label(), detail::fmt(F, z)};
            });
      }
      for (auto const& a : members) {
        rec.check(
            [&] {
              Element const b = A.translate(s, a);
              return sign(F, a) == sign(T, b)
                     && F.eq(A.translate(other(s), b), a);
            },
            [&] {
              return std::vector<std::string>{F.label(), detail::fmt(F, a)};
            });
      }
    }
    rec.sampling("factor balls of radius " + std::to_string(cfg.radius));
    return rec.take();
  }

  inline PropertyReport check_charset(OrderedGroup const& G,
                                      SuiteConfig const&  cfg) {
    detail::Recorder rec(suite::charset, cfg.max_witnesses);
    for (auto const& c : G.declared_char_set()) {
      rec.check([&] { return is_positive(G, c); },
                [&] { return std::vector<std::string>{detail::fmt(G, c)}; });
    }
    rec.sampling("declared characteristic set");
    return rec.take();
  }

  // Ladder seeded by a_min (or the square of the minimal positive element of
  // a primitive group): monotone verdicts and floor/ladder agreement.
  inline PropertyReport check_convex(GroupPtr const&             G,
                                     std::vector<Element> const& B,
                                     SuiteConfig const&          cfg) {
    detail::Recorder rec(suite::convex, cfg.max_witnesses);
    auto             X = std::dynamic_pointer_cast<AmalgamGroup const>(G);
    Element const    seed
        = X ? X->a_min() : pow(*G, require_min_positive(*G), 2);
    std::vector<ConvexLadder> ladders;
    for (std::size_t limit = 1; limit <= cfg.convex_limit; ++limit) {
      ladders.emplace_back(G, seed, limit);
    }
    for (auto const& z : B) {
      rec.check(
          [&] {
            bool was_in = false;
            for (auto const& L : ladders) {
              bool const now = conv_member(z, L).is_in();
              if (was_in && !now) {
                return false;
              }
              was_in = now;
            }
            if (!X) {
              return true;
            }
            auto const& L = ladders.back();
            if (conv_member(z, L).is_in()
                && !conv_member_via_floor(z, L).is_in()) {
              return false;
            }
            return true;
          },
          [&] { return std::vector<std::string>{detail::fmt(*G, z)}; });
    }
    rec.sampling("ladder seed " + detail::fmt(*G, seed) + ", limits 1.."
                 + std::to_string(cfg.convex_limit));
    return rec.take();
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  // Runs the named suites (all of them when `which` is empty) on the ball of
  // radius cfg.radius.  Suites specific to amalgams are skipped for
  // primitive groups.  Reports come back in suite::all() order.
  inline std::vector<PropertyReport>
  run_suite(GroupPtr const&                 G,
            SuiteConfig const&              cfg,
            std::vector<std::string> const& which = {}) {
    auto const known = suite::all();
    for (auto const& w : which) {
      if (std::find(known.begin(), known.end(), w) == known.end()) {
        throw PreconditionError("unknown property suite: " + w);
      }
    }
    auto wanted = [&](std::string const& id) {
      return which.empty()
             || std::find(which.begin(), which.end(), id) != which.end();
    };
    Ball const ball = enumerate_ball(G, cfg.radius, cfg.cap);
    auto const& B   = ball.elements;
    auto        X   = std::dynamic_pointer_cast<AmalgamGroup const>(G);
    std::vector<PropertyReport> out;
    for (auto const& id : known) {
      if (!wanted(id)) {
        continue;
      }
      if (id == suite::total_order) {
        out.push_back(check_total_order(*G, B, cfg));
      } else if (id == suite::left_invariance) {
        out.push_back(check_left_invariance(*G, cfg));
      } else if (id == suite::discreteness) {
        out.push_back(check_discreteness(*G, B, cfg));
      } else if (id == suite::charset) {
        out.push_back(check_charset(*G, cfg));
      } else if (id == suite::convex) {
        out.push_back(check_convex(G, B, cfg));
      } else if (X) {
        if (id == suite::extension) {
          out.push_back(check_extension(*X, cfg));
        } else if (id == suite::base_order) {
          out.push_back(check_base_order(*X, B, cfg));
        } else if (id == suite::pingpong_p1) {
          out.push_back(check_pingpong_p1(*X, B, cfg));
        } else if (id == suite::pingpong_gap) {
          out.push_back(check_pingpong_gap(*X, B, cfg));
        } else if (id == suite::decomposition) {
          out.push_back(check_decomposition(*X, B, cfg));
        } else if (id == suite::partition) {
          out.push_back(check_partition(*X, B, cfg));
        } else if (id == suite::stepping) {
          out.push_back(check_stepping(*X, B, cfg));
        } else if (id == suite::floor_contract) {
          out.push_back(check_floor_contract(*X, cfg));
        }
      }
    }
    return out;
  }

}  // namespace isord

#endif  // ISORD_HARNESS_HPP_
