#ifndef ISORD_CLI_HPP_
#define ISORD_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "amalgam.hpp"
#include "convex.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "ordered_group.hpp"
#include "parse.hpp"
#include "tower.hpp"

namespace isord {

  namespace cli {

    inline constexpr int exit_ok    = 0;
    inline constexpr int exit_fail  = 1;
    inline constexpr int exit_usage = 2;

    // Raised for bad invocations that CLI11 cannot see (wrong word count,
    // rejected flags); reported with exit code 2.
    struct UsageError : Error {
      using Error::Error;
    };

    struct Options {
      std::string              tower;
      std::string              group;
      std::vector<std::string> words;
      int                      variant_override = 0;
      std::size_t              radius           = 0;
      std::uint64_t            seed             = 1;
      std::vector<std::string> suites;
      std::size_t              limit     = 8;
      bool                     via_floor = false;
    };

    struct Context {
      Options const& opts;
      GroupPtr       group;
      std::ostream&  out;
      std::ostream&  err;

      Element word(std::string const& text) const {
        try {
          return parse_word(text, *group);
        } catch (ParseError const& e) {
          throw UsageError("word \"" + text + "\" at column "
                           + std::to_string(e.column()) + ": " + e.message());
        }
      }

      std::vector<Element> all_words() const {
        std::vector<Element> out;
        for (auto const& w : opts.words) {
          out.push_back(word(w));
        }
        return out;
      }

      AmalgamPtr amalgam(std::string const& command) const {
        auto X = std::dynamic_pointer_cast<AmalgamGroup const>(group);
        if (!X) {
          throw UsageError(command + " needs an amalgamated product, but "
                           + group->label() + " is a base group");
        }
        return X;
      }

      void need_words(std::string const& command,
                      std::size_t        least,
                      std::size_t        most = ~std::size_t(0)) const {
        auto const n = opts.words.size();
        if (n < least || n > most) {
          std::string want = least == most ? std::to_string(least)
                                           : "at least " + std::to_string(least);
          if (most == 0) {
            want = "no";
          }
          throw UsageError(command + " takes " + want + " word argument"
                           + (least == 1 && most == 1 ? "" : "s") + ", got "
                           + std::to_string(n));
        }
      }
    };

    inline char const* sign_name(Ordering3 s) {
      switch (s) {
        case Ordering3::Greater:
          return "POS";
        case Ordering3::Less:
          return "NEG";
        default:
          return "ZERO";
      }
    }

    inline int cmd_compare(Context const& c) {
      c.need_words("compare", 2, 2);
      c.out << to_string(c.group->compare(c.word(c.opts.words[0]),
                                          c.word(c.opts.words[1])))
            << '\n';
      return exit_ok;
    }

    inline int cmd_sign(Context const& c) {
      c.need_words("sign", 1);
      for (auto const& x : c.all_words()) {
        c.out << sign_name(sign(*c.group, x)) << '\n';
      }
      return exit_ok;
    }

    inline int cmd_sort(Context const& c) {
      c.need_words("sort", 1);
      auto const               xs = c.all_words();
      std::vector<std::size_t> idx(xs.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return c.group->compare(xs[i], xs[j]) == Ordering3::Less;
      });
      for (std::size_t k = 0; k < idx.size(); ++k) {
        c.out << (k == 0 ? "" : " ") << c.opts.words[idx[k]];
      }
      c.out << '\n';
      return exit_ok;
    }

    inline int cmd_normal_form(Context const& c) {
      c.need_words("normal-form", 1);
      for (auto const& x : c.all_words()) {
        c.out << format(*c.group, x) << '\n';
      }
      return exit_ok;
    }

    inline int cmd_level(Context const& c) {
      c.need_words("level", 1);
      auto const X = c.amalgam("level");
      for (auto const& x : c.all_words()) {
        c.out << X->level(x).to_string() << '\n';
      }
      return exit_ok;
    }

    inline int cmd_floor(Context const& c) {
      c.need_words("floor", 1);
      auto const X = c.amalgam("floor");
      for (auto const& x : c.all_words()) {
        c.out << format(*X, X->a_floor(x)) << ' ' << format(*X, X->a_ceil(x))
              << '\n';
      }
      return exit_ok;
    }

    inline int cmd_minpos(Context const& c) {
      c.need_words("minpos", 0, 0);
      c.out << format(*c.group, require_min_positive(*c.group)) << '\n';
      return exit_ok;
    }

    inline int cmd_charset(Context const& c) {
      c.need_words("charset", 0, 0);
      for (auto const& x : c.group->declared_char_set()) {
        c.out << format(*c.group, x) << '\n';
      }
      return exit_ok;
    }

    inline int cmd_ball_check(Context const& c) {
      c.need_words("ball-check", 0, 0);
      SuiteConfig cfg;
      cfg.radius = c.opts.radius != 0 ? c.opts.radius
                                      : (c.group->depth() <= 1 ? 4 : 3);
      cfg.seed   = c.opts.seed;
      bool ok    = true;
      for (auto const& r : run_suite(c.group, cfg, c.opts.suites)) {
        write_report(c.out, r);
        ok = ok && r.pass();
      }
      return ok ? exit_ok : exit_fail;
    }

    inline int cmd_convex(Context const& c) {
      c.need_words("convex", 2);
      ConvexLadder const ladder(c.group, c.word(c.opts.words[0]), c.opts.limit);
      for (std::size_t i = 1; i < c.opts.words.size(); ++i) {
        Element const x = c.word(c.opts.words[i]);
        c.out << (c.opts.via_floor ? conv_member_via_floor(x, ladder)
                                   : conv_member(x, ladder))
                     .to_string()
              << '\n';
      }
      return exit_ok;
    }

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read tower file " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

  }  // namespace cli

  // Runs one command line (without the program name); returns the process
  // exit code.  Results go to `out`, diagnostics and notices to `err`.
  inline int run_cli(std::vector<std::string> args,
                     std::ostream&            out,
                     std::ostream&            err,
                     BuildOptions const&      build = {}) {
    using Handler = std::function<int(cli::Context const&)>;
    CLI::App     app{"Isolated left-orderings on amalgamated free products",
                 "isord"};
    cli::Options opts;
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](std::string const& name,
                   std::string const& help,
                   std::string const& words_help,
                   Handler            handler) {
      CLI::App* sub = app.add_subcommand(name, help);
      sub->add_option("--tower", opts.tower, "tower definition file")
          ->required();
      sub->add_option("--group", opts.group,
                      "group id (default: last group in the file)");
      sub->add_option("--variant-override", opts.variant_override,
                      "rejected: the variant of a built group is structural");
      if (!words_help.empty()) {
        sub->add_option("words", opts.words, words_help);
      }
      commands.emplace_back(sub, std::move(handler));
      return sub;
    };

    add("compare", "print LT, EQ or GT for two words", "two words",
        cli::cmd_compare);
    add("sign", "print POS, NEG or ZERO for each word", "words",
        cli::cmd_sign);
    add("sort", "print the words in ascending order", "words", cli::cmd_sort);
    add("normal-form", "print the reduced form of each word", "words",
        cli::cmd_normal_form);
    add("level", "print the filtration level of each word", "words",
        cli::cmd_level);
    add("floor", "print the A-floor and A-ceiling of each word", "words",
        cli::cmd_floor);
    add("minpos", "print the minimal positive element", "", cli::cmd_minpos);
    add("charset", "print the characteristic positive set", "",
        cli::cmd_charset);
    auto* ball = add("ball-check", "run the property suites on a ball", "",
                     cli::cmd_ball_check);
    ball->add_option("--radius", opts.radius,
                     "ball radius (default 4 for base amalgams, 3 deeper)");
    ball->add_option("--seed", opts.seed, "seed for sampled checks");
    ball->add_option("--suite", opts.suites, "restrict to the named suites")
        ->check(CLI::IsMember(suite::all()));
    auto* convex = add("convex", "bounded convex hull membership",
                       "ladder seed, then words", cli::cmd_convex);
    convex->add_option("--limit", opts.limit, "ladder search limit");
    convex->add_flag("--via-floor", opts.via_floor,
                     "decide through the A-floor");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return cli::exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n' << app.help();
      return cli::exit_usage;
    }

    try {
      if (opts.variant_override != 0) {
        throw cli::UsageError(
            "--variant-override is rejected: the variant of a built group is "
            "fixed by its declaration");
      }
      std::string const text = cli::read_file(opts.tower);
      Tower const       tower = [&] {
        try {
          return Tower::parse(text, build);
        } catch (ParseError const& e) {
          throw cli::UsageError(opts.tower + ":" + e.what());
        }
      }();
      for (auto const& n : tower.notices()) {
        err << "note: " << n << '\n';
      }
      cli::Context const ctx{opts, tower.group(opts.group), out, err};
      for (auto const& [sub, handler] : commands) {
        if (sub->parsed()) {
          return handler(ctx);
        }
      }
      return cli::exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return cli::exit_usage;
    }
  }

}  // namespace isord

#endif  // ISORD_CLI_HPP_
