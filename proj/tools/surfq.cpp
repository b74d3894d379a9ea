// Command-line calculator for the class-2 surface-group quotients:
// evaluation, arithmetic, Dehn twists, quotient orders, orbit probes,
// and the claim verification suite.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "surfgrp/json_io.hpp"
#include "surfgrp/verify.hpp"

namespace {

using namespace surfgrp;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct QuotientSelector {
  enum class Kind { nil2, modK, powK } kind = Kind::nil2;
  long long e = 0;
};

QuotientSelector parse_selector(const std::string& text, int genus,
                                bool allow_any_e) {
  QuotientSelector sel;
  if (text == "nil2") return sel;
  if (text == "modK") {
    sel.kind = QuotientSelector::Kind::modK;
    return sel;
  }
  if (text.rfind("powK:", 0) == 0) {
    sel.kind = QuotientSelector::Kind::powK;
    sel.e = std::stoll(text.substr(5));
    if (!allow_any_e && sel.e != genus && sel.e != 2 * genus)
      throw RangeError("exponent must be g or 2g (use --any-exponent to "
                       "override)");
    if (sel.e < 2) throw RangeError("exponent must be at least 2");
    return sel;
  }
  throw ParseError("unknown quotient selector '" + text +
                   "' (expected nil2, modK, or powK:E)");
}

Word parse_input_word(const std::string& text, const SurfaceContext& ctx) {
  if (text == "relator") return ctx.relator();
  return parse_word(text, ctx);
}

std::string render_nil2(const Nil2Element& a) {
  const PairIndexSet ps(a.genus);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& atom, const Int& exp) {
    if (exp == 0) return;
    if (!first) os << ' ';
    os << atom;
    if (exp != 1) os << '^' << exp;
    first = false;
  };
  for (int i = 0; i < 2 * a.genus; ++i)
    emit("x" + std::to_string(i + 1), a.n[i]);
  for (int k = 0; k < ps.size(); ++k) {
    auto [i, j] = ps.pair_at(k);
    emit("[x" + std::to_string(i) + ",x" + std::to_string(j) + "]", a.m[k]);
  }
  return first ? "1" : os.str();
}

std::string render_modk(const ModKElement& a) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 2 * a.genus; ++i) {
    if (a.n[i] == 0) continue;
    if (!first) os << ' ';
    os << 'x' << i + 1;
    if (a.n[i] != 1) os << '^' << a.n[i];
    first = false;
  }
  if (a.mk != 0) {
    if (!first) os << ' ';
    os << "[x1,x2]";
    if (a.mk != 1) os << '^' << a.mk;
    first = false;
  }
  std::string s = first ? "1" : os.str();
  return s + "   (commutator exponent mod " + std::to_string(a.genus) + ")";
}

std::string render_quotient(const QuotientElement& a) {
  std::ostringstream os;
  os << "n = (";
  for (int i = 0; i < 2 * a.genus; ++i) os << (i ? "," : "") << a.n[i];
  os << ") mod " << a.e << ", mK = " << a.mk << " mod " << a.d;
  return os.str();
}

void print_element(const Nil2Element& a, const QuotientSelector& sel,
                   bool structured) {
  switch (sel.kind) {
    case QuotientSelector::Kind::nil2:
      std::cout << (structured ? to_json(a).dump() : render_nil2(a)) << "\n";
      break;
    case QuotientSelector::Kind::modK: {
      ModKElement m = project_to_modK(a);
      std::cout << (structured ? to_json(m).dump() : render_modk(m)) << "\n";
      break;
    }
    case QuotientSelector::Kind::powK: {
      QuotientElement q =
          project_to_quotient(a, QuotientSpec(a.genus, sel.e));
      std::cout << (structured ? to_json(q).dump() : render_quotient(q))
                << "\n";
      break;
    }
  }
}

int print_report(const VerificationReport& report, bool structured) {
  if (structured) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    for (const CheckResult& c : report.checks) {
      std::cout << '[' << to_string(c.status) << "] " << c.id;
      if (c.status == CheckStatus::deviation)
        std::cout << "  (printed-convention deviation: " << c.details.dump()
                  << ')';
      else if (c.status == CheckStatus::fail)
        std::cout << "  " << c.details.dump();
      std::cout << "\n";
    }
    std::cout << (report.overall_pass() ? "overall: pass" : "overall: FAIL")
              << "\n";
  }
  return report.overall_pass() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class-2 surface-group quotient calculator"};
  app.require_subcommand(1);

  int genus = 2;
  std::string quotient = "nil2";
  std::string format = "human";
  bool any_exponent = false;
  uint64_t seed = 1;
  int depth = 4;
  int samples = 2000;
  uint64_t guard = 2'000'000;

  app.add_option("-g,--genus", genus, "surface genus (>= 2)");
  app.add_option("-q,--quotient", quotient,
                 "quotient selector: nil2 | modK | powK:E");
  app.add_option("--format", format, "output format: human | structured");
  app.add_flag("--any-exponent", any_exponent,
               "allow powK exponents other than g and 2g");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--depth", depth, "probe: exhaustive composition depth");
  app.add_option("--samples", samples, "probe: random composition count");
  app.add_option("--guard", guard, "enumeration size guard");

  std::string word_text, word_text2, twist_name;
  long long pow_exp = 1;
  bool bfs = false;
  std::string g_list_text;

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a word");
  cmd_eval->add_option("word", word_text)->required();
  auto* cmd_mul = app.add_subcommand("mul", "multiply two words");
  cmd_mul->add_option("left", word_text)->required();
  cmd_mul->add_option("right", word_text2)->required();
  auto* cmd_inv = app.add_subcommand("inv", "invert a word");
  cmd_inv->add_option("word", word_text)->required();
  auto* cmd_pow = app.add_subcommand("pow", "raise a word to a power");
  cmd_pow->add_option("word", word_text)->required();
  cmd_pow->add_option("exponent", pow_exp)->required();
  auto* cmd_twist = app.add_subcommand("twist", "apply a Dehn twist");
  cmd_twist->add_option("name", twist_name, "t1..t{2g+1} or s1..s{g}")
      ->required();
  cmd_twist->add_option("word", word_text)->required();
  auto* cmd_order = app.add_subcommand("order", "order of a finite quotient");
  cmd_order->add_flag("--bfs", bfs, "cross-check by enumeration");
  auto* cmd_probe =
      app.add_subcommand("probe", "simple-loop orbit probe of a quotient");
  auto* cmd_verify = app.add_subcommand("verify", "run the claim suite");
  cmd_verify->add_option("-g,--genus", g_list_text,
                         "comma-separated genus list (default 2,3)");

  // Let global flags (--seed, --samples, ...) appear after a subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const SurfaceContext ctx(genus);
    const QuotientSelector sel = parse_selector(quotient, genus, any_exponent);
    const bool structured = format == "structured";

    if (*cmd_eval) {
      print_element(evaluate(parse_input_word(word_text, ctx), ctx), sel,
                    structured);
    } else if (*cmd_mul) {
      Nil2Element a = evaluate(parse_input_word(word_text, ctx), ctx);
      Nil2Element b = evaluate(parse_input_word(word_text2, ctx), ctx);
      print_element(multiply(a, b), sel, structured);
    } else if (*cmd_inv) {
      print_element(inverse(evaluate(parse_input_word(word_text, ctx), ctx)),
                    sel, structured);
    } else if (*cmd_pow) {
      print_element(
          power(evaluate(parse_input_word(word_text, ctx), ctx), pow_exp),
          sel, structured);
    } else if (*cmd_twist) {
      const EndomorphismTable table =
          twist_table(parse_twist_name(twist_name, ctx), ctx);
      const Word image =
          free_reduce(substitute(parse_input_word(word_text, ctx), table));
      std::cout << render_word(image) << "\n";
      print_element(evaluate(image, ctx), sel, structured);
    } else if (*cmd_order) {
      if (sel.kind != QuotientSelector::Kind::powK)
        throw RangeError("order requires -q powK:E");
      QuotientSpec spec(genus, sel.e);
      std::cout << spec.order() << "\n";
      if (bfs) {
        auto elems = enumerate_quotient(spec, guard);
        if (Int(elems.size()) != spec.order()) {
          std::cerr << "BFS count " << elems.size()
                    << " disagrees with closed form\n";
          return kExitFailure;
        }
        std::cout << "bfs: " << elems.size() << "\n";
      }
    } else if (*cmd_probe) {
      if (sel.kind != QuotientSelector::Kind::powK)
        throw RangeError("probe requires -q powK:E");
      VerificationReport report;
      report.checks =
          probe_nongeometric(genus, sel.e, depth, samples, seed, guard);
      return print_report(report, structured);
    } else if (*cmd_verify) {
      std::vector<int> g_list;
      if (g_list_text.empty()) {
        g_list = {2, 3};
      } else {
        std::stringstream ss(g_list_text);
        std::string item;
        while (std::getline(ss, item, ',')) g_list.push_back(std::stoi(item));
      }
      VerifyOptions opts;
      opts.seed = seed;
      opts.probe_depth = depth;
      opts.probe_samples = samples;
      opts.guard = guard;
      return print_report(run_all(g_list, opts), structured);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
