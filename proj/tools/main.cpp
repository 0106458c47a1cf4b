// twist8: command line front end.
//
// Exit codes: 0 success, 1 a verification came out negative, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twist8/acceptance/criteria.hpp"
#include "twist8/io/json_io.hpp"
#include "twist8/modular/family.hpp"
#include "twist8/search/fiber.hpp"
#include "twist8/search/sweep.hpp"
#include "twist8/twists/recover.hpp"

namespace {

using namespace twist8;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InputError("--" + name + ": not a rational: '" + text + "'");
  }
}

int r_flag(int r) {
  if (r != 1 && r != 3 && r != 5 && r != 7) throw InputError("--r must be one of 1, 3, 5, 7");
  return r;
}

// Writes to --out when given, otherwise to stdout.
void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

struct Options {
  std::string a = "", b = "", t = "";
  int r = 1;
  long height = 10;
  std::int64_t bound = 31;
  std::string mode = "sweep";
  std::string e_path, f_path, out, csv;
  std::string suite = "all";
  int power = 1;
};

int cmd_equations(const Options& o) {
  const auto sys = build_system(rational_flag("a", o.a), rational_flag("b", o.b), r_flag(o.r));
  emit(o.out, encode(sys).dump(2) + "\n");
  return kOk;
}

int cmd_search(const Options& o) {
  SearchConfig cfg;
  cfg.r = r_flag(o.r);
  cfg.height = o.height;
  if (o.mode == "fiber") {
    cfg.mode = SearchMode::fiber;
  } else if (o.mode == "sweep") {
    cfg.mode = SearchMode::sweep;
  } else if (o.mode == "surface") {
    cfg.mode = SearchMode::surface;
  } else {
    throw InputError("--mode must be fiber, sweep or surface");
  }
  if (cfg.mode != SearchMode::surface) {
    cfg.a = rational_flag("a", o.a);
    cfg.b = rational_flag("b", o.b);
  } else if (!o.a.empty()) {
    cfg.a_values.push_back(rational_flag("a", o.a));
  }
  if (cfg.mode == SearchMode::fiber) {
    if (o.t.empty()) throw InputError("fiber mode needs --t");
    cfg.t = rational_flag("t", o.t);
  }
  std::ostringstream lines;
  for (const auto& hit : sweep(cfg)) {
    Json j = encode(hit);
    try {
      j["F"] = encode(recover_curve(hit.a, hit.b, cfg.r, hit.point));
    } catch (const std::exception& e) {
      j["F"] = nullptr;
      j["F_error"] = e.what();
    }
    lines << j.dump() << "\n";
  }
  emit(o.out, lines.str());
  return kOk;
}

int cmd_family(const Options& o) {
  if (o.power != 1 && o.power != 3) throw InputError("--power must be 1 or 3");
  const Rational a = rational_flag("a", o.a), b = rational_flag("b", o.b), t = rational_flag("t", o.t);
  Curve c = family_x4(a, b, t, o.power);
  emit(o.out, encode(c).dump(2) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  const Curve e = read_curve_file(o.e_path);
  const Curve f = read_curve_file(o.f_path);
  if (o.bound < 2) throw InputError("--bound must be at least 2");
  const auto rep = verify_congruence(e, f, r_flag(o.r), o.bound);
  emit(o.out, encode(rep).dump(2) + "\n");
  if (!o.csv.empty()) {
    std::ofstream c(o.csv);
    if (!c) throw InputError("cannot write '" + o.csv + "'");
    c << to_csv(rep.rows);
  }
  return rep.pass ? kOk : kVerificationFailed;
}

int cmd_cocycle(const Options& o) {
  Json doc;
  bool ok = true;
  Json lemmas = Json::array();
  for (auto id : all_group_lemmas()) {
    const auto rep = verify_group_lemma(id);
    ok = ok && rep.pass;
    lemmas.push_back(encode(rep));
  }
  doc["lemmas"] = lemmas;
  const auto tables = sign_action_tables();
  ok = ok && tables.pass;
  doc["sign_action"] = encode(tables);
  doc["pass"] = ok;
  emit(o.out, doc.dump(2) + "\n");
  return ok ? kOk : kVerificationFailed;
}

int cmd_reproduce(const Options& o) {
  std::vector<int> ids;
  try {
    ids = acceptance::resolve_suite(o.suite);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::ostringstream text;
  int failed = 0;
  for (int id : ids) {
    const auto res = acceptance::run_criterion(id);
    if (!res.pass) ++failed;
    text << acceptance::summary_line(res) << "\n";
    for (const auto& d : res.details) text << "    " << d << "\n";
    std::cerr << (res.pass ? "PASS" : "FAIL") << " [" << id << "] " << res.seconds << "s\n";
  }
  text << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria passed\n";
  emit(o.out, text.str());
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twists of X(8): equations, point search and 8-congruence checks"};
  app.require_subcommand(1);
  Options o;

  auto* eq = app.add_subcommand("equations", "print the three quadrics of X^r_E(8)");
  eq->add_option("--a", o.a, "coefficient a of y^2 = x^3 + a x + b")->required();
  eq->add_option("--b", o.b, "coefficient b")->required();
  eq->add_option("--r", o.r, "power r in {1,3,5,7}")->required();
  eq->add_option("--out", o.out, "output path");

  auto* se = app.add_subcommand("search", "search rational points, one JSON object per line");
  se->add_option("--a", o.a);
  se->add_option("--b", o.b);
  se->add_option("--r", o.r)->required();
  se->add_option("--t", o.t, "fixed fiber (fiber mode)");
  se->add_option("--height", o.height, "height bound");
  se->add_option("--mode", o.mode, "fiber, sweep or surface");
  se->add_option("--out", o.out);

  auto* fa = app.add_subcommand("family", "evaluate the level-4 family at t");
  fa->add_option("--a", o.a)->required();
  fa->add_option("--b", o.b)->required();
  fa->add_option("--t", o.t)->required();
  fa->add_option("--power", o.power, "1 or 3");
  fa->add_option("--out", o.out);

  auto* ve = app.add_subcommand("verify", "compare traces of two curves mod 8");
  ve->add_option("--E", o.e_path, "curve JSON")->required();
  ve->add_option("--F", o.f_path, "curve JSON")->required();
  ve->add_option("--r", o.r);
  ve->add_option("--bound", o.bound, "largest prime checked");
  ve->add_option("--out", o.out, "JSON report path");
  ve->add_option("--csv", o.csv, "CSV table path");

  auto* co = app.add_subcommand("cocycle", "verify the group lemmas and sign tables");
  co->add_option("--out", o.out);

  auto* re = app.add_subcommand("reproduce", "run the reproduction suite");
  re->add_option("--suite", o.suite, "all, a number 1..12 or an alias");
  re->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (eq->parsed()) return cmd_equations(o);
    if (se->parsed()) return cmd_search(o);
    if (fa->parsed()) return cmd_family(o);
    if (ve->parsed()) return cmd_verify(o);
    if (co->parsed()) return cmd_cocycle(o);
    if (re->parsed()) return cmd_reproduce(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
