// Command-line front end: field setup, lattice parsing and the decision
// procedures, speaking JSON on stdin arguments and stdout.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dyadic/json_io.h"
#include "dyadic/space.h"

namespace {

using nlohmann::json;

// Inline JSON if the argument starts with a brace, bracket, digit or sign
// (element integer shorthand), else a path.
json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw dyadic::InputError("empty JSON argument");
  const char c = text[pos];
  if (c != '{' && c != '[' && c != '-' && !(c >= '0' && c <= '9')) {
    std::ifstream in(arg);
    if (!in) throw dyadic::InputError("cannot open file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw dyadic::InputError(std::string("bad JSON: ") + e.what());
  }
}

std::string join_int64(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-universality of integral quadratic lattices over dyadic local fields"};
  app.require_subcommand(1);

  std::string field_arg;
  std::string output = "json";
  int prec = 0;
  app.add_option("--field", field_arg,
                 "field description, inline JSON or a path (default: e=1, f=1)");
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--prec", prec, "absolute precision override in pi-digits");

  std::string lattice_arg, target_arg, x_arg, y_arg;
  int n = 2;
  int count = 100;
  std::int64_t seed = 1;
  std::string method_tok = "thm11";
  bool essential = false;

  CLI::App* inv = app.add_subcommand("invariants", "R, alpha, classes and space of a lattice");
  inv->add_option("lattice", lattice_arg, "lattice JSON, inline or a path")->required();

  CLI::App* uni = app.add_subcommand("universal", "decide n-universality");
  uni->add_option("lattice", lattice_arg, "lattice JSON, inline or a path")->required();
  uni->add_option("--n", n, "degree of universality")->required();
  uni->add_option("--method", method_tok,
                  "thm11, even41, even47, odd51, odd53 or testing_set");

  CLI::App* rep = app.add_subcommand("represents", "is --target represented by the lattice");
  rep->add_option("lattice", lattice_arg, "representing lattice JSON")->required();
  rep->add_option("--target", target_arg, "represented lattice JSON")->required();
  rep->add_flag("--essential-only", essential, "restrict the matched-bracket clause");

  CLI::App* ts = app.add_subcommand("testing-set", "minimal testing set for n-universality");
  ts->add_option("--n", n, "degree of universality")->required();

  CLI::App* cc = app.add_subcommand("crosscheck", "compare all decision routes on random lattices");
  cc->add_option("--n", n, "degree of universality")->required();
  cc->add_option("--count", count, "number of sampled lattices");
  cc->add_option("--seed", seed, "base seed");

  CLI::App* cls = app.add_subcommand("classes", "square-class table of the field");

  CLI::App* def = app.add_subcommand("defect", "defect order and square class of an element");
  def->add_option("x", x_arg, "element JSON")->required();

  CLI::App* hil = app.add_subcommand("hilbert", "Hilbert symbol of two elements");
  hil->add_option("a", x_arg, "element JSON")->required();
  hil->add_option("b", y_arg, "element JSON")->required();

  for (CLI::App* sub : {inv, uni, rep, ts, cc, cls, def, hil}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    json field_json =
        field_arg.empty() ? json{{"e", 1}, {"f", 1}} : parse_json_arg(field_arg);
    if (prec > 0) field_json["prec"] = prec;
    const auto ctx = dyadic::field_from_json(field_json);
    const bool text = output == "text";
    json out;

    if (*inv) {
      const auto L = dyadic::lattice_from_json(*ctx, parse_json_arg(lattice_arg));
      out = dyadic::invariants_to_json(L);
      if (text) {
        std::cout << "rank " << L.rank() << "\n";
        std::cout << "R = (" << join_int64(L.R_all()) << ")\n";
        std::cout << "alpha = (";
        for (int i = 1; i <= L.rank() - 1; ++i)
          std::cout << (i > 1 ? ", " : "") << L.alpha(i).str();
        std::cout << ")\n";
        const auto sp = L.space();
        std::cout << "det = " << sp.det.id() << "\nhasse = " << sp.hasse << "\n";
        return 0;
      }
    } else if (*uni) {
      const auto L = dyadic::lattice_from_json(*ctx, parse_json_arg(lattice_arg));
      const auto v =
          dyadic::decide_universal(L, n, dyadic::method_from_token(method_tok));
      out = dyadic::uni_verdict_to_json(v);
      if (text) {
        std::cout << (v.universal ? "universal" : "not universal") << " (method "
                  << dyadic::method_token(v.method);
        if (!v.witness.empty()) std::cout << ", witness " << v.witness;
        std::cout << ")\n";
        return 0;
      }
    } else if (*rep) {
      const auto M = dyadic::lattice_from_json(*ctx, parse_json_arg(lattice_arg));
      const auto N = dyadic::lattice_from_json(*ctx, parse_json_arg(target_arg));
      const auto v = dyadic::represents(N, M, essential);
      out = dyadic::rep_verdict_to_json(v);
      if (text) {
        if (v.represented)
          std::cout << "represented\n";
        else
          std::cout << "not represented (condition " << v.condition << " at i=" << v.index
                    << ")\n";
        return 0;
      }
    } else if (*ts) {
      const auto set = dyadic::testing_set(*ctx, n);
      out = dyadic::testing_set_to_json(*ctx, set);
      if (text) {
        std::cout << set.size() << " entries\n";
        for (const auto& entry : set)
          std::cout << "nu=" << entry.nu << " c=" << entry.c.id() << "  " << entry.jordan
                    << "\n";
        return 0;
      }
    } else if (*cc) {
      const auto report = dyadic::crosscheck(*ctx, n, count, seed);
      out = dyadic::crosscheck_to_json(report);
      if (text) {
        std::cout << "n=" << report.n << " count=" << report.count
                  << " seed=" << report.seed << " disagreements=" << report.disagreements
                  << "\n";
        for (const auto& d : report.details) std::cout << "  " << d << "\n";
        return 0;
      }
    } else if (*cls) {
      const int units = ctx->unit_class_count();
      json list = json::array();
      for (int parity = 0; parity <= 1; ++parity) {
        for (int idx = 0; idx < units; ++idx) {
          const auto c = ctx->unit_class(idx, parity);
          list.push_back({{"id", c.id()}, {"d", dyadic::val_to_json(c.dval())}});
        }
      }
      out = {{"count", 2 * units}, {"unit_count", units}, {"classes", list}};
      if (text) {
        std::cout << 2 * units << " square classes (" << units << " unit classes)\n";
        for (const auto& item : list)
          std::cout << "id=" << item.at("id").get<std::string>()
                    << " d=" << item.at("d").dump() << "\n";
        return 0;
      }
    } else if (*def) {
      const auto x = dyadic::element_from_json(*ctx, parse_json_arg(x_arg));
      if (x.is_exact_zero()) {
        out = {{"d", "inf"}, {"class", nullptr}, {"is_square", true}};
      } else {
        out = {{"d", dyadic::val_to_json(ctx->defect_order(x))},
               {"class", ctx->class_of(x).id()},
               {"is_square", ctx->is_square(x)}};
      }
      if (text) {
        std::cout << "d = " << out.at("d").dump() << ", class = " << out.at("class").dump()
                  << ", square = " << (out.at("is_square").get<bool>() ? "yes" : "no")
                  << "\n";
        return 0;
      }
    } else if (*hil) {
      const auto a = dyadic::element_from_json(*ctx, parse_json_arg(x_arg));
      const auto b = dyadic::element_from_json(*ctx, parse_json_arg(y_arg));
      const int h = ctx->hilbert(a, b);
      out = {{"hilbert", h}};
      if (text) {
        std::cout << "hilbert = " << h << "\n";
        return 0;
      }
    }

    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const dyadic::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
