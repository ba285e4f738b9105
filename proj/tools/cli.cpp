#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagpieri/error.hpp"
#include "flagpieri/io.hpp"
#include "flagpieri/pieri.hpp"
#include "flagpieri/schubert.hpp"
#include "flagpieri/schur.hpp"
#include "flagpieri/verify.hpp"

namespace flagpieri::cli {

namespace {

using nlohmann::json;

struct Arguments {
  bool json = false;
  int ambient = 0;
  bool has_ambient = false;
  std::string w, v, w2, mu, nu, lambda;
  int k = 0, m = 0, p = 0, q = 0;
  std::string kind = "row";
  std::string dir = "inc";
  int max_n = 5;
};

class Printer {
 public:
  Printer(const Arguments& args, std::ostream& out) : args_(args), out_(out) {}

  void emit(const std::string& kind, json inputs, const std::string& key, json payload,
            const std::string& text, std::optional<int> ambient = std::nullopt) {
    if (!args_.json) {
      out_ << text;
      return;
    }
    json doc{{"kind", kind}, {"inputs", std::move(inputs)}, {key, std::move(payload)}};
    if (ambient) doc["ambient"] = *ambient;
    out_ << doc.dump(2) << '\n';
  }

 private:
  const Arguments& args_;
  std::ostream& out_;
};

std::string expansion_text(const SchubertExpansion& e) {
  return e.empty() ? "0\n" : expansion_to_text(e);
}

// The ambient requested with --ambient, or the degree of the input.
int rule_ambient(const Arguments& args, const Permutation& w) {
  if (!args.has_ambient) return w.degree();
  if (args.ambient < w.degree()) {
    throw OutOfRange("--ambient " + std::to_string(args.ambient) + " is smaller than the degree " +
                     std::to_string(w.degree()) + " of " + to_string(w));
  }
  return args.ambient;
}

int cmd_schubert(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const int n = rule_ambient(args, w);
  const auto f = schubert_poly(w);
  print.emit("schubert", {{"w", to_string(w)}}, "polynomial", to_string(f), to_string(f) + '\n',
             n);
  return kOk;
}

int cmd_expand(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const auto v = parse_permutation(args.v);
  const int floor = std::max(w.degree(), v.degree());
  const auto full = product_oracle(w, v);
  SchubertExpansion e;
  if (args.has_ambient) {
    if (args.ambient < floor) {
      throw OutOfRange("--ambient " + std::to_string(args.ambient) +
                       " is smaller than the input degree " + std::to_string(floor));
    }
    e = args.ambient >= full.ambient() ? full.embedded(args.ambient) : full.truncated(args.ambient);
  } else {
    e = full.truncated(full.minimal_ambient(floor));
  }
  print.emit("expand", {{"w", to_string(w)}, {"v", to_string(v)}}, "expansion",
             expansion_to_json(e), expansion_text(e), e.ambient());
  return kOk;
}

int cmd_monk(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const int n = rule_ambient(args, w);
  const auto e = monk_expand(w, args.k, n);
  print.emit("monk", {{"w", to_string(w)}, {"k", args.k}}, "expansion", expansion_to_json(e),
             expansion_text(e), n);
  return kOk;
}

int cmd_pieri(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const int n = rule_ambient(args, w);
  const auto kind = args.kind == "row" ? StripKind::kRow : StripKind::kColumn;
  const auto e = pieri_expand(w, args.k, args.m, kind, n);
  print.emit("pieri", {{"w", to_string(w)}, {"k", args.k}, {"m", args.m}, {"kind", args.kind}},
             "expansion", expansion_to_json(e), expansion_text(e), n);
  return kOk;
}

int cmd_hook(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const int n = rule_ambient(args, w);
  const auto e = hook_expand(w, args.k, args.p, args.q, n);
  print.emit("hook", {{"w", to_string(w)}, {"k", args.k}, {"p", args.p}, {"q", args.q}},
             "expansion", expansion_to_json(e), expansion_text(e), n);
  return kOk;
}

int cmd_paths(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const auto w2 = parse_permutation(args.w2);
  const auto direction = args.dir == "inc" ? Direction::kIncreasing : Direction::kDecreasing;
  const auto paths = enumerate_monotone_paths(w, w2, args.k, direction);
  auto payload = json::array();
  std::string text;
  for (const auto& path : paths) {
    payload.push_back(path_to_json(path));
    text += path_to_text(path) + '\n';
  }
  print.emit("paths",
             {{"w", to_string(w)}, {"w2", to_string(w2)}, {"k", args.k}, {"dir", args.dir}},
             "paths", std::move(payload), text, std::max(w.degree(), w2.degree()));
  return kOk;
}

int cmd_lr(const Arguments& args, Printer& print) {
  const auto mu = parse_partition(args.mu);
  const auto nu = parse_partition(args.nu);
  const auto lambda = parse_partition(args.lambda);
  const auto c = lr_coefficient(mu, nu, lambda, args.k);
  print.emit("lr",
             {{"mu", to_string(mu)}, {"nu", to_string(nu)}, {"lambda", to_string(lambda)},
              {"k", args.k}},
             "value", c, std::to_string(c) + '\n');
  return kOk;
}

int cmd_constant(const Arguments& args, Printer& print) {
  const auto w = parse_permutation(args.w);
  const auto w2 = parse_permutation(args.w2);
  const auto nu = parse_partition(args.nu);
  const auto c = grassmannian_structure_constant(w, w2, args.k, nu);
  print.emit("constant",
             {{"w", to_string(w)}, {"w2", to_string(w2)}, {"k", args.k}, {"nu", to_string(nu)}},
             "value", c, std::to_string(c) + '\n');
  return kOk;
}

int cmd_verify(const Arguments& args, Printer& print) {
  VerifyOptions options;
  options.max_n = args.max_n;
  const auto results = run_checks(options);
  auto payload = json::array();
  std::string text;
  int passed = 0;
  for (const auto& r : results) {
    payload.push_back(
        {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failure", r.failure}});
    text += (r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)";
    if (!r.passed) text += ": " + r.failure;
    text += '\n';
    passed += r.passed ? 1 : 0;
  }
  const int total = static_cast<int>(results.size());
  text += std::to_string(passed) + "/" + std::to_string(total) + " checks passed\n";
  print.emit("verify", {{"max_n", args.max_n}}, "checks", std::move(payload), text);
  return passed == total ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Arguments a;
  CLI::App app{"Schubert polynomials and Pieri-type multiplication rules", "flagpieri"};
  app.require_subcommand(1);
  app.add_flag("--json", a.json, "Print a JSON document instead of text");
  auto* ambient = app.add_option("--ambient", a.ambient, "Ambient degree N of the output")
                      ->check(CLI::Range(1, 16));

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto perm = [](CLI::App* s, const char* name, std::string& into) {
    s->add_option(name, into, "Permutation, one-line notation")->required();
  };
  auto integer = [](CLI::App* s, const char* name, int& into, const char* help) {
    s->add_option(name, into, help)->required();
  };
  auto partition = [](CLI::App* s, const char* name, std::string& into) {
    s->add_option(name, into, "Partition, comma separated parts")->required();
  };

  auto* schubert = sub("schubert", "Print the Schubert polynomial of W");
  perm(schubert, "W", a.w);

  auto* expand = sub("expand", "Expand the product of two Schubert polynomials");
  perm(expand, "W", a.w);
  perm(expand, "V", a.v);

  auto* monk = sub("monk", "Multiply by x1+...+xK with Monk's rule");
  perm(monk, "W", a.w);
  integer(monk, "K", a.k, "Descent position");

  auto* pieri = sub("pieri", "Multiply by the special class r[K,M] or c[K,M]");
  perm(pieri, "W", a.w);
  integer(pieri, "K", a.k, "Descent position");
  integer(pieri, "M", a.m, "Degree of the special class");
  pieri->add_option("--kind", a.kind, "row or col")->check(CLI::IsMember({"row", "col"}));

  auto* hook = sub("hook", "Multiply by the hook class h[K;P,Q]");
  perm(hook, "W", a.w);
  integer(hook, "K", a.k, "Descent position");
  integer(hook, "P", a.p, "Arm length plus one");
  integer(hook, "Q", a.q, "Leg length plus one");

  auto* paths = sub("paths", "List the monotone K-Bruhat chain from W to W2");
  perm(paths, "W", a.w);
  perm(paths, "W2", a.w2);
  integer(paths, "K", a.k, "Descent position");
  paths->add_option("--dir", a.dir, "inc or dec")->check(CLI::IsMember({"inc", "dec"}));

  auto* lr = sub("lr", "Littlewood-Richardson coefficient of LAMBDA in s_MU*s_NU");
  partition(lr, "MU", a.mu);
  partition(lr, "NU", a.nu);
  partition(lr, "LAMBDA", a.lambda);
  integer(lr, "K", a.k, "Number of variables");

  auto* constant = sub("constant", "Coefficient of W2 in the product of W and a Grassmannian class");
  perm(constant, "W", a.w);
  perm(constant, "W2", a.w2);
  integer(constant, "K", a.k, "Descent position");
  partition(constant, "NU", a.nu);

  auto* verify = sub("verify", "Run every invariant suite");
  verify->add_option("--max-n", a.max_n, "Largest symmetric group to enumerate")
      ->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  a.has_ambient = ambient->count() > 0;

  Printer print(a, out);
  try {
    if (schubert->parsed()) return cmd_schubert(a, print);
    if (expand->parsed()) return cmd_expand(a, print);
    if (monk->parsed()) return cmd_monk(a, print);
    if (pieri->parsed()) return cmd_pieri(a, print);
    if (hook->parsed()) return cmd_hook(a, print);
    if (paths->parsed()) return cmd_paths(a, print);
    if (lr->parsed()) return cmd_lr(a, print);
    if (constant->parsed()) return cmd_constant(a, print);
    if (verify->parsed()) return cmd_verify(a, print);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace flagpieri::cli
