#include "supernomial/cli.hpp"

#include "supernomial/bijection.hpp"
#include "supernomial/io.hpp"
#include "supernomial/parallel.hpp"
#include "supernomial/render.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"
#include "supernomial/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace supernomial {

namespace {

using io::Json;

struct Options {
  std::string lambda, mu, shape, inner, weight, tableau, rc, sizes, quotient;
  std::string mode = "sym";
  std::string via = "formula";
  int n = 0;
  int L = 0;
  int pad = 0;
  bool json = false;
  bool pretty = false;
  bool reverse = false;
  bool use_parallel = false;
  bool trace = false;
  std::string render = "ascii";
  // verify
  int max_size = 5;
  int max_n = 3;
  int max_components = 3;
  std::string modes = "sym,anti";
  std::string checks;
  bool serial = false;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!item.empty())
        out.push_back(item);
      item.clear();
    } else if (ch != ' ') {
      item += ch;
    }
  }
  return out;
}

Partition partition_arg(const std::string& text) {
  return Partition(io::parse_int_argument(text));
}

int alphabet_for(const Options& o, const Composition& lambda) {
  if (o.n > 0)
    return o.n;
  if (o.n < 0)
    throw std::invalid_argument("--n must be positive");
  return std::max<int>(1, static_cast<int>(lambda.size()));
}

// Single-row or single-column components with the parts of mu as sizes; one
// empty component stands in for the empty partition.
MultiPartition component_shape(const Partition& mu, Mode mode) {
  std::vector<int> sizes = mu.parts();
  if (sizes.empty())
    sizes.push_back(0);
  return mode == Mode::symmetric ? row_multipartition(sizes) : column_multipartition(sizes);
}

void print_poly(std::ostream& out, const QPolynomial& p, const Options& o) {
  if (o.pretty && !o.json)
    out << p.str() << "\n";
  else
    out << io::to_json(p).dump() << "\n";
}

int cmd_supernomial(const Options& o, std::ostream& out) {
  Composition lambda = io::parse_int_argument(o.lambda);
  Partition mu = partition_arg(o.mu);
  int n = alphabet_for(o, lambda);
  Mode mode = parse_mode(o.mode);
  pad_content(lambda, n);  // validates

  QPolynomial result;
  if (o.via == "formula") {
    result = o.use_parallel ? parallel::supernomial(lambda, mu, n, mode)
                            : supernomial(lambda, mu, n, mode);
  } else if (o.via == "rc") {
    result = o.use_parallel ? parallel::supernomial_via_rc(lambda, mu, n, mode)
                            : supernomial_via_rc(lambda, mu, n, mode);
  } else if (o.via == "multitab" || o.via == "ribbon") {
    Composition weight = pad_content(lambda, n);
    MultiPartition shape = component_shape(mu, mode);
    if (o.via == "multitab") {
      result = o.use_parallel ? parallel::inv_generating_function(shape, weight)
                              : inv_generating_function(shape, weight);
    } else {
      int L = shape.components();
      SkewShape skew(quot_inverse(shape, L));
      result = o.use_parallel ? parallel::cospin_gf(skew, weight, L)
                              : cospin_gf(skew, weight, L);
    }
  } else {
    throw std::invalid_argument("--via must be formula, rc, multitab or ribbon");
  }
  if (o.reverse)
    result = reverse_with_offset(result, static_cast<int>(costat_n(mu)));
  print_poly(out, result, o);
  return exit_code::success;
}

int cmd_rc_enumerate(const Options& o, std::ostream& out) {
  Composition lambda = io::parse_int_argument(o.lambda);
  Partition mu = partition_arg(o.mu);
  int n = alphabet_for(o, lambda);
  Mode mode = parse_mode(o.mode);
  Json all = Json::array();
  int count = 0;
  for_each_configuration(lambda, mu, n, mode, [&](const Configuration& c) {
    for_each_rigging(c, [&](const RiggedConfiguration& rc) {
      ++count;
      if (o.json) {
        Json j = io::to_json(rc);
        j["statistic"] = statistic(rc);
        all.push_back(j);
      } else {
        out << render::str(render::rigged(rc)) << "statistic " << statistic(rc) << "\n\n";
      }
    });
  });
  if (o.json)
    out << all.dump() << "\n";
  else
    out << count << " rigged configurations\n";
  return exit_code::success;
}

int cmd_ribbon_enumerate(const Options& o, std::ostream& out) {
  if (o.L < 1)
    throw std::invalid_argument("--L must be positive");
  Partition outer = partition_arg(o.shape);
  Partition inner = o.inner.empty() ? Partition{} : partition_arg(o.inner);
  SkewShape shape(outer, inner);
  Composition weight = io::parse_int_argument(o.weight);
  Json all = Json::array();
  int count = 0;
  std::optional<int> max_spin;
  for_each_ribbon_tableau(shape, weight, o.L, [&](const RibbonTableau& t) {
    if (!max_spin)
      max_spin = maxspin(shape, o.L);
    ++count;
    int co = cospin(t, *max_spin);
    if (o.json) {
      Json j = io::to_json(t);
      j["spin"] = t.spin();
      j["cospin"] = co;
      all.push_back(j);
    } else {
      out << render::str(render::ribbon_tableau(t)) << "spin " << t.spin() << ", cospin "
          << co << "\n\n";
    }
  });
  if (o.json)
    out << all.dump() << "\n";
  else
    out << count << " ribbon tableaux\n";
  return exit_code::success;
}

int cmd_ribbon_quot(const Options& o, std::ostream& out) {
  if (o.L < 1)
    throw std::invalid_argument("--L must be positive");
  Partition shape = partition_arg(o.shape);
  MultiPartition q = o.pad > 0 ? quot(shape, o.L, o.pad) : quot(shape, o.L);
  out << io::to_json(q).dump() << "\n";
  return exit_code::success;
}

int cmd_ribbon_unquot(const Options& o, std::ostream& out) {
  MultiPartition q = io::multipartition_from_json(io::parse_argument(o.quotient));
  int L = o.L > 0 ? o.L : q.components();
  out << io::to_json(quot_inverse(q, L)).dump() << "\n";
  return exit_code::success;
}

int cmd_ribbon_spin(const Options& o, std::ostream& out) {
  RibbonTableau t = io::ribbon_tableau_from_json(io::parse_argument(o.tableau));
  int max_spin = maxspin(t.shape(), t.ribbon_length());
  int co = cospin(t, max_spin);
  if (o.json) {
    Json j{{"spin", t.spin()}, {"maxspin", max_spin}, {"cospin", co},
           {"standardized", io::to_json(standardize_ribbon(t))}};
    try {
      j["quotient"] = io::to_json(stanton_white(t));
    } catch (const CoreError&) {
      j["quotient"] = nullptr;
    }
    out << j.dump() << "\n";
  } else {
    out << render::str(render::ribbon_tableau(t)) << "spin " << t.spin() << ", maxspin "
        << max_spin << ", cospin " << co << "\n";
  }
  return exit_code::success;
}

MultiTableau tableau_arg(const Options& o) {
  return io::multitableau_from_json(io::parse_argument(o.tableau));
}

int cmd_multitab_enumerate(const Options& o, std::ostream& out) {
  MultiPartition shape = io::multipartition_from_json(io::parse_argument(o.shape));
  Composition weight = io::parse_int_argument(o.weight);
  Json all = Json::array();
  int count = 0;
  for_each_multitableau(shape, weight, [&](const MultiTableau& t) {
    ++count;
    if (o.json) {
      Json j = io::to_json(t);
      j["inversions"] = inversions(t);
      all.push_back(j);
    } else {
      out << render::str(render::tableau(t)) << "inversions " << inversions(t) << "\n\n";
    }
  });
  if (o.json)
    out << all.dump() << "\n";
  else
    out << count << " multitableaux\n";
  return exit_code::success;
}

int cmd_multitab_inv(const Options& o, std::ostream& out) {
  MultiTableau t = tableau_arg(o);
  if (o.json)
    out << Json{{"inversions", inversions(t)}}.dump() << "\n";
  else
    out << inversions(t) << "\n";
  return exit_code::success;
}

int cmd_multitab_standardize(const Options& o, std::ostream& out) {
  MultiTableau st = standardize(tableau_arg(o));
  if (o.json)
    out << io::to_json(st).dump() << "\n";
  else
    out << render::str(render::tableau(st));
  return exit_code::success;
}

int cmd_bij_forward(const Options& o, Mode mode, std::ostream& out) {
  MultiTableau t = tableau_arg(o);
  RiggedConfiguration rc = psi(t, mode);
  if (o.json) {
    Json result = io::to_json(rc);
    if (o.trace)
      result = Json{{"result", result}, {"trace", io::to_json(psi_trace(t, mode))}};
    out << result.dump() << "\n";
    return exit_code::success;
  }
  if (o.trace)
    out << render::str(render::trace(psi_trace(t, mode)));
  out << render::str(render::rigged(rc)) << "statistic " << statistic(rc) << "\n";
  return exit_code::success;
}

int cmd_bij_backward(const Options& o, Mode mode, std::ostream& out) {
  RiggedConfiguration rc = io::rigged_from_json(io::parse_argument(o.rc));
  std::vector<int> sizes =
      o.sizes.empty() ? rc.config().mu().parts() : io::parse_int_argument(o.sizes);
  MultiTableau t = mode == Mode::symmetric ? psi_inverse(rc, sizes) : psi_prime_inverse(rc, sizes);
  if (o.json) {
    Json result = io::to_json(t);
    if (o.trace)
      result = Json{{"result", result}, {"trace", io::to_json(psi_inverse_trace(rc, sizes))}};
    out << result.dump() << "\n";
    return exit_code::success;
  }
  if (o.trace)
    out << render::str(render::trace(psi_inverse_trace(rc, sizes)));
  out << render::str(render::tableau(t)) << "inversions " << inversions(t) << "\n";
  return exit_code::success;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SweepSpec spec;
  spec.max_total_size = o.max_size;
  spec.max_alphabet = o.max_n;
  spec.max_components = o.max_components;
  spec.modes.clear();
  for (const auto& m : split(o.modes))
    spec.modes.push_back(parse_mode(m));
  if (!o.checks.empty()) {
    auto names = split(o.checks);
    spec.enabled = {names.begin(), names.end()};
  }
  spec.parallel = !o.serial;
  VerificationReport report = verify_sweep(spec);
  if (o.json)
    out << report_json_lines(report);
  else
    out << report_summary(report);
  return report.ok() ? exit_code::success : exit_code::verification_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-supernomial coefficients, rigged configurations and ribbon tableaux",
               "supernomial"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
  auto content_flags = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Content, e.g. 2,2,1")->required();
    sub->add_option("--mu", o.mu, "Partition of step sizes, e.g. 2,2,1")->required();
    sub->add_option("--n", o.n, "Alphabet size (default: number of content entries)");
    sub->add_option("--mode", o.mode, "sym or anti")->capture_default_str();
  };

  auto* super = app.add_subcommand("supernomial", "Compute a q-supernomial coefficient");
  content_flags(super);
  super->add_option("--via", o.via, "formula, rc, multitab or ribbon")->capture_default_str();
  super->add_flag("--parallel", o.use_parallel, "Use the OpenMP kernels");
  super->add_flag("--reverse", o.reverse, "Print q^{n(mu)} S(1/q) of the result");
  super->add_flag("--pretty", o.pretty, "Print as a polynomial instead of coefficients");
  json_flag(super);

  auto* rc = app.add_subcommand("rc", "Rigged configurations");
  rc->require_subcommand(1);
  auto* rc_enum = rc->add_subcommand("enumerate", "List all rigged configurations");
  content_flags(rc_enum);
  json_flag(rc_enum);

  auto* ribbon = app.add_subcommand("ribbon", "Ribbon tableaux and quotients");
  ribbon->require_subcommand(1);
  auto* r_enum = ribbon->add_subcommand("enumerate", "List ribbon tableaux of a shape");
  r_enum->add_option("--shape", o.shape, "Outer partition")->required();
  r_enum->add_option("--inner", o.inner, "Inner partition");
  r_enum->add_option("--weight", o.weight, "Number of ribbons per letter")->required();
  r_enum->add_option("--L", o.L, "Ribbon length")->required();
  r_enum->add_option("--render", o.render, "ascii")->check(CLI::IsMember({"ascii"}));
  json_flag(r_enum);
  auto* r_quot = ribbon->add_subcommand("quot", "L-quotient of a partition");
  r_quot->add_option("--shape", o.shape, "Partition with empty L-core")->required();
  r_quot->add_option("--L", o.L, "Ribbon length")->required();
  r_quot->add_option("--pad", o.pad, "Use m*L beads (default: smallest m)");
  json_flag(r_quot);
  auto* r_unquot = ribbon->add_subcommand("unquot", "Partition with a given L-quotient");
  r_unquot->add_option("--quot", o.quotient, "JSON list of partitions")->required();
  r_unquot->add_option("--L", o.L, "Ribbon length (default: number of components)");
  json_flag(r_unquot);
  auto* r_spin = ribbon->add_subcommand("spin", "Spin statistics of a ribbon tableau");
  r_spin->add_option("--tableau", o.tableau, "Ribbon tableau JSON or @file")->required();
  r_spin->add_option("--render", o.render, "ascii")->check(CLI::IsMember({"ascii"}));
  json_flag(r_spin);

  auto* multitab = app.add_subcommand("multitab", "L-multitableaux");
  multitab->require_subcommand(1);
  auto* m_enum = multitab->add_subcommand("enumerate", "List multitableaux of a shape");
  m_enum->add_option("--shape", o.shape, "JSON list of partitions")->required();
  m_enum->add_option("--weight", o.weight, "Content")->required();
  json_flag(m_enum);
  auto* m_inv = multitab->add_subcommand("inv", "Inversion statistic");
  m_inv->add_option("--tableau", o.tableau, "Multitableau JSON or @file")->required();
  json_flag(m_inv);
  auto* m_std = multitab->add_subcommand("standardize", "Standardization");
  m_std->add_option("--tableau", o.tableau, "Multitableau JSON or @file")->required();
  json_flag(m_std);

  auto* bij = app.add_subcommand("bij", "Bijections to rigged configurations");
  bij->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> bij_cmds;
  for (const char* name : {"psi", "psi-prime"}) {
    auto* sub = bij->add_subcommand(name, "Map a multitableau to a rigged configuration");
    sub->add_option("--tableau", o.tableau, "Multitableau JSON or @file")->required();
    sub->add_flag("--trace", o.trace, "Show intermediate stages");
    json_flag(sub);
    bij_cmds.emplace_back(name, sub);
  }
  for (const char* name : {"psi-inv", "psi-prime-inv"}) {
    auto* sub = bij->add_subcommand(name, "Map a rigged configuration back to a multitableau");
    sub->add_option("--rc", o.rc, "Rigged configuration JSON or @file")->required();
    sub->add_option("--sizes", o.sizes, "Component sizes in order (default: mu)");
    sub->add_flag("--trace", o.trace, "Show intermediate stages");
    json_flag(sub);
    bij_cmds.emplace_back(name, sub);
  }

  auto* verify = app.add_subcommand("verify", "Cross-check all representations on a range");
  verify->add_option("--max-size", o.max_size, "Largest |mu|")->capture_default_str();
  verify->add_option("--max-n", o.max_n, "Largest alphabet")->capture_default_str();
  verify->add_option("--max-components", o.max_components, "Largest number of parts of mu")
      ->capture_default_str();
  verify->add_option("--modes", o.modes, "Comma-separated modes")->capture_default_str();
  verify->add_option("--checks", o.checks,
                     "Comma-separated subset of formula-rc, rc-multitab, bijection, "
                     "multitab-ribbon, oracle");
  verify->add_flag("--serial", o.serial, "Disable OpenMP");
  json_flag(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  try {
    if (super->parsed())
      return cmd_supernomial(o, out);
    if (rc_enum->parsed())
      return cmd_rc_enumerate(o, out);
    if (r_enum->parsed())
      return cmd_ribbon_enumerate(o, out);
    if (r_quot->parsed())
      return cmd_ribbon_quot(o, out);
    if (r_unquot->parsed())
      return cmd_ribbon_unquot(o, out);
    if (r_spin->parsed())
      return cmd_ribbon_spin(o, out);
    if (m_enum->parsed())
      return cmd_multitab_enumerate(o, out);
    if (m_inv->parsed())
      return cmd_multitab_inv(o, out);
    if (m_std->parsed())
      return cmd_multitab_standardize(o, out);
    for (const auto& [name, sub] : bij_cmds) {
      if (!sub->parsed())
        continue;
      Mode mode = name.find("prime") == std::string::npos ? Mode::symmetric
                                                          : Mode::antisymmetric;
      return name.ends_with("-inv") ? cmd_bij_backward(o, mode, out)
                                    : cmd_bij_forward(o, mode, out);
    }
    if (verify->parsed())
      return cmd_verify(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::verification_failed;
  }
  err << app.help();
  return exit_code::usage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, out, err);
}

} // namespace supernomial
