#include "planesing/cli/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "planesing/blowup/serialize.hpp"
#include "planesing/exactfield/factor.hpp"
#include "planesing/invariants/report_json.hpp"
#include "planesing/noether/report_json.hpp"
#include "planesing/polyring/parse.hpp"

namespace planesing::cli {

using nlohmann::json;

namespace {

const std::map<std::string, int> kArity = {
    {"resolve", 1}, {"delta", 1},         {"genus", 1},         {"intersect", 2}, {"adjoint", 2},
    {"bezout", 2},  {"noether-check", 3}, {"noether-solve", 3}, {"appendix", 1},
};

const std::map<std::string, std::string> kHelp = {
    {"resolve", "infinitely near points of a curve germ"},
    {"delta", "multiplicity sequence, delta and conductor degree"},
    {"genus", "geometric genus of a projective curve"},
    {"intersect", "local intersection multiplicity, tree sum against resultant oracle"},
    {"adjoint", "adjoint margins r(G) - (r(C) - 1) on the resolution tree of C"},
    {"bezout", "intersection multiplicities at every common point of two projective curves"},
    {"noether-check", "multiplicity condition for H in (F, G) at all common points"},
    {"noether-solve", "solve H = A F + B G"},
    {"appendix", "straightening sequence F^(i), a_i of a germ with lowest form c y^r"},
};

bool is_projective_command(const std::string& c) {
  return c == "genus" || c == "bezout" || c == "noether-check" || c == "noether-solve";
}

}  // namespace

FieldPtr parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.rfind("p:", 0) != 0) throw UsageError("--field: expected q, p:N or p:N:minpoly, got '" + spec + "'");
  const std::string rest = spec.substr(2);
  const size_t colon = rest.find(':');
  const std::string num = rest.substr(0, colon);
  std::uint64_t q = 0;
  try {
    size_t used = 0;
    q = std::stoull(num, &used);
    if (used != num.size()) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw UsageError("--field: '" + num + "' is not a number");
  }
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw UsageError("--field: order must be at least 2");
  int k = 0;
  for (std::uint64_t m = q; m > 1; m /= p) {
    if (m % p != 0) throw UsageError("--field: " + num + " is not a prime power");
    ++k;
  }
  const FieldPtr base = Field::prime(p);
  if (colon == std::string::npos) return k == 1 ? base : find_extension(base, k);
  if (k != 1) throw UsageError("--field: a minimal polynomial needs a prime base, got " + num);
  std::string text = rest.substr(colon + 1);
  for (size_t pos; (pos = text.find("z1")) != std::string::npos;) text.replace(pos, 2, "x");
  try {
    const MultiPoly m = parse_poly(text, base, VarSet::Affine);
    if (m.degree_in(1) > 0) throw UsageError("--field: minimal polynomial must be in z1 only");
    return extend_field(base, m.to_univariate(0));
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

Invocation parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Resolution of plane curve singularities by blowing up"};
  app.require_subcommand(1);
  Invocation inv;
  std::string appendix_poly;
  for (const auto& [name, arity] : kArity) {
    CLI::App* s = app.add_subcommand(name, kHelp.at(name));
    s->add_option("--field", inv.field, "q (default), p:N or p:N:minpoly");
    s->add_option("--max-depth", inv.max_depth, "depth cap for blow-up trees")->check(CLI::PositiveNumber);
    s->add_option("--seed", inv.seed, "seed for factorization randomness");
    s->add_flag("--json", inv.json, "emit JSON");
    if (!is_projective_command(name) && name != "appendix")
      s->add_option("--point", inv.point, "point to study: a,b or a:b:c (default: origin)");
    if (name == "resolve") s->add_flag("--dot", inv.dot, "emit Graphviz DOT");
    if (name == "genus") s->add_flag("--assume-irreducible", inv.assume_irreducible, "skip the irreducibility guard");
    if (name == "appendix") {
      s->add_option("poly", appendix_poly, "germ with lowest form c y^r")->required();
      s->add_option("n", inv.appendix_n, "number of stages")->required()->check(CLI::NonNegativeNumber);
    } else {
      s->add_option("polys", inv.polys, "polynomials")->required()->expected(arity);
    }
  }
  // CLI11 hands an unknown flag back to the parent and then complains about
  // surplus positionals; report the flag itself instead.
  CLI::App* chosen = nullptr;
  for (size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--") break;
    if (!chosen) {
      if (kArity.count(argv[i])) chosen = app.get_subcommand(argv[i]);
      continue;
    }
    if (argv[i].rfind("--", 0) != 0) continue;
    const std::string flag = argv[i].substr(0, argv[i].find('='));
    if (flag != "--help" && chosen->get_option_no_throw(flag) == nullptr)
      throw UsageError(flag + ": not an option of " + chosen->get_name());
  }
  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    inv.command = "help";
    inv.help_text = chosen.empty() ? app.help() : chosen.front()->help();
    return inv;
  } catch (const CLI::ParseError& e) {
    const std::string msg = e.what();
    if (app.get_subcommands().empty()) throw UsageError(msg + "\n" + app.help());
    throw UsageError(msg);
  }
  inv.command = app.get_subcommands().front()->get_name();
  if (inv.command == "appendix") inv.polys = {appendix_poly};
  if (static_cast<int>(inv.polys.size()) != kArity.at(inv.command))
    throw UsageError(inv.command + " expects " + std::to_string(kArity.at(inv.command)) + " polynomial(s)");
  parse_field(inv.field);
  return inv;
}

namespace {

struct Context {
  const Invocation& inv;
  FieldPtr k;
  std::ostream& out;
};

MultiPoly parse_arg(const Context& c, const std::string& text) {
  try {
    return parse_poly(text, c.k, is_projective_command(c.inv.command) ? VarSet::Projective : VarSet::Affine);
  } catch (const Error& e) {
    throw UsageError("polynomial '" + text + "': " + e.what());
  }
}

Scalar parse_scalar(const Context& c, const std::string& text) {
  const MultiPoly p = parse_arg(c, text);
  if (!p.is_constant()) throw UsageError("--point: '" + text + "' is not a constant");
  return p.constant_term();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

MultiPoly projective_arg(const Context& c, const std::string& text) {
  const MultiPoly p = parse_arg(c, text);
  if (p.varset() == VarSet::Chart) throw UsageError("polynomial '" + text + "': use x, y or X, Y, Z");
  return p.varset() == VarSet::Affine ? homogenize(p) : p;
}

// The germ at --point in coordinates centred at the origin.
MultiPoly local_arg(const Context& c, const std::string& text) {
  const MultiPoly p = parse_arg(c, text);
  if (p.varset() == VarSet::Chart) throw UsageError("polynomial '" + text + "': use x, y or X, Y, Z");
  if (!c.inv.point) return as_affine(p);
  std::string pt = *c.inv.point;
  pt.erase(std::remove_if(pt.begin(), pt.end(), [](char ch) { return ch == '[' || ch == ']' || ch == '(' || ch == ')'; }),
           pt.end());
  if (pt.find(':') != std::string::npos) {
    const auto cs = split(pt, ':');
    if (cs.size() != 3) throw UsageError("--point: expected a:b:c");
    const MultiPoly F = p.varset() == VarSet::Affine ? homogenize(p) : p;
    try {
      return localize(F, ProjPoint(parse_scalar(c, cs[0]), parse_scalar(c, cs[1]), parse_scalar(c, cs[2])));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument) throw UsageError(std::string("--point: ") + e.what());
      throw;
    }
  }
  const auto cs = split(pt, ',');
  if (cs.size() != 2) throw UsageError("--point: expected a,b or a:b:c");
  return translate(as_affine(p), parse_scalar(c, cs[0]), parse_scalar(c, cs[1]));
}

void render_tree(std::ostream& os, const InfNearNode& n, int indent) {
  os << std::string(static_cast<size_t>(2 * indent), ' ');
  if (n.depth > 0) os << "t=" << n.shift.to_string() << "  ";
  os << "r=" << n.r << "  " << n.local_eq.to_string();
  if (n.field->level() > 0) os << "  over " << n.field->to_string();
  os << "\n";
  for (const auto& ch : n.children) render_tree(os, ch, indent + 1);
}

void render_joint(std::ostream& os, const JointNode& n, int indent) {
  os << std::string(static_cast<size_t>(2 * indent), ' ');
  if (n.depth > 0) os << "t=" << n.shift.to_string() << "  ";
  os << "r=(";
  for (size_t i = 0; i < n.r.size(); ++i) os << (i ? "," : "") << n.r[i];
  os << ")\n";
  for (const auto& ch : n.children) render_joint(os, ch, indent + 1);
}

std::string sequence_text(const SingularityReport& r) {
  std::string s = "[";
  for (size_t i = 0; i < r.multiplicity_sequence.size(); ++i)
    s += (i ? "," : "") + std::to_string(r.multiplicity_sequence[i].r);
  return s + "]";
}

int cmd_resolve(const Context& c) {
  const InfNearTree t = resolve_tree(local_arg(c, c.inv.polys[0]), c.inv.max_depth, {}, c.inv.seed);
  if (c.inv.dot) {
    c.out << tree_to_dot(t);
  } else if (c.inv.json) {
    c.out << tree_to_json(t).dump(2) << "\n";
  } else {
    render_tree(c.out, t.root, 0);
    c.out << termination_name(t.termination) << ", " << t.node_count << " node(s)\n";
  }
  return t.termination == Termination::Resolved ? kOk : kDepthCap;
}

int cmd_delta(const Context& c) {
  const SingularityReport r =
      delta_invariant(resolve_tree(local_arg(c, c.inv.polys[0]), c.inv.max_depth, {}, c.inv.seed));
  if (c.inv.json) {
    c.out << to_json(r).dump(2) << "\n";
  } else {
    c.out << "delta = " << r.delta << ", sequence = " << sequence_text(r) << "\n";
    c.out << "conductor degree = " << r.conductor_degree << "\n";
  }
  return kOk;
}

int cmd_genus(const Context& c) {
  const MultiPoly F = projective_arg(c, c.inv.polys[0]);
  const GenusReport r =
      genus(F, find_singular_points(F, c.inv.seed), c.inv.assume_irreducible, c.inv.max_depth, c.inv.seed);
  if (c.inv.json) {
    c.out << to_json(r).dump(2) << "\n";
    return kOk;
  }
  c.out << "genus = " << r.genus << "\n";
  c.out << "degree " << r.degree << ", arithmetic genus " << r.arithmetic_genus << ", delta " << r.delta
        << (r.irreducibility_certified ? "" : " (irreducibility assumed)") << "\n";
  for (const auto& p : r.points)
    c.out << "  " << p.point << "  delta = " << p.delta << ", sequence = " << sequence_text(p) << "\n";
  return kOk;
}

int cmd_intersect(const Context& c) {
  const MultiPoly f = local_arg(c, c.inv.polys[0]), g = local_arg(c, c.inv.polys[1]);
  const IntersectionReport r = intersection_multiplicity(f, g, c.inv.max_depth, c.inv.seed);
  if (c.inv.json) {
    json j = to_json(r);
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) {
      j["joint_tree"] = nullptr;
    } else {
      j["joint_tree"] = joint_tree_to_json(joint_tree({f, g}, c.inv.max_depth, 2, c.inv.seed), {"C", "D"});
    }
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "I = " << r.noether_sum << "  (oracle " << r.oracle_value << (r.agreement ? ", agree" : ", DISAGREE")
          << ")\n";
    for (const auto& k : r.contributions)
      c.out << "  depth " << k.depth << ": " << k.r_c << " * " << k.r_d << "\n";
  }
  return r.agreement ? kOk : kInternal;
}

int cmd_adjoint(const Context& c) {
  const AdjointReport r =
      adjoint_check(local_arg(c, c.inv.polys[0]), local_arg(c, c.inv.polys[1]), c.inv.max_depth, c.inv.seed);
  if (c.inv.json) {
    c.out << to_json(r).dump(2) << "\n";
  } else {
    c.out << (r.adjoint ? "adjoint" : "not adjoint") << "\n";
    for (const auto& m : r.margins)
      c.out << "  node " << m.node_id << " depth " << m.depth << ": r(C)=" << m.r_curve << " r(G)=" << m.r_adjoint
            << " margin " << m.margin << "\n";
  }
  return kOk;
}

int cmd_bezout(const Context& c) {
  const BezoutReport r =
      bezout_check(projective_arg(c, c.inv.polys[0]), projective_arg(c, c.inv.polys[1]), c.inv.max_depth, c.inv.seed);
  bool local_ok = true;
  for (const auto& [p, ir] : r.per_point) local_ok = local_ok && ir.agreement;
  if (c.inv.json) {
    c.out << to_json(r).dump(2) << "\n";
  } else {
    for (const auto& [p, ir] : r.per_point)
      c.out << "  " << p.to_string() << "  I = " << ir.noether_sum << "  (oracle " << ir.oracle_value << ")\n";
    c.out << "total = " << r.total << ", deg F * deg G = " << r.expected << "\n";
  }
  return r.agreement && local_ok ? kOk : kInternal;
}

void render_condition(std::ostream& os, const ConditionReport& r) {
  for (const auto& p : r.points) {
    os << "  " << p.point.to_string() << " (chart " << chart_name(p.chart) << "): " << (p.passed ? "ok" : "FAILS");
    if (p.failing_depth) os << " at depth " << *p.failing_depth;
    os << "\n";
    for (const auto& n : p.nodes)
      os << "    depth " << n.depth << ": r(F)=" << n.r_f << " r(G)=" << n.r_g << " r(H)=" << n.r_h << " margin "
         << n.margin << "\n";
  }
}

int cmd_noether_check(const Context& c) {
  const ConditionReport r = check_condition(projective_arg(c, c.inv.polys[0]), projective_arg(c, c.inv.polys[1]),
                                            projective_arg(c, c.inv.polys[2]), c.inv.max_depth, c.inv.seed);
  if (c.inv.json) {
    c.out << to_json(r).dump(2) << "\n";
  } else {
    c.out << (r.passed ? "condition holds" : "condition fails") << "\n";
    render_condition(c.out, r);
  }
  return r.passed ? kOk : kNoSolution;
}

int cmd_noether_solve(const Context& c) {
  const MultiPoly F = projective_arg(c, c.inv.polys[0]), G = projective_arg(c, c.inv.polys[1]),
                  H = projective_arg(c, c.inv.polys[2]);
  // The status is the solver's verdict; the hypothesis check is reported
  // alongside it.
  NoetherCertificate cert = solve_af_bg(F, G, H);
  const ConditionReport cond = check_condition(F, G, H, c.inv.max_depth, c.inv.seed);
  for (const auto& p : cond.points) {
    if (p.passed) continue;
    cert.failed_point = p.point;
    cert.failed_depth = p.failing_depth;
    break;
  }
  const bool ok = cert.status == CertStatus::Solved && cert.residual.is_zero();
  if (c.inv.json) {
    json j = to_json(cert);
    j["points"] = to_json(cond)["points"];
    c.out << j.dump(2) << "\n";
    return ok ? kOk : kNoSolution;
  }
  c.out << "status = " << cert_status_name(cert.status) << "\n";
  if (cert.status == CertStatus::Solved) {
    c.out << "A = " << (cert.a ? cert.a->to_string() : "0") << "\n";
    c.out << "B = " << (cert.b ? cert.b->to_string() : "0") << "\n";
  } else {
    c.out << "residual = " << cert.residual.to_string() << "\n";
  }
  if (cert.failed_point) {
    c.out << "hypothesis fails at " << cert.failed_point->to_string();
    if (cert.failed_depth) c.out << ", depth " << *cert.failed_depth;
    c.out << "\n";
  }
  render_condition(c.out, cond);
  return ok ? kOk : kNoSolution;
}

int cmd_appendix(const Context& c) {
  const AppendixResult r = appendix_sequence(local_arg(c, c.inv.polys[0]), c.inv.appendix_n);
  if (c.inv.json) {
    c.out << appendix_to_json(r).dump(2) << "\n";
    return kOk;
  }
  c.out << "status = " << appendix_status_name(r.status) << ", r = " << r.r << "\n";
  for (const auto& s : r.stages) {
    c.out << "  F^(" << s.index << ") = " << xy_string(s.poly);
    if (s.a.valid()) c.out << "    a_" << s.index << " = " << s.a.to_string();
    c.out << "\n";
  }
  if (r.status == AppendixStatus::HypothesisFailed) c.out << "hypothesis fails at stage " << r.failed_stage << "\n";
  c.out << "phi = " << r.phi.to_string("X") << "\n";
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRationalPoint: return kNonRational;
    case ErrorCode::DepthCapExceeded:
    case ErrorCode::UnresolvedTree: return kDepthCap;
    case ErrorCode::DivisionByZero:
    case ErrorCode::FiberNotIsolated: return kInternal;
    default: return kUsage;
  }
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    const Context c{inv, parse_field(inv.field), out};
    if (inv.command == "help") {
      out << inv.help_text;
      return kOk;
    }
    if (inv.command == "resolve") return cmd_resolve(c);
    if (inv.command == "delta") return cmd_delta(c);
    if (inv.command == "genus") return cmd_genus(c);
    if (inv.command == "intersect") return cmd_intersect(c);
    if (inv.command == "adjoint") return cmd_adjoint(c);
    if (inv.command == "bezout") return cmd_bezout(c);
    if (inv.command == "noether-check") return cmd_noether_check(c);
    if (inv.command == "noether-solve") return cmd_noether_solve(c);
    if (inv.command == "appendix") return cmd_appendix(c);
    throw UsageError("unknown command '" + inv.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::DepthCapExceeded || e.code() == ErrorCode::UnresolvedTree)
      err << "hint: raise --max-depth\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_args(std::vector<std::string>(argv, argv + argc));
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return run(inv, out, err);
}

}  // namespace planesing::cli
