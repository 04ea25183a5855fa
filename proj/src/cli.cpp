// Subcommand dispatch for the cknots tool. JSON output is the stable
// contract (compact dump, keys sorted); table output is human-oriented.

#include "ck/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "ck/census.hpp"
#include "ck/errors.hpp"
#include "ck/floer.hpp"
#include "ck/groups.hpp"
#include "ck/knots.hpp"
#include "ck/surgery.hpp"

namespace ck {
namespace {

using json = nlohmann::json;

json poly_json(const LaurentPoly& f) {
  json a = json::array();
  for (auto [e, c] : f.c) a.push_back(json::array({e, c}));
  return a;
}

json poly2_json(const LaurentPoly2& f) {
  json a = json::array();
  for (auto [e, c] : f.c) a.push_back(json::array({e.first, e.second, c}));
  return a;
}

json knot_json(const Constrained& k) {
  return {{"p", k.p}, {"q", k.q}, {"l", k.l},
          {"u", k.u}, {"v", k.v}, {"mirrored", k.mirrored}};
}

json frac_json(const Fraction& x) { return {{"num", x.num}, {"den", x.den}}; }

const char* special_name(SpecialKind k) {
  switch (k) {
    case SpecialKind::Unknot: return "Unknot";
    case SpecialKind::Core: return "Core";
    case SpecialKind::Composite: return "Composite";
    case SpecialKind::TwoBridgeInS3: return "TwoBridgeInS3";
    default: return "Generic";
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    default: return "Indeterminate";
  }
}

const char* braid_class_name(BraidClass c) {
  switch (c) {
    case BraidClass::Torus: return "Torus";
    case BraidClass::Cable: return "Cable";
    default: return "Strict";
  }
}

const char* filling_name(FillingVerdict v) {
  switch (v) {
    case FillingVerdict::SimpleFilling: return "SimpleFilling";
    case FillingVerdict::ConstrainedFilling: return "ConstrainedFilling";
    case FillingVerdict::GeneralConstrainedFilling:
      return "GeneralConstrainedFilling";
    default: return "Other";
  }
}

void emit(const json& j, bool table, std::ostream& out) {
  if (!table) out << j.dump() << "\n";
}

std::string knot_str(const Constrained& k) {
  std::string s = "C(" + std::to_string(k.p) + "," + std::to_string(k.q) + "," +
                  std::to_string(k.l) + "," + std::to_string(k.u) + "," +
                  std::to_string(k.v) + ")";
  if (k.mirrored) s += " mirrored";
  return s;
}

int cmd_invariants(const Constrained& k, bool table, std::ostream& out) {
  EulerData e = hfk_euler(k);
  json j;
  j["knot"] = knot_json(k);
  j["h1"] = {{"p", e.h1.p},     {"k", e.h1.k},     {"k_prime", e.h1.k_prime},
             {"d", e.h1.d},     {"t_a", e.h1.t_a}, {"t_m", e.h1.t_m},
             {"r_a", e.h1.r_a}, {"r_m", e.h1.r_m}};
  json classes = json::array();
  for (const ClassEuler& ce : e.classes)
    classes.push_back({{"j", ce.j},
                       {"family_one", ce.family_one},
                       {"middle", json::array({ce.middle.two_t, ce.middle.two_r})},
                       {"local", poly_json(ce.local)}});
  j["classes"] = classes;
  json chi = json::array();
  for (const auto& [g, c] : e.chi) chi.push_back(json::array({g.two_t, g.two_r, c}));
  j["chi"] = chi;
  j["total_rank"] = total_rank(k);
  j["special"] = special_name(classify_special(k).kind);
  j["lspace"] = is_lspace_knot(k);
  j["spinc_blocks"] = spinc_blocks(k);
  try {
    WidthGenus wg = width_genus_fibred(k);
    j["width_genus"] = {{"width", wg.width},
                        {"thurston_norm", wg.thurston_norm},
                        {"boundary_components", wg.boundary_components},
                        {"genus", wg.genus},
                        {"top_rank", wg.top_rank},
                        {"fibred", wg.fibred}};
  } catch (const DegenerateNorm& d) {
    j["width_genus"] = {{"width", d.width},
                        {"thurston_norm", d.thurston_norm},
                        {"boundary_components", d.boundary_components},
                        {"genus", nullptr},
                        {"top_rank", d.top_rank},
                        {"fibred", d.fibred}};
  }
  emit(j, table, out);
  if (table) {
    out << knot_str(k) << "  rank " << total_rank(k) << "\n";
    out << "H1 = Z + Z/" << e.h1.d << "  (k=" << e.h1.k
        << ", k'=" << e.h1.k_prime << ")\n";
    for (const ClassEuler& ce : e.classes)
      out << "class " << ce.j << (ce.family_one ? "  pattern " : "  derived ")
          << "middle (" << ce.middle.two_t << "," << ce.middle.two_r
          << ")/2  local " << to_string(ce.local) << "\n";
    const json& wg = j["width_genus"];
    out << "width " << wg["width"] << "  genus "
        << (wg["genus"].is_null() ? std::string("-") : wg["genus"].dump())
        << "  fibred " << (wg["fibred"].get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_convert(const Constrained& k, const std::string& to, Z lift, bool table,
                std::ostream& out) {
  json j;
  j["knot"] = knot_json(k);
  if (to == "11") {
    OneOne w = to_one_one(k);
    OneOneRelations rel = w_relations(w);
    auto wj = [](const OneOne& x) {
      return json{{"p", x.p}, {"q", x.q}, {"r", x.r}, {"s", x.s},
                  {"chirality", x.chirality}};
    };
    j["eligible"] = true;
    j["one_one"] = wj(w);
    j["relations"] = {{"mirror", wj(rel.mirror)}, {"alt", wj(rel.alt)}};
    emit(j, table, out);
    if (table)
      out << knot_str(k) << " = W(" << w.p << "," << w.q << "," << w.r << ","
          << w.s << ")" << (w.chirality > 0 ? "+" : "-") << "\n";
    return 0;
  }
  if (to == "simple") {
    try {
      SimpleKnot s = simple_knot_of(k);
      j["eligible"] = true;
      j["simple"] = {{"p", s.p}, {"q", s.q}, {"k", s.k}};
      j["special"] = special_name(classify_special(k).kind);
      emit(j, table, out);
      if (table)
        out << knot_str(k) << " = S(" << s.p << "," << s.q << "," << s.k
            << ")  " << j["special"].get<std::string>() << "\n";
    } catch (const InvalidParameters& e) {
      j["eligible"] = false;
      j["reason"] = e.what();
      emit(j, table, out);
      if (table) out << knot_str(k) << "  not a simple knot form\n";
    }
    return 0;
  }
  // braid
  try {
    BraidSlope bs = constrained_to_braid(k, lift);
    j["eligible"] = true;
    j["braid"] = {{"w", bs.w},       {"slope", frac_json(bs.slope)},
                  {"left_limit", bs.left_limit}, {"lift", bs.lift},
                  {"n0", bs.n0},     {"epsilon", bs.epsilon}};
    emit(j, table, out);
    if (table)
      out << knot_str(k) << " = B(" << bs.w << ", " << to_string(bs.slope)
          << (bs.left_limit ? "^-" : "") << ")\n";
  } catch (const NotOneBridgeEligible& e) {
    j["eligible"] = false;
    j["reason"] = e.what();
    emit(j, table, out);
    if (table) out << knot_str(k) << "  not 1-bridge eligible\n";
  }
  return 0;
}

int cmd_equivalent(const Constrained& a, const Constrained& b, bool table,
                   std::ostream& out) {
  json j;
  j["first"] = knot_json(a);
  j["second"] = knot_json(b);
  try {
    EquivalenceResult r = decide_equivalence(a, b);
    j["verdict"] = verdict_name(r.verdict);
    j["reason"] = r.reason;
    if (r.verdict == Verdict::Equivalent) {
      try {
        j["isomorphism_verified"] = verify_isomorphism(a.p, a.q, a.l, a.u, a.v) &&
                                    verify_isomorphism(b.p, b.q, b.l, b.u, b.v);
      } catch (const InvalidRange&) {
        // outside the rewrite-map window; the verdict already has its proof
      }
    }
  } catch (const AmbientMismatch& e) {
    j["verdict"] = "AmbientMismatch";
    j["reason"] = e.what();
  }
  emit(j, table, out);
  if (table)
    out << knot_str(a) << " vs " << knot_str(b) << ": "
        << j["verdict"].get<std::string>() << "  (" << j["reason"].get<std::string>()
        << ")\n";
  return 0;
}

int cmd_surgery_magic(Z u, Z v, Z p1, Z q1, Z p2, Z q2, bool table,
                      std::ostream& out) {
  MagicSurgery m = magic_surgery(u, v, p1, q1, p2, q2);
  json j;
  j["pattern"] = {{"u", m.u}, {"v", m.v}};
  j["slope1"] = {{"p", m.slope1.p}, {"q", m.slope1.q}};
  j["slope2"] = {{"p", m.slope2.p}, {"q", m.slope2.q}};
  try {
    LensSpace L = lens_from_magic(m);
    j["lens"] = {{"p", L.p}, {"q", L.q}};
  } catch (const NotLensSpace&) {
    j["lens"] = nullptr;
  }
  MagicResult r = magic_classify(m);
  j["row"] = r.row;
  switch (r.kind) {
    case MagicResult::Kind::Resolved:
      j["kind"] = "Resolved";
      j["knot"] = knot_json(*r.knot);
      break;
    case MagicResult::Kind::Candidates:
      j["kind"] = "Candidates";
      j["p"] = r.p;
      j["q_candidates"] = r.q_candidates;
      j["l_candidates"] = r.l_candidates;
      break;
    default:
      j["kind"] = "Unknown";
  }
  emit(j, table, out);
  if (table) {
    out << "lens " << (j["lens"].is_null() ? std::string("-") : j["lens"].dump())
        << "  " << j["kind"].get<std::string>();
    if (r.kind == MagicResult::Kind::Resolved)
      out << " row " << r.row << "  " << knot_str(*r.knot);
    out << "\n";
  }
  return 0;
}

int cmd_surgery_braid(Z w, Z n, Z d, const std::vector<Z>& fill, bool table,
                      std::ostream& out) {
  BridgeBraid b = braid_normalize(w, frac(n, d));
  json j;
  j["w"] = b.w;
  j["slope"] = frac_json(b.slope);
  j["b"] = b.b;
  j["t"] = b.t;
  j["alexander"] = poly2_json(braid_alexander(b));
  try {
    SimpleInterval s = simple_interval(b);
    j["interval"] = {{"f_minus", frac_json(s.f_minus)},
                     {"f_plus", frac_json(s.f_plus)},
                     {"class", braid_class_name(s.cls)},
                     {"cable_d", s.cable_d},
                     {"cable_side", s.cable_side}};
  } catch (const InvalidParameters&) {
    j["interval"] = nullptr;  // slope is a Farey vertex of F_{w-1}
  }
  if (!fill.empty()) {
    Z p = fill[0], q = fill[1];
    if (p < 1 || q < 1 || q >= p || gcdz(p, q) != 1)
      throw InvalidParameters("filling slope must be 0 < q < p coprime");
    try {
      std::optional<SimpleKnot> s = braid_fill(b, p, q);
      if (s)
        j["fill"] = {{"p", s->p}, {"q", s->q}, {"k", s->k}};
      else
        j["fill"] = nullptr;
    } catch (const InvalidParameters&) {
      j["fill"] = nullptr;
    }
  }
  emit(j, table, out);
  if (table) {
    out << "B(" << b.w << ", " << to_string(b.slope) << ")  b=" << b.b
        << " t=" << b.t << "  interval ";
    if (j["interval"].is_null())
      out << "-";
    else
      out << "[" << to_string(frac(j["interval"]["f_minus"]["num"].get<Z>(),
                                   j["interval"]["f_minus"]["den"].get<Z>()))
          << ", "
          << to_string(frac(j["interval"]["f_plus"]["num"].get<Z>(),
                            j["interval"]["f_plus"]["den"].get<Z>()))
          << "] " << j["interval"]["class"].get<std::string>();
    out << "\n";
  }
  return 0;
}

int cmd_census(bool table, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::string line;
  Z lineno = 0;
  bool bad = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    FillingRecord r;
    try {
      json j = json::parse(line);
      r.name = j.value("name", std::string());
      r.p = j.at("p").get<Z>();
      r.q = j.at("q").get<Z>();
      r.torsion_d = j.at("d").get<Z>();
      for (const json& term : j.at("alexander"))
        r.alexander.add_term(term.at(1).get<Z>(), term.at(0).get<Z>());
      r.meridian_exponent = j.value("meridian_exponent", r.p);
    } catch (const std::exception& e) {
      err << "line " << lineno << ": " << e.what() << "\n";
      bad = true;
      continue;
    }
    FillingClassification c = classify_filling(r);
    if (table) {
      out << r.name << "  " << filling_name(c.verdict) << "  forms "
          << c.n_forms;
      if (c.verdict == FillingVerdict::ConstrainedFilling ||
          c.verdict == FillingVerdict::GeneralConstrainedFilling) {
        out << "  l in {";
        for (size_t i = 0; i < c.virtual_l.size(); ++i)
          out << (i ? "," : "") << c.virtual_l[i];
        out << "} u " << c.virtual_u << " v " << c.virtual_v;
      }
      out << "\n";
      continue;
    }
    json o;
    o["name"] = r.name;
    o["n_forms"] = c.n_forms;
    o["verdict"] = filling_name(c.verdict);
    o["virtual_l"] = c.virtual_l;
    o["virtual_u"] = c.virtual_u;
    o["virtual_v"] = c.virtual_v;
    json res = json::array();
    for (const LaurentPoly& f : c.residues) res.push_back(poly_json(f));
    o["residues"] = res;
    out << o.dump() << "\n";
  }
  return bad ? 2 : 0;
}

int cmd_verify_iso(const std::vector<Z>& params, const std::vector<Z>& sweep,
                   bool table, std::ostream& out) {
  auto line = [&](Z p, Z q, Z l, Z u, Z v, bool ok) {
    if (table) {
      out << "C(" << p << "," << q << "," << l << "," << u << "," << v << ") "
          << (ok ? "verified" : "FAILED") << "\n";
    } else {
      json j{{"p", p}, {"q", q}, {"l", l}, {"u", u}, {"v", v}, {"verified", ok}};
      out << j.dump() << "\n";
    }
  };
  if (!sweep.empty()) {
    Z pmax = sweep[0], umax = sweep[1];
    for (Z p = 2; p <= pmax; ++p)
      for (Z q = 1; q < p; ++q) {
        if (gcdz(p, q) != 1) continue;
        std::vector<Z> ls = p == 2 ? std::vector<Z>{2} : std::vector<Z>{2, p};
        for (Z l : ls) {
          for (Z u = 3; u <= umax; u += 2)
            for (Z v = 1; 2 * v < u; ++v) {
              if (gcdz(u, v) != 1) continue;
              line(p, q, l, u, v, verify_isomorphism(p, q, l, u, v));
            }
        }
      }
    return 0;
  }
  line(params[0], params[1], params[2], params[3], params[4],
       verify_isomorphism(params[0], params[1], params[2], params[3], params[4]));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"constrained knots in lens spaces"};
  app.require_subcommand(1);
  std::string format = "json";

  std::vector<Z> kt(5), kt2(5);
  auto add_knot = [&](CLI::App* sub, std::vector<Z>& t, const char* tag) {
    sub->add_option(std::string("p") + tag, t[0])->required();
    sub->add_option(std::string("q") + tag, t[1])->required();
    sub->add_option(std::string("l") + tag, t[2])->required();
    sub->add_option(std::string("u") + tag, t[3])->required();
    sub->add_option(std::string("v") + tag, t[4])->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* inv = app.add_subcommand("invariants", "Euler characteristic data");
  add_knot(inv, kt, "");
  add_format(inv);

  std::string to = "11";
  Z lift = 0;
  CLI::App* conv = app.add_subcommand("convert", "diagram conversions");
  add_knot(conv, kt, "");
  conv->add_option("--to", to, "11, simple or braid")
      ->check(CLI::IsMember({"11", "simple", "braid"}));
  conv->add_option("--lift", lift, "extra winding for braid slopes");
  add_format(conv);

  CLI::App* eq = app.add_subcommand("equivalent", "equivalence decision");
  add_knot(eq, kt, "1");
  add_knot(eq, kt2, "2");
  add_format(eq);

  std::vector<Z> mg(6);
  CLI::App* sm = app.add_subcommand("surgery-magic",
                                    "classify surgery on the magic link");
  sm->add_option("u", mg[0])->required();
  sm->add_option("v", mg[1])->required();
  sm->add_option("p1", mg[2])->required();
  sm->add_option("q1", mg[3])->required();
  sm->add_option("p2", mg[4])->required();
  sm->add_option("q2", mg[5])->required();
  add_format(sm);

  std::vector<Z> br(3), fill;
  CLI::App* sb = app.add_subcommand("surgery-braid", "1-bridge braid data");
  sb->add_option("w", br[0])->required();
  sb->add_option("n", br[1])->required();
  sb->add_option("d", br[2])->required();
  sb->add_option("--fill", fill, "lens parameters p q")->expected(2);
  add_format(sb);

  CLI::App* cen = app.add_subcommand("census", "classify records from stdin");
  add_format(cen);

  std::vector<Z> vi, sweep;
  CLI::App* ver = app.add_subcommand("verify-iso", "knot group isomorphisms");
  ver->add_option("params", vi, "p q l u v")->expected(5);
  ver->add_option("--sweep", sweep, "pmax umax")->expected(2);
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  bool table = format == "table";
  try {
    if (inv->parsed())
      return cmd_invariants(validate_constrained(kt[0], kt[1], kt[2], kt[3], kt[4]),
                            table, out);
    if (conv->parsed())
      return cmd_convert(validate_constrained(kt[0], kt[1], kt[2], kt[3], kt[4]),
                         to, lift, table, out);
    if (eq->parsed())
      return cmd_equivalent(
          validate_constrained(kt[0], kt[1], kt[2], kt[3], kt[4]),
          validate_constrained(kt2[0], kt2[1], kt2[2], kt2[3], kt2[4]), table,
          out);
    if (sm->parsed())
      return cmd_surgery_magic(mg[0], mg[1], mg[2], mg[3], mg[4], mg[5], table,
                               out);
    if (sb->parsed()) return cmd_surgery_braid(br[0], br[1], br[2], fill, table, out);
    if (cen->parsed()) return cmd_census(table, in, out, err);
    if (ver->parsed()) {
      if (vi.empty() == sweep.empty()) {
        err << "verify-iso needs either p q l u v or --sweep pmax umax\n";
        return 1;
      }
      return cmd_verify_iso(vi, sweep, table, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run(int argc, const char* const* argv) {
  return run(argc, argv, std::cin, std::cout, std::cerr);
}

}  // namespace ck
