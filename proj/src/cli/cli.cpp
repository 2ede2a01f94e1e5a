#include "mechsynth/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "mechsynth/netlist.hpp"
#include "mechsynth/oneport.hpp"
#include "mechsynth/resistive3.hpp"

namespace mechsynth::cli {

namespace {

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Inadmissible:
    case ErrorKind::BranchMismatch:
    case ErrorKind::NotParamount:
    case ErrorKind::IrrationalElement:
    case ErrorKind::InvalidCertificate: return Rejected;
    case ErrorKind::OracleMismatch:
    case ErrorKind::CensusExceeded:
    case ErrorKind::TopologyUnavailable:
    case ErrorKind::InternalInvariant: return Internal;
    default: return Usage;
  }
}

struct Printer {
  std::ostream& out;
  bool structured = false;

  void record(const Json& j) const { out << j.dump() << '\n'; }
  void line(const std::string& key, const std::string& value) const { out << key << ": " << value << '\n'; }
};

Rat rat_arg(const std::string& text, const std::string& flag) {
  try {
    return Rat::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::UsageError, flag + " expects an exact rational, got '" + text + "'");
  }
}

std::vector<Rat> rat_list(const std::string& text, const std::string& flag) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_arg(item, flag));
  return out;
}

// "--num a3,a2,a1,a0 --den b4,b3,b2,b1"
CoefficientVector coeff_args(const std::string& num, const std::string& den) {
  std::vector<Rat> a = rat_list(num, "--num"), b = rat_list(den, "--den");
  if (a.size() != 4) throw Error(ErrorKind::UsageError, "--num expects 4 coefficients a3,a2,a1,a0");
  if (b.size() != 4) throw Error(ErrorKind::UsageError, "--den expects 4 coefficients b4,b3,b2,b1");
  if (b[0] != Rat(0) && b[0] != Rat(1)) throw Error(ErrorKind::UsageError, "b4 must be 0 or 1, got " + b[0].str());
  return {a[0], a[1], a[2], a[3], b[1], b[2], b[3], b[0].is_zero() ? 0 : 1};
}

Json theorem5_json(const Theorem5Result& t) {
  Json j{{"kind", t.kind == Theorem5Result::Kind::Cond1   ? "cond1"
                  : t.kind == Theorem5Result::Kind::Cond2 ? "cond2"
                                                          : "reject"}};
  if (!t.witnesses.empty()) j["witnesses"] = t.witnesses;
  if (t.fig2_case) j["case"] = std::string(1, to_char(*t.fig2_case));
  if (!t.reason.empty()) j["reason"] = t.reason;
  return j;
}

Json arbitrary_json(const ArbitraryResult& r) {
  static const char* names[] = {"at-most-three", "arbitrary-only", "not-realizable"};
  Json j{{"kind", names[static_cast<int>(r.kind)]}};
  if (r.condition) j["condition"] = r.condition;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Theorem6Mode mode_arg(const std::string& s) {
  return s == "as-written" ? Theorem6Mode::AsWritten : Theorem6Mode::ScaleSearch;
}

Polynomial<Surd> lift(const Poly& p) {
  std::vector<Surd> c;
  for (const Rat& x : p.coeffs()) c.emplace_back(x);
  return Polynomial<Surd>(std::move(c));
}

// Independent check of a synthesized one-port before anything is printed.
void reverify(const SynthesisResult& r, const RationalFunction& target) {
  bool ok = r.surd_netlist ? driving_point(*r.surd_netlist) == RatFunc<Surd>(lift(target.num()), lift(target.den()))
                           : driving_point(r.netlist) == target;
  if (!ok || !r.verified) throw Error(ErrorKind::OracleMismatch, r.branch + " netlist does not reproduce " + target.str());
}

void print_result(const Printer& p, const std::string& command, const SynthesisResult& r) {
  if (p.structured) {
    Json j{{"command", command}, {"accepted", true}};
    j["result"] = r.to_json();
    p.record(j);
    return;
  }
  p.line("branch", r.branch);
  p.line("certificate", r.certificate.dump());
  p.line("netlist", r.surd_netlist ? netlist_to_json(*r.surd_netlist).dump() : format_netlist(r.netlist));
  p.line("verified", "exact match");
}

// ---------------------------------------------------------------------------

int paramount_check(const Printer& p, const std::string& matrix) {
  PortMatrix3 m = PortMatrix3::parse(matrix);
  bool ok = is_paramount(m);
  if (p.structured) {
    p.record({{"command", "paramount-check"}, {"matrix", m.str()}, {"paramount", ok}});
  } else {
    p.line("matrix", m.str());
    p.line("paramount", ok ? "yes" : "no");
  }
  return ok ? Ok : Rejected;
}

int resistive3_synth(const Printer& p, const std::string& matrix) {
  PortMatrix3 m = PortMatrix3::parse(matrix);
  Theorem1Outcome o = theorem1(m);
  if (!o) {
    if (p.structured) {
      p.record({{"command", "resistive3-synth"},
                {"accepted", false},
                {"ltree_reason", o.ltree_reason},
                {"ptree_reason", o.ptree_reason}});
    } else {
      p.out << "reject\n";
      p.line("  L-tree", o.ltree_reason);
      p.line("  P-tree", o.ptree_reason);
    }
    return Rejected;
  }
  if (resistive_admittance(o.result->netlist) != m) {
    throw Error(ErrorKind::OracleMismatch, o.result->branch + " netlist does not reproduce " + m.str());
  }
  print_result(p, "resistive3-synth", *o.result);
  return Ok;
}

int oneport_classify(const Printer& p, const CoefficientVector& cv, Theorem6Mode mode) {
  Json j{{"command", "oneport-classify"}, {"coefficients", cv.str()}};
  bool accepted = false;
  std::vector<std::string> lines;
  if (cv.b4 == 1) {
    Theorem5Result t = classify_theorem5(cv);
    ArbitraryResult a = classify_arbitrary_springs(cv);
    accepted = t.accepted();
    j["theorem5"] = theorem5_json(t);
    j["arbitrary"] = arbitrary_json(a);
    lines.push_back(t.describe());
    if (!accepted) lines.push_back(a.describe());
  } else {
    Theorem6Result t = classify_theorem6(cv, mode);
    accepted = t.accepted();
    j["mode"] = mode == Theorem6Mode::AsWritten ? "as-written" : "scale-search";
    j["theorem6"] = accepted ? Json{{"condition", *t.condition}, {"lambda", t.lambda.str()}} : Json{{"reason", t.reason}};
    lines.push_back(accepted ? t.describe() : "reject: " + t.reason);
  }
  j["accepted"] = accepted;
  if (p.structured) {
    j["branch"] = lines.front();
    p.record(j);
  } else {
    for (const auto& l : lines) p.out << l << '\n';
  }
  return accepted ? Ok : Rejected;
}

SynthesisResult theorem5_synth(const CoefficientVector& cv, const Theorem5Result& t, const Fig2Catalog& catalog) {
  SynthesisResult r;
  r.branch = t.describe();
  if (t.kind == Theorem5Result::Kind::Cond1) {
    r.certificate = {{"condition", 1}, {"witnesses", t.witnesses}};
    r.netlist = foster_synthesize(cv.function());
  } else {
    Fig2Values v = fig2_values(cv, *t.fig2_case);
    r.certificate = {{"condition", 2},
                     {"case", std::string(1, to_char(*t.fig2_case))},
                     {"values", {{"k1", v.k1.str()}, {"k2", v.k2.str()}, {"k3", v.k3.str()}, {"b", v.b.str()}, {"c", v.c.str()}}}};
    r.netlist = synth_fig2(cv, *t.fig2_case, catalog);
  }
  r.verified = true;
  return r;
}

int oneport_synth(const Printer& p, const CoefficientVector& cv, Theorem6Mode mode, bool allow_surd,
                  const std::string& catalog_path) {
  SynthesisResult r;
  auto reject = [&](const std::string& reason) {
    if (p.structured) {
      p.record({{"command", "oneport-synth"}, {"coefficients", cv.str()}, {"accepted", false}, {"reason", reason}});
    } else {
      p.out << "reject: " << reason << '\n';
    }
    return Rejected;
  };
  if (cv.b4 == 1) {
    Theorem5Result t = classify_theorem5(cv);
    if (!t.accepted()) return reject(t.reason);
    Fig2Catalog catalog = builtin_fig2_catalog();
    if (!catalog_path.empty()) {
      std::ifstream in(catalog_path);
      if (!in) throw Error(ErrorKind::UsageError, "cannot open catalog file " + catalog_path);
      std::stringstream ss;
      ss << in.rdbuf();
      catalog = parse_fig2_catalog(ss.str());
    }
    r = theorem5_synth(cv, t, catalog);
  } else {
    Theorem6Result t = classify_theorem6(cv, mode);
    if (!t.accepted()) return reject(t.reason);
    r = synth_fig3(cv, *t.condition, t.lambda, !allow_surd);
    r.branch = t.describe();
  }
  reverify(r, cv.function());
  print_result(p, "oneport-synth", r);
  return Ok;
}

int verify(const Printer& p, const std::vector<std::string>& paths, const std::string& admittance,
           const std::string& matrix) {
  if (admittance.empty() == matrix.empty()) {
    throw Error(ErrorKind::UsageError, "verify needs exactly one of --admittance and --matrix");
  }
  std::optional<RationalFunction> y;
  std::optional<PortMatrix3> m;
  if (!admittance.empty()) y = parse_rational_function(admittance);
  else m = PortMatrix3::parse(matrix);
  // Read everything first so a bad file fails before any verdict is printed.
  std::vector<MechNetwork> nets;
  for (const auto& path : paths) nets.push_back(read_netlist_file(path));

  bool all = true;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const MechNetwork& net = nets[i];
    std::string got;
    bool match;
    if (y) {
      if (net.ports.size() != 1) throw Error(ErrorKind::PortCountMismatch, paths[i] + " is not a one-port");
      RationalFunction d = driving_point(net);
      match = d == *y;
      got = d.str();
    } else {
      if (net.ports.size() != 3) throw Error(ErrorKind::PortCountMismatch, paths[i] + " is not a three-port");
      RfMatrix<Rat> a = admittance_matrix(net);
      match = true;
      std::string text = "[";
      for (int r = 0; r < 3; ++r) {
        text += r ? ",[" : "[";
        for (int c = 0; c < 3; ++c) {
          match = match && a[r][c] == RationalFunction(m->at(r, c));
          text += (c ? "," : "") + a[r][c].str();
        }
        text += "]";
      }
      got = text + "]";
    }
    all = all && match;
    if (p.structured) {
      p.record({{"command", "verify"}, {"netlist", paths[i]}, {"match", match}, {"admittance", got}});
    } else if (match) {
      p.out << (paths.size() > 1 ? paths[i] + ": " : "") << "exact match\n";
    } else {
      p.out << (paths.size() > 1 ? paths[i] + ": " : "") << "mismatch: netlist gives " << got << '\n';
    }
  }
  return all ? Ok : Rejected;
}

struct RegionArgs {
  std::string g1 = "1", g2 = "1", g3 = "1", g4 = "1/2", lo = "-1", hi = "1", output;
  int grid = 201;
};

int region_map(const Printer& p, const RegionArgs& a) {
  if (a.grid < 2) throw Error(ErrorKind::UsageError, "--grid must be at least 2");
  const Rat lo = rat_arg(a.lo, "--lo"), hi = rat_arg(a.hi, "--hi");
  if (!(lo < hi)) throw Error(ErrorKind::UsageError, "--lo must be below --hi");
  PortMatrix3 g;
  g.y11 = rat_arg(a.g1, "--g1");
  g.y22 = rat_arg(a.g2, "--g2");
  g.y33 = rat_arg(a.g3, "--g3");
  g.y12 = rat_arg(a.g4, "--g4");

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw Error(ErrorKind::UsageError, "cannot write " + a.output);
  }
  std::ostream& out = a.output.empty() ? p.out : file;
  if (!p.structured) out << "g5,g6,class,witness\n";
  const Rat step = (hi - lo) / Rat(a.grid - 1);
  for (int i = 0; i < a.grid; ++i) {
    g.y13 = lo + step * Rat(i);
    for (int j = 0; j < a.grid; ++j) {
      g.y23 = lo + step * Rat(j);
      RegionPoint pt = classify_region(g);
      if (p.structured) {
        out << Json{{"g5", g.y13.str()}, {"g6", g.y23.str()}, {"class", to_string(pt.cls)}, {"witness", pt.witness}}.dump()
            << '\n';
      } else {
        out << g.y13.str() << ',' << g.y23.str() << ',' << to_string(pt.cls) << ',' << pt.witness << '\n';
      }
    }
  }
  return Ok;
}

int regen_fig2_catalog(const Printer& p, const std::string& output, const std::string& check) {
  Fig2Recovery rec = recover_fig2_topologies();
  Fig2Catalog cat = rec.catalog();
  const std::string text = format_fig2_catalog(cat);
  bool unique = cat.size() == 4;
  Json matches = Json::object();
  for (const auto& [c, nets] : rec.matches) {
    matches[std::string(1, to_char(c))] = nets.size();
    unique = unique && nets.size() == 1;
  }
  std::optional<bool> same;
  if (!check.empty()) {
    std::ifstream in(check);
    if (!in) throw Error(ErrorKind::UsageError, "cannot open catalog file " + check);
    std::stringstream ss;
    ss << in.rdbuf();
    same = parse_fig2_catalog(ss.str()) == cat;
  }
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw Error(ErrorKind::UsageError, "cannot write " + output);
    f << text;
  }
  if (p.structured) {
    Json j{{"command", "regen-fig2-catalog"}, {"candidates", rec.candidates}, {"matches", matches}, {"topologies", cat.size()}};
    if (same) j["matches_frozen"] = *same;
    if (output.empty() && check.empty()) j["catalog"] = Json::parse(text);
    p.record(j);
  } else {
    p.line("candidates", std::to_string(rec.candidates));
    for (const auto& [c, n] : matches.items()) p.line("case " + c, n.dump() + " topology");
    p.line("topologies", std::to_string(cat.size()));
    if (same) p.line("frozen catalog", *same ? "identical" : "differs");
    if (output.empty() && check.empty()) p.out << text;
  }
  return unique && same.value_or(true) ? Ok : Rejected;
}

struct OracleArgs {
  int max_elements = 3, max_vertices = 7, valuations = 20;
  std::uint64_t seed = 0;
};

int enumerate_oracle(const Printer& p, const OracleArgs& a) {
  if (a.max_elements < 1 || a.max_vertices < 2 || a.valuations < 1) {
    throw Error(ErrorKind::UsageError, "--max-elements, --max-vertices and --valuations must be positive");
  }
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  long networks = 0, checks = 0, failures = 0;
  std::string first;
  enumerate_small_networks(a.max_elements, a.max_vertices, [&](const MechNetwork& topo) {
    ++networks;
    for (int v = 0; v < a.valuations; ++v) {
      MechNetwork net = topo;
      for (auto& e : net.elements) e.value = Rat(mpz_class(num(rng)), mpz_class(den(rng)));
      ++checks;
      if (!theorem1(resistive_admittance(net))) {
        if (!failures++) first = format_netlist(net);
      }
    }
  });
  if (p.structured) {
    Json j{{"command", "enumerate-oracle"}, {"networks", networks}, {"checks", checks}, {"counterexamples", failures}};
    if (failures) j["first_counterexample"] = Json::parse(first);
    p.record(j);
  } else {
    p.line("networks", std::to_string(networks));
    p.line("valuations checked", std::to_string(checks));
    p.line("counterexamples", std::to_string(failures));
    if (failures) p.line("first counterexample", first);
  }
  return failures ? Rejected : Ok;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MECHSYNTH_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240917ULL;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact synthesis of spring-damper-inerter networks", "mechsynth"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human or structured (one JSON record per line)")
      ->check(CLI::IsMember({"human", "structured"}));

  std::string matrix, num, den, mode = "scale-search", catalog, admittance, output, check;
  std::vector<std::string> netlists;
  bool allow_surd = false;
  RegionArgs region;
  OracleArgs oracle;
  oracle.seed = default_seed();

  auto* pc = app.add_subcommand("paramount-check", "Test whether a 3x3 matrix is paramount");
  pc->add_option("--matrix", matrix, "Row-major matrix, e.g. [[1,1,0],[1,2,-1],[0,-1,1]]")->required();

  auto* rs = app.add_subcommand("resistive3-synth", "Realize a 3x3 admittance with at most three conductances");
  rs->add_option("--matrix", matrix, "Row-major matrix")->required();

  const std::vector<std::string> modes{"as-written", "scale-search"};
  auto* oc = app.add_subcommand("oneport-classify", "Classify a one-port admittance");
  auto* os = app.add_subcommand("oneport-synth", "Synthesize a one-port admittance");
  for (auto* sub : {oc, os}) {
    sub->add_option("--num", num, "a3,a2,a1,a0")->required();
    sub->add_option("--den", den, "b4,b3,b2,b1 with b4 in {0,1}")->required();
    sub->add_option("--mode", mode, "Cubic-form condition check: as-written or scale-search")
        ->check(CLI::IsMember(modes));
  }
  os->add_flag("--allow-surd", allow_surd, "Emit quadratic-surd element values instead of rejecting");
  os->add_option("--catalog", catalog, "Five-element topology catalog file (default: built-in)");

  auto* vf = app.add_subcommand("verify", "Check netlists against an admittance");
  vf->add_option("--netlist", netlists, "Netlist file (repeatable)")->required();
  vf->add_option("--admittance", admittance, "One-port admittance, e.g. (s^2+1)/s");
  vf->add_option("--matrix", matrix, "Constant three-port admittance matrix");

  auto* rm = app.add_subcommand("region-map", "Classify a G5-G6 lattice as CSV (g5,g6,class,witness)");
  rm->add_option("--g1", region.g1, "G1")->capture_default_str();
  rm->add_option("--g2", region.g2, "G2")->capture_default_str();
  rm->add_option("--g3", region.g3, "G3")->capture_default_str();
  rm->add_option("--g4", region.g4, "G4")->capture_default_str();
  rm->add_option("--grid", region.grid, "Points per axis")->capture_default_str();
  rm->add_option("--lo", region.lo, "Lower bound of both axes")->capture_default_str();
  rm->add_option("--hi", region.hi, "Upper bound of both axes")->capture_default_str();
  rm->add_option("--output", region.output, "Write the CSV here instead of stdout");

  auto* rg = app.add_subcommand("regen-fig2-catalog", "Recover the four Condition-2 topologies by enumeration");
  rg->add_option("--output", output, "Write the catalog to this file");
  rg->add_option("--check", check, "Compare with this catalog file (exit 1 on difference)");

  auto* eo = app.add_subcommand("enumerate-oracle", "Check theorem1 on every small resistive network");
  eo->add_option("--max-elements", oracle.max_elements, "Conductances per network")->capture_default_str();
  eo->add_option("--max-vertices", oracle.max_vertices, "Vertices per network")->capture_default_str();
  eo->add_option("--valuations", oracle.valuations, "Random valuations per network")->capture_default_str();
  eo->add_option("--seed", oracle.seed, "RNG seed (default: MECHSYNTH_SEED)");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  Printer p{out, format == "structured"};
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*pc) return paramount_check(p, matrix);
    if (*rs) return resistive3_synth(p, matrix);
    if (*oc) return oneport_classify(p, coeff_args(num, den), mode_arg(mode));
    if (*os) return oneport_synth(p, coeff_args(num, den), mode_arg(mode), allow_surd, catalog);
    if (*vf) return verify(p, netlists, admittance, matrix);
    if (*rm) return region_map(p, region);
    if (*rg) return regen_fig2_catalog(p, output, check);
    return enumerate_oracle(p, oracle);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (p.structured) p.record({{"command", command}, {"error", to_string(e.kind())}, {"message", e.what()}});
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Internal;
  }
}

}  // namespace mechsynth::cli
