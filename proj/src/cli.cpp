#include "vlink/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "vlink/canonical.hpp"
#include "vlink/covering.hpp"
#include "vlink/cuts.hpp"
#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/io.hpp"
#include "vlink/moves.hpp"
#include "vlink/numbering.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace vlink::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kErr = 2;

Parsed load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_diagram(text.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

void print_witness(std::ostream& out, const WitnessCycle& w) {
  for (const WitnessStep& s : w.steps) {
    const ArcId& a = s.direction > 0 ? s.edge.from : s.edge.to;
    const ArcId& b = s.direction > 0 ? s.edge.to : s.edge.from;
    out << "  " << to_string(a) << " -[" << (s.direction * s.edge.offset >= 0 ? "+" : "")
        << s.direction * s.edge.offset << "]-> " << to_string(b) << "\n";
  }
  out << "  residual: " << w.residual << "\n";
}

int cmd_validate(const std::string& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read '" + file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  Parsed parsed;
  try {
    parsed = parse_diagram(text.str());
  } catch (const ParseError& e) {
    out << "invalid: " << e.what() << "\n";
    return kNo;
  }
  // parse_diagram validates pairing and signs; report the clean bill.
  out << "ok: " << parsed.diagram.components.size() << " components, "
      << crossing_count(parsed.diagram) << " crossings, "
      << parsed.cuts.marks.size() << " cut marks\n";
  return kOk;
}

int cmd_number(const Parsed& in, long long mod, std::ostream& out) {
  ConstraintGraph g = build_constraints(in.diagram, in.cuts);
  SolveResult r = solve(g, mod);
  if (const auto* w = std::get_if<WitnessCycle>(&r)) {
    out << "no numbering mod " << mod << "; defect cycle:\n";
    print_witness(out, *w);
    out << "defect gcd: " << defect_gcd(g) << "\n";
    return kNo;
  }
  const Numbering& f = std::get<Numbering>(r);
  out << "numbering mod " << mod << "\n";
  for (const auto& [arc, value] : f.values)
    out << "  " << to_string(arc) << " = " << value << "\n";
  return kOk;
}

int cmd_cutsys(const Parsed& in, bool canonical, std::ostream& out) {
  if (canonical) {
    out << serialize(in.diagram, canonical_cut_system(in.diagram));
    return kOk;
  }
  ConstraintGraph g = build_constraints(in.diagram, in.cuts);
  SolveResult r = solve(g, 0);
  if (const auto* w = std::get_if<WitnessCycle>(&r)) {
    out << "invalid; defect cycle:\n";
    print_witness(out, *w);
    return kNo;
  }
  Balance b = balance(in.cuts);
  out << "valid (coherent " << b.coherent << ", incoherent " << b.incoherent << ")\n";
  return kOk;
}

int cmd_cover(const Parsed& in, int m, bool use_canonical, const std::string& out_path,
              bool trace, std::ostream& out) {
  CutSystem p = use_canonical ? canonical_cut_system(in.diagram) : in.cuts;
  SheetedDiagram s = cover(in.diagram, p, m);
  std::string text = serialize(s.diagram);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  if (trace) {
    nlohmann::json j;
    for (const auto& [id, origin] : s.crossing_origin)
      j[std::to_string(id)] = {origin.base_crossing, origin.sheet};
    write_file(out_path + ".trace.json", j.dump(2) + "\n");
  }
  return kOk;
}

int cmd_invariants(const Parsed& in, bool json, std::ostream& out) {
  if (json) {
    out << invariants_json(in.diagram).dump(2) << "\n";
    return kOk;
  }
  const Diagram& d = in.diagram;
  out << "components: " << d.components.size() << "\n";
  out << "writhe: " << writhe(d) << "\n";
  out << "linking:\n";
  for (const auto& row : linking_matrix(d)) {
    out << " ";
    for (long long v : row) out << " " << v;
    out << "\n";
  }
  out << "odd writhe:";
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    out << " " << odd_writhe(d, c);
  out << "\nfingerprint: " << fingerprint(d).to_string() << "\n";
  return kOk;
}

int cmd_obstruct(const Parsed& in, int m, bool use_canonical, bool json,
                 std::ostream& out) {
  CutSystem p = use_canonical ? canonical_cut_system(in.diagram) : in.cuts;
  Verdict v = obstruct(in.diagram, p, m);
  if (json) {
    nlohmann::json j{{"verdict", v.obstructed ? "obstructed" : "inconclusive"},
                     {"cover_fingerprint", v.cover_fp.to_string()},
                     {"union_fingerprint", v.union_fp.to_string()}};
    out << j.dump(2) << "\n";
  } else {
    out << "cover:  " << v.cover_fp.to_string() << "\n";
    out << "union:  " << v.union_fp.to_string() << "\n";
    out << (v.obstructed ? "obstructed: no mod-" + std::to_string(m) +
                               " numberable diagram is equivalent"
                         : "inconclusive: fingerprints agree")
        << "\n";
  }
  return v.obstructed ? kOk : kNo;
}

int cmd_iso(const Parsed& a, const Parsed& b, std::ostream& out) {
  CanonicalKey ka = canonical_key(a.diagram);
  CanonicalKey kb = canonical_key(b.diagram);
  out << "key 1: " << ka.key << "\n";
  out << "key 2: " << kb.key << "\n";
  bool same = ka == kb;
  out << (same ? "isomorphic" : "not isomorphic") << "\n";
  return same ? kOk : kNo;
}

int cmd_move(const Parsed& in, int random_steps, std::uint64_t seed,
             const std::string& spec, const std::string& out_path,
             const std::string& log_path, std::ostream& out) {
  Diagram d = in.diagram;
  std::vector<RMoveSpec> applied;
  if (!spec.empty()) {
    std::string text = spec;
    if (spec[0] == '@') {
      std::ifstream f(spec.substr(1));
      if (!f) throw Error("cannot read '" + spec.substr(1) + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("bad move spec: ") + e.what());
    }
    if (!j.is_array()) j = nlohmann::json::array({j});
    for (const auto& item : j) {
      RMoveSpec mv = move_from_json(item);
      d = apply_move(d, mv);
      applied.push_back(mv);
    }
  } else {
    WalkResult walk = random_walk(d, random_steps, seed);
    d = walk.diagram;
    applied = walk.log;
  }
  std::string text = serialize(d);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  if (!log_path.empty()) {
    nlohmann::json log = nlohmann::json::array();
    for (const RMoveSpec& mv : applied) log.push_back(move_to_json(mv));
    write_file(log_path, log.dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"virtual link diagrams: numberings, cut systems, cyclic covers"};
  app.name("vlink");
  app.require_subcommand(1);

  std::string file, file2, out_path, log_path, spec;
  long long mod = 0;
  int m = 2;
  int random_steps = 0;
  std::uint64_t seed = 1;
  bool canonical = false, check = false, json = false, trace = false, use_canonical = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
  validate_cmd->add_option("file", file)->required();

  auto* number_cmd = app.add_subcommand("number", "solve for a mod-m numbering");
  number_cmd->add_option("file", file)->required();
  number_cmd->add_option("--mod", mod, "modulus, 0 for the integers")->required();

  auto* cutsys_cmd = app.add_subcommand("cutsys", "canonical cut system / validity check");
  cutsys_cmd->add_option("file", file)->required();
  auto* canon_flag = cutsys_cmd->add_flag("--canonical", canonical, "emit the canonical system");
  auto* check_flag = cutsys_cmd->add_flag("--check", check, "check the file's marks");
  canon_flag->excludes(check_flag);

  auto* cover_cmd = app.add_subcommand("cover", "build the m-fold cyclic cover");
  cover_cmd->add_option("file", file)->required();
  cover_cmd->add_option("-m", m, "number of sheets")->required();
  cover_cmd->add_option("-o", out_path, "output file (default stdout)");
  cover_cmd->add_flag("--trace", trace, "write sheet sidecar next to -o");
  cover_cmd->add_flag("--canonical", use_canonical, "use the canonical cut system");

  auto* inv_cmd = app.add_subcommand("invariants", "writhe, linking, odd writhe");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_flag("--json", json);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "cover-vs-union certificate");
  obstruct_cmd->add_option("file", file)->required();
  obstruct_cmd->add_option("-m", m, "number of sheets")->required();
  obstruct_cmd->add_flag("--json", json);
  obstruct_cmd->add_flag("--canonical", use_canonical, "use the canonical cut system");

  auto* iso_cmd = app.add_subcommand("iso", "compare two diagrams up to relabeling");
  iso_cmd->add_option("file1", file)->required();
  iso_cmd->add_option("file2", file2)->required();

  auto* move_cmd = app.add_subcommand("move", "apply Reidemeister moves");
  move_cmd->add_option("file", file)->required();
  auto* rand_opt = move_cmd->add_option("--random", random_steps, "number of random moves");
  auto* spec_opt = move_cmd->add_option("--spec", spec, "JSON move list, or @file");
  move_cmd->add_option("--seed", seed, "seed for --random");
  move_cmd->add_option("-o", out_path, "output file (default stdout)");
  move_cmd->add_option("--log", log_path, "write applied moves as JSON");
  rand_opt->excludes(spec_opt);

  auto* gen_cmd = app.add_subcommand("gen", "emit a generated diagram");
  gen_cmd->add_option("-o", out_path, "output file (default stdout)");
  std::vector<std::string> gen_args;
  gen_cmd->add_option("kind", gen_args, "torus2q Q | vtrefoil | hopf | random N C SEED")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kErr;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(file, out);
    if (app.got_subcommand(number_cmd)) {
      if (mod < 0) throw Error("--mod must be >= 0");
      return cmd_number(load(file), mod, out);
    }
    if (app.got_subcommand(cutsys_cmd)) {
      if (canonical == check) throw Error("pick one of --canonical / --check");
      return cmd_cutsys(load(file), canonical, out);
    }
    if (app.got_subcommand(cover_cmd)) {
      if (trace && out_path.empty()) throw Error("--trace needs -o");
      return cmd_cover(load(file), m, use_canonical, out_path, trace, out);
    }
    if (app.got_subcommand(inv_cmd)) return cmd_invariants(load(file), json, out);
    if (app.got_subcommand(obstruct_cmd))
      return cmd_obstruct(load(file), m, use_canonical, json, out);
    if (app.got_subcommand(iso_cmd)) return cmd_iso(load(file), load(file2), out);
    if (app.got_subcommand(move_cmd)) {
      if (spec.empty() && rand_opt->count() == 0)
        throw Error("pick one of --random / --spec");
      return cmd_move(load(file), random_steps, seed, spec, out_path, log_path, out);
    }
    if (app.got_subcommand(gen_cmd)) {
      Diagram d;
      const auto& ga = gen_args;
      if (ga.empty()) throw Error("gen: missing kind");
      if (ga[0] == "torus2q" && ga.size() == 2) {
        d = torus2q(std::stoi(ga[1]));
      } else if (ga[0] == "vtrefoil" && ga.size() == 1) {
        d = virtual_trefoil();
      } else if (ga[0] == "hopf" && ga.size() == 1) {
        d = hopf_link();
      } else if (ga[0] == "random" && ga.size() == 4) {
        d = random_diagram(std::stoi(ga[1]), std::stoi(ga[2]), std::stoull(ga[3]));
      } else {
        throw Error("gen: usage: torus2q Q | vtrefoil | hopf | random N C SEED");
      }
      std::string text = serialize(d);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kErr;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kErr;
  }
  return kErr;
}

}  // namespace vlink::cli
