#include "invk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "invk/gamma.hpp"
#include "invk/groth.hpp"
#include "invk/json_io.hpp"
#include "invk/permlin.hpp"
#include "invk/pmulti.hpp"
#include "invk/ringcat.hpp"

namespace invk::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string workspace;
  std::optional<int> truncation;
  std::optional<int> bound_length;
  std::optional<int> bound_entry;
  std::string ordering = "revlex";
  bool text = false;
};

void add_common(CLI::App* sub, Common& c, bool with_bounds = true) {
  sub->add_option("workspace", c.workspace, "workspace JSON file")
      ->required();
  if (with_bounds) {
    sub->add_option("--bound-length", c.bound_length,
                    "max sequence length of the bounded enumeration");
    sub->add_option("--bound-entry", c.bound_entry,
                    "max sequence entry of the bounded enumeration");
    sub->add_option("--truncation", c.truncation,
                    "override the workspace truncation");
    sub->add_option("--ordering", c.ordering, "cell ordering")
        ->check(CLI::IsMember({"revlex", "lex"}));
  }
  auto* t = sub->add_flag("--text", c.text, "human-readable output");
  sub->add_flag("--json", "canonical JSON output (the default)")
      ->excludes(t);
}

Ordering ord_of(const Common& c) {
  return c.ordering == "lex" ? Ordering::Lex : Ordering::RevLex;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("parse error in '" + path + "': " + e.what());
  }
}

jio::Workspace load(const Common& c) {
  json doc = read_json_file(c.workspace);
  if (c.truncation) doc["truncation"] = *c.truncation;
  jio::Workspace ws;
  try {
    ws = jio::parse_workspace(doc);
  } catch (const json::exception& e) {
    throw InputError("invalid document in '" + c.workspace + "': " + e.what());
  }
  if (c.bound_length) ws.bound_length = *c.bound_length;
  if (c.bound_entry) ws.bound_entry = *c.bound_entry;
  if (ws.bound_length < 0 || ws.bound_entry < 1)
    throw InputError("bounds must be positive");
  return ws;
}

json bound_json(const jio::Workspace& ws) {
  return {{"length", ws.bound_length},
          {"entry", ws.bound_entry},
          {"truncation", ws.truncation}};
}

void text_report(std::ostream& out, const json& r, const std::string& indent) {
  out << indent << r["suite"].get<std::string>() << ": "
      << (r["ok"].get<bool>() ? "PASS" : "FAIL") << " (checked "
      << r["checked"] << "/" << r["total"] << ")\n";
  std::size_t shown = 0;
  for (const auto& v : r["violations"]) {
    out << indent << "  " << v["law"].get<std::string>() << ": "
        << v["witness"].get<std::string>() << "\n";
    if (++shown >= 20) break;
  }
  std::size_t more =
      r["violations"].size() - shown + r["violations_omitted"].get<std::size_t>();
  if (more > 0) out << indent << "  ... " << more << " more\n";
}

void emit(std::ostream& out, const json& doc, bool text) {
  if (!text) {
    out << jio::dump_json(doc);
    return;
  }
  if (doc.contains("reports")) {
    for (const auto& [name, r] : doc["reports"].items()) {
      out << name << "\n";
      text_report(out, r, "  ");
    }
    out << (doc["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else if (doc.contains("axioms")) {
    for (const auto& [name, r] : doc["axioms"].items()) text_report(out, r, "");
    text_report(out, doc["extra"], "");
    out << "tight: " << (doc["tight"].get<bool>() ? "true" : "false") << "\n";
    out << (doc["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else if (doc.contains("suite")) {
    text_report(out, doc, "");
  } else {
    out << jio::dump_json(doc);
  }
}

// Bounded materializations, one per distinct carrier.
struct PcatCache {
  int len, entry;
  std::vector<std::pair<gamma::GammaPtr, std::unique_ptr<groth::PcatResult>>>
      entries;

  const groth::PcatResult& of(const gamma::GammaPtr& g) {
    for (auto& [p, pc] : entries)
      if (p == g) return *pc;
    entries.emplace_back(
        g, std::make_unique<groth::PcatResult>(groth::build_pcat(*g, len, entry)));
    return *entries.back().second;
  }
};

int cmd_validate(const Common& c, std::ostream& out) {
  jio::Workspace ws = load(c);
  json reports;
  bool ok = true;
  auto put = [&](const std::string& key, const Report& r) {
    reports[key] = jio::report_json(r, json());
    ok = ok && r.ok();
  };
  for (const auto& [name, g] : ws.gammas)
    put("gamma/" + name, gamma::validate_gamma(*g));
  for (const auto& [name, f] : ws.multis)
    put("multimorphism/" + name, gamma::validate_multimorphism(f));
  for (const auto& [name, m] : ws.modifications)
    put("modification/" + name, gamma::validate_modification(m));
  for (const auto& [name, gm] : ws.monoids)
    put("monoid/" + name, ringcat::validate_gamma_monoid(gm));
  json doc{{"schema_version", jio::kSchemaVersion},
           {"reports", std::move(reports)},
           {"ok", ok}};
  emit(out, doc, c.text);
  return ok ? 0 : 1;
}

int cmd_pcat(const Common& c, const std::string& name, bool full,
             std::ostream& out) {
  jio::Workspace ws = load(c);
  const auto& x = ws.gamma_at(name);
  groth::PcatResult pc = groth::build_pcat(*x, ws.bound_length, ws.bound_entry);
  const auto& cc = pc.perm.c;
  json doc;
  doc["schema_version"] = jio::kSchemaVersion;
  doc["gamma"] = name;
  doc["bound"] = bound_json(ws);
  doc["category"] = jio::category_json(cc, -1, full);
  doc["unit"] = cc.objects[pc.perm.unit];
  json tens = json::array();
  for (int a = 0; a < cc.num_objects(); ++a)
    for (int b = 0; b < cc.num_objects(); ++b) {
      int ab = pc.perm.tobj(a, b);
      if (ab >= 0)
        tens.push_back({cc.objects[a], cc.objects[b], cc.objects[ab]});
    }
  doc["tensor_objects"] = std::move(tens);
  json brd = json::array();
  for (int a = 0; a < cc.num_objects(); ++a)
    for (int b = 0; b < cc.num_objects(); ++b) {
      int m = pc.perm.braid(a, b);
      if (m >= 0)
        brd.push_back({cc.objects[a], cc.objects[b], cc.morphisms[m].id});
    }
  doc["braiding"] = std::move(brd);
  if (full) {
    json tm = json::array();
    for (int f = 0; f < cc.num_morphisms(); ++f)
      for (int g = 0; g < cc.num_morphisms(); ++g) {
        int fg = pc.perm.tmor(f, g);
        if (fg >= 0)
          tm.push_back(
              {cc.morphisms[f].id, cc.morphisms[g].id, cc.morphisms[fg].id});
      }
    doc["tensor_morphisms"] = std::move(tm);
  }
  doc["counts"] = {{"objects", cc.num_objects()},
                   {"morphisms", cc.num_morphisms()}};
  emit(out, doc, c.text);
  return 0;
}

int cmd_apply(const Common& c, const std::string& name,
              const std::string& input_path, std::ostream& out) {
  jio::Workspace ws = load(c);
  const auto& f = ws.multi_at(name);
  json in = read_json_file(input_path);
  if (in.value("schema_version", -1) != jio::kSchemaVersion)
    throw InputError("input '" + input_path + "': unsupported schema_version");
  const int k = f.arity();
  json doc;
  doc["schema_version"] = jio::kSchemaVersion;
  doc["multimorphism"] = name;
  if (in.contains("objects")) {
    const json& arr = in["objects"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != k)
      throw InputError("input needs one object per slot");
    std::vector<groth::Object> objs;
    objs.reserve(k);
    for (int i = 0; i < k; ++i)
      objs.push_back(jio::parse_pobject(*f.sources[i], arr[i]));
    std::vector<const groth::Object*> ptrs;
    for (const auto& o : objs) ptrs.push_back(&o);
    groth::Object res = pmulti::p_on_objects(f, ptrs, ord_of(c));
    doc["kind"] = "object";
    doc["result"] = jio::pobject_json(*f.target, res);
  } else if (in.contains("morphisms")) {
    const json& arr = in["morphisms"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != k)
      throw InputError("input needs one morphism per slot");
    std::vector<groth::Morphism> mors;
    mors.reserve(k);
    for (int i = 0; i < k; ++i)
      mors.push_back(jio::parse_pmorphism(*f.sources[i], arr[i]));
    std::vector<const groth::Morphism*> ptrs;
    for (const auto& m : mors) ptrs.push_back(&m);
    groth::Morphism res = pmulti::p_on_morphisms(f, ptrs, ord_of(c));
    doc["kind"] = "morphism";
    doc["result"] = jio::pmorphism_json(*f.target, res);
  } else {
    throw InputError("input '" + input_path +
                     "' needs an 'objects' or 'morphisms' array");
  }
  emit(out, doc, c.text);
  return 0;
}

struct CheckArgs {
  std::string suite;
  std::string gamma, multi, outer, inner, modification, second, monoid, sigma;
  std::string input;
  int mor_weight = 1;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_sigma(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split_csv(s)) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InputError("--sigma must be a comma-separated 0-based permutation");
    }
  }
  return out;
}

int cmd_check(const Common& c, const CheckArgs& a, std::ostream& out) {
  jio::Workspace ws = load(c);
  PcatCache cache{ws.bound_length, ws.bound_entry, {}};
  Ordering ord = ord_of(c);
  json bound = bound_json(ws);

  if (a.suite == "permutative") {
    if (a.gamma.empty()) throw InputError("suite permutative needs --gamma");
    const auto& pc = cache.of(ws.gamma_at(a.gamma));
    Report r = permlin::validate_permutative(pc.perm);
    emit(out, jio::report_json(r, bound), c.text);
    return r.ok() ? 0 : 1;
  }

  if (a.suite == "multilinear") {
    if (a.multi.empty()) throw InputError("suite multilinear needs --multi");
    const auto& f = ws.multi_at(a.multi);
    std::vector<const groth::PcatResult*> srcs;
    for (const auto& s : f.sources) srcs.push_back(&cache.of(s));
    const auto& tgt = cache.of(f.target);
    permlin::MultilinearFunctor mf =
        pmulti::assemble_multilinear(f, srcs, tgt, ord);
    Report r = permlin::validate_multilinear(mf);
    emit(out, jio::report_json(r, bound), c.text);
    return r.ok() ? 0 : 1;
  }

  if (a.suite == "multifunctor-composition") {
    if (a.outer.empty() || a.inner.empty())
      throw InputError(
          "suite multifunctor-composition needs --outer and --inner");
    const auto& g = ws.multi_at(a.outer);
    std::vector<const gamma::Multimorphism*> fs;
    for (const auto& nm : split_csv(a.inner)) fs.push_back(&ws.multi_at(nm));
    gamma::GammaPtr carrier = g.target;
    auto same = [&](const gamma::GammaPtr& p) { return p == carrier; };
    bool one_carrier = std::all_of(g.sources.begin(), g.sources.end(), same);
    for (const auto* f : fs) {
      one_carrier = one_carrier && same(f->target) &&
                    std::all_of(f->sources.begin(), f->sources.end(), same);
    }
    if (!one_carrier)
      throw InputError(
          "composition checks need all sources and targets on one carrier");
    const auto& pc = cache.of(carrier);
    Report r = pmulti::check_composition(g, fs, pc, ord, a.mor_weight);
    emit(out, jio::report_json(r, bound), c.text);
    return r.ok() ? 0 : 1;
  }

  if (a.suite == "enrichment") {
    if (a.modification.empty())
      throw InputError("suite enrichment needs --modification");
    const auto& th = ws.modification_at(a.modification);
    const gamma::Modification* second = nullptr;
    if (!a.second.empty()) second = &ws.modification_at(a.second);
    std::vector<const groth::PcatResult*> srcs;
    for (const auto& s : th.source->sources) srcs.push_back(&cache.of(s));
    const auto& tgt = cache.of(th.source->target);
    Report r = pmulti::check_enrichment(th, second, srcs, tgt, ord);
    emit(out, jio::report_json(r, bound), c.text);
    return r.ok() ? 0 : 1;
  }

  if (a.suite == "symmetry") {
    if (a.multi.empty() || a.sigma.empty())
      throw InputError("suite symmetry needs --multi and --sigma");
    const auto& f = ws.multi_at(a.multi);
    std::vector<int> sigma = parse_sigma(a.sigma);
    const int k = f.arity();
    if (static_cast<int>(sigma.size()) != k)
      throw InputError("--sigma length does not match the arity");

    if (!a.input.empty()) {
      // One instance: slot i of the input file feeds source sigma[i].
      json in = read_json_file(a.input);
      if (in.value("schema_version", -1) != jio::kSchemaVersion)
        throw InputError("input '" + a.input +
                         "': unsupported schema_version");
      const json& arr = in.at("objects");
      if (!arr.is_array() || static_cast<int>(arr.size()) != k)
        throw InputError("input needs one object per slot");
      std::vector<groth::Object> objs;
      objs.reserve(k);
      for (int i = 0; i < k; ++i)
        objs.push_back(jio::parse_pobject(*f.sources[sigma[i]], arr[i]));
      std::vector<const groth::Object*> ptrs;
      for (const auto& o : objs) ptrs.push_back(&o);
      pmulti::SymmetryCheck sc =
          pmulti::check_symmetry_failure(f, sigma, ptrs, ord);
      json doc;
      doc["schema_version"] = jio::kSchemaVersion;
      doc["suite"] = "symmetry";
      doc["equal"] = sc.equal;
      doc["iso_valid"] = sc.iso_valid;
      doc["lhs"] = jio::pobject_json(*f.target, sc.lhs);
      doc["rhs"] = jio::pobject_json(*f.target, sc.rhs);
      if (sc.iso_valid)
        doc["iso"] = jio::pmorphism_json(*f.target, sc.iso);
      doc["ok"] = sc.iso_valid;
      emit(out, doc, c.text);
      return sc.iso_valid ? 0 : 1;
    }

    std::vector<const groth::PcatResult*> srcs;
    for (const auto& s : f.sources) srcs.push_back(&cache.of(s));
    pmulti::SymmetrySweep sw = pmulti::symmetry_sweep(f, sigma, srcs, ord);
    json doc = jio::report_json(sw.report, bound);
    doc["equal"] = sw.all_equal;
    doc["iso_valid"] = sw.report.ok();
    emit(out, doc, c.text);
    return sw.report.ok() ? 0 : 1;
  }

  if (a.suite == "ring") {
    if (a.monoid.empty()) throw InputError("suite ring needs --monoid");
    const auto& gm = ws.monoid_at(a.monoid);
    const auto& pc = cache.of(gm.x);
    ringcat::RingCategory rc = ringcat::derive_ring(gm, pc, ord);
    ringcat::RingReport rr = ringcat::validate_ring(rc);
    emit(out, jio::ring_report_json(rr, bound), c.text);
    return rr.ok() && rr.tight ? 0 : 1;
  }

  throw InputError("unknown suite '" + a.suite + "'");
}

int cmd_derive_ring(const Common& c, const std::string& name, bool full,
                    std::ostream& out) {
  jio::Workspace ws = load(c);
  const auto& gm = ws.monoid_at(name);
  groth::PcatResult pc =
      groth::build_pcat(*gm.x, ws.bound_length, ws.bound_entry);
  ringcat::RingCategory rc = ringcat::derive_ring(gm, pc, ord_of(c));
  ringcat::RingReport rr = ringcat::validate_ring(rc);
  const auto& cc = pc.perm.c;
  json doc;
  doc["schema_version"] = jio::kSchemaVersion;
  doc["monoid"] = name;
  doc["bound"] = bound_json(ws);
  doc["one"] = cc.objects[rc.one];
  doc["zero"] = cc.objects[rc.add->unit];
  json tens = json::array();
  for (int a = 0; a < cc.num_objects(); ++a)
    for (int b = 0; b < cc.num_objects(); ++b) {
      int ab = rc.tobj(a, b);
      if (ab >= 0)
        tens.push_back({cc.objects[a], cc.objects[b], cc.objects[ab]});
    }
  doc["tensor_objects"] = std::move(tens);
  if (full) {
    json fal = json::array(), far = json::array();
    for (int a = 0; a < cc.num_objects(); ++a)
      for (int b = 0; b < cc.num_objects(); ++b)
        for (int d = 0; d < cc.num_objects(); ++d) {
          int l = rc.fal(a, b, d);
          if (l >= 0)
            fal.push_back({cc.objects[a], cc.objects[b], cc.objects[d],
                           cc.morphisms[l].id});
          int rr2 = rc.far(a, b, d);
          if (rr2 >= 0)
            far.push_back({cc.objects[a], cc.objects[b], cc.objects[d],
                           cc.morphisms[rr2].id});
        }
    doc["factorizations"] = {{"fal", std::move(fal)}, {"far", std::move(far)}};
  }
  doc["report"] = jio::ring_report_json(rr, json());
  emit(out, doc, c.text);
  return rr.ok() && rr.tight ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bounded inverse K-theory toolkit"};
  app.require_subcommand(1);

  Common c_validate, c_pcat, c_apply, c_check, c_ring;
  std::string pcat_gamma, apply_multi, apply_input, ring_monoid;
  bool pcat_full = false, ring_full = false;
  CheckArgs ca;

  auto* sub_validate =
      app.add_subcommand("validate", "validate every workspace document");
  add_common(sub_validate, c_validate, false);

  auto* sub_pcat =
      app.add_subcommand("pcat", "dump the bounded image category of P");
  add_common(sub_pcat, c_pcat);
  sub_pcat->add_option("gamma", pcat_gamma, "gamma category name")->required();
  sub_pcat->add_flag("--full", pcat_full,
                     "include composition and tensor tables");

  auto* sub_apply = app.add_subcommand(
      "apply", "apply P of a multimorphism to objects or morphisms");
  add_common(sub_apply, c_apply);
  sub_apply->add_option("multimorphism", apply_multi, "multimorphism name")
      ->required();
  sub_apply->add_option("--input", apply_input, "JSON input document")
      ->required();

  auto* sub_check = app.add_subcommand("check", "run a law suite");
  add_common(sub_check, c_check);
  sub_check->add_option("--suite", ca.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"permutative", "multilinear",
                             "multifunctor-composition", "enrichment",
                             "symmetry", "ring"}));
  sub_check->add_option("--gamma", ca.gamma, "gamma category name");
  sub_check->add_option("--multi", ca.multi, "multimorphism name");
  sub_check->add_option("--outer", ca.outer, "outer multimorphism");
  sub_check->add_option("--inner", ca.inner,
                        "comma-separated inner multimorphisms");
  sub_check->add_option("--modification", ca.modification,
                        "modification name");
  sub_check->add_option("--second", ca.second,
                        "second modification, composed after the first");
  sub_check->add_option("--monoid", ca.monoid, "monoid name");
  sub_check->add_option("--sigma", ca.sigma,
                        "0-based one-line permutation, comma-separated");
  sub_check->add_option("--input", ca.input,
                        "input tuple file for the symmetry suite")
      ->check(CLI::ExistingFile);
  sub_check->add_option("--mor-weight", ca.mor_weight,
                        "length bound for morphism-grid comparisons");

  auto* sub_ring = app.add_subcommand(
      "derive-ring", "derive the ring structure from a monoid");
  add_common(sub_ring, c_ring);
  sub_ring->add_option("monoid", ring_monoid, "monoid name")->required();
  sub_ring->add_flag("--full", ring_full, "include factorization tables");

  std::vector<const char*> argv;
  argv.push_back("invk");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
    if (sub_validate->parsed()) return cmd_validate(c_validate, out);
    if (sub_pcat->parsed()) return cmd_pcat(c_pcat, pcat_gamma, pcat_full, out);
    if (sub_apply->parsed())
      return cmd_apply(c_apply, apply_multi, apply_input, out);
    if (sub_check->parsed()) return cmd_check(c_check, ca, out);
    if (sub_ring->parsed())
      return cmd_derive_ring(c_ring, ring_monoid, ring_full, out);
    err << "error: no command\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    out << jio::dump_json(json{{"error", "truncation"},
                               {"level", e.level},
                               {"detail", e.what()}});
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    out << jio::dump_json(json{{"error", "input"}, {"detail", e.what()}});
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace invk::cli
