#include "invk/json_io.hpp"

#include <fstream>
#include <utility>

#include "invk/fskel.hpp"
#include "invk/pmulti.hpp"

namespace invk::jio {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxWitnesses = 200;

const json& field(const json& doc, const char* key, const std::string& ctx) {
  if (!doc.is_object())
    throw InputError(ctx + ": expected an object with field '" + key + "'");
  auto it = doc.find(key);
  if (it == doc.end())
    throw InputError(ctx + ": missing field '" + key + "'");
  return *it;
}

const json* opt_field(const json& doc, const char* key) {
  if (!doc.is_object()) return nullptr;
  auto it = doc.find(key);
  return it == doc.end() ? nullptr : &*it;
}

int int_field(const json& doc, const char* key, const std::string& ctx) {
  const json& v = field(doc, key, ctx);
  if (!v.is_number_integer())
    throw InputError(ctx + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const json& doc, const char* key,
                      const std::string& ctx) {
  const json& v = field(doc, key, ctx);
  if (!v.is_string())
    throw InputError(ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

const json& array_field(const json& doc, const char* key,
                        const std::string& ctx) {
  const json& v = field(doc, key, ctx);
  if (!v.is_array())
    throw InputError(ctx + ": field '" + key + "' must be an array");
  return v;
}

std::vector<int> int_array(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw InputError(ctx + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw InputError(ctx + ": expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// Object and morphism references may be canonical ids or raw indices.
int resolve_obj(const cat::FiniteCategory& c, const json& v,
                const std::string& ctx) {
  if (v.is_string()) return c.find_object(v.get<std::string>());
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= c.num_objects())
      throw InputError(ctx + ": object index " + std::to_string(i) +
                       " out of range");
    return i;
  }
  throw InputError(ctx + ": object reference must be an id or index");
}

int resolve_mor(const cat::FiniteCategory& c, const json& v,
                const std::string& ctx) {
  if (v.is_string()) return c.find_morphism(v.get<std::string>());
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= c.num_morphisms())
      throw InputError(ctx + ": morphism index " + std::to_string(i) +
                       " out of range");
    return i;
  }
  throw InputError(ctx + ": morphism reference must be an id or index");
}

cat::FiniteCategory parse_category(const json& doc, const std::string& ctx,
                                   int* basepoint) {
  cat::CategoryBuilder b;
  for (const auto& o : array_field(doc, "objects", ctx)) {
    if (!o.is_string())
      throw InputError(ctx + ": object entries must be id strings");
    b.object(o.get<std::string>());
  }
  for (const auto& m : array_field(doc, "morphisms", ctx)) {
    b.morphism(str_field(m, "id", ctx), str_field(m, "src", ctx),
               str_field(m, "tgt", ctx));
  }
  const json& ids = field(doc, "identity", ctx);
  if (!ids.is_object())
    throw InputError(ctx + ": field 'identity' must map objects to morphisms");
  for (const auto& [obj, mor] : ids.items()) {
    if (!mor.is_string())
      throw InputError(ctx + ": identity entries must be morphism ids");
    b.set_identity(obj, mor.get<std::string>());
  }
  for (const auto& t : array_field(doc, "compose", ctx)) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() ||
        !t[1].is_string() || !t[2].is_string())
      throw InputError(ctx + ": compose entries must be [g, f, gf] id triples");
    b.set_compose(t[0].get<std::string>(), t[1].get<std::string>(),
                  t[2].get<std::string>());
  }
  cat::FiniteCategory c = b.build();
  if (basepoint) {
    *basepoint = -1;
    if (const json* bp = opt_field(doc, "basepoint"))
      *basepoint = resolve_obj(c, *bp, ctx + ": basepoint");
  }
  return c;
}

fskel::PtdMap parse_ptdmap(const json& doc, const std::string& ctx) {
  fskel::PtdMap f;
  f.dom = int_field(doc, "dom", ctx);
  f.cod = int_field(doc, "cod", ctx);
  f.values = int_array(field(doc, "values", ctx), ctx + ": values");
  if (f.dom < 0 || f.cod < 0 ||
      static_cast<int>(f.values.size()) != f.dom)
    throw InputError(ctx + ": pointed map shape mismatch");
  for (int v : f.values)
    if (v < 0 || v > f.cod)
      throw InputError(ctx + ": pointed map value out of range");
  return f;
}

gamma::GammaPtr parse_gamma(const json& doc, const std::string& ctx) {
  auto g = std::make_shared<gamma::GammaCategory>();
  g->truncation = int_field(doc, "truncation", ctx);
  if (g->truncation < 0) throw InputError(ctx + ": negative truncation");
  const json& levels = array_field(doc, "levels", ctx);
  if (static_cast<int>(levels.size()) != g->truncation + 1)
    throw InputError(ctx + ": expected " + std::to_string(g->truncation + 1) +
                     " level categories");
  for (int p = 0; p <= g->truncation; ++p) {
    std::string lctx = ctx + ": level " + std::to_string(p);
    cat::PointedCategory pc;
    pc.c = parse_category(levels[p], lctx, &pc.basepoint);
    if (pc.basepoint < 0)
      throw InputError(lctx + ": level categories need a basepoint");
    g->levels.push_back(std::move(pc));
  }
  // Action entries become the provider table; materialize() then demands
  // one entry per pointed map within truncation.
  std::map<std::uint64_t, gamma::LevelMap> table;
  for (const auto& a : array_field(doc, "action", ctx)) {
    fskel::PtdMap f = parse_ptdmap(field(a, "map", ctx), ctx + ": action map");
    if (f.dom > g->truncation || f.cod > g->truncation)
      throw InputError(ctx + ": action map outside truncation");
    const json& fun = field(a, "functor", ctx);
    const auto& dc = g->levels[f.dom].c;
    const auto& cc = g->levels[f.cod].c;
    gamma::LevelMap lm;
    const json& ob = array_field(fun, "obj", ctx);
    const json& mo = array_field(fun, "mor", ctx);
    if (static_cast<int>(ob.size()) != dc.num_objects() ||
        static_cast<int>(mo.size()) != dc.num_morphisms())
      throw InputError(ctx + ": action functor table sizes mismatch");
    for (const auto& v : ob) lm.obj.push_back(resolve_obj(cc, v, ctx));
    for (const auto& v : mo) lm.mor.push_back(resolve_mor(cc, v, ctx));
    std::uint64_t rank = 0;
    for (int v : f.values)
      rank = rank * (f.cod + 1) + static_cast<unsigned>(v);
    std::uint64_t key =
        (static_cast<std::uint64_t>(f.dom * 64 + f.cod) << 40) | rank;
    if (!table.emplace(key, std::move(lm)).second)
      throw InputError(ctx + ": duplicate action entry");
  }
  g->provider = [table = std::move(table),
                 ctx](const fskel::PtdMap& f) -> gamma::LevelMap {
    std::uint64_t rank = 0;
    for (int v : f.values)
      rank = rank * (f.cod + 1) + static_cast<unsigned>(v);
    std::uint64_t key =
        (static_cast<std::uint64_t>(f.dom * 64 + f.cod) << 40) | rank;
    auto it = table.find(key);
    if (it == table.end())
      throw InputError(ctx + ": action is missing the map <" +
                       std::to_string(f.dom) + "> -> <" +
                       std::to_string(f.cod) + "> with values (" +
                       join_ints(f.values) + ")");
    return it->second;
  };
  g->materialize();
  return g;
}

// All level tuples a k-ary multimorphism must store.
std::vector<std::vector<int>> stored_tuples(
    const std::vector<gamma::GammaPtr>& sources, int tgt_trunc) {
  std::vector<std::vector<int>> out;
  int k = static_cast<int>(sources.size());
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = sources[i]->truncation;
  for (int i = 0; i < k; ++i)
    if (radix[i] <= 0) return out;
  for (Odometer o(radix); !o.done; o.advance()) {
    long long prod = 1;
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) {
      p[i] = o.digits[i] + 1;
      prod *= p[i];
    }
    if (prod <= tgt_trunc) out.push_back(std::move(p));
  }
  return out;
}

gamma::Multimorphism parse_multimorphism(const json& doc,
                                         const Workspace& ws,
                                         const std::string& ctx) {
  gamma::Multimorphism mm;
  mm.target = ws.gamma_at(str_field(doc, "target", ctx));
  int k = int_field(doc, "arity", ctx);
  if (k < 0) throw InputError(ctx + ": negative arity");
  const json& srcs = array_field(doc, "sources", ctx);
  if (static_cast<int>(srcs.size()) != k)
    throw InputError(ctx + ": 'sources' must list one category per slot");
  for (const auto& s : srcs) {
    if (!s.is_string())
      throw InputError(ctx + ": source entries must be category names");
    mm.sources.push_back(ws.gamma_at(s.get<std::string>()));
  }
  if (k == 0) {
    const auto& c1 = mm.target->level(1).c;
    mm.value = resolve_obj(c1, field(doc, "value", ctx), ctx + ": value");
    return mm;
  }
  for (const json& cd : array_field(doc, "components", ctx)) {
    gamma::Component comp;
    comp.levels = int_array(field(cd, "levels", ctx), ctx + ": levels");
    if (static_cast<int>(comp.levels.size()) != k)
      throw InputError(ctx + ": component level tuple has wrong arity");
    long long prod = 1;
    for (int i = 0; i < k; ++i) {
      int p = comp.levels[i];
      if (p < 1 || p > mm.sources[i]->truncation)
        throw InputError(ctx + ": component level outside source truncation");
      prod *= p;
    }
    if (prod > mm.target->truncation)
      throw InputError(ctx + ": component level product " +
                       std::to_string(prod) + " outside target truncation");
    const auto& tc = mm.target->level(static_cast<int>(prod)).c;
    std::size_t nob = 1, nmo = 1;
    for (int i = 0; i < k; ++i) {
      const auto& sc = mm.sources[i]->level(comp.levels[i]).c;
      comp.obj_radix.push_back(sc.num_objects());
      comp.mor_radix.push_back(sc.num_morphisms());
      nob *= static_cast<std::size_t>(sc.num_objects());
      nmo *= static_cast<std::size_t>(sc.num_morphisms());
    }
    const json& fun = field(cd, "functor", ctx);
    const json& ob = array_field(fun, "obj", ctx);
    const json& mo = array_field(fun, "mor", ctx);
    if (ob.size() != nob || mo.size() != nmo)
      throw InputError(ctx + ": component table sizes mismatch at levels (" +
                       join_ints(comp.levels) + ")");
    for (const auto& v : ob) comp.obj.push_back(resolve_obj(tc, v, ctx));
    for (const auto& v : mo) comp.mor.push_back(resolve_mor(tc, v, ctx));
    if (!mm.comps.emplace(comp.levels, std::move(comp)).second)
      throw InputError(ctx + ": duplicate component levels");
  }
  for (const auto& p : stored_tuples(mm.sources, mm.target->truncation))
    if (!mm.comps.count(p))
      throw InputError(ctx + ": missing component at levels (" +
                       join_ints(p) + ")");
  if (mm.comps.size() !=
      stored_tuples(mm.sources, mm.target->truncation).size())
    throw InputError(ctx + ": unexpected extra components");
  mm.finalize();
  return mm;
}

gamma::Modification parse_modification(const json& doc, const Workspace& ws,
                                       const std::string& ctx) {
  gamma::Modification m;
  m.source = &ws.multi_at(str_field(doc, "source", ctx));
  m.target = &ws.multi_at(str_field(doc, "target", ctx));
  if (m.source->arity() != m.target->arity() ||
      m.source->sources != m.target->sources ||
      m.source->target != m.target->target)
    throw InputError(ctx + ": source and target are not parallel");
  int k = m.source->arity();
  if (k == 0) {
    // One component: a morphism of the target level 1 between the values.
    const auto& c1 = m.source->target->level(1).c;
    const json& comps = array_field(doc, "components", ctx);
    if (comps.size() != 1)
      throw InputError(ctx + ": a 0-ary modification has one component");
    m.comps[{}] = {resolve_mor(c1, field(comps[0], "component", ctx), ctx)};
    return m;
  }
  for (const json& cd : array_field(doc, "components", ctx)) {
    std::vector<int> p = int_array(field(cd, "levels", ctx), ctx + ": levels");
    auto it = m.source->comps.find(p);
    if (it == m.source->comps.end())
      throw InputError(ctx + ": component levels (" + join_ints(p) +
                       ") are not stored by the source");
    long long prod = 1;
    for (int e : p) prod *= e;
    const auto& tc = m.source->target->level(static_cast<int>(prod)).c;
    const json& arr = array_field(cd, "component", ctx);
    std::size_t nob = 1;
    for (int rx : it->second.obj_radix) nob *= static_cast<std::size_t>(rx);
    if (arr.size() != nob)
      throw InputError(ctx + ": component size mismatch at levels (" +
                       join_ints(p) + ")");
    std::vector<int> comp;
    for (const auto& v : arr) comp.push_back(resolve_mor(tc, v, ctx));
    if (!m.comps.emplace(std::move(p), std::move(comp)).second)
      throw InputError(ctx + ": duplicate component levels");
  }
  if (m.comps.size() != m.source->comps.size())
    throw InputError(ctx + ": components must cover every stored level tuple");
  return m;
}

}  // namespace

const gamma::GammaPtr& Workspace::gamma_at(const std::string& name) const {
  auto it = gammas.find(name);
  if (it == gammas.end())
    throw InputError("unknown gamma category '" + name + "'");
  return it->second;
}

const gamma::Multimorphism& Workspace::multi_at(const std::string& name) const {
  auto it = multis.find(name);
  if (it == multis.end())
    throw InputError("unknown multimorphism '" + name + "'");
  return it->second;
}

const gamma::Modification& Workspace::modification_at(
    const std::string& name) const {
  auto it = modifications.find(name);
  if (it == modifications.end())
    throw InputError("unknown modification '" + name + "'");
  return it->second;
}

const ringcat::GammaMonoid& Workspace::monoid_at(
    const std::string& name) const {
  auto it = monoids.find(name);
  if (it == monoids.end())
    throw InputError("unknown monoid '" + name + "'");
  return it->second;
}

gamma::GammaPtr builtin_gamma(const std::string& name, int truncation) {
  if (name == "J") return gamma::unit_gamma(truncation);
  if (name == "H(Z/2)") return gamma::em_gamma(gamma::z2_monoid(), truncation);
  if (name == "H(Bool)")
    return gamma::em_gamma(gamma::bool_monoid(), truncation);
  throw InputError("unknown builtin gamma category '" + name + "'");
}

ringcat::GammaMonoid builtin_monoid(const std::string& name, int truncation) {
  if (name == "J") return ringcat::j_mult_monoid(truncation);
  if (name == "H(Z/2)") return ringcat::z2_mult_monoid(truncation);
  if (name == "H(Bool)") return ringcat::bool_mult_monoid(truncation);
  throw InputError("unknown builtin monoid '" + name + "'");
}

Workspace parse_workspace(const json& doc) {
  Workspace ws;
  if (int_field(doc, "schema_version", "workspace") != kSchemaVersion)
    throw InputError("unsupported schema_version");
  if (const json* t = opt_field(doc, "truncation")) {
    if (!t->is_number_integer() || t->get<int>() < 0)
      throw InputError("workspace: truncation must be a nonnegative integer");
    ws.truncation = t->get<int>();
  }
  if (const json* b = opt_field(doc, "bound")) {
    ws.bound_length = int_field(*b, "length", "workspace bound");
    ws.bound_entry = int_field(*b, "entry", "workspace bound");
  }

  if (const json* gs = opt_field(doc, "gamma_categories"))
    for (const auto& [name, gd] : gs->items()) {
      std::string ctx = "gamma category '" + name + "'";
      if (gd.is_string())
        ws.gammas[name] = builtin_gamma(gd.get<std::string>(), ws.truncation);
      else if (opt_field(gd, "builtin")) {
        int t = ws.truncation;
        if (const json* ot = opt_field(gd, "truncation")) t = ot->get<int>();
        ws.gammas[name] = builtin_gamma(str_field(gd, "builtin", ctx), t);
      } else
        ws.gammas[name] = parse_gamma(gd, ctx);
    }

  // Builtin monoids come first so multimorphisms may borrow their parts.
  const json* ms = opt_field(doc, "monoids");
  if (ms)
    for (const auto& [name, md] : ms->items()) {
      std::string ctx = "monoid '" + name + "'";
      if (md.is_string())
        ws.monoids.emplace(name,
                           builtin_monoid(md.get<std::string>(), ws.truncation));
      else if (opt_field(md, "builtin")) {
        int t = ws.truncation;
        if (const json* ot = opt_field(md, "truncation")) t = ot->get<int>();
        ws.monoids.emplace(name, builtin_monoid(str_field(md, "builtin", ctx), t));
      }
    }

  if (const json* mm = opt_field(doc, "multimorphisms"))
    for (const auto& [name, md] : mm->items()) {
      std::string ctx = "multimorphism '" + name + "'";
      if (const json* idg = opt_field(md, "identity")) {
        if (!idg->is_string())
          throw InputError(ctx + ": 'identity' must name a gamma category");
        ws.multis.emplace(name, gamma::identity_multi(
                                    ws.gamma_at(idg->get<std::string>())));
      } else if (const json* mon = opt_field(md, "monoid")) {
        if (!mon->is_string())
          throw InputError(ctx + ": 'monoid' must name a builtin monoid");
        const auto& gm = ws.monoid_at(mon->get<std::string>());
        std::string part = str_field(md, "part", ctx);
        if (part == "mu")
          ws.multis.emplace(name, gm.mu);
        else if (part == "eta")
          ws.multis.emplace(name, gm.eta);
        else
          throw InputError(ctx + ": 'part' must be \"mu\" or \"eta\"");
      } else {
        ws.multis.emplace(name, parse_multimorphism(md, ws, ctx));
      }
    }

  // Explicit monoids may reference the multimorphisms parsed above.
  if (ms)
    for (const auto& [name, md] : ms->items()) {
      if (md.is_string() || opt_field(md, "builtin")) continue;
      std::string ctx = "monoid '" + name + "'";
      ringcat::GammaMonoid gm;
      gm.x = ws.gamma_at(str_field(md, "gamma", ctx));
      gm.mu = ws.multi_at(str_field(md, "mu", ctx));
      gm.eta = ws.multi_at(str_field(md, "eta", ctx));
      if (gm.mu.arity() != 2 || gm.eta.arity() != 0 ||
          gm.mu.target != gm.x || gm.eta.target != gm.x ||
          gm.mu.sources != std::vector<gamma::GammaPtr>{gm.x, gm.x})
        throw InputError(ctx + ": mu/eta do not form a monoid frame on '" +
                         str_field(md, "gamma", ctx) + "'");
      ws.monoids.emplace(name, std::move(gm));
    }

  if (const json* mods = opt_field(doc, "modifications"))
    for (const auto& [name, md] : mods->items())
      ws.modifications.emplace(
          name, parse_modification(md, ws, "modification '" + name + "'"));

  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("parse error in '" + path + "': " + e.what());
  }
  try {
    return parse_workspace(doc);
  } catch (const json::exception& e) {
    throw InputError("invalid document in '" + path + "': " + e.what());
  }
}

json category_json(const cat::FiniteCategory& c, int basepoint, bool full) {
  json doc;
  doc["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms)
    mors.push_back({{"id", m.id},
                    {"src", c.objects[m.src]},
                    {"tgt", c.objects[m.tgt]}});
  doc["morphisms"] = std::move(mors);
  json ids;
  for (int a = 0; a < c.num_objects(); ++a)
    ids[c.objects[a]] = c.morphisms[c.identity[a]].id;
  doc["identity"] = std::move(ids);
  if (basepoint >= 0) doc["basepoint"] = c.objects[basepoint];
  if (full) {
    json comp = json::array();
    for (int g = 0; g < c.num_morphisms(); ++g)
      for (int f = 0; f < c.num_morphisms(); ++f) {
        int gf = c.compose(g, f);
        if (gf >= 0)
          comp.push_back({c.morphisms[g].id, c.morphisms[f].id,
                          c.morphisms[gf].id});
      }
    doc["compose"] = std::move(comp);
  } else {
    doc["compose_omitted"] = true;
  }
  return doc;
}

json amorphism_json(const aseq::SeqMap& f) {
  json doc;
  doc["dom"] = f.dom.parts;
  doc["cod"] = f.cod.parts;
  json map = json::array();
  int pos = 0;
  for (int i = 1; i <= f.dom.length(); ++i)
    for (int s = 1; s <= f.dom.parts[i - 1]; ++s, ++pos)
      map.push_back({i, s, f.map[pos].first, f.map[pos].second});
  doc["map"] = std::move(map);
  return doc;
}

aseq::SeqMap parse_amorphism(const json& doc) {
  const std::string ctx = "index morphism";
  aseq::SeqMap f;
  f.dom.parts = int_array(field(doc, "dom", ctx), ctx + ": dom");
  f.cod.parts = int_array(field(doc, "cod", ctx), ctx + ": cod");
  for (int p : f.dom.parts)
    if (p < 1) throw InputError(ctx + ": dom entries must be positive");
  for (int p : f.cod.parts)
    if (p < 1) throw InputError(ctx + ": cod entries must be positive");
  f.map.assign(f.dom.total(), {0, 0});
  std::vector<char> seen(f.map.size(), 0);
  std::vector<int> off = aseq::block_offsets(f.dom);
  for (const auto& e : array_field(doc, "map", ctx)) {
    std::vector<int> q = int_array(e, ctx + ": map entry");
    if (q.size() != 4)
      throw InputError(ctx + ": map entries must be [i, s, j, t]");
    auto [i, s, j, t] = std::tuple{q[0], q[1], q[2], q[3]};
    if (i < 1 || i > f.dom.length() || s < 1 || s > f.dom.parts[i - 1] ||
        j < 1 || j > f.cod.length() || t < 1 || t > f.cod.parts[j - 1])
      throw InputError(ctx + ": map entry out of range");
    int pos = off[i - 1] + s - 1;
    if (seen[pos]) throw InputError(ctx + ": duplicate map entry");
    seen[pos] = 1;
    f.map[pos] = {j, t};
  }
  for (char s : seen)
    if (!s) throw InputError(ctx + ": map does not cover the whole domain");
  Report r = aseq::validate_amorphism(f);
  if (!r.ok())
    throw InputError(ctx + ": " + r.violations.front().law + " (" +
                     r.violations.front().witness + ")");
  return f;
}

json pobject_json(const gamma::GammaCategory& x, const groth::Object& o) {
  json doc;
  doc["m"] = o.m.parts;
  json xs = json::array();
  for (int i = 0; i < o.m.length(); ++i)
    xs.push_back(x.level(o.m.parts[i]).c.objects[o.x[i]]);
  doc["x"] = std::move(xs);
  return doc;
}

groth::Object parse_pobject(const gamma::GammaCategory& x, const json& doc) {
  const std::string ctx = "P object";
  groth::Object o;
  o.m.parts = int_array(field(doc, "m", ctx), ctx + ": m");
  for (int p : o.m.parts) {
    if (p < 1) throw InputError(ctx + ": sequence entries must be positive");
    if (p > x.truncation) throw TruncationError(p);
  }
  const json& xs = array_field(doc, "x", ctx);
  if (static_cast<int>(xs.size()) != o.m.length())
    throw InputError(ctx + ": 'x' must list one object per block");
  for (int i = 0; i < o.m.length(); ++i)
    o.x.push_back(resolve_obj(x.level(o.m.parts[i]).c, xs[i], ctx));
  return o;
}

json pmorphism_json(const gamma::GammaCategory& x, const groth::Morphism& m) {
  json doc;
  doc["src"] = pobject_json(x, m.src);
  doc["tgt"] = pobject_json(x, m.tgt);
  doc["phi"] = amorphism_json(m.phi);
  json fs = json::array();
  for (int j = 0; j < m.tgt.m.length(); ++j)
    fs.push_back(x.level(m.tgt.m.parts[j]).c.morphisms[m.f[j]].id);
  doc["f"] = std::move(fs);
  return doc;
}

groth::Morphism parse_pmorphism(const gamma::GammaCategory& x,
                                const json& doc) {
  const std::string ctx = "P morphism";
  groth::Object src = parse_pobject(x, field(doc, "src", ctx));
  groth::Object tgt = parse_pobject(x, field(doc, "tgt", ctx));
  aseq::SeqMap phi = parse_amorphism(field(doc, "phi", ctx));
  const json& fs = array_field(doc, "f", ctx);
  if (static_cast<int>(fs.size()) != tgt.m.length())
    throw InputError(ctx + ": 'f' must list one morphism per target block");
  std::vector<int> f;
  for (int j = 0; j < tgt.m.length(); ++j)
    f.push_back(resolve_mor(x.level(tgt.m.parts[j]).c, fs[j], ctx));
  return groth::make_morphism(x, std::move(src), std::move(tgt),
                              std::move(phi), std::move(f));
}

json report_json(const Report& r, const json& bound) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["suite"] = r.suite;
  if (!bound.is_null()) doc["bound"] = bound;
  doc["checked"] = r.checked;
  doc["total"] = r.total;
  doc["coverage"] = r.coverage();
  json vio = json::array();
  json wit = json::array();
  std::size_t n = std::min(r.violations.size(), kMaxWitnesses);
  for (std::size_t i = 0; i < n; ++i) {
    vio.push_back({{"law", r.violations[i].law},
                   {"witness", r.violations[i].witness}});
    wit.push_back(r.violations[i].witness);
  }
  doc["violations"] = std::move(vio);
  doc["witnesses"] = std::move(wit);
  doc["violations_omitted"] = r.violations.size() - n;
  doc["ok"] = r.ok();
  return doc;
}

json ring_report_json(const ringcat::RingReport& r, const json& bound) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["suite"] = "ring";
  if (!bound.is_null()) doc["bound"] = bound;
  json ax;
  for (const auto& [name, rep] : r.axioms)
    ax[name] = report_json(rep, json());
  doc["axioms"] = std::move(ax);
  doc["extra"] = report_json(r.extra, json());
  doc["tight"] = r.tight;
  doc["coverage"] = r.coverage();
  doc["ok"] = r.ok() && r.tight;
  return doc;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace invk::jio
