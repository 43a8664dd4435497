#include "commands.hpp"

#include "cusg/corpus.hpp"
#include "cusg/cu_finite.hpp"
#include "cusg/error.hpp"
#include "cusg/properties.hpp"
#include "cusg/tensor.hpp"
#include "cusg/tensor_identity.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace cusg::cli {

namespace {

const std::vector<std::string> kNamedProps = {"almost-unperforated", "almost-divisible", "nearly-unperforated",
                                              "idempotent", "all-soft"};
const std::vector<std::string> kWAxioms = {"aux", "w1", "w2", "w3", "w4", "w5", "w6", "w-weak-cancellation"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Finite carrier of a finite document or of a finite named semiring.
std::optional<FinPom> finite_of(const Input& in) {
  if (in.nat) return std::nullopt;
  if (in.doc.kind == SemigroupDoc::Kind::Finite) return in.doc.pom;
  const NamedCu& s = in.doc.named;
  if (s.kind == NamedCu::Kind::Elementary) return make_elementary(s.k);
  if (s.kind == NamedCu::Kind::PureInf) return make_pureinf();
  return std::nullopt;
}

FinPom require_finite(const Input& in, const char* verb) {
  auto m = finite_of(in);
  if (!m) throw InputError(std::string(verb) + " needs a finite carrier, got " + in.label);
  return *m;
}

const NamedCu* named_of(const Input& in) {
  return !in.nat && in.doc.kind == SemigroupDoc::Kind::Named ? &in.doc.named : nullptr;
}

int element_index(const FinPom& m, const std::string& name) {
  int i = m.index_of(name);
  if (i < 0) throw InputError("unknown element `" + name + "`");
  return i;
}

json named_witness(const NamedCu& s, const NamedVerdict& v) {
  json w = json::object();
  json elems = json::array();
  for (const auto& e : v.elems) elems.push_back(to_string(s, e));
  w["elements"] = elems;
  if (!v.scalars.empty()) w["scalars"] = v.scalars;
  return w;
}

Record from_verdict(std::string check, const Verdict& v, const Stopwatch& t) {
  Record r;
  r.check = std::move(check);
  r.status = v.status;
  if (v.fails()) r.witness = json{{"tag", v.tag}, {"indices", v.witness}};
  if (v.depth) r.bounds["K"] = *v.depth;
  r.note = v.note;
  r.millis = t.millis();
  return r;
}

Record from_named(std::string check, const NamedCu& s, const NamedVerdict& v, const Stopwatch& t) {
  Record r;
  r.check = std::move(check);
  r.status = v.status;
  if (v.fails()) {
    r.witness = named_witness(s, v);
    r.witness["tag"] = v.tag;
  }
  r.note = v.note;
  r.millis = t.millis();
  return r;
}

Record info(std::string check, json value, const Stopwatch& t, std::string note = {}) {
  Record r;
  r.check = std::move(check);
  r.info = true;
  r.value = std::move(value);
  r.millis = t.millis();
  r.note = std::move(note);
  return r;
}

Record verdict_of(std::string check, bool ok, const Stopwatch& t, std::string note = {}) {
  Record r;
  r.check = std::move(check);
  r.status = ok ? Status::Holds : Status::Fails;
  r.millis = t.millis();
  r.note = std::move(note);
  return r;
}

void emit_doc(Report& rep, const std::string& key, const SemigroupDoc& doc) {
  std::string text = serialize(doc);
  rep.output[key] = text;
  rep.text.push_back("--- " + key);
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rep.text.push_back(line);
}

void emit_map(Report& rep, const std::string& key, const FinPom& from, const std::vector<int>& f,
              const SemigroupDoc& to_doc) {
  json table = json::object();
  rep.text.push_back("--- " + key);
  for (int a = 0; a < from.n; ++a) {
    std::string target = to_doc.pom.name(f[a]);
    table[from.name(a)] = target;
    rep.text.push_back(from.name(a) + " -> " + target);
  }
  rep.output[key] = table;
}

void replay_or_throw(bool ok, const std::string& what) {
  if (!ok) throw ReplayMismatch("replay mismatch: " + what);
}

}  // namespace

Input load_input(const std::string& arg, const Options& opt) {
  Input in;
  in.label = arg;
  if (arg == "nat") {
    in.nat = true;
    return in;
  }
  if (arg.rfind("random:", 0) == 0) {
    int size = 0;
    try {
      size = std::stoi(arg.substr(7));
    } catch (const std::exception&) {
      throw InputError("expected random:<size>");
    }
    if (size < 1 || size > 8) throw InputError("random carriers have size 1..8");
    std::mt19937_64 rng(opt.seed);
    in.doc = finite_doc(random_pom(rng, size));
    return in;
  }
  if (std::filesystem::is_regular_file(arg)) {
    try {
      in.doc = parse_document(read_file(arg));
    } catch (const ParseError& e) {
      std::string where = arg;
      if (e.line > 0) where += ":" + std::to_string(e.line);
      if (e.line > 0 && e.column > 0) where += ":" + std::to_string(e.column);
      throw InputError(where + ": " + e.what());
    }
    return in;
  }
  try {
    in.doc.kind = SemigroupDoc::Kind::Named;
    in.doc.named = parse_named(arg);
  } catch (const InputError& e) {
    throw InputError("`" + arg + "` is neither a readable file nor a named semiring (" + e.what() + ")");
  }
  return in;
}

// ---- check ------------------------------------------------------------------

Report cmd_check(const Input& in, const std::vector<std::string>& props_in, const Options& opt) {
  Report rep;
  if (in.nat) throw InputError("check does not accept nat");
  const NamedCu* named = named_of(in);
  auto finite = finite_of(in);
  std::vector<std::string> props = props_in;
  if (props.empty()) {
    if (named) {
      props = kNamedProps;
    } else {
      for (const auto& p : all_properties()) props.push_back(property_name(p));
      if (in.doc.has_aux()) props.insert(props.end(), kWAxioms.begin(), kWAxioms.end());
      if (in.doc.mul) props.push_back("semiring");
    }
  }
  for (const std::string& raw : props) {
    Stopwatch t;
    std::string name = raw, arg;
    if (auto open = raw.find('('); open != std::string::npos && raw.back() == ')') {
      name = raw.substr(0, open);
      arg = raw.substr(open + 1, raw.size() - open - 2);
    }
    if (name == "semimodule") {
      Over over = parse_over(arg);
      if (named) {
        rep.add(from_named(raw, *named, semimodule_test(*named, over), t));
      } else {
        rep.add(from_verdict(raw, semimodule_test(require_finite(in, "semimodule"), over), t));
      }
      continue;
    }
    if (named && (std::find(kNamedProps.begin(), kNamedProps.end(), name) != kNamedProps.end() ||
                  name == "q-divisible" || name == "q-unperforated")) {
      Supernatural q = arg.empty() ? Supernatural{} : parse_supernatural(arg);
      NamedVerdict v = named_property(*named, name, q);
      if (opt.replay && v.fails()) replay_or_throw(replay_named_failure(*named, v), raw);
      rep.add(from_named(raw, *named, v, t));
      continue;
    }
    if (!finite) throw InputError("property `" + raw + "` has no closed form for " + in.label);
    const FinPom& m = *finite;
    if (std::find(kWAxioms.begin(), kWAxioms.end(), raw) != kWAxioms.end()) {
      static const std::vector<WAxiom> axioms = {WAxiom::Aux, WAxiom::W1, WAxiom::W2, WAxiom::W3,
                                                 WAxiom::W4,  WAxiom::W5, WAxiom::W6, WAxiom::WeakCancellation};
      auto idx = std::find(kWAxioms.begin(), kWAxioms.end(), raw) - kWAxioms.begin();
      FinW w = in.doc.kind == SemigroupDoc::Kind::Finite ? in.doc.finw() : with_order_as_aux(m);
      rep.add(from_verdict(raw, validate_w(w, axioms[idx]), t));
      continue;
    }
    if (raw == "semiring") {
      if (!in.doc.mul) throw InputError("`semiring` needs a multiplication table");
      rep.add(from_verdict(raw, validate_semiring(m, *in.doc.mul, in.doc.unit), t));
      continue;
    }
    Property p = parse_property(raw);
    Verdict v = check_property(m, p, opt.bound);
    if (opt.replay && v.fails()) replay_or_throw(replay_failure(m, p, v), raw);
    Record r = from_verdict(property_name(p), v, t);
    if (v.fails()) {
      json names = json::array();
      for (auto x : v.witness) names.push_back(x >= 0 && x < m.n ? m.name(static_cast<int>(x)) : std::to_string(x));
      r.witness["names"] = names;
    }
    rep.add(std::move(r));
  }
  return rep;
}

// ---- tensor -----------------------------------------------------------------

namespace {

std::unique_ptr<Carrier> carrier_of(const Input& in, std::int64_t cap) {
  if (in.nat) return std::make_unique<GridCarrier>(GridCarrier::naturals(cap));
  auto m = finite_of(in);
  if (!m) throw InputError("tensor needs finite carriers or nat, got " + in.label);
  auto c = std::make_unique<FinPomCarrier>(*m);
  c->set_label(in.label);
  return c;
}

Record tensor_record(std::string check, const TensorVerdict& v, const Carrier& M, const Carrier& N,
                     const SearchOptions& so, const Stopwatch& t) {
  Record r;
  r.check = std::move(check);
  r.status = v.status == TensorVerdict::Status::Yes  ? Status::Holds
             : v.status == TensorVerdict::Status::No ? Status::Fails
                                                     : Status::Unknown;
  r.bounds = json{{"depth", so.depth}, {"size_bound", so.size_bound}};
  if (v.status == TensorVerdict::Status::Unknown) {
    r.bounds["reached_depth"] = v.depth;
    r.bounds["frontier"] = v.frontier;
  }
  if (v.status == TensorVerdict::Status::Yes) r.witness = serialize(M, N, v.certificate);
  r.note = v.note;
  r.millis = t.millis();
  return r;
}

}  // namespace

Report cmd_tensor(const Input& left, const Input& right, const TensorArgs& args, const Options& opt) {
  Report rep;
  Stopwatch t;
  if (args.mode == TensorArgs::Mode::Identity) {
    const NamedCu* a = named_of(left);
    const NamedCu* b = named_of(right);
    if (!a || !b) throw InputError("--identity needs two named semirings");
    IdentityResult r = cu_tensor_identity(*a, *b);
    if (r.result) {
      rep.add(info("identity", to_string(*r.result), t, r.rule));
      rep.output["result"] = to_string(*r.result);
      rep.text.push_back(to_string(*r.result));
    } else {
      Record rec;
      rec.check = "identity";
      rec.status = Status::Unknown;
      rec.note = r.rule;
      rec.millis = t.millis();
      rep.add(rec);
    }
    return rep;
  }

  const int size_bound = static_cast<int>(opt.bound.value_or(8));
  if (args.mode == TensorArgs::Mode::Aux) {
    if (left.doc.kind != SemigroupDoc::Kind::Finite || right.doc.kind != SemigroupDoc::Kind::Finite || left.nat ||
        right.nat)
      throw InputError("--aux needs two finite documents");
    FinW wl = left.doc.finw(), wr = right.doc.finw();
    FinPomCarrier cl(wl.base), cr(wr.base);
    SearchOptions so{opt.depth, size_bound, 400000};
    FormalSum f = parse_sum(cl, cr, args.f), g = parse_sum(cl, cr, args.g);
    TensorVerdict v = tensor_auxrel(wl, wr, f, g, so);
    rep.add(tensor_record("aux " + args.f + " < " + args.g, v, cl, cr, so, t));
    return rep;
  }

  auto M = carrier_of(left, args.cap);
  auto N = carrier_of(right, args.cap);
  if (args.mode == TensorArgs::Mode::Leq) {
    SearchOptions so{opt.depth, size_bound, 400000};
    FormalSum f = parse_sum(*M, *N, args.f), g = parse_sum(*M, *N, args.g);
    TensorVerdict v = tensor_leq(*M, *N, f, g, so);
    if (opt.replay && v.status == TensorVerdict::Status::Yes) {
      std::string err;
      Certificate back = parse_certificate(*M, *N, serialize(*M, *N, v.certificate));
      replay_or_throw(replay(*M, *N, f, g, back, &err), "certificate: " + err);
    }
    rep.add(tensor_record(show_sum(*M, *N, canonical(*M, *N, f)) + " <= " + show_sum(*M, *N, canonical(*M, *N, g)), v,
                          *M, *N, so, t));
    return rep;
  }

  Saturation s = tensor_saturate(*M, *N, size_bound);
  if (!s.ok) {
    Record r;
    r.check = "saturate";
    r.status = Status::Unknown;
    r.bounds = json{{"size_bound", size_bound}, {"generators", s.generators.size()}};
    r.note = s.diagnostics;
    r.millis = t.millis();
    rep.add(r);
    return rep;
  }
  rep.add(info("saturate", std::to_string(s.pom.n) + " elements", t));
  SemigroupDoc doc = finite_doc(s.pom);
  emit_doc(rep, "tensor", doc);
  json reps = json::object();
  rep.text.push_back("--- representatives");
  for (int c = 0; c < s.prepom.n; ++c) {
    std::string e = doc.pom.name(s.pre_to_pom[c]);
    if (reps.contains(e)) continue;
    reps[e] = show_sum(*M, *N, s.reps[c]);
    rep.text.push_back(e + " = " + show_sum(*M, *N, s.reps[c]));
  }
  rep.output["representatives"] = reps;

  auto iso_record = [&](const std::string& check, const FinPom& target) {
    Stopwatch ti;
    auto iso = find_isomorphism(s.pom, target);
    bool ok = iso && is_isomorphism(s.pom, target, *iso);
    rep.add(verdict_of(check, ok, ti));
  };
  auto is_pureinf = [](const Input& in) {
    auto m = finite_of(in);
    return m && find_isomorphism(*m, make_pureinf()).has_value();
  };
  if (!left.nat && is_pureinf(right)) iso_record("iso-latf(" + left.label + ")", latf(*finite_of(left)).pom);
  if (!right.nat && is_pureinf(left) && !is_pureinf(right))
    iso_record("iso-latf(" + right.label + ")", latf(*finite_of(right)).pom);
  if (left.nat && !right.nat) iso_record("unit-law", *finite_of(right));
  if (right.nat && !left.nat) iso_record("unit-law", *finite_of(left));
  return rep;
}

// ---- complete ---------------------------------------------------------------

Report cmd_complete(const Input& in, bool use_gamma, const Options&) {
  Report rep;
  if (in.nat || in.doc.kind != SemigroupDoc::Kind::Finite) throw InputError("complete needs a .w or .pom document");
  Stopwatch t;
  FinW w = in.doc.finw();
  Verdict pre = validate_prew(w);
  if (!pre.holds()) {
    Record r = from_verdict("prew", pre, t);
    r.note = pre.tag + " fails" + (pre.note.empty() ? "" : ": " + pre.note);
    rep.add(r);
    return rep;
  }
  if (!use_gamma) {
    WQuotient q = mu(w);
    SemigroupDoc doc = finite_doc(q.target.base);
    doc.aux = q.target.aux;
    rep.add(info("mu", std::to_string(q.target.n()) + " classes", t));
    emit_doc(rep, "mu", doc);
    emit_map(rep, "quotient", w.base, q.class_of, doc);
    return rep;
  }
  Gamma g = gamma(w);
  SemigroupDoc doc = finite_doc(g.pom);
  rep.add(info("gamma", std::to_string(g.pom.n) + " round ideals", t));
  Stopwatch tc;
  CuificationCheck c = check_cuification(w, g);
  bool w2 = validate_w(w, WAxiom::W2).holds();
  if (w2) {
    rep.add(verdict_of("cuification-embedding", c.embedding, tc));
  } else {
    rep.add(info("cuification-embedding", c.embedding, tc, "W2 fails, so this part is not required"));
  }
  rep.add(verdict_of("cuification-dense", c.dense, tc));
  rep.add(info("order-embedding", c.order_embedding, tc));
  emit_doc(rep, "gamma", doc);
  emit_map(rep, "alpha", w.base, g.alpha, doc);
  return rep;
}

// ---- classify ---------------------------------------------------------------

namespace {

std::string describe(const SolidClass& c) {
  switch (c.kind) {
    case SolidClass::Kind::Elementary: return "Elementary(" + std::to_string(c.k) + ")";
    case SolidClass::Kind::AlgebraicSolid: {
      NamedCu s = NamedCu::gensolid(c.spec);
      return std::string("AlgebraicSolid ") + to_string(s);
    }
    case SolidClass::Kind::NotSolid: return "NotSolid";
    default: return to_string(c.kind);
  }
}

}  // namespace

Report cmd_classify(const Input& in, const Options&) {
  Report rep;
  Stopwatch t;
  if (in.nat) throw InputError("classify does not accept nat");
  SolidClass c;
  if (const NamedCu* s = named_of(in)) {
    c = classify_solid(*s);
  } else {
    if (!in.doc.mul) throw InputError("classify needs a multiplication (`mul:` and `unit:` lines)");
    const FinPom& m = in.doc.pom;
    SimpleClass sc = classify_simple(m);
    Stopwatch ts;
    rep.add(info("classify-simple",
                 sc.kind == SimpleClass::Kind::Zero         ? "Zero"
                 : sc.kind == SimpleClass::Kind::Elementary ? "Elementary(" + std::to_string(sc.k) + ")"
                                                            : "NotSimpleOrAxiomFail",
                 ts, sc.reason));
    c = classify_solid(m, *in.doc.mul, in.doc.unit);
  }
  std::string branch = describe(c);
  Record r;
  r.check = "classify";
  r.status = c.kind == SolidClass::Kind::NotSolid ? Status::Fails : Status::Holds;
  r.value = branch;
  r.note = c.reason;
  r.millis = t.millis();
  rep.add(r);
  rep.output["class"] = branch;
  rep.text.push_back(branch);
  return rep;
}

// ---- limit ------------------------------------------------------------------

Report cmd_limit(const std::vector<Input>& stages, const LimitArgs& args, const Options&) {
  Report rep;
  Stopwatch t;
  if (args.doubling) {
    LimitComparison c = rq_limit_simplicial(*args.doubling);
    rep.add(info("stage", std::to_string(c.m) + " (" + std::to_string(c.elements) + " elements)", t));
    rep.add(verdict_of("bijective", c.bijective, t));
    rep.add(verdict_of("order-exact", c.order_exact, t));
    rep.add(verdict_of("maps-consistent", c.maps_consistent, t));
    rep.add(verdict_of("additive", c.additive, t));
    return rep;
  }
  if (stages.empty()) throw InputError("limit needs stage documents or --doubling");
  std::vector<FinPom> poms;
  for (const auto& s : stages) poms.push_back(require_finite(s, "limit"));
  if (args.maps.size() + 1 != poms.size()) throw InputError("limit needs one --map per consecutive pair of stages");
  std::vector<std::vector<int>> maps;
  for (std::size_t i = 0; i < args.maps.size(); ++i) {
    std::istringstream words(args.maps[i]);
    std::vector<int> f;
    for (std::string w; words >> w;) f.push_back(element_index(poms[i + 1], w));
    if (static_cast<int>(f.size()) != poms[i].n)
      throw InputError("--map " + std::to_string(i) + " must list one target per element of stage " + std::to_string(i));
    maps.push_back(std::move(f));
  }
  int k = args.stage.value_or(static_cast<int>(poms.size()) - 1);
  LimitStage st = inductive_limit_stage(poms, maps, k);
  rep.add(info("stage", k, t));
  SemigroupDoc doc = finite_doc(st.pom);
  emit_doc(rep, "stage", doc);
  for (int i = 0; i < k; ++i) emit_map(rep, "phi_" + std::to_string(i), poms[i], st.to_k[i], doc);
  return rep;
}

// ---- functional -------------------------------------------------------------

Report cmd_functional(const Input& in, const std::vector<std::string>& at, const Options&) {
  Report rep;
  if (in.nat) throw InputError("functional does not accept nat");
  if (const NamedCu* s = named_of(in)) {
    Stopwatch t;
    bool has = has_functional(*s);
    rep.add(verdict_of("normalized-functional", has, t));
    if (has)
      for (const auto& x : at) {
        Stopwatch tx;
        rep.add(info("lambda(" + x + ")", to_string(lambda(*s, parse_elem(*s, x))), tx));
      }
    return rep;
  }
  const FinPom& m = in.doc.pom;
  std::vector<int> points;
  if (at.empty()) {
    for (int a = 0; a < m.n; ++a)
      if (a != m.zero) points.push_back(a);
  } else {
    for (const auto& x : at) points.push_back(element_index(m, x));
  }
  for (int a : points) {
    Stopwatch t;
    FunctionalSearchResult f = functional_exists(m, a);
    Record r = verdict_of("functional(" + m.name(a) + ")", f.exists, t, f.note);
    if (f.exists) {
      json values = json::object();
      for (int x = 0; x < m.n; ++x) values[m.name(x)] = f.values[x] ? to_string(*f.values[x]) : "inf";
      r.witness = values;
    }
    r.bounds = json{{"criterion", f.criterion}, {"lp_feasible", f.lp_feasible}};
    rep.add(r);
  }
  return rep;
}

// ---- compare ----------------------------------------------------------------

Report cmd_compare(const Input& in, const std::string& a, const std::string& b, const std::optional<std::string>& over,
                   const Options& opt) {
  Report rep;
  if (in.nat) throw InputError("compare does not accept nat");
  Stopwatch t;
  if (const NamedCu* s = named_of(in)) {
    Elem x = parse_elem(*s, a), y = parse_elem(*s, b);
    Comparison c = comparison_suite(*s, x, y);
    rep.add(info("leq", c.leq, t));
    rep.add(info("way-below", c.waybelow, t));
    rep.add(info("less-s", c.less_s, t));
    rep.add(info("hat-less-s", c.hat_less_s, t));
    rep.add(info("item3", c.item3, t));
    rep.add(info("less-s-tau", c.less_s_tau, t));
    rep.add(info("hat-leq", c.hat_leq, t));
    rep.add(info("prop", c.prop, t));
    rep.add(info("prop-tau", c.prop_tau, t));
    rep.add(info("less-p", c.less_p, t));
    Record r = verdict_of("implications", c.violations.empty(), t);
    if (!c.violations.empty()) r.witness = c.violations;
    rep.add(r);
    if (over) {
      Stopwatch to;
      rep.add(from_named("tensor-unit-compare(" + *over + ")", *s, tensor_unit_compare(*s, parse_over(*over), x, y), to));
    }
    return rep;
  }
  FinPom m = require_finite(in, "compare");
  int x = element_index(m, a), y = element_index(m, b);
  StableDomination d = stable_domination(m, x, y, opt.bound);
  rep.add(info("leq", m.le(x, y), t));
  rep.add(info("less-s", d.item1, t));
  rep.add(info("item2", d.item2, t));
  rep.add(info("item3", d.item3, t));
  rep.add(info("item4", d.item4, t));
  rep.add(info("less-p", less_p(m, x, y), t));
  Record r = verdict_of("items-agree", d.agree, t);
  if (d.verdict.depth) r.bounds["K"] = *d.verdict.depth;
  rep.add(r);
  if (over) {
    Stopwatch to;
    rep.add(from_verdict("tensor-unit-compare(" + *over + ")", tensor_unit_compare(m, parse_over(*over), x, y), to));
  }
  return rep;
}

}  // namespace cusg::cli
