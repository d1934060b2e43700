#include "walg/walg.h"

#include <cstring>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "walg/algebra_io.hpp"
#include "walg/classical_w.hpp"
#include "walg/susy_brst.hpp"
#include "walg/susy_w.hpp"
#include "walg/verify.hpp"

using namespace walg;
using nlohmann::ordered_json;

struct walg_algebra {
  LieSuperalgebra g;
};

struct walg_w {
  bool susy = false;
  ReductionContext ctx;
  std::vector<WGenerator> gens;
};

struct walg_brst {
  BrstComplex cx;
  std::unique_ptr<MinusComplex> m;  // c = i
  std::vector<BrstGenerator> e;
  BracketTable table;
};

namespace {

thread_local std::string last_error;

template <class F>
int guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const InputError& e) {
    last_error = e.what();
    return WALG_INPUT_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return WALG_INPUT_ERROR;
  } catch (const SolveError& e) {
    last_error = e.what();
    return WALG_SOLVE_ERROR;
  } catch (const KDivisionError& e) {
    last_error = e.what();
    return WALG_SOLVE_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WALG_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int need(const void* p, const char* what) {
  if (!p) throw InputError(std::string("null ") + what);
  return 0;
}

walg_options opts(const walg_options* o) {
  walg_options d;
  walg_options_init(&d);
  return o ? *o : d;
}

// output specialisation of k
struct Shaping {
  std::optional<Scalar> k;
  std::optional<Rational> max_weight;
  explicit Shaping(const walg_options& o) {
    if (o.k && std::strcmp(o.k, "symbolic") != 0 && *o.k) {
      Scalar s = Scalar::parse(o.k);
      if (!s.is_constant())
        throw InputError("--k must be a number or 'symbolic', got '" + std::string(o.k) + "'");
      k = s;
    }
    if (o.max_weight && *o.max_weight) max_weight = parse_rational(o.max_weight);
  }
  std::string k_str() const { return k ? k->str() : "symbolic"; }
  SuperPoly operator()(const SuperPoly& p) const {
    if (!k) return p;
    const Scalar kv = *k;
    return p.map_coefficients([&](const Scalar& s) { return s.substitute(&kv, nullptr); });
  }
  IndetPoly operator()(const IndetPoly& p) const {
    return p.map([&](const SuperPoly& x) { return (*this)(x); });
  }
  bool keep(const Rational& w) const { return !max_weight || w <= *max_weight; }
};

ordered_json report_json(const std::string& name, const Report& r) {
  return {{"name", name}, {"passed", r.ok()}, {"checked", r.checked}, {"failures", r.failures}};
}

void report_text(std::ostringstream& os, const std::string& name, const Report& r) {
  os << (r.ok() ? "PASS " : "FAIL ") << name << "\n";
  for (auto& f : r.failures) os << "  " << f << "\n";
}

std::string indet_name(Indet k) { return k == Indet::Chi ? "χ" : "λ"; }

}  // namespace

extern "C" {

void walg_options_init(walg_options* o) {
  if (!o) return;
  o->format = WALG_TEXT;
  o->method = WALG_CLOSED;
  o->k = nullptr;
  o->max_weight = nullptr;
}

const char* walg_last_error(void) { return last_error.c_str(); }

void walg_string_free(char* s) { std::free(s); }

int walg_catalog(walg_format format, char** out) {
  return guard([&] {
    need(out, "output");
    std::ostringstream os;
    ordered_json doc = ordered_json::array();
    for (auto& e : catalog()) {
      LieSuperalgebra g = load_algebra(e.name);
      if (format == WALG_STRUCTURED)
        doc.push_back({{"name", e.name}, {"triple", e.triple_kind}, {"dim", g.dim()}, {"notes", e.notes}});
      else
        os << e.name << "  dim " << g.dim() << "  " << e.triple_kind << "  " << e.notes << "\n";
    }
    *out = dup(format == WALG_STRUCTURED ? ordered_json{{"catalog", doc}}.dump(2) + "\n" : os.str());
    return WALG_OK;
  });
}

int walg_algebra_load(const char* name, walg_algebra** out) {
  return guard([&] {
    need(name, "algebra name");
    need(out, "output");
    *out = new walg_algebra{load_algebra(name)};
    return WALG_OK;
  });
}

void walg_algebra_free(walg_algebra* a) { delete a; }

int walg_algebra_describe(const walg_algebra* a, walg_format format, char** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    const LieSuperalgebra& g = a->g;
    int odd = 0;
    for (int p : g.parity) odd += p;
    if (format == WALG_STRUCTURED) {
      ordered_json grades = ordered_json::object();
      for (int i = 0; i < g.dim(); ++i) grades[g.labels[i]] = rational_str(half_units(g.grade2[i]));
      ordered_json doc = {{"name", g.name},
                          {"valid", true},
                          {"dim_even", g.dim() - odd},
                          {"dim_odd", odd},
                          {"triple", g.osp ? "osp" : "sl2"},
                          {"grading", grades},
                          {"algebra", ordered_json::parse(serialize_algebra(g))}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "PASS " << g.name << ": dim " << g.dim() - odd << "|" << odd << ", super Jacobi, invariant form, sl2 triple";
      if (g.osp) os << ", osp(1|2) quintuple";
      os << "\n";
      for (int i = 0; i < g.dim(); ++i)
        os << "  " << g.labels[i] << "  parity " << g.parity[i] << "  grade " << rational_str(half_units(g.grade2[i]))
           << "\n";
      *out = dup(os.str());
    }
    return WALG_OK;
  });
}

int walg_w_build(const walg_algebra* a, int susy, walg_w** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    if (susy && !a->g.osp) throw InputError("algebra '" + a->g.name + "' has no osp(1|2) quintuple");
    auto w = std::make_unique<walg_w>();
    w->susy = susy != 0;
    w->ctx = susy ? make_susy_context(a->g) : make_context(a->g);
    w->gens = solve_generators(w->ctx);
    *out = w.release();
    return WALG_OK;
  });
}

void walg_w_free(walg_w* w) { delete w; }

int walg_w_count(const walg_w* w, int* n) {
  return guard([&] {
    need(w, "W handle");
    need(n, "output");
    *n = static_cast<int>(w->gens.size());
    return WALG_OK;
  });
}

int walg_w_generators(const walg_w* w, const walg_options* o, char** out) {
  return guard([&] {
    need(w, "W handle");
    need(out, "output");
    walg_options op = opts(o);
    Shaping sp(op);
    const ReductionContext& ctx = w->ctx;
    Namer un = ctx.user_names(), gn = ctx.gen_names();
    std::ostringstream os;
    ordered_json list = ordered_json::array();
    for (auto& g : w->gens) {
      if (!sp.keep(g.weight)) continue;
      SuperPoly v = sp(ctx.to_user(g.value));
      std::string name = gn(ctx.gen(g.chain));
      if (op.format == WALG_STRUCTURED)
        list.push_back({{"index", g.chain},
                        {"name", name},
                        {"weight", rational_str(g.weight)},
                        {"parity", ctx.gen(g.chain).parity()},
                        {"text", v.str(un)},
                        {"value", ordered_json::parse(v.to_json())}});
      else
        os << name << " = " << v.str(un) << "\n";
    }
    if (op.format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", ctx.g.name},
                          {"flavor", w->susy ? "susy" : "classical"},
                          {"k", sp.k_str()},
                          {"labels", ctx.g.labels},
                          {"generators", list}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return WALG_OK;
  });
}

namespace {

struct PairResult {
  IndetPoly value;
  std::optional<IndetPoly> closed, direct;
  bool agree = true;
};

PairResult pair_bracket(const walg_w* w, int i, int j, walg_method method) {
  PairResult r;
  const ReductionContext& ctx = w->ctx;
  auto closed = [&] { return w->susy ? susy_w_bracket_closed(ctx, i, j) : w_bracket_closed(ctx, i, j); };
  if (method != WALG_DIRECT) r.closed = closed();
  if (method != WALG_CLOSED) r.direct = w_bracket_direct(ctx, w->gens, i, j);
  r.value = r.closed ? *r.closed : *r.direct;
  if (r.closed && r.direct) r.agree = *r.closed == *r.direct;
  return r;
}

const char* method_name(walg_method m) { return m == WALG_CLOSED ? "closed" : m == WALG_DIRECT ? "direct" : "both"; }

void pair_out(const walg_w* w, int i, int j, const walg_options& op, const Shaping& sp, std::ostringstream& os,
              ordered_json& list, bool& agree) {
  const ReductionContext& ctx = w->ctx;
  Namer gn = ctx.gen_names();
  PairResult r = pair_bracket(w, i, j, op.method);
  agree = agree && r.agree;
  std::string a = gn(ctx.gen(i)), b = gn(ctx.gen(j));
  std::string x = indet_name(w->susy ? Indet::Chi : Indet::Lambda);
  IndetPoly v = sp(r.value);
  if (op.format == WALG_STRUCTURED) {
    ordered_json e = {{"i", i}, {"j", j}, {"left", a}, {"right", b}, {"text", v.str(gn)},
                      {"value", ordered_json::parse(v.to_json())}};
    if (r.closed && r.direct) {
      e["agree"] = r.agree;
      if (!r.agree) e["direct"] = ordered_json::parse(sp(*r.direct).to_json());
    }
    list.push_back(e);
  } else {
    os << "{" << a << " " << x << " " << b << "} = " << v.str(gn);
    if (r.closed && r.direct) os << (r.agree ? "  [closed = direct]" : "  [MISMATCH direct = " + sp(*r.direct).str(gn) + "]");
    os << "\n";
  }
}

}  // namespace

int walg_w_bracket(const walg_w* w, int i, int j, const walg_options* o, char** out) {
  return guard([&] {
    need(w, "W handle");
    need(out, "output");
    int n = static_cast<int>(w->gens.size());
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InputError("generator index out of range: valid 0.." + std::to_string(n - 1));
    walg_options op = opts(o);
    Shaping sp(op);
    std::ostringstream os;
    ordered_json list = ordered_json::array();
    bool agree = true;
    pair_out(w, i, j, op, sp, os, list, agree);
    if (op.format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", w->ctx.g.name}, {"flavor", w->susy ? "susy" : "classical"},
                          {"k", sp.k_str()}, {"method", method_name(op.method)}, {"bracket", list[0]}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return agree ? WALG_OK : WALG_VERIFY_FAILED;
  });
}

int walg_w_table(const walg_w* w, const walg_options* o, char** out) {
  return guard([&] {
    need(w, "W handle");
    need(out, "output");
    walg_options op = opts(o);
    Shaping sp(op);
    std::ostringstream os;
    ordered_json list = ordered_json::array();
    bool agree = true;
    for (auto& a : w->gens) {
      if (!sp.keep(a.weight)) continue;
      for (auto& b : w->gens)
        if (sp.keep(b.weight)) pair_out(w, a.chain, b.chain, op, sp, os, list, agree);
    }
    if (op.format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", w->ctx.g.name}, {"flavor", w->susy ? "susy" : "classical"},
                          {"k", sp.k_str()}, {"method", method_name(op.method)}, {"brackets", list}};
      if (op.method == WALG_BOTH) doc["agree"] = agree;
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return agree ? WALG_OK : WALG_VERIFY_FAILED;
  });
}

int walg_brst_build(const walg_algebra* a, walg_brst** out) {
  return guard([&] {
    need(a, "algebra");
    need(out, "output");
    if (!a->g.osp) throw InputError("algebra '" + a->g.name + "' has no osp(1|2) quintuple");
    auto b = std::make_unique<walg_brst>();
    b->cx = build_complex(a->g);
    *out = b.release();
    return WALG_OK;
  });
}

void walg_brst_free(walg_brst* b) { delete b; }

namespace {

void ensure_cohomology(const walg_brst* cb) {
  auto* b = const_cast<walg_brst*>(cb);
  if (b->m) return;
  auto m = std::make_unique<MinusComplex>(restrict_minus(b->cx, Scalar::i()));
  b->e = cohomology_generators(*m);
  b->table = brst_bracket_table(*m, b->e);
  b->m = std::move(m);
}

}  // namespace

int walg_brst_check(const walg_brst* b, walg_format format, char** out) {
  return guard([&] {
    need(b, "BRST handle");
    need(out, "output");
    SuiteResult r = run_suite(b->cx.g, "d-squared");
    std::ostringstream os;
    ordered_json groups = ordered_json::array();
    for (auto& [n, rep] : r.groups) {
      if (format == WALG_STRUCTURED)
        groups.push_back(report_json(n, rep));
      else
        report_text(os, n, rep);
    }
    if (format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", b->cx.g.name}, {"passed", r.ok()}, {"groups", groups}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return r.ok() ? WALG_OK : WALG_VERIFY_FAILED;
  });
}

int walg_brst_generators(const walg_brst* b, const walg_options* o, char** out) {
  return guard([&] {
    need(b, "BRST handle");
    need(out, "output");
    ensure_cohomology(b);
    walg_options op = opts(o);
    Shaping sp(op);
    Namer nm = b->m->cx.names();
    std::ostringstream os;
    ordered_json list = ordered_json::array();
    for (auto& e : b->e) {
      if (!sp.keep(e.weight)) continue;
      Var sym = b->cx.chains.gen(e.chain);
      SuperPoly v = sp(e.value);
      if (op.format == WALG_STRUCTURED)
        list.push_back({{"index", e.chain},
                        {"name", nm(sym)},
                        {"weight", rational_str(e.weight)},
                        {"filtration_steps", e.steps},
                        {"text", v.str(nm)},
                        {"value", ordered_json::parse(v.to_json())}});
      else
        os << nm(sym) << " = " << v.str(nm) << "\n";
    }
    if (op.format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", b->cx.g.name}, {"c", "i"}, {"k", sp.k_str()}, {"generators", list}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return WALG_OK;
  });
}

int walg_brst_table(const walg_brst* b, const walg_options* o, char** out) {
  return guard([&] {
    need(b, "BRST handle");
    need(out, "output");
    ensure_cohomology(b);
    walg_options op = opts(o);
    Shaping sp(op);
    Namer nm = b->m->cx.names();
    std::ostringstream os;
    ordered_json list = ordered_json::array();
    for (auto& x : b->e) {
      if (!sp.keep(x.weight)) continue;
      for (auto& y : b->e) {
        if (!sp.keep(y.weight)) continue;
        Var a = b->cx.chains.gen(x.chain), c = b->cx.chains.gen(y.chain);
        const IndetPoly* p = b->table.get(a, c);
        IndetPoly v = sp(p ? *p : IndetPoly(Indet::Chi));
        if (op.format == WALG_STRUCTURED)
          list.push_back({{"i", x.chain}, {"j", y.chain}, {"left", nm(a)}, {"right", nm(c)}, {"text", v.str(nm)},
                          {"value", ordered_json::parse(v.to_json())}});
        else
          os << "{" << nm(a) << " χ " << nm(c) << "} = " << v.str(nm) << "\n";
      }
    }
    if (op.format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", b->cx.g.name}, {"c", "i"}, {"k", sp.k_str()}, {"brackets", list}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return WALG_OK;
  });
}

const char* const* walg_suites(void) {
  static std::vector<const char*> names = [] {
    std::vector<const char*> v;
    for (auto& s : suites()) v.push_back(s.name.c_str());
    v.push_back("all");
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

int walg_verify(const walg_algebra* a, const char* suite, unsigned seed, walg_format format, char** out) {
  return guard([&] {
    need(a, "algebra");
    need(suite, "suite");
    need(out, "output");
    std::vector<std::string> run;
    if (std::string(suite) == "all") {
      for (auto& s : suites())
        if (!s.needs_osp || a->g.osp) run.push_back(s.name);
    } else {
      run.push_back(suite);
    }
    bool ok = true;
    std::ostringstream os;
    ordered_json all = ordered_json::array();
    for (auto& s : run) {
      SuiteResult r = run_suite(a->g, s, seed);
      ok = ok && r.ok();
      ordered_json groups = ordered_json::array();
      for (auto& [n, rep] : r.groups) {
        if (format == WALG_STRUCTURED)
          groups.push_back(report_json(n, rep));
        else
          report_text(os, run.size() > 1 ? s + ": " + n : n, rep);
      }
      all.push_back({{"suite", s}, {"passed", r.ok()}, {"groups", groups}});
    }
    if (format == WALG_STRUCTURED) {
      ordered_json doc = {{"algebra", a->g.name}, {"seed", seed}, {"passed", ok}, {"suites", all}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(os.str());
    }
    return ok ? WALG_OK : WALG_VERIFY_FAILED;
  });
}

}  // extern "C"
