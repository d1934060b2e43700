#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "walg/walg.h"

namespace {

struct Flags {
  std::string algebra;
  std::string format = "text";
  std::string k;
  std::string max_weight;
  std::string suite = "all";
  unsigned seed = 1;
  bool closed = false, direct = false, both = false;
  bool cross_brst = false;
  int i = 0, j = 0;
};

std::string escape(const std::string& s) {
  std::string o;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') o += '\\';
    if (ch == '\n') {
      o += "\\n";
      continue;
    }
    o += ch;
  }
  return o;
}

int exit_code(int status) {
  switch (status) {
    case WALG_OK: return 0;
    case WALG_VERIFY_FAILED: return 1;
    case WALG_INPUT_ERROR: return 2;
    default: return 3;
  }
}

class Runner {
 public:
  explicit Runner(const Flags& f) : f_(f) {
    walg_options_init(&o_);
    o_.format = structured() ? WALG_STRUCTURED : WALG_TEXT;
    o_.method = f.both ? WALG_BOTH : f.direct ? WALG_DIRECT : WALG_CLOSED;
    if (!f.k.empty()) o_.k = f_.k.c_str();
    if (!f.max_weight.empty()) o_.max_weight = f_.max_weight.c_str();
  }
  ~Runner() {
    walg_w_free(w_);
    walg_brst_free(b_);
    walg_algebra_free(a_);
  }

  bool structured() const { return f_.format == "structured"; }

  int fail(int st) {
    std::string msg = walg_last_error();
    if (structured())
      std::cout << "{\n  \"status\": " << st << ",\n  \"error\": \"" << escape(msg) << "\"\n}\n";
    std::cerr << "error: " << msg << "\n";
    return exit_code(st);
  }

  // prints and frees; VERIFY_FAILED still carries a document
  int emit(int st, char* out) {
    if (st != WALG_OK && st != WALG_VERIFY_FAILED) return fail(st);
    std::cout << out;
    walg_string_free(out);
    return exit_code(st);
  }

  int load() {
    if (f_.algebra.empty()) {
      std::cerr << "error: --algebra is required\n";
      return 2;
    }
    int st = walg_algebra_load(f_.algebra.c_str(), &a_);
    return st == WALG_OK ? 0 : fail(st);
  }
  int build_w(bool susy) {
    if (int r = load()) return r;
    int st = walg_w_build(a_, susy, &w_);
    return st == WALG_OK ? 0 : fail(st);
  }
  int build_brst() {
    if (int r = load()) return r;
    int st = walg_brst_build(a_, &b_);
    return st == WALG_OK ? 0 : fail(st);
  }

  int catalog() {
    char* out = nullptr;
    int st = walg_catalog(o_.format, &out);
    return emit(st, out);
  }
  int validate() {
    if (int r = load()) return r;
    char* out = nullptr;
    int st = walg_algebra_describe(a_, o_.format, &out);
    return emit(st, out);
  }
  int generators(bool susy) {
    if (int r = build_w(susy)) return r;
    char* out = nullptr;
    int st = walg_w_generators(w_, &o_, &out);
    return emit(st, out);
  }
  int bracket(bool susy) {
    if (int r = build_w(susy)) return r;
    char* out = nullptr;
    int st = walg_w_bracket(w_, f_.i, f_.j, &o_, &out);
    return emit(st, out);
  }
  int table(bool susy) {
    if (int r = build_w(susy)) return r;
    char* out = nullptr;
    int st = walg_w_table(w_, &o_, &out);
    return emit(st, out);
  }
  int verify(const std::string& suite) {
    if (int r = load()) return r;
    char* out = nullptr;
    int st = walg_verify(a_, suite.c_str(), f_.seed, o_.format, &out);
    return emit(st, out);
  }
  int susy_verify() {
    if (int r = load()) return r;
    std::string suites[] = {"susy-chain-tensor", "susy-closed-formulas", "susy-to-pva", "brst-equivalence"};
    int n = f_.cross_brst ? 4 : 3;
    int worst = WALG_OK;
    std::string docs;
    for (int t = 0; t < n; ++t) {
      char* out = nullptr;
      int st = walg_verify(a_, suites[t].c_str(), f_.seed, o_.format, &out);
      if (st != WALG_OK && st != WALG_VERIFY_FAILED) return fail(st);
      if (st == WALG_VERIFY_FAILED) worst = st;
      if (structured()) {
        std::string s = out;
        while (!s.empty() && s.back() == '\n') s.pop_back();
        docs += (t ? ",\n" : "") + s;
      } else {
        std::cout << out;
      }
      walg_string_free(out);
    }
    if (structured())
      std::cout << "{\"passed\": " << (worst == WALG_OK ? "true" : "false") << ", \"reports\": [\n" << docs << "\n]}\n";
    return exit_code(worst);
  }
  int brst_check() {
    if (int r = build_brst()) return r;
    char* out = nullptr;
    int st = walg_brst_check(b_, o_.format, &out);
    return emit(st, out);
  }
  int brst_generators() {
    if (int r = build_brst()) return r;
    char* out = nullptr;
    int st = walg_brst_generators(b_, &o_, &out);
    return emit(st, out);
  }
  int brst_table() {
    if (int r = build_brst()) return r;
    char* out = nullptr;
    int st = walg_brst_table(b_, &o_, &out);
    return emit(st, out);
  }

 private:
  const Flags& f_;
  walg_options o_;
  walg_algebra* a_ = nullptr;
  walg_w* w_ = nullptr;
  walg_brst* b_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classical and SUSY W-algebras of Lie superalgebras"};
  app.require_subcommand(1);
  Flags f;

  std::string suite_help = "verification suite:";
  for (const char* const* s = walg_suites(); *s; ++s) suite_help += std::string(" ") + *s;

  auto common = [&](CLI::App* c) {
    c->add_option("--algebra,-a", f.algebra, "catalog name or algebra file");
    c->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    c->add_option("--k", f.k, "level: rational value or 'symbolic'");
    c->add_option("--seed", f.seed, "seed for randomized suites");
    c->add_option("--max-weight", f.max_weight, "drop generators of larger conformal weight");
    auto* g = c->add_option_group("method");
    g->add_flag("--closed", f.closed, "closed bracket formula (default)");
    g->add_flag("--direct", f.direct, "direct reduction");
    g->add_flag("--both", f.both, "compute both and compare");
    g->require_option(0, 1);
  };
  auto pair = [&](CLI::App* c) {
    c->add_option("i", f.i, "left generator index")->required();
    c->add_option("j", f.j, "right generator index")->required();
  };

  auto* catalog = app.add_subcommand("catalog", "list shipped algebras");
  auto* validate = app.add_subcommand("validate", "check an algebra and its triple");
  auto* gens = app.add_subcommand("generators", "W-algebra generators");
  auto* br = app.add_subcommand("bracket", "λ-bracket of two W generators");
  auto* table = app.add_subcommand("bracket-table", "all λ-brackets of W generators");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* bcheck = app.add_subcommand("brst-check", "{d_χ d} = 0 and d_[0]² = 0");
  auto* bgens = app.add_subcommand("brst-generators", "BRST cohomology generators (c = i)");
  auto* btable = app.add_subcommand("brst-table", "χ-brackets of BRST cohomology generators (c = i)");
  auto* sgens = app.add_subcommand("susy-generators", "SUSY W-algebra generators");
  auto* sbr = app.add_subcommand("susy-bracket", "χ-bracket of two SUSY W generators");
  auto* stable = app.add_subcommand("susy-bracket-table", "all χ-brackets of SUSY W generators");
  auto* sverify = app.add_subcommand("susy-verify", "SUSY reduction checks");
  for (auto* c : {catalog, validate, gens, br, table, verify, bcheck, bgens, btable, sgens, sbr, stable, sverify})
    common(c);
  pair(br);
  pair(sbr);
  verify->add_option("--suite", f.suite, suite_help);
  sverify->add_flag("--cross-brst", f.cross_brst, "also compare with the BRST construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Runner r(f);
  if (*catalog) return r.catalog();
  if (*validate) return r.validate();
  if (*gens) return r.generators(false);
  if (*br) return r.bracket(false);
  if (*table) return r.table(false);
  if (*verify) return r.verify(f.suite);
  if (*bcheck) return r.brst_check();
  if (*bgens) return r.brst_generators();
  if (*btable) return r.brst_table();
  if (*sgens) return r.generators(true);
  if (*sbr) return r.bracket(true);
  if (*stable) return r.table(true);
  if (*sverify) return r.susy_verify();
  return 2;
}
