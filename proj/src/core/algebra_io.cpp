#include "walg/algebra_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace walg {

using nlohmann::json;

namespace {

struct Ctx {
  std::string source;
  [[noreturn]] void fail(const std::string& field, const std::string& why) const {
    throw InputError(source + ": field '" + field + "': " + why);
  }
};

Scalar scalar_field(const Ctx& cx, const json& v, const std::string& field) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) cx.fail(field, "expected a rational string like \"p/q\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    cx.fail(field, e.what());
  }
}

int index_field(const Ctx& cx, const json& v, const std::string& field, const LieSuperalgebra& g) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= g.dim()) cx.fail(field, "index out of range");
    return i;
  }
  if (v.is_string()) {
    int i = g.index_of(v.get<std::string>());
    if (i < 0) cx.fail(field, "unknown basis label '" + v.get<std::string>() + "'");
    return i;
  }
  cx.fail(field, "expected a basis index or label");
}

Element element_field(const Ctx& cx, const json& v, const std::string& field, const LieSuperalgebra& g) {
  if (!v.is_array()) cx.fail(field, "expected a list of [basis, coefficient] pairs");
  Element x(g.dim());
  for (size_t t = 0; t < v.size(); ++t) {
    std::string f = field + "[" + std::to_string(t) + "]";
    if (!v[t].is_array() || v[t].size() != 2) cx.fail(f, "expected [basis, coefficient]");
    int i = index_field(cx, v[t][0], f + "[0]", g);
    x[i] += scalar_field(cx, v[t][1], f + "[1]");
  }
  return x;
}

}  // namespace

static LieSuperalgebra parse_doc(const std::string& text, const std::string& source) {
  Ctx cx{source};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  if (!doc.is_object()) cx.fail("<root>", "expected an object");
  LieSuperalgebra g;
  if (doc.contains("name") && !doc["name"].is_string()) cx.fail("name", "expected a string");
  g.name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
    cx.fail("basis", "expected a nonempty list");
  for (size_t i = 0; i < doc["basis"].size(); ++i) {
    const json& b = doc["basis"][i];
    std::string f = "basis[" + std::to_string(i) + "]";
    if (!b.is_object() || !b.contains("label") || !b["label"].is_string()) cx.fail(f + ".label", "missing label");
    if (b.contains("parity") && !b["parity"].is_number_integer()) cx.fail(f + ".parity", "parity must be 0 or 1");
    int p = b.value("parity", 0);
    if (p != 0 && p != 1) cx.fail(f + ".parity", "parity must be 0 or 1");
    std::string lab = b["label"].get<std::string>();
    if (g.index_of(lab) >= 0) cx.fail(f + ".label", "duplicate label '" + lab + "'");
    g.labels.push_back(lab);
    g.parity.push_back(p);
  }
  int n = g.dim();
  g.brackets.assign(n * n, {});
  g.form.assign(n, std::vector<Scalar>(n));
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_array()) cx.fail("brackets", "expected a list");
    std::vector<Element> dense(n * n, Element(n));
    for (size_t t = 0; t < br.size(); ++t) {
      std::string f = "brackets[" + std::to_string(t) + "]";
      if (!br[t].is_object() || !br[t].contains("i") || !br[t].contains("j") || !br[t].contains("coeffs"))
        cx.fail(f, "expected {i, j, coeffs}");
      int i = index_field(cx, br[t]["i"], f + ".i", g);
      int j = index_field(cx, br[t]["j"], f + ".j", g);
      Element c = element_field(cx, br[t]["coeffs"], f + ".coeffs", g);
      dense[i * n + j] = add(dense[i * n + j], c);
    }
    for (int i = 0; i < n * n; ++i)
      for (int l = 0; l < n; ++l)
        if (!dense[i][l].is_zero()) g.brackets[i].push_back({l, dense[i][l]});
  }
  if (!doc.contains("form") || !doc["form"].is_array()) cx.fail("form", "expected a list of {i, j, value}");
  for (size_t t = 0; t < doc["form"].size(); ++t) {
    const json& e = doc["form"][t];
    std::string f = "form[" + std::to_string(t) + "]";
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value"))
      cx.fail(f, "expected {i, j, value}");
    int i = index_field(cx, e["i"], f + ".i", g);
    int j = index_field(cx, e["j"], f + ".j", g);
    g.form[i][j] += scalar_field(cx, e["value"], f + ".value");
  }
  if (doc.contains("osp")) {
    const json& o = doc["osp"];
    for (const char* key : {"E", "e", "H", "f", "F"})
      if (!o.contains(key)) cx.fail(std::string("osp.") + key, "missing");
    g.osp = OspTriple{element_field(cx, o["E"], "osp.E", g), element_field(cx, o["e"], "osp.e", g),
                      element_field(cx, o["H"], "osp.H", g), element_field(cx, o["f"], "osp.f", g),
                      element_field(cx, o["F"], "osp.F", g)};
    g.sl2 = Sl2Triple{g.osp->E, g.osp->H, g.osp->F};
  } else if (doc.contains("sl2")) {
    const json& o = doc["sl2"];
    for (const char* key : {"E", "H", "F"})
      if (!o.contains(key)) cx.fail(std::string("sl2.") + key, "missing");
    g.sl2 = Sl2Triple{element_field(cx, o["E"], "sl2.E", g), element_field(cx, o["H"], "sl2.H", g),
                      element_field(cx, o["F"], "sl2.F", g)};
  }
  if (g.sl2) {
    auto bad = compute_grading(g, g.sl2->H);
    if (!bad.empty()) cx.fail(g.osp ? "osp.H" : "sl2.H", bad.front());
  }
  return g;
}

static json element_json(const LieSuperalgebra& g, const Element& x) {
  json a = json::array();
  for (int i = 0; i < g.dim(); ++i)
    if (!x[i].is_zero()) a.push_back(json::array({g.labels[i], x[i].serialize()}));
  return a;
}

std::string serialize_algebra(const LieSuperalgebra& g) {
  json doc;
  doc["name"] = g.name;
  doc["basis"] = json::array();
  for (int i = 0; i < g.dim(); ++i) doc["basis"].push_back({{"label", g.labels[i]}, {"parity", g.parity[i]}});
  doc["brackets"] = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      const auto& b = g.bracket_of(i, j);
      if (b.empty()) continue;
      json cs = json::array();
      for (auto& [l, c] : b) cs.push_back(json::array({l, c.serialize()}));
      doc["brackets"].push_back({{"i", i}, {"j", j}, {"coeffs", cs}});
    }
  doc["form"] = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (!g.form[i][j].is_zero()) doc["form"].push_back({{"i", i}, {"j", j}, {"value", g.form[i][j].serialize()}});
  if (g.osp) {
    doc["osp"] = {{"E", element_json(g, g.osp->E)}, {"e", element_json(g, g.osp->e)},
                  {"H", element_json(g, g.osp->H)}, {"f", element_json(g, g.osp->f)},
                  {"F", element_json(g, g.osp->F)}};
  } else if (g.sl2) {
    doc["sl2"] = {{"E", element_json(g, g.sl2->E)}, {"H", element_json(g, g.sl2->H)}, {"F", element_json(g, g.sl2->F)}};
  }
  return doc.dump(1);
}

LieSuperalgebra parse_algebra(const std::string& text, const std::string& source) {
  try {
    return parse_doc(text, source);
  } catch (const json::exception& e) {
    throw InputError(source + ": " + e.what());
  }
}

LieSuperalgebra load_algebra(const std::string& name_or_path) {
  std::string text, source = name_or_path;
  std::string want = name_or_path;
  if (want == "sl3") want = "sl3-principal";
  if (want == "sl3-min") want = "sl3-minimal";
  if (want == "osp(1|2)") want = "osp12";
  if (want == "sl(2|1)") want = "sl21";
  bool found = false;
  for (auto& e : catalog())
    if (e.name == want) {
      text = e.text;
      source = "catalog:" + e.name;
      found = true;
    }
  if (!found) {
    std::ifstream in(name_or_path);
    if (!in) throw InputError("unknown algebra '" + name_or_path + "' (neither a catalog name nor a readable file)");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  LieSuperalgebra g = parse_algebra(text, source);
  auto bad = validate_algebra(g);
  if (!bad.empty()) throw InputError(source + ": " + bad.front());
  if (!g.sl2) throw InputError(source + ": field 'sl2': no sl2 or osp triple given");
  bad = g.osp ? validate_osp(g, *g.osp) : validate_sl2(g, *g.sl2);
  if (!bad.empty()) throw InputError(source + ": " + bad.front());
  return g;
}

}  // namespace walg
