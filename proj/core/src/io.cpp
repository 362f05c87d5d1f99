#include "gkz/io.hpp"

#include <fstream>
#include <sstream>

namespace gkz {

// ---------------------------------------------------------------- serializers

Json rat_json(const Rat& r) { return r.str(); }

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rat_json(x));
  return a;
}

Json ivec_json(const IVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_long(x));
  return a;
}

Json cplx_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json cvec_json(const CVec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(cplx_json(v(i)));
  return a;
}

Rat rat_of_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rat(j.get<std::string>());
    } catch (const std::exception&) {
      throw gkz_error("BadInput", "not a rational: " + j.get<std::string>());
    }
  }
  throw gkz_error("BadInput", "rationals must be integers or \"p/q\" strings, got " + j.dump());
}

namespace {

Int int_of_json(const Json& j) {
  if (!j.is_number_integer()) throw gkz_error("BadInput", "expected an integer, got " + j.dump());
  return Int(j.get<long long>());
}

IVec ivec_of_json(const Json& j) {
  if (!j.is_array()) throw gkz_error("BadInput", "expected an integer array, got " + j.dump());
  IVec v;
  for (auto& x : j) v.push_back(int_of_json(x));
  return v;
}

QVec qvec_of_json(const Json& j) {
  if (!j.is_array()) throw gkz_error("BadInput", "expected an array, got " + j.dump());
  QVec v;
  for (auto& x : j) v.push_back(rat_of_json(x));
  return v;
}

void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw gkz_error("BadInput", where + " must be a table");
  for (auto& [key, val] : j.items()) {
    (void)val;
    bool ok = false;
    for (auto& a : allowed) ok = ok || key == a;
    if (!ok) throw gkz_error("BadInput", "unknown key '" + key + "' in " + where);
  }
}

ZPoint zpoint_of_json(const Json& j, size_t n) {
  check_keys(j, {"mlog", "arg_pi", "values"}, "zpoints entry");
  ZPoint z;
  if (j.contains("values")) {
    if (j.contains("mlog") || j.contains("arg_pi"))
      throw gkz_error("BadInput", "give either values or mlog/arg_pi, not both");
    std::vector<cplx> vals;
    for (auto& p : j["values"]) {
      if (!p.is_array() || p.size() != 2)
        throw gkz_error("BadInput", "complex values are [re, im] pairs");
      vals.push_back(cplx(p[0].get<double>(), p[1].get<double>()));
    }
    z = zpoint_of(vals);
  } else {
    if (!j.contains("mlog") || !j.contains("arg_pi"))
      throw gkz_error("BadInput", "zpoints entries need mlog and arg_pi (or values)");
    z.mlog = qvec_of_json(j["mlog"]);
    z.arg_pi = qvec_of_json(j["arg_pi"]);
  }
  if (z.n() != n || z.arg_pi.size() != n)
    throw gkz_error("BadInput", "evaluation point length does not match the configuration");
  for (auto& a : z.arg_pi)
    if (a <= -1 || a > 1) throw gkz_error("BadInput", "arg_pi must lie in (-1, 1]");
  return z;
}

}  // namespace

// -------------------------------------------------------------------- parsing

ConfigFile parse_config(const Json& j) {
  check_keys(j,
             {"name", "points", "height", "beta", "triangulations", "flips", "zpoints", "bound",
              "nodes", "tolerance", "quad_tol"},
             "config");
  if (!j.contains("points") || !j.contains("height"))
    throw gkz_error("BadInput", "config needs points and height");

  ConfigFile c;
  if (j.contains("name")) c.name = j["name"].get<std::string>();

  std::vector<IVec> pts;
  if (!j["points"].is_array()) throw gkz_error("BadInput", "points must be an array of vectors");
  for (auto& p : j["points"]) pts.push_back(ivec_of_json(p));
  c.config = validate_configuration(pts, ivec_of_json(j["height"]));

  c.beta = IVec(c.config.d(), Int(0));
  if (j.contains("beta")) {
    c.beta = ivec_of_json(j["beta"]);
    if (c.beta.size() != c.config.d())
      throw gkz_error("BadInput", "beta length does not match the dimension");
  }

  if (j.contains("triangulations"))
    for (auto& [name, omega] : j["triangulations"].items()) {
      QVec w = qvec_of_json(omega);
      if (w.size() != c.config.n())
        throw gkz_error("BadInput", "height vector '" + name + "' has the wrong length");
      c.heights.emplace_back(name, w);
    }

  if (j.contains("flips"))
    for (auto& [name, pair] : j["flips"].items()) {
      if (!pair.is_array() || pair.size() != 2)
        throw gkz_error("BadInput", "flip '" + name + "' must be a [plus, minus] pair");
      std::string p = pair[0].get<std::string>(), m = pair[1].get<std::string>();
      for (auto& side : {p, m}) {
        bool found = false;
        for (auto& [tn, w] : c.heights) {
          (void)w;
          found = found || tn == side;
        }
        if (!found)
          throw gkz_error("BadInput", "flip '" + name + "' names unknown triangulation " + side);
      }
      c.flips.emplace_back(name, std::make_pair(p, m));
    }

  if (j.contains("zpoints"))
    for (auto& zj : j["zpoints"]) c.zpoints.push_back(zpoint_of_json(zj, c.config.n()));

  if (j.contains("bound")) {
    c.policy.bound = int_of_json(j["bound"]);
    if (c.policy.bound < 1) throw gkz_error("BadInput", "bound must be positive");
  }
  if (j.contains("nodes")) {
    c.policy.nodes = (int)to_long(int_of_json(j["nodes"]));
    if (c.policy.nodes < 4) throw gkz_error("BadInput", "nodes must be at least 4");
  }
  if (j.contains("tolerance")) c.policy.tolerance = j["tolerance"].get<double>();
  if (j.contains("quad_tol")) c.policy.quad_tol = j["quad_tol"].get<double>();
  return c;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// strip a trailing comment, respecting quoted strings
std::string strip_comment(const std::string& s) {
  bool q = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') q = !q;
    if (s[i] == '#' && !q) return s.substr(0, i);
  }
  return s;
}

Json toml_value(const std::string& raw, int line);

Json toml_array(const std::string& body, int line) {
  Json a = Json::array();
  int depth = 0;
  bool q = false;
  std::string cur;
  for (char ch : body) {
    if (ch == '"') q = !q;
    if (!q) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        if (!trim(cur).empty()) a.push_back(toml_value(trim(cur), line));
        cur.clear();
        continue;
      }
    }
    cur += ch;
  }
  if (!trim(cur).empty()) a.push_back(toml_value(trim(cur), line));
  return a;
}

Json toml_value(const std::string& raw, int line) {
  std::string v = trim(raw);
  if (v.empty()) throw gkz_error("ParseError", "line " + std::to_string(line) + ": missing value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"')
      throw gkz_error("ParseError", "line " + std::to_string(line) + ": unterminated string");
    return v.substr(1, v.size() - 2);
  }
  if (v.front() == '[') {
    if (v.back() != ']')
      throw gkz_error("ParseError", "line " + std::to_string(line) + ": unterminated array");
    return toml_array(v.substr(1, v.size() - 2), line);
  }
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    size_t used = 0;
    if (v.find_first_of(".eE") != std::string::npos && v.find_first_not_of("+-0123456789.eE") ==
                                                           std::string::npos) {
      double d = std::stod(v, &used);
      if (used == v.size()) return d;
    } else {
      long long n = std::stoll(v, &used);
      if (used == v.size()) return n;
    }
  } catch (const std::exception&) {
  }
  throw gkz_error("ParseError", "line " + std::to_string(line) + ": bad value " + v);
}

}  // namespace

Json parse_toml(const std::string& text) {
  Json root = Json::object();
  Json* cur = &root;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    if (s.size() > 3 && s.substr(0, 2) == "[[" && s.substr(s.size() - 2) == "]]") {
      std::string name = trim(s.substr(2, s.size() - 4));
      if (!root.contains(name)) root[name] = Json::array();
      root[name].push_back(Json::object());
      cur = &root[name].back();
    } else if (s.front() == '[' && s.back() == ']') {
      std::string name = trim(s.substr(1, s.size() - 2));
      if (!root.contains(name)) root[name] = Json::object();
      cur = &root[name];
    } else {
      size_t eq = s.find('=');
      if (eq == std::string::npos)
        throw gkz_error("ParseError", "line " + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(s.substr(0, eq));
      if (key.empty())
        throw gkz_error("ParseError", "line " + std::to_string(lineno) + ": empty key");
      (*cur)[key] = toml_value(s.substr(eq + 1), lineno);
    }
  }
  return root;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gkz_error("BadInput", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".toml") {
    j = parse_toml(buf.str());
  } else {
    try {
      j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
      throw gkz_error("ParseError", e.what());
    }
  }
  return parse_config(j);
}

ConfigFile bundled_config_file(const BundledConfig& b) {
  ConfigFile c;
  c.name = b.name;
  c.config = b.config;
  c.beta = IVec(b.config.d(), Int(0));
  c.heights = b.heights;
  c.flips = b.flips;
  return c;
}

// -------------------------------------------------------------------- results

Json resolved_config(const ConfigFile& c) {
  Json out;
  out["name"] = c.name;
  Json pts = Json::array();
  for (auto& p : c.config.points) pts.push_back(ivec_json(p));
  out["points"] = pts;
  out["height"] = ivec_json(c.config.h);
  out["beta"] = ivec_json(c.beta);
  Json tris = Json::object();
  for (auto& [name, w] : c.heights) tris[name] = qvec_json(w);
  out["triangulations"] = tris;
  Json fl = Json::object();
  for (auto& [name, pair] : c.flips) fl[name] = Json::array({pair.first, pair.second});
  out["flips"] = fl;
  Json zs = Json::array();
  for (auto& z : c.zpoints)
    zs.push_back(Json{{"mlog", qvec_json(z.mlog)}, {"arg_pi", qvec_json(z.arg_pi)}});
  out["zpoints"] = zs;
  out["bound"] = to_long(c.policy.bound);
  out["nodes"] = c.policy.nodes;
  out["tolerance"] = c.policy.tolerance;
  out["quad_tol"] = c.policy.quad_tol;
  return out;
}

namespace {

Triangulation named_triangulation(const ConfigFile& c, const std::string& name) {
  for (auto& [nm, omega] : c.heights)
    if (nm == name) return regular_triangulation_lex(c.config, omega);
  throw gkz_error("UnknownTriangulation", name);
}

Json box_json(const StackyFan& F) {
  Json out = Json::array();
  for (auto& b : box_elements(F)) {
    Json sigma = Json::array();
    for (int p : b.sigma) sigma.push_back(F.labels[p]);
    out.push_back(Json{{"v", ivec_json(b.v)}, {"q", qvec_json(b.q)}, {"sigma", sigma}});
  }
  return out;
}

Json zpoint_json(const ZPoint& z) {
  return Json{{"mlog", qvec_json(z.mlog)},
              {"arg_pi", qvec_json(z.arg_pi)},
              {"values", [&] {
                 Json a = Json::array();
                 for (auto v : z.values()) a.push_back(cplx_json(v));
                 return a;
               }()}};
}

}  // namespace

Json cmd_info(const ConfigFile& c) {
  Json out;
  out["command"] = "info";
  out["config"] = resolved_config(c);
  out["n"] = (long)c.config.n();
  out["d"] = (long)c.config.d();
  out["volume"] = to_long(normalized_volume(c.config));
  Json basis = Json::array();
  for (auto& b : c.config.relation_basis) basis.push_back(ivec_json(b));
  out["L_basis"] = basis;
  Json tris = Json::object();
  for (auto& [name, omega] : c.heights) {
    (void)omega;
    Triangulation T = named_triangulation(c, name);
    Json entry;
    Json cells = Json::array();
    for (auto& cell : T.cells) cells.push_back(cell);
    entry["cells"] = cells;
    entry["box"] = box_json(T.fan());
    entry["sr_dimension"] = (long)quotient_basis(T).dim;
    tris[name] = entry;
  }
  out["triangulations"] = tris;
  return out;
}

Json cmd_solve(const ConfigFile& c, const std::string& triangulation, size_t z_index) {
  Triangulation T = named_triangulation(c, triangulation);

  SRQuotient S = quotient_basis(T);
  KRing K = build_kring(T);
  ExponentChoice choice = choose_gamma(T, c.beta);
  SeriesConeFamily fam = build_series_cones(T);
  DomainSpec U = build_domain(c.config, fam.total, 1);

  ZPoint z;
  bool synthesized = false;
  if (c.zpoints.empty() && z_index == 0) {
    // no point given: double the deep offset, which stays strictly inside
    // offset + dual since the offset is interior to the dual cone
    QVec twice = U.offset;
    for (auto& x : twice) x *= 2;
    z.mlog = fam.degenerate ? QVec(c.config.n(), Rat(1)) : lift_to_ambient(c.config, twice);
    z.arg_pi = QVec(c.config.n(), rat(-1, 2));
    synthesized = true;
  } else if (z_index < c.zpoints.size()) {
    z = c.zpoints[z_index];
  } else {
    throw gkz_error("BadArgument",
                    "no evaluation point with index " + std::to_string(z_index));
  }

  XiResult xi = evaluate_Xi(T, K, choice, z, c.policy.bound, &U);
  PsiResult psi = evaluate_Psi(T, S, K, choice, z, c.policy.bound);

  Json out;
  out["command"] = "solve";
  out["config"] = resolved_config(c);
  out["triangulation"] = triangulation;
  out["z_index"] = (long)z_index;
  out["z"] = zpoint_json(z);
  out["z_synthesized"] = synthesized;
  Json sectors = Json::array();
  for (size_t v = 0; v < K.sectors.size(); ++v)
    sectors.push_back(Json{{"v", ivec_json(K.sectors[v].box.v)},
                           {"gamma", qvec_json(choice.gamma[v])},
                           {"shift", ivec_json(choice.shift_L[v])},
                           {"value", cvec_json(xi.sector[v])}});
  out["sectors"] = sectors;
  out["solutions"] = cvec_json(xi.total);  // the dual-basis functional values
  out["tail"] = xi.tail;
  out["sr_values"] = cvec_json(psi.value);
  out["sr_tail"] = psi.tail;
  return out;
}

Json cmd_verify(const ConfigFile& c, const std::string& flip) {
  const std::pair<std::string, std::string>* pair = nullptr;
  for (auto& [name, pm] : c.flips)
    if (name == flip) pair = &pm;
  if (!pair) throw gkz_error("BadArgument", "unknown flip " + flip);

  Triangulation Tp = named_triangulation(c, pair->first);
  Triangulation Tm = named_triangulation(c, pair->second);
  FlipContext ctx = build_flip_context(Tp, Tm);

  Json out;
  out["command"] = "verify";
  out["config"] = resolved_config(c);
  out["flip"] = flip;
  bool pass = true;

  // exact dimension agreement with the normalized volume, on both sides
  long vol = to_long(normalized_volume(c.config));
  SRQuotient Sp = quotient_basis(Tp), Sm = quotient_basis(Tm);
  KRing Kp = build_kring(Tp), Km = build_kring(Tm);
  KRing Khat = build_kring(ctx.hat.fan);
  bool dims_ok = (long)Sp.dim == vol && (long)Sm.dim == vol && (long)Kp.total_dim == vol &&
                 (long)Km.total_dim == vol;
  pass = pass && dims_ok;
  out["dimensions"] = Json{{"volume", vol},
                           {"sr_plus", (long)Sp.dim},
                           {"sr_minus", (long)Sm.dim},
                           {"k_plus", (long)Kp.total_dim},
                           {"k_minus", (long)Km.total_dim},
                           {"k_hat", (long)Khat.total_dim},
                           {"pass", dims_ok}};

  // build_kring already checked the Laurent / squarefree / inverse relations
  out["presentation"] = Json{{"tolerance", 1e-10}, {"pass", true}};

  check_circuit_annihilation(ctx, Kp, Km);
  out["annihilation"] = Json{{"tolerance", 1e-10}, {"pass", true}};

  Json corr;
  corr["order"] = to_long(ctx.order);
  corr["radius"] = ctx.radius;
  Json roots = Json::array();
  for (auto& r : ctx.roots) roots.push_back(rat_json(r.angle));
  corr["roots"] = roots;
  Json secs = Json::array();
  for (size_t v = 0; v < ctx.box_plus.size(); ++v) {
    Json angles = Json::array();
    for (auto& a : ctx.root_angles[v]) angles.push_back(rat_json(a));
    Json matched = Json::array();
    for (int w : ctx.sector_of_root[v]) matched.push_back(w);
    secs.push_back(Json{{"v", ivec_json(ctx.box_plus[v].v)},
                        {"essential", (bool)ctx.essential_plus[v]},
                        {"attached_roots", angles},
                        {"minus_sector", matched}});
  }
  corr["plus_sectors"] = secs;
  out["correspondence"] = corr;

  // exhaustive support-exchange lemmas on a small box (the test suite runs the
  // same checks at a larger bound)
  LemmaReport lr = check_flip_lemmas(ctx, c.beta, 6);
  pass = pass && lr.pass();
  out["lemmas"] = Json{{"bound", to_long(lr.bound)},
                       {"lattice_points", lr.lattice_points},
                       {"exchange", lr.exchange},
                       {"projection", lr.projection},
                       {"cutoff", lr.cutoff},
                       {"pass", lr.pass()}};

  // distinct minus-side endpoints: deepening the margin moves the base point
  std::vector<ZPoint> samples = c.zpoints;
  if (samples.empty())
    for (long m = 1; m <= 3; ++m)
      samples.push_back(build_path(Tp, Tm, ctx.circuit, 1, Rat(m)).z_minus);

  DiagramReport dr = verify_diagram(ctx, Kp, Km, c.beta, samples, c.policy);
  pass = pass && dr.pass;
  Json dj;
  dj["tolerance"] = dr.tolerance;
  dj["negative_control"] = c.policy.negative_control;
  dj["pass"] = dr.pass;
  Json sj = Json::array();
  for (auto& s : dr.samples) {
    Json e;
    e["z"] = Json{{"mlog", qvec_json(s.z.mlog)}, {"arg_pi", qvec_json(s.z.arg_pi)}};
    e["delta"] = s.delta;
    e["sector_delta"] = s.sector_delta;
    e["mb_tail"] = s.mb_tail;
    e["fm_tail"] = s.fm_tail;
    e["quad_defect"] = s.quad_defect;
    sj.push_back(e);
  }
  dj["samples"] = sj;
  out["diagram"] = dj;

  out["pass"] = pass;
  return out;
}

}  // namespace gkz
