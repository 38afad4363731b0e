#include "seshadri/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <omp.h>

#include "seshadri/linsys.hpp"
#include "seshadri/p2cert.hpp"
#include "seshadri/surfcalc.hpp"
#include "seshadri/symbpow.hpp"
#include "seshadri/toric.hpp"
#include "seshadri/zarislope.hpp"

namespace seshadri::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing field");
  return *it;
}

Int int_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      schema_fail(path, "malformed integer literal");
    }
  }
  schema_fail(path, "expected an integer");
}

long long_from(const json& j, const std::string& path) {
  Int v = int_from(j, path);
  if (!v.fits_slong_p()) schema_fail(path, "integer out of range");
  return v.get_si();
}

bool bool_from(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_fail(path, "expected a boolean");
  return j.get<bool>();
}

Rat rat_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_number_float())
    schema_fail(path, "floating point is not accepted; use \"num\"/\"den\"");
  if (j.is_string()) {
    try {
      Rat q(j.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      schema_fail(path, "malformed rational literal");
    }
  }
  if (j.is_object()) {
    Rat q(int_from(require(j, "num", path), path + ".num"),
          int_from(require(j, "den", path), path + ".den"));
    if (sgn(q.get_den()) == 0) schema_fail(path, "zero denominator");
    q.canonicalize();
    return q;
  }
  schema_fail(path, "expected a rational");
}

std::string istr(const Int& v) { return v.get_str(); }

json rat_to_json(const Rat& q) {
  return json{{"num", istr(q.get_num())}, {"den", istr(q.get_den())}};
}

}  // namespace

json value_to_json(const SeshadriValue& v, unsigned digits) {
  json j;
  switch (v.kind()) {
    case SeshadriValue::Kind::Exact:
      j["num"] = istr(v.exact_value().get_num());
      j["den"] = istr(v.exact_value().get_den());
      break;
    case SeshadriValue::Kind::Root:
      j["radicand_num"] = istr(v.root_value().radicand.get_num());
      j["radicand_den"] = istr(v.root_value().radicand.get_den());
      j["index"] = v.root_value().index;
      break;
    case SeshadriValue::Kind::Interval:
      j["lower"] = value_to_json(v.lower(), digits);
      j["upper"] = value_to_json(v.upper(), digits);
      break;
  }
  if (v.is_point()) {
    j["decimal"] = decimal_string(v, digits);
    j["decimal_digits"] = digits;
  }
  if (!v.provenance().empty()) j["provenance"] = v.provenance();
  return j;
}

SeshadriValue value_from_json(const json& j) {
  const std::string path = "value";
  if (j.is_number_integer() || j.is_string())
    return SeshadriValue::exact(rat_from(j, path));
  if (!j.is_object()) schema_fail(path, "expected a value object");
  std::string prov = j.value("provenance", std::string{});
  if (j.contains("num") && !j.contains("lower"))
    return SeshadriValue::exact(rat_from(j, path), prov);
  if (j.contains("radicand_num")) {
    Rat radicand(int_from(require(j, "radicand_num", path), path),
                 int_from(require(j, "radicand_den", path), path));
    radicand.canonicalize();
    unsigned long index = require(j, "index", path).get<unsigned long>();
    return SeshadriValue::root(radicand, index, prov);
  }
  if (j.contains("lower"))
    return SeshadriValue::interval(value_from_json(j.at("lower")),
                                   value_from_json(j.at("upper")), prov);
  schema_fail(path, "unrecognized value encoding");
}

namespace {

struct HandlerResult {
  json result;
  std::vector<std::string> citations;
};

void add_value(HandlerResult& h, const std::string& key,
               const SeshadriValue& v, unsigned digits) {
  h.result[key] = value_to_json(v, digits);
  const SeshadriValue* parts[] = {&v, &v.lower_endpoint(), &v.upper_endpoint()};
  for (const SeshadriValue* p : parts)
    if (!p->provenance().empty()) {
      auto& c = h.citations;
      if (std::find(c.begin(), c.end(), p->provenance()) == c.end())
        c.push_back(p->provenance());
    }
}

LatticePolytope polytope_from(const json& params) {
  json body;
  if (params.contains("file")) {
    std::ifstream in(params.at("file").get<std::string>());
    if (!in) schema_fail("params.file", "cannot open polytope file");
    in >> body;
  } else if (params.contains("polytope")) {
    body = params.at("polytope");
  } else {
    schema_fail("params", "expected \"polytope\" or \"file\"");
  }
  int dim = static_cast<int>(long_from(require(body, "dim", "polytope"), "polytope.dim"));
  const json& verts = require(body, "vertices", "polytope");
  if (!verts.is_array()) schema_fail("polytope.vertices", "expected an array");
  std::vector<std::vector<Int>> vertices;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const json& row = verts[i];
    std::string p = "polytope.vertices[" + std::to_string(i) + "]";
    if (!row.is_array()) schema_fail(p, "expected an array");
    std::vector<Int> v;
    for (std::size_t c = 0; c < row.size(); ++c)
      v.push_back(int_from(row[c], p + "[" + std::to_string(c) + "]"));
    vertices.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(dim, std::move(vertices));
}

MonomialIdeal ideal_from(const json& params) {
  json body;
  if (params.contains("ideal_file")) {
    std::ifstream in(params.at("ideal_file").get<std::string>());
    if (!in) schema_fail("params.ideal_file", "cannot open ideal file");
    in >> body;
  } else {
    body = require(params, "ideal", "params");
  }
  int vars = static_cast<int>(long_from(require(body, "vars", "ideal"), "ideal.vars"));
  const json& gens = require(body, "gens", "ideal");
  if (!gens.is_array()) schema_fail("ideal.gens", "expected an array");
  std::vector<std::vector<int>> g;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string p = "ideal.gens[" + std::to_string(i) + "]";
    if (!gens[i].is_array()) schema_fail(p, "expected an array");
    std::vector<int> e;
    for (std::size_t c = 0; c < gens[i].size(); ++c)
      e.push_back(static_cast<int>(
          long_from(gens[i][c], p + "[" + std::to_string(c) + "]")));
    g.push_back(std::move(e));
  }
  return MonomialIdeal::make(vars, std::move(g));
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(g);
  return json{{"vars", ideal.num_vars}, {"gens", gens}};
}

json probe_to_json(const ProbeResult& probe, unsigned digits) {
  (void)digits;
  json j;
  j["verdict"] = probe.verdict == ProbeVerdict::CertifiedEmpty
                     ? "certified-empty"
                     : "likely-nonempty";
  j["rank"] = probe.rank;
  j["kernel_dim"] = probe.kernel_dim;
  j["trials"] = probe.trials;
  j["seed"] = probe.seed;
  json pts = json::array();
  for (const auto& [x, y] : probe.points)
    pts.push_back(json::array({rat_to_json(x), rat_to_json(y)}));
  j["points"] = pts;
  if (!probe.kernel_basis_vector.empty()) {
    json kv = json::array();
    for (const Int& c : probe.kernel_basis_vector) kv.push_back(istr(c));
    j["kernel_vector"] = kv;
  }
  return j;
}

json triple_to_json(const CandidateTriple& c) {
  return json{{"t", c.t}, {"m", c.m}, {"k", c.k}, {"r", c.r}};
}

HandlerResult handle(const std::string& command, const json& params,
                     std::uint64_t seed, long trials, unsigned digits) {
  HandlerResult h;
  h.result = json::object();

  if (command == "pell") {
    Int D = int_from(require(params, "D", "params"), "params.D");
    PellSolution s = pell_fundamental(D);
    h.result = {{"D", istr(s.D)}, {"ell0", istr(s.ell0)}, {"k0", istr(s.k0)}};
    h.citations = {"pell-fundamental-solution"};
  } else if (command == "toric") {
    LatticePolytope p = polytope_from(params);
    json per_vertex = json::array();
    for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
      per_vertex.push_back(istr(seshadri_at_fixed_point(p, v)));
    h.result["per_vertex"] = per_vertex;
    h.result["global"] = istr(seshadri_global_toric(p));
    h.citations = {"toric-fixed-point-jets", "toric-global-integer"};
  } else if (command == "delzant") {
    LatticePolytope p = polytope_from(params);
    DelzantReport rep = is_delzant(p);
    h.result["is_delzant"] = rep.is_delzant;
    json fails = json::array();
    for (const auto& f : rep.failures)
      fails.push_back(json{
          {"vertex", f.vertex},
          {"reason", f.reason == DelzantFailure::Reason::EdgeCount
                         ? "edge-count"
                         : "basis-determinant"}});
    h.result["failures"] = fails;
    h.citations = {"delzant-smoothness"};
  } else if (command == "abelian") {
    AbelianSurfaceSpec spec;
    spec.d = int_from(require(params, "d", "params"), "params.d");
    if (params.contains("simple"))
      spec.simple = bool_from(params.at("simple"), "params.simple");
    if (params.contains("rank_one"))
      spec.rank_one = bool_from(params.at("rank_one"), "params.rank_one");
    if (params.contains("elliptic_min_degree"))
      spec.elliptic_min_degree = int_from(params.at("elliptic_min_degree"),
                                          "params.elliptic_min_degree");
    if (params.contains("halfperiod_points")) {
      Int r = int_from(params.at("halfperiod_points"),
                       "params.halfperiod_points");
      add_value(h, "value", abelian_halfperiod_multipoint(spec.d, r), digits);
    } else if (spec.rank_one) {
      if (!spec.simple) spec.simple = true;
      add_value(h, "value", abelian_rank1(spec.d), digits);
    } else {
      BoundReport rep = abelian_bounds(spec);
      add_value(h, "value", rep.value, digits);
      h.citations = rep.citations;
    }
  } else if (command == "ruled") {
    RuledSurfaceSpec spec;
    spec.e = int_from(require(params, "e", "params"), "params.e");
    spec.a = int_from(require(params, "a", "params"), "params.a");
    spec.b = int_from(require(params, "b", "params"), "params.b");
    spec.point_on_sigma =
        bool_from(require(params, "point_on_sigma", "params"),
                  "params.point_on_sigma");
    SeshadriValue v = spec.e > 0 ? ruled_e_positive(spec)
                                 : ruled_e_nonpositive(spec);
    add_value(h, "value", v, digits);
  } else if (command == "delpezzo") {
    long r = long_from(require(params, "r", "params"), "params.r");
    std::string pos =
        require(params, "position", "params").get<std::string>();
    DelPezzoPosition position;
    if (pos == "general")
      position = DelPezzoPosition::General;
    else if (pos == "special")
      position = DelPezzoPosition::Special;
    else if (pos == "special12")
      position = DelPezzoPosition::Special12;
    else
      schema_fail("params.position",
                  "expected general, special, or special12");
    add_value(h, "value",
              delpezzo_anticanonical(static_cast<int>(r), position), digits);
  } else if (command == "k3") {
    Int L2 = int_from(require(params, "L2", "params"), "params.L2");
    BoundReport rep = k3_rank1(L2);
    add_value(h, "value", rep.value, digits);
    h.citations = rep.citations;
    json pairs = json::array();
    for (const auto& [l2, val] : rep.exceptional_pairs)
      pairs.push_back(json{{"L2", istr(l2)}, {"value", rat_to_json(val)}});
    h.result["exceptional_pairs"] = pairs;
  } else if (command == "gentype") {
    Int K2 = int_from(require(params, "K2", "params"), "params.K2");
    GentypeValues g = gentype_small_values(K2);
    h.result["infinite_family"] = g.infinite_family;
    json vals = json::array();
    for (const Rat& v : g.values) vals.push_back(rat_to_json(v));
    h.result["values"] = vals;
    h.citations = {cite::kGentype};
  } else if (command == "enriques") {
    if (params.contains("special") &&
        bool_from(params.at("special"), "params.special")) {
      add_value(h, "value", enriques_special_value(), digits);
    } else {
      SeshadriValue e0 = value_from_json(require(params, "eps0", "params"));
      SeshadriValue e1 = value_from_json(require(params, "eps1", "params"));
      Int L2 = int_from(require(params, "L2", "params"), "params.L2");
      add_value(h, "value", enriques_lower_bound(e0, e1, L2), digits);
    }
  } else if (command == "slope") {
    if (params.contains("c")) {
      Rat mu_c = slope_mu_c(rat_from(require(params, "LZ", "params"), "params.LZ"),
                            rat_from(require(params, "KZ", "params"), "params.KZ"),
                            rat_from(require(params, "Z2", "params"), "params.Z2"),
                            rat_from(params.at("c"), "params.c"));
      h.result["mu_c"] = rat_to_json(mu_c);
      h.citations = {"subscheme-slope-formula"};
    } else {
      unsigned long n = static_cast<unsigned long>(
          long_from(require(params, "n", "params"), "params.n"));
      Rat mu = slope_mu(n, rat_from(require(params, "KLn1", "params"), "params.KLn1"),
                        rat_from(require(params, "Ln", "params"), "params.Ln"));
      h.result["mu"] = rat_to_json(mu);
      h.citations = {"slope-formula"};
    }
  } else if (command == "zariski") {
    IntersectionData data;
    const json& gram = require(params, "gram", "params");
    if (!gram.is_array()) schema_fail("params.gram", "expected an array");
    for (std::size_t i = 0; i < gram.size(); ++i) {
      std::vector<Int> row;
      std::string p = "params.gram[" + std::to_string(i) + "]";
      if (!gram[i].is_array()) schema_fail(p, "expected an array");
      for (std::size_t c = 0; c < gram[i].size(); ++c)
        row.push_back(int_from(gram[i][c], p + "[" + std::to_string(c) + "]"));
      data.gram.push_back(std::move(row));
    }
    if (params.contains("labels"))
      data.labels = params.at("labels").get<std::vector<std::string>>();
    auto int_vector = [&](const char* key) -> std::vector<Int> {
      std::vector<Int> out;
      const json& arr = params.at(key);
      std::string p = std::string("params.") + key;
      if (!arr.is_array()) schema_fail(p, "expected an array");
      for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(int_from(arr[i], p + "[" + std::to_string(i) + "]"));
      return out;
    };
    if (params.contains("KdotC")) data.k_dot = int_vector("KdotC");
    if (params.contains("LdotC")) data.l_dot = int_vector("LdotC");
    if (params.contains("L2"))
      data.l_self = int_from(params.at("L2"), "params.L2");
    if (params.contains("KL"))
      data.k_dot_l = int_from(params.at("KL"), "params.KL");
    if (params.contains("n"))
      data.dim = static_cast<unsigned long>(long_from(params.at("n"), "params.n"));
    DivisorClass d;
    const json& dj = require(params, "D", "params");
    if (!dj.is_array()) schema_fail("params.D", "expected an array");
    for (std::size_t i = 0; i < dj.size(); ++i)
      d.coeffs.push_back(rat_from(dj[i], "params.D[" + std::to_string(i) + "]"));
    ZariskiDecomposition z = zariski_decompose(data, d);
    json pj = json::array(), nj = json::array();
    for (const Rat& c : z.positive.coeffs) pj.push_back(rat_to_json(c));
    for (const Rat& c : z.negative.coeffs) nj.push_back(rat_to_json(c));
    h.result["P"] = pj;
    h.result["N"] = nj;
    h.result["support"] = z.support;
    if (data.l_dot)
      h.result["LdotP"] = rat_to_json(pair_against(*data.l_dot, z.positive));
    if (data.k_dot)
      h.result["KdotP"] = rat_to_json(pair_against(*data.k_dot, z.positive));
    if (data.l_self && data.k_dot_l) {
      h.result["mu"] = rat_to_json(
          slope_mu(data.dim, Rat(*data.k_dot_l), Rat(*data.l_self)));
      h.citations.push_back("slope-formula");
    }
    h.citations.push_back("zariski-decomposition");
  } else if (command == "destab") {
    DestabVerdict v = destabilizes(
        rat_from(require(params, "LZ", "params"), "params.LZ"),
        rat_from(require(params, "KZ", "params"), "params.KZ"),
        rat_from(require(params, "Z2", "params"), "params.Z2"),
        rat_from(require(params, "mu", "params"), "params.mu"),
        rat_from(require(params, "c_max", "params"), "params.c_max"));
    h.result["destabilizes"] = v.destabilizes;
    if (v.witness) {
      h.result["witness"] = rat_to_json(*v.witness);
      h.result["mu_c_at_witness"] = rat_to_json(*v.mu_c_witness);
    }
    h.citations = {"slope-stability"};
  } else if (command == "linsys") {
    LinearSystem2D sys;
    sys.degree = long_from(require(params, "d", "params"), "params.d");
    for (const json& m : require(params, "mults", "params"))
      sys.mults.push_back(long_from(m, "params.mults[]"));
    const json& pts = require(params, "points", "params");
    if (pts.is_string()) {
      if (pts.get<std::string>() != "generic")
        schema_fail("params.points", "expected \"generic\" or a point array");
    } else if (pts.is_array()) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string p = "params.points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].size() != 2)
          schema_fail(p, "expected [x, y]");
        sys.explicit_points.emplace_back(rat_from(pts[i][0], p + "[0]"),
                                         rat_from(pts[i][1], p + "[1]"));
      }
    } else {
      schema_fail("params.points", "expected \"generic\" or a point array");
    }
    ProbeResult probe = interpolation_rank(sys, trials, seed);
    h.result = probe_to_json(probe, digits);
    h.result["virtual_dim"] = virtual_dim(sys);
    h.result["speciality"] =
        probe.kernel_dim - std::max(0L, virtual_dim(sys) + 1);
    h.citations = {"interpolation-rank-certificate"};
  } else if (command == "certify-p2") {
    long r = long_from(require(params, "r", "params"), "params.r");
    Rat alpha = rat_from(require(params, "alpha", "params"), "params.alpha");
    long m_max = params.contains("m_max")
                     ? long_from(params.at("m_max"), "params.m_max")
                     : 50;
    long size_budget =
        params.contains("size_budget")
            ? long_from(params.at("size_budget"), "params.size_budget")
            : 2000;
    CertificationReport rep =
        certify_lower_bound(r, alpha, m_max, trials, seed, size_budget);
    h.result["r"] = rep.r;
    h.result["alpha"] = rat_to_json(rep.alpha);
    h.result["complete"] = rep.candidates.complete;
    h.result["m_bound"] = rep.candidates.m_bound;
    switch (rep.verdict) {
      case CertVerdict::Certified: h.result["verdict"] = "certified"; break;
      case CertVerdict::Refuted: h.result["verdict"] = "refuted"; break;
      case CertVerdict::Unknown: h.result["verdict"] = "unknown"; break;
    }
    json probes = json::array();
    for (const auto& [triple, probe] : rep.probes)
      probes.push_back(json{{"candidate", triple_to_json(triple)},
                            {"probe", probe_to_json(probe, digits)}});
    h.result["probes"] = probes;
    json skipped = json::array();
    for (const auto& c : rep.skipped) skipped.push_back(triple_to_json(c));
    h.result["skipped"] = skipped;
    if (rep.refuting_probe) h.result["refuting_probe"] = *rep.refuting_probe;
    h.citations = {"weakly-submaximal-restrictions",
                   "interpolation-rank-certificate"};
  } else if (command == "table-verify") {
    json rows = json::array();
    bool all_pass = true;
    for (const RowReport& rep : verify_table()) {
      rows.push_back(json{{"r", rep.r},
                          {"fraction_consistent", rep.fraction_consistent},
                          {"approx_matches", rep.approx_matches},
                          {"conjectured_matches", rep.conjectured_matches},
                          {"restrictions_hold", rep.restrictions_hold}});
      all_pass = all_pass && rep.all();
    }
    h.result["rows"] = rows;
    h.result["all_pass"] = all_pass;
    h.citations = {"multi-point-estimate-table"};
  } else if (command == "symbolic") {
    MonomialIdeal ideal = ideal_from(params);
    h.result["ideal"] = ideal_to_json(ideal);
    h.result["alpha"] = alpha(ideal);
    if (ideal.is_squarefree()) {
      json primes = json::array();
      for (const auto& p : minimal_primes_squarefree(ideal)) primes.push_back(p);
      h.result["minimal_primes"] = primes;
      h.result["codim"] = codim_squarefree(ideal);
    }
    if (params.contains("m")) {
      long m = long_from(params.at("m"), "params.m");
      MonomialIdeal sym = symbolic_power_squarefree(ideal, m);
      h.result["symbolic_power"] = ideal_to_json(sym);
      h.result["alpha_symbolic"] = alpha(sym);
      if (params.contains("r")) {
        long r = long_from(params.at("r"), "params.r");
        h.result["symbolic_in_power"] = check_symbolic_in_power(ideal, m, r);
      }
    }
    h.citations = {"symbolic-power-minimal-primes"};
  } else if (command == "star") {
    StarConfig cfg;
    cfg.N = static_cast<int>(long_from(require(params, "N", "params"), "params.N"));
    cfg.s = long_from(require(params, "s", "params"), "params.s");
    cfg.e = static_cast<int>(long_from(require(params, "e", "params"), "params.e"));
    StarInvariants inv = star_invariants(cfg);
    h.result["gamma"] = rat_to_json(inv.gamma);
    h.result["rho_lower"] = rat_to_json(inv.rho_lower);
    if (inv.reg) h.result["reg"] = *inv.reg;
    if (inv.rho_exact) h.result["rho"] = rat_to_json(*inv.rho_exact);
    if (inv.seshadri) add_value(h, "seshadri", *inv.seshadri, digits);
    if (params.contains("m")) {
      long m = long_from(params.at("m"), "params.m");
      auto a = star_alpha(cfg, m);
      if (a)
        h.result["alpha_symbolic"] = *a;
      else
        h.result["alpha_symbolic"] = "unknown";
    }
    h.citations.push_back("star-config-numerics");
  } else if (command == "generic-points") {
    int N = static_cast<int>(long_from(require(params, "N", "params"), "params.N"));
    long j = long_from(require(params, "j", "params"), "params.j");
    long r = long_from(require(params, "r", "params"), "params.r");
    GenericPointsCertificate cert = generic_points_check(N, j, r);
    h.result["holds"] = cert.holds;
    h.result["reg_bound"] = cert.reg_bound;
    add_value(h, "eps_lower", cert.eps_lower, digits);
    add_value(h, "gamma_lower", cert.gamma_lower, digits);
    h.result["threshold"] = rat_to_json(cert.threshold);
    h.citations.push_back("generic-points-containment");
  } else if (command == "eps-rl") {
    Int r = int_from(require(params, "r", "params"), "params.r");
    Int l = int_from(require(params, "l", "params"), "params.l");
    h.result["value"] = rat_to_json(eps_rl(r, l));
    h.citations = {cite::kEpsRL};
  } else if (command == "sslope") {
    std::string mode = require(params, "mode", "params").get<std::string>();
    Int mode_r = 0;
    if (mode == "multi")
      mode_r = int_from(require(params, "r", "params"), "params.r");
    else if (mode != "single")
      schema_fail("params.mode", "expected single or multi");
    SeshadriValue sigma = value_from_json(require(params, "sigma", "params"));
    SlopeClassification c = sslope_classify(mode_r, sigma);
    h.result["below_threshold"] = c.below_threshold;
    json cases = json::array();
    if (c.fibered_candidate) cases.push_back("seshadri-fibration");
    if (c.matches_cubic) cases.push_back("cubic-surface");
    if (c.matches_rational_genus3) cases.push_back("rational-genus-three");
    if (c.matches_minimal_degree) cases.push_back("minimal-degree-surface");
    h.result["cases"] = cases;
    add_value(h, "threshold", c.threshold, digits);
  } else {
    schema_fail("command", "unknown command \"" + command + "\"");
  }
  return h;
}

}  // namespace

JobOutcome run_job(const json& job, std::uint64_t default_seed,
                   long default_trials, unsigned digits) {
  JobOutcome out;
  json envelope;
  std::string command;
  try {
    if (!job.is_object()) schema_fail("job", "expected an object");
    command = require(job, "command", "job").get<std::string>();
    envelope["command"] = command;
    json params = job.value("params", json::object());
    envelope["params"] = params;
    std::uint64_t seed = default_seed;
    if (job.contains("seed")) seed = job.at("seed").get<std::uint64_t>();
    long trials = default_trials;
    if (job.contains("trials")) trials = long_from(job.at("trials"), "job.trials");
    envelope["seed"] = seed;
    HandlerResult h = handle(command, params, seed, trials, digits);
    envelope["result"] = h.result;
    envelope["citations"] = h.citations;
    envelope["status"] = "ok";
    out.status = 0;
  } catch (const SchemaError& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"type", "schema"}, {"message", e.what()}};
    out.status = 2;
  } catch (const InconsistencyError& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"type", "inconsistency"},
                         {"message", e.what()},
                         {"citations", e.citations}};
    out.status = 3;
  } catch (const PoleError& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"type", "pole"}, {"message", e.what()}};
    out.status = 2;
  } catch (const DomainError& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"type", "domain"}, {"message", e.what()}};
    out.status = 2;
  } catch (const json::exception& e) {
    envelope["status"] = "error";
    envelope["error"] = {{"type", "schema"}, {"message", e.what()}};
    out.status = 2;
  }
  out.envelope = std::move(envelope);
  return out;
}

int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opts) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  std::vector<std::string> rendered(lines.size());
  std::vector<int> status(lines.size(), 0);

  const long n = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.parallelism))
  for (long i = 0; i < n; ++i) {
    const std::string& text = lines[i];
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json job = json::parse(text, nullptr, false);
    JobOutcome r;
    if (job.is_discarded()) {
      r.envelope = {{"status", "error"},
                    {"error", {{"type", "schema"},
                               {"message", "line " + std::to_string(i + 1) +
                                               ": malformed JSON"}}}};
      r.status = 2;
    } else {
      std::uint64_t job_seed = job.contains("seed")
                                   ? job.at("seed").get<std::uint64_t>()
                                   : mix_seed(opts.seed, static_cast<std::uint64_t>(i));
      job["seed"] = job_seed;
      r = run_job(job, job_seed, opts.trials, opts.decimal_digits);
    }
    r.envelope["line"] = i + 1;
    rendered[i] = r.envelope.dump();
    status[i] = r.status;
  }

  int max_status = 0;
  for (long i = 0; i < n; ++i) {
    if (!rendered[i].empty()) out << rendered[i] << "\n";
    max_status = std::max(max_status, status[i]);
  }
  return max_status;
}

}  // namespace seshadri::cli
