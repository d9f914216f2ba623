// Command-line front end: exact affine-root data, abelianisations, stability,
// depth and intertwining candidates, with JSON output (sorted keys, rationals
// as "p/q" strings).

#include "epikit/abelianization.hpp"
#include "epikit/affine.hpp"
#include "epikit/chevalley.hpp"
#include "epikit/depth.hpp"
#include "epikit/errors.hpp"
#include "epikit/intertwine.hpp"
#include "epikit/rootsys.hpp"
#include "epikit/stability.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace epikit;

namespace {

json root_json(const Root& r) { return json(r.coords); }

json affine_json(const AffineRoot& psi) {
  return json{{"gradient", psi.gradient.coords}, {"level", psi.level}};
}

AffineRoot affine_from_json(const RootSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("gradient") || !j.contains("level"))
    throw InputError("affine root must be {\"gradient\": [...], \"level\": n}");
  Root g{j.at("gradient").get<std::vector<int>>()};
  if (!sys.is_root(g)) throw InputError("gradient is not a root of " + sys.name());
  return AffineRoot{std::move(g), j.at("level").get<long long>()};
}

json point_json(const BuildingPoint& x) {
  json out = json::array();
  for (const Rat& c : x.coords.coords) out.push_back(rat_to_string(c));
  return out;
}

std::string affine_text(const RootSystem& sys, const AffineRoot& psi) {
  std::ostringstream s;
  bool first = true;
  for (int i = 0; i < sys.rank(); ++i) {
    int c = psi.gradient.coords[i];
    if (c == 0) continue;
    if (!first && c > 0) s << "+";
    if (c == -1) s << "-";
    else if (c != 1) s << c;
    s << "a" << i + 1;
    first = false;
  }
  if (psi.level != 0 || first) {
    if (!first && psi.level >= 0) s << "+";
    s << psi.level;
  }
  return s.str();
}

// Kac digits on the wire follow the affine Dynkin diagram as usually drawn:
// for G2 that is (affine node, long simple root alpha_2, short alpha_1), so
// positions 1 and 2 are swapped relative to internal Bourbaki order.
std::vector<long long> kac_wire_to_internal(const RootSystem& sys, std::vector<long long> b) {
  if (sys.family() == Family::G && b.size() == 3) std::swap(b[1], b[2]);
  return b;
}
std::vector<long long> kac_internal_to_wire(const RootSystem& sys, std::vector<long long> b) {
  return kac_wire_to_internal(sys, std::move(b));
}

struct PointArgs {
  std::string type;
  std::string kac;
  std::string walls;
};

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("malformed " + what + " entry: '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(what + " must be a nonempty comma list");
  return out;
}

BuildingPoint resolve_point(const RootSystem& sys, const PointArgs& a, KacCoords* kac_out) {
  KacCoords k;
  if (!a.kac.empty() && !a.walls.empty())
    throw InputError("give either --kac or --walls, not both");
  if (!a.kac.empty()) {
    k.b = kac_wire_to_internal(sys, parse_int_list(a.kac, "--kac"));
  } else if (!a.walls.empty()) {
    // Vanishing nodes: 0 for the affine node, i for alpha_i.
    k.b.assign(sys.rank() + 1, 1);
    for (long long w : parse_int_list(a.walls, "--walls")) {
      if (w < 0 || w > sys.rank()) throw InputError("--walls index out of range");
      k.b[w] = 0;
    }
  } else {
    throw InputError("a point is required: --kac b0,b1,... or --walls i,j,...");
  }
  k = normalize_kac(sys, k);
  if (kac_out) *kac_out = k;
  return kac_to_point(sys, k);
}

std::vector<SupportProfile> load_profiles(const RootSystem& sys, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open profiles file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError("profiles file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array() || doc.empty())
    throw InputError("profiles file must be a nonempty JSON array");
  std::vector<SupportProfile> out;
  for (const json& p : doc) {
    SupportProfile sp;
    if (!p.is_object() || !p.contains("lower"))
      throw InputError("each profile needs at least a \"lower\" root list");
    for (const json& r : p.at("lower")) sp.lower.push_back(affine_from_json(sys, r));
    if (p.contains("upper"))
      for (const json& r : p.at("upper")) sp.upper.push_back(affine_from_json(sys, r));
    else
      sp.upper = sp.lower;
    out.push_back(std::move(sp));
  }
  return out;
}

void emit(const json& doc, bool text, const std::string& rendered) {
  if (text)
    std::cout << rendered;
  else
    std::cout << doc.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact affine-root combinatorics for small-characteristic supercuspidals"};
  app.require_subcommand(1);
  std::string format = "json";
  PointArgs pa;
  std::string profiles_path, lattice = "simply-connected";
  long long p = 0, q = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_point) {
    cmd->add_option("--type", pa.type, "root system, e.g. G2, B5")->required();
    if (needs_point) {
      cmd->add_option("--kac", pa.kac, "Kac coordinates b0,b1,...,bn");
      cmd->add_option("--walls", pa.walls, "vanishing nodes (0 = affine) instead of --kac");
    }
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "root system data");
  add_common(roots, false);

  CLI::App* kac = app.add_subcommand("kac", "Kac coordinates <-> point of the apartment");
  add_common(kac, true);

  CLI::App* delta = app.add_subcommand("delta", "Delta(x), delta(x) and Delta_2(x)");
  add_common(delta, true);

  CLI::App* abel = app.add_subcommand("abelianize", "S(x) indexing the abelianisation V(x)");
  add_common(abel, true);
  abel->add_option("--p", p, "residue characteristic")->required();
  abel->add_option("--q", q, "residue field size")->required();

  CLI::App* stable = app.add_subcommand("stable", "F_q-stability of a profile family");
  add_common(stable, true);
  stable->add_option("--profiles", profiles_path, "profiles JSON file")->required();

  CLI::App* depth = app.add_subcommand("depth", "exact min-max depth of a profile family");
  add_common(depth, true);
  depth->add_option("--profiles", profiles_path, "profiles JSON file")->required();
  depth->add_option("--p", p, "unused, accepted for uniformity");
  depth->add_option("--q", q, "unused, accepted for uniformity");

  CLI::App* inter = app.add_subcommand("intertwine", "surviving intertwining candidates");
  add_common(inter, true);
  inter->add_option("--profiles", profiles_path, "profiles JSON file")->required();
  inter->add_option("--lattice", lattice, "simply-connected or adjoint")
      ->check(CLI::IsMember({"simply-connected", "adjoint"}));
  inter->add_option("--p", p, "unused, accepted for uniformity");
  inter->add_option("--q", q, "unused, accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cout << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
  bool want_text = format == "text";

  RootSystem sys = build_root_system(pa.type);

  if (roots->parsed()) {
    json all = json::array();
    for (const Root& r : sys.all_roots()) all.push_back(root_json(r));
    json doc{{"type", sys.name()},
             {"rank", sys.rank()},
             {"count", sys.all_roots().size()},
             {"highest_root", root_json(sys.highest_root())},
             {"marks", sys.marks()},
             {"all_roots", all}};
    std::ostringstream t;
    t << sys.name() << ": " << sys.all_roots().size() << " roots, highest "
      << affine_text(sys, AffineRoot{sys.highest_root(), 0}) << ", marks";
    for (long long m : sys.marks()) t << " " << m;
    t << "\n";
    emit(doc, want_text, t.str());
    return 0;
  }

  KacCoords k;
  BuildingPoint x = resolve_point(sys, pa, &k);

  if (kac->parsed()) {
    KacCoords back = point_to_kac(sys, x);
    json doc{{"kac", kac_internal_to_wire(sys, back.b)},
             {"m", kac_normalizer(sys, back)},
             {"point", point_json(x)}};
    std::ostringstream t;
    t << "point";
    for (const Rat& c : x.coords.coords) t << " " << rat_to_string(c);
    t << "  (m = " << kac_normalizer(sys, back) << ")\n";
    emit(doc, want_text, t.str());
    return 0;
  }

  if (delta->parsed()) {
    MoyPrasadData mp = delta_x(sys, x);
    json d1 = json::array(), d2 = json::array();
    for (const AffineRoot& r : mp.delta_roots) d1.push_back(affine_json(r));
    for (const AffineRoot& r : mp.delta2_roots) d2.push_back(affine_json(r));
    json doc{{"delta", rat_to_string(mp.delta)},
             {"Delta", d1},
             {"Delta2", d2},
             {"kac", kac_internal_to_wire(sys, k.b)}};
    std::ostringstream t;
    t << "delta = " << rat_to_string(mp.delta) << "\nDelta(x):";
    for (const AffineRoot& r : mp.delta_roots) t << " " << affine_text(sys, r);
    t << "\nDelta_2(x):";
    for (const AffineRoot& r : mp.delta2_roots) t << " " << affine_text(sys, r);
    t << "\n";
    emit(doc, want_text, t.str());
    return 0;
  }

  if (abel->parsed()) {
    VxSpace v = compute_sx(sys, p, q, x);
    json entries = json::array();
    for (const SxEntry& e : v.entries) {
      if (e.is_tuple()) {
        json tuple = json::array();
        for (const AffineRoot& r : e.roots) tuple.push_back(affine_json(r));
        entries.push_back(json{{"tuple", tuple}});
      } else {
        entries.push_back(json{{"single", affine_json(e.roots[0])}});
      }
    }
    json doc{{"entries", entries}, {"dim", v.dim()}};
    std::ostringstream t;
    t << "dim V(x) = " << v.dim() << "\n";
    for (const SxEntry& e : v.entries) {
      t << (e.is_tuple() ? "tuple :" : "single:");
      for (const AffineRoot& r : e.roots) t << " " << affine_text(sys, r);
      t << "\n";
    }
    emit(doc, want_text, t.str());
    return 0;
  }

  std::vector<SupportProfile> profiles = load_profiles(sys, profiles_path);

  if (stable->parsed()) {
    json per = json::array();
    bool all_trivial = true;
    for (const SupportProfile& sp : profiles) {
      std::vector<Root> grads;
      for (const AffineRoot& r : sp.lower) grads.push_back(r.gradient);
      ConeResult res = is_cone_trivial(sys, grads);
      all_trivial = all_trivial && res.trivial;
      json cert;
      if (res.certificate.kind == ConeCertificate::Kind::NontrivialRay) {
        json ray = json::array();
        for (const Rat& c : res.certificate.ray.coords) ray.push_back(rat_to_string(c));
        cert = json{{"kind", "nontrivial_ray"}, {"ray", ray}};
      } else {
        json coeffs = json::array();
        for (const Rat& c : res.certificate.coefficients) coeffs.push_back(rat_to_string(c));
        cert = json{{"kind", "positive_combination"},
                    {"coefficients", coeffs},
                    {"spanning", res.certificate.spanning}};
      }
      per.push_back(json{{"trivial", res.trivial}, {"certificate", cert}});
    }
    json doc{{"stable", all_trivial}, {"profiles", per}};
    std::ostringstream t;
    t << (all_trivial ? "stable" : "not stable") << " (" << profiles.size() << " profiles)\n";
    emit(doc, want_text, t.str());
    return 0;
  }

  if (depth->parsed()) {
    DepthResult d = min_depth(sys, profiles);
    json doc{{"depth", rat_to_string(d.depth)},
             {"witness", point_json(d.witness)},
             {"profile_index", d.profile_index}};
    std::ostringstream t;
    t << "depth = " << rat_to_string(d.depth) << " at witness";
    for (const Rat& c : d.witness.coords.coords) t << " " << rat_to_string(c);
    t << "\n";
    emit(doc, want_text, t.str());
    return 0;
  }

  if (inter->parsed()) {
    LatticeMode mode =
        lattice == "adjoint" ? LatticeMode::Adjoint : LatticeMode::SimplyConnected;
    std::vector<IwahoriWeylElement> surv = intertwiners(sys, x, profiles, mode);
    json doc = json::array();
    std::ostringstream t;
    t << surv.size() << " survivors\n";
    for (const IwahoriWeylElement& w : surv) {
      std::vector<int> word;
      for (int i : w.finite.word) word.push_back(i + 1);
      doc.push_back(json{{"translation", w.translation}, {"word", word}});
      t << "  translation [";
      for (std::size_t i = 0; i < w.translation.size(); ++i)
        t << (i ? "," : "") << w.translation[i];
      t << "], word [";
      for (std::size_t i = 0; i < word.size(); ++i) t << (i ? "," : "") << word[i];
      t << "]\n";
    }
    emit(doc, want_text, t.str());
    return 0;
  }

  return 1;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnsupportedError& e) {
    std::cout << json{{"error", {{"type", "unsupported"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  } catch (const NonCompactError& e) {
    std::cout << json{{"error", {{"type", "non_compact"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cout << json{{"error", {{"type", "input"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
}
