#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "elastic/document.hpp"
#include "elastic/vc.hpp"
#include "json.hpp"

#ifndef ELASTIC_VERSION
#define ELASTIC_VERSION "0.0.0"
#endif

namespace elastic::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  int code = kExitTrue;
  json body;
};

struct Loaded {
  std::vector<GeometryDocument> docs;
  std::string text;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.text = read_text_file(path);
  try {
    l.docs = parse_documents(l.text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  return l;
}

const GeometryDocument& single(const Loaded& l, const std::string& path) {
  if (l.docs.size() != 1) throw InputError(path + ": expected one document, got " +
                                           std::to_string(l.docs.size()));
  return l.docs.front();
}

Measure measure_from(const std::string& name) {
  if (auto m = parse_measure(name)) return *m;
  throw InputError("unknown measure \"" + name + "\"");
}

void require_fit(Measure measure, const GeometryDocument& a, const GeometryDocument& b) {
  const bool want_region = is_region_measure(measure);
  for (const auto* d : {&a, &b}) {
    if (d->is_curve() == want_region) {
      throw InputError("measure " + to_string(measure) + " needs " +
                       (want_region ? "regions" : "curves") + "; document \"" + d->id + "\" is a " +
                       (d->is_curve() ? "curve" : "region"));
    }
  }
  if (a.dimension != b.dimension) {
    throw DimensionError("dimension mismatch: \"" + a.id + "\" has " + std::to_string(a.dimension) +
                         ", \"" + b.id + "\" has " + std::to_string(b.dimension));
  }
}

json point_json(const Point& p) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

std::string sub_site_name(SubSiteKind kind) {
  switch (kind) {
    case SubSiteKind::first_endpoint:
      return "first_endpoint";
    case SubSiteKind::second_endpoint:
      return "second_endpoint";
    case SubSiteKind::supporting_line:
      return "supporting_line";
  }
  return "unknown";
}

json report_json(const ShatterReport& r) {
  json witnesses = json::array();
  for (const auto& [mask, w] : r.witnesses) {
    const auto* curve = std::get_if<PolygonalCurve>(&w.center);
    const GeometryDocument center{w.center_id, curve ? curve->dim() : 2, w.center};
    witnesses.push_back({{"subset", mask},
                         {"center", w.center_id},
                         {"radius", w.radius},
                         {"center_geometry", json::parse(serialize(center))}});
  }
  return {{"ground_ids", r.ground_ids},
          {"shattered", r.shattered},
          {"witnesses", witnesses},
          {"missing_subsets", r.missing_subsets},
          {"evaluations", r.evaluations}};
}

std::vector<GroundElement> ground_of(const std::vector<GeometryDocument>& docs) {
  std::vector<GroundElement> ground;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    ground.push_back({docs[i].id.empty() ? std::to_string(i) : docs[i].id, docs[i].shape});
  }
  return ground;
}

}  // namespace

std::string inputs_digest(const std::vector<std::string>& contents) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const auto& c : contents) {
    const std::string prefix = std::to_string(c.size()) + ":";
    EVP_DigestUpdate(ctx, prefix.data(), prefix.size());
    EVP_DigestUpdate(ctx, c.data(), c.size());
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elastic distances, region Hausdorff and VC experiments", "elastic-vc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ELASTIC_VERSION);

  double tol_eps = Tolerance::kDefaultEps;
  bool json_flag = true;
  std::string measure_name, file_a, file_b, family, ground_file, centers_file;
  double delta = 0.0;
  long long d = 1, k = 1, m = 1, t = 1, l = 1;
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  std::vector<double> radii;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_eps, "tolerance eps")->check(CLI::PositiveNumber);
    sub->add_flag("--json,!--no-json", json_flag, "structured report (default on)");
  };

  auto* decide = app.add_subcommand("decide", "decide measure(A, B) <= delta; exit 0 true, 1 false");
  decide->add_option("measure", measure_name)->required();
  decide->add_option("a", file_a)->required();
  decide->add_option("b", file_b)->required();
  decide->add_option("delta", delta)->required()->check(CLI::NonNegativeNumber);
  add_common(decide);

  auto* compute = app.add_subcommand("compute", "compute measure(A, B)");
  compute->add_option("measure", measure_name)->required();
  compute->add_option("a", file_a)->required();
  compute->add_option("b", file_b)->required();
  add_common(compute);

  auto* bound = app.add_subcommand("vc-bound", "evaluate a VC-dimension bound");
  bound->add_option("family", family, "discrete-hausdorff, discrete-frechet, dtw or generic")
      ->required();
  bound->add_option("--d", d, "ambient or parameter dimension");
  bound->add_option("--k", k, "center complexity");
  bound->add_option("--m", m, "ground complexity");
  bound->add_option("--t", t, "combination size (generic)");
  bound->add_option("--l", l, "polynomial count (generic)");
  add_common(bound);

  auto* voronoi = app.add_subcommand("voronoi-candidates", "Voronoi-vertex candidates of three segments");
  voronoi->add_option("file", file_a, "array of three two-vertex planar curves")->required();
  add_common(voronoi);

  auto* shatter = app.add_subcommand("shatter", "search for a shattering of a ground set; exit 0 if shattered");
  shatter->add_option("ground", ground_file)->required();
  shatter->add_option("measure", measure_name)->required();
  shatter->add_option("--budget", budget, "maximum (center, radius) pairs");
  shatter->add_option("--seed", seed, "random seed");
  shatter->add_option("--centers", centers_file, "explicit centers instead of a random search");
  shatter->add_option("--radii", radii, "explicit radii for --centers")->delimiter(',');
  add_common(shatter);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitTrue : kExitInputError;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const auto started = Clock::now();
  const Tolerance tol(tol_eps);
  json report;
  std::vector<std::string> inputs;
  Outcome outcome;
  try {
    if (decide->parsed()) {
      const Measure measure = measure_from(measure_name);
      const Loaded a = load(file_a);
      const Loaded b = load(file_b);
      inputs = {a.text, b.text};
      const auto& da = single(a, file_a);
      const auto& db = single(b, file_b);
      require_fit(measure, da, db);
      const DecisionResult r = in_range(measure, da.shape, db.shape, delta, tol);
      outcome.code = r.verdict ? kExitTrue : kExitFalse;
      outcome.body = {{"measure", to_string(measure)},
                      {"delta", delta},
                      {"verdict", r.verdict},
                      {"margin", to_string(r.margin)}};
    } else if (compute->parsed()) {
      const Measure measure = measure_from(measure_name);
      const Loaded a = load(file_a);
      const Loaded b = load(file_b);
      inputs = {a.text, b.text};
      const auto& da = single(a, file_a);
      const auto& db = single(b, file_b);
      require_fit(measure, da, db);
      const double value = measure_value(measure, da.shape, db.shape, tol);
      const bool bisected = measure != Measure::discrete_hausdorff &&
                            measure != Measure::discrete_frechet && measure != Measure::dtw;
      outcome.body = {{"measure", to_string(measure)},
                      {"value", value},
                      {"tolerance", bisected ? tol_eps * std::max(1.0, value) : 0.0}};
    } else if (bound->parsed()) {
      double value = 0.0;
      std::string formula;
      json params = {{"d", d}, {"k", k}, {"m", m}};
      if (family == "discrete-hausdorff" || family == "discrete_hausdorff") {
        value = bound_discrete_hausdorff({d, k, m});
        formula = "2(dk+1) log2(24mk)";
      } else if (family == "discrete-frechet" || family == "discrete_frechet") {
        value = bound_discrete_frechet({d, k, m});
        formula = "2(dk+1) log2(24mk)";
      } else if (family == "dtw") {
        value = bound_dtw({d, k, m});
        formula = "2(dk+1) (log2 24 + min((k-1) log2 m, (m-1) log2 k))";
      } else if (family == "generic") {
        value = bound_sign_combination(d, t, l);
        formula = "2d log2(12tl)";
        params = {{"d", d}, {"t", t}, {"l", l}};
      } else {
        throw InputError("unknown family \"" + family + "\"");
      }
      outcome.body = {{"family", family}, {"formula", formula}, {"params", params}, {"value", value}};
    } else if (voronoi->parsed()) {
      const Loaded a = load(file_a);
      inputs = {a.text};
      if (a.docs.size() != 3) {
        throw InputError(file_a + ": expected 3 segments, got " + std::to_string(a.docs.size()));
      }
      std::vector<Segment> segs;
      for (const auto& doc : a.docs) {
        const auto* c = std::get_if<PolygonalCurve>(&doc.shape);
        if (!c || c->size() != 2 || doc.dimension != 2) {
          throw InputError("document \"" + doc.id + "\" is not a planar two-vertex curve");
        }
        if (c->vertex(0) == c->vertex(1)) throw InputError("segment \"" + doc.id + "\" is degenerate");
        segs.emplace_back(c->vertex(0), c->vertex(1));
      }
      json cands = json::array();
      for (const auto& c : voronoi_vertex_candidates(segs[0], segs[1], segs[2], tol)) {
        json sites = json::array();
        for (const auto& s : c.sites) {
          sites.push_back({{"segment", a.docs[s.edge].id.empty() ? std::to_string(s.edge) : a.docs[s.edge].id},
                           {"sub_site", sub_site_name(s.kind)}});
        }
        cands.push_back({{"location", point_json(c.location)},
                         {"case", to_string(c.kind)},
                         {"root_type", static_cast<int>(c.tag)},
                         {"sites", sites}});
      }
      outcome.body = {{"candidates", cands}};
    } else if (shatter->parsed()) {
      const Measure measure = measure_from(measure_name);
      const Loaded g = load(ground_file);
      inputs = {g.text};
      const auto ground = ground_of(g.docs);
      ShatterReport r;
      if (!centers_file.empty()) {
        if (radii.empty()) throw InputError("--centers needs --radii");
        const Loaded c = load(centers_file);
        inputs.push_back(c.text);
        std::vector<CenterCandidate> centers;
        for (const auto& e : ground_of(c.docs)) centers.push_back({e.id, e.shape});
        r = shatter_check(ground, centers, radii, measure, tol);
      } else {
        r = random_shatter_search(ground, measure, budget, seed, tol);
        report["seed"] = seed;
      }
      const bool verified = verify_witnesses(r, ground, measure, tol);
      outcome.code = r.shattered && verified ? kExitTrue : kExitFalse;
      outcome.body = report_json(r);
      outcome.body["measure"] = to_string(measure);
      outcome.body["witnesses_verified"] = verified;
    }
  } catch (const std::exception& e) {
    // Every failure is an input problem from the caller's side of the contract.
    err << "error: " << e.what() << "\n";
    outcome.code = kExitInputError;
    outcome.body = {{"error", e.what()}};
  }

  report["command"] = args;
  report["inputs_digest"] = inputs_digest(inputs);
  report["result"] = outcome.body;
  report["exit_code"] = outcome.code;
  report["version"] = ELASTIC_VERSION;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  if (json_flag) {
    out << report.dump(2) << "\n";
  } else {
    out << outcome.body.dump() << "\n";
  }
  return outcome.code;
}

}  // namespace elastic::cli
