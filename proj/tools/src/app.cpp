#include "saturate/cli/app.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/program_options.hpp>

#include "saturate/cli/json_io.hpp"
#include "saturate/envelope.hpp"
#include "saturate/error.hpp"
#include "saturate/frobenius.hpp"
#include "saturate/rootdata.hpp"
#include "saturate/weilres.hpp"

#ifndef SATURATE_VERSION
#define SATURATE_VERSION "0.0.0"
#endif

namespace saturate::cli {

namespace po = boost::program_options;

namespace {

struct Outcome {
  bool pass = true;
  json results = json::object();
  json witness;
};

// Per-run state: arguments and the digest of everything read.
class Context {
 public:
  explicit Context(const std::vector<std::string>& args) : args_(args) {
    for (const auto& a : args) {
      digest_ = fnv1a64(a, digest_);
      digest_ = fnv1a64(std::string_view("\0", 1), digest_);
    }
  }

  json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedInput, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    digest_ = fnv1a64(text, digest_);
    return parse_json(text, path);
  }

  std::string digest() const {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(digest_));
    return out;
  }

 private:
  std::vector<std::string> args_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

struct Options {
  po::options_description desc;
  po::positional_options_description positional;
  po::variables_map vm;

  explicit Options(const char* name) : desc(name) {}

  void parse(const std::vector<std::string>& args) {
    try {
      po::store(po::command_line_parser(args).options(desc).positional(positional).run(), vm);
      po::notify(vm);
    } catch (const po::error& e) {
      throw Error(ErrorKind::MalformedInput, std::string("arguments: ") + e.what());
    }
  }

  template <typename T>
  T get(const char* key) const {
    return vm[key].as<T>();
  }
  bool has(const char* key) const { return vm.count(key) != 0; }
};

void add_cap(Options& o) {
  o.desc.add_options()("cap", po::value<std::size_t>()->default_value(matgrp::default_order_cap()),
                       "closure order cap (also SATURATE_CAP)");
}

void add_input(Options& o, const char* name) {
  o.desc.add_options()(name, po::value<std::string>()->required(), "input JSON file");
  o.positional.add(name, 1);
}

json field_name(const ff::Field& f) {
  std::ostringstream s;
  s << f;
  return s.str();
}

json witness_matrix(const matgrp::SquareMatrix& m) { return matrix_rows(m); }

char parse_type(const std::string& s) {
  if (s.size() != 1) throw Error(ErrorKind::InvalidType, "type must be one letter, got '" + s + "'");
  return s[0];
}

rootdata::Vec parse_vec(const std::string& s, const char* what) {
  rootdata::Vec v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedInput, std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return v;
}

ff::Field extension_of(const ff::Field& f, unsigned e) { return ff::Field::create(f.characteristic(), f.degree() * e); }

// ---- subcommands -----------------------------------------------------------

Outcome run_envelope(Context& ctx, const std::vector<std::string>& args) {
  Options o("envelope <group.json> [--ext e] [--cap N]");
  add_input(o, "group");
  o.desc.add_options()("ext", po::value<unsigned>()->default_value(1), "work over the degree-e extension");
  add_cap(o);
  o.parse(args);
  const std::size_t cap = o.get<std::size_t>("cap");
  const unsigned ext = o.get<unsigned>("ext");
  if (ext == 0) throw Error(ErrorKind::MalformedInput, "--ext must be positive");

  matgrp::FiniteMatrixGroup g = group_from_json(ctx.load(o.get<std::string>("group")), cap);
  if (ext > 1) g = matgrp::embed_group(g, extension_of(g.field(), ext), cap);
  const auto gp = matgrp::gamma_plus(g, cap);
  const auto env = envelope::nori_envelope(g, cap);

  Outcome out;
  out.results = json{{"field", field_name(g.field())},
                     {"n", g.dim()},
                     {"group_order", g.order()},
                     {"gamma_plus_order", gp.order()},
                     {"order", env.group.order()},
                     {"lie_dim", env.lie.dimension()},
                     {"lie_dim_prime", envelope::log_span(env.group, envelope::Scalars::prime).dimension()},
                     {"iterations", env.iterations},
                     {"saturated", envelope::is_saturated_points(env.group)},
                     {"irreducible", envelope::is_absolutely_irreducible(env.group)}};
  return out;
}

Outcome run_saturate_check(Context& ctx, const std::vector<std::string>& args) {
  Options o("saturate-check <group.json> [--ext e] [--cap N]");
  add_input(o, "group");
  o.desc.add_options()("ext", po::value<unsigned>()->default_value(1), "check over the degree-e extension");
  add_cap(o);
  o.parse(args);
  const std::size_t cap = o.get<std::size_t>("cap");
  const unsigned ext = o.get<unsigned>("ext");
  if (ext == 0) throw Error(ErrorKind::MalformedInput, "--ext must be positive");

  const auto g = group_from_json(ctx.load(o.get<std::string>("group")), cap);
  const auto h = ext > 1 ? matgrp::embed_group(g, extension_of(g.field(), ext), cap) : g;
  const auto witness = envelope::saturation_witness(h);

  Outcome out;
  out.pass = !witness;
  out.results = json{{"field", field_name(h.field())}, {"order", h.order()}, {"saturated", out.pass}};
  if (ext > 1 || witness) out.results["closure_order"] = envelope::saturation_closure(g, ext, cap).order();
  if (witness) {
    out.witness = json{{"kind", "NotSaturated"},
                       {"u", witness_matrix(witness->u)},
                       {"t", elem_to_json(h.field(), witness->t)},
                       {"detail", "u^t is not in the group"}};
  }
  return out;
}

Outcome run_gamma_plus(Context& ctx, const std::vector<std::string>& args) {
  Options o("gamma-plus <group.json> [--cap N]");
  add_input(o, "group");
  add_cap(o);
  o.parse(args);
  const std::size_t cap = o.get<std::size_t>("cap");
  const auto g = group_from_json(ctx.load(o.get<std::string>("group")), cap);
  const auto gp = matgrp::gamma_plus(g, cap);
  Outcome out;
  out.results = json{{"field", field_name(g.field())},
                     {"n", g.dim()},
                     {"order", g.order()},
                     {"gamma_plus_order", gp.order()},
                     {"index", g.order() / gp.order()},
                     {"generators", group_to_json(gp)["generators"]}};
  return out;
}

Outcome run_irreducible(Context& ctx, const std::vector<std::string>& args) {
  Options o("irreducible <group.json> [--cap N]");
  add_input(o, "group");
  add_cap(o);
  o.parse(args);
  const auto g = group_from_json(ctx.load(o.get<std::string>("group")), o.get<std::size_t>("cap"));
  const std::size_t span = envelope::linear_span_dimension(g);
  Outcome out;
  out.pass = span == g.dim() * g.dim();
  out.results = json{{"order", g.order()}, {"span_dim", span}, {"absolutely_irreducible", out.pass}};
  if (!out.pass) {
    out.witness = json{{"kind", "NotIrreducible"},
                       {"detail", "the group spans " + std::to_string(span) + " of " +
                                      std::to_string(g.dim() * g.dim()) + " matrix dimensions"}};
  }
  return out;
}

void add_system(Options& o) {
  o.desc.add_options()("type", po::value<std::string>(), "simple type letter")(
      "rank", po::value<unsigned>(), "rank");
}

rootdata::RootSystem system_from(const Options& o) {
  if (!o.has("type") || !o.has("rank")) throw Error(ErrorKind::MalformedInput, "--type and --rank are required");
  return rootdata::root_system(parse_type(o.get<std::string>("type")), o.get<unsigned>("rank"));
}

Outcome run_height(Context& ctx, const std::vector<std::string>& args) {
  Options o("height [rep.json] | --type T --rank r --rep standard|adjoint|exterior:i|highest:a,b,... [--ell L]");
  o.desc.add_options()("rep-file", po::value<std::string>(), "representation JSON")(
      "rep", po::value<std::string>(), "representation")("ell", po::value<std::int64_t>(), "characteristic");
  o.positional.add("rep-file", 1);
  add_system(o);
  o.parse(args);

  rootdata::RepWeights rep{rootdata::root_system('A', 1), {}};
  std::optional<rootdata::Rational> from_highest;
  if (o.has("rep-file")) {
    rep = rep_from_json(ctx.load(o.get<std::string>("rep-file")));
  } else {
    const auto rs = system_from(o);
    const std::string kind = o.has("rep") ? o.get<std::string>("rep") : "standard";
    if (kind == "standard") {
      rep = rootdata::standard_rep(rs);
    } else if (kind == "adjoint") {
      rep = rootdata::adjoint_rep(rs);
    } else if (kind.rfind("exterior:", 0) == 0) {
      const auto i = parse_vec(kind.substr(9), "--rep exterior");
      if (i.size() != 1 || i[0] < 0) throw Error(ErrorKind::MalformedInput, "--rep exterior:i needs one i >= 0");
      rep = rootdata::exterior_power(rootdata::standard_rep(rs), static_cast<unsigned>(i[0]));
    } else if (kind.rfind("highest:", 0) == 0) {
      const auto w = parse_vec(kind.substr(8), "--rep highest");
      rep = rootdata::weyl_orbit(rs, w);
      from_highest = rootdata::dynkin_height_from_highest(rs, w);
    } else {
      throw Error(ErrorKind::MalformedInput, "--rep: unknown representation '" + kind + "'");
    }
  }

  const std::int64_t h = rootdata::dynkin_height(rep);
  Outcome out;
  out.results = json{{"system", rep.system.name()}, {"dim", rep.dim()}, {"height", h}};
  if (from_highest) {
    if (from_highest->denominator() == 1) {
      out.results["height_from_highest"] = from_highest->numerator();
    } else {
      out.results["height_from_highest"] =
          std::to_string(from_highest->numerator()) + "/" + std::to_string(from_highest->denominator());
    }
  }
  if (o.has("ell")) {
    const auto ell = o.get<std::int64_t>("ell");
    out.pass = rootdata::is_low_height(rep, ell);
    out.results["ell"] = ell;
    out.results["low_height"] = out.pass;
    if (!out.pass) {
      out.witness = json{{"kind", "NotLowHeight"},
                         {"detail", "height " + std::to_string(h) + " is not below ell = " + std::to_string(ell)}};
    }
  }
  return out;
}

Outcome run_coxeter(Context&, const std::vector<std::string>& args) {
  Options o("coxeter --type T --rank r");
  add_system(o);
  o.parse(args);
  const auto rs = system_from(o);
  Outcome out;
  out.results = json{{"system", rs.name()},
                     {"h", rootdata::coxeter_number(rs)},
                     {"h_rho", rootdata::coxeter_via_rho(rs)},
                     {"positive_roots", rs.positive_roots().size()},
                     {"highest_root", vec_to_json(rs.highest_root())}};
  return out;
}

Outcome run_alcove(Context&, const std::vector<std::string>& args) {
  Options o("alcove --type T --rank r --mu a,b,... --n N --ell L");
  add_system(o);
  o.desc.add_options()("mu", po::value<std::string>()->required(), "dominant weight")(
      "n", po::value<std::int64_t>()->required(), "dimension bound")("ell", po::value<std::int64_t>()->required(),
                                                                      "characteristic");
  o.parse(args);
  const auto rs = system_from(o);
  const auto mu = parse_vec(o.get<std::string>("mu"), "--mu");
  const auto r = rootdata::low_alcove_check(rs, mu, o.get<std::int64_t>("n"), o.get<std::int64_t>("ell"));
  Outcome out;
  out.pass = r.pass();
  out.results = json{{"system", rs.name()},
                     {"pairing", r.pairing},
                     {"within_bound", r.within_bound},
                     {"below_ell", r.below_ell},
                     {"pass", r.pass()}};
  if (!out.pass) {
    out.witness = json{{"kind", "AlcoveBoundFailed"},
                       {"detail", "<rho + mu, alpha_0^vee> = " + std::to_string(r.pairing)}};
  }
  return out;
}

Outcome run_weights_check(Context& ctx, const std::vector<std::string>& args) {
  Options o("weights-check <weights.json> --ell L");
  add_input(o, "weights");
  o.desc.add_options()("ell", po::value<std::int64_t>()->required(), "characteristic");
  o.parse(args);
  const json j = ctx.load(o.get<std::string>("weights"));
  auto read_list = [](const json& list, const std::string& path) {
    if (!list.is_array()) throw Error(ErrorKind::MalformedInput, path + ": expected an array");
    std::vector<rootdata::Vec> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_array()) throw Error(ErrorKind::MalformedInput, path + "[" + std::to_string(i) + "]: expected an array");
      rootdata::Vec v;
      for (const auto& x : list[i]) {
        if (!x.is_number_integer()) throw Error(ErrorKind::MalformedInput, path + ": weights must be integers");
        v.push_back(x.get<std::int64_t>());
      }
      out.push_back(std::move(v));
    }
    return out;
  };
  if (!j.is_object() || !j.contains("weights")) throw Error(ErrorKind::MalformedInput, "weights: missing");
  const auto weights = read_list(j["weights"], "weights");
  std::optional<std::vector<rootdata::Vec>> roots;
  if (j.contains("roots")) roots = read_list(j["roots"], "roots");
  const auto r = rootdata::weight_conditions(weights, o.get<std::int64_t>("ell"), roots);

  Outcome out;
  out.pass = r.pass();
  out.results = json{{"multiplicity_one", r.multiplicity_one},
                     {"reduced", r.reduced},
                     {"exponents_below_ell", r.exponents_below_ell},
                     {"pass", r.pass()}};
  if (!out.pass) {
    json w{{"kind", "WeightConditionFailed"}};
    if (r.multiplicity_witness) w["repeated_root"] = vec_to_json(*r.multiplicity_witness);
    if (r.reducedness_witness) {
      w["non_reduced"] = json::array({vec_to_json(r.reducedness_witness->first), vec_to_json(r.reducedness_witness->second)});
    }
    if (r.exponent_witness) {
      w["exponent"] = json{{"root", vec_to_json(r.exponent_witness->first)}, {"i", r.exponent_witness->second}};
    }
    out.witness = std::move(w);
  }
  return out;
}

Outcome run_weilres(Context& ctx, const std::vector<std::string>& args) {
  Options o("weilres <group.json> --down-to <field.json> [--cap N]");
  add_input(o, "group");
  o.desc.add_options()("down-to", po::value<std::string>()->required(), "field JSON of the small field");
  add_cap(o);
  o.parse(args);
  const std::size_t cap = o.get<std::size_t>("cap");
  const auto g = group_from_json(ctx.load(o.get<std::string>("group")), cap);
  const ff::Field small = field_from_json(ctx.load(o.get<std::string>("down-to")), "down-to");
  const weilres::RestrictionContext rctx(g.field(), small);
  const auto img = weilres::weilres_group(rctx, g, cap);
  const std::int64_t d = rctx.degree();
  const std::int64_t n = static_cast<std::int64_t>(g.dim());
  const std::int64_t ell = g.field().characteristic();

  Outcome out;
  out.results = json{{"big", field_name(g.field())},
                     {"small", field_name(small)},
                     {"degree", d},
                     {"order", g.order()},
                     {"restricted_order", img.order()},
                     {"restricted_n", img.dim()},
                     {"restriction_height", weilres::restriction_height(d, n)}};
  if (ell > n) {
    const bool input_saturated = envelope::is_saturated_points(g);
    out.results["input_saturated"] = input_saturated;
    const auto r = weilres::weilres_saturation_check(rctx, g, cap);
    out.results["hypothesis_ok"] = r.hypothesis_ok;
    out.results["checked"] = r.checked;
    if (r.checked) {
      out.results["saturated"] = r.saturated;
      out.results["restricted_lie_dim"] = envelope::log_span(img, envelope::Scalars::full).dimension();
      // A saturated input under the characteristic hypothesis must restrict
      // to a saturated group.
      if (input_saturated && r.hypothesis_ok && !r.saturated) {
        out.pass = false;
        out.witness = json{{"kind", "NotSaturated"},
                           {"u", witness_matrix(r.witness->u)},
                           {"t", elem_to_json(small, r.witness->t)}};
      }
    }
    if (!r.hypothesis_ok) out.results["warning"] = "HypothesisViolated: ell <= dimW - d";
  }
  return out;
}

Outcome run_frob(Context& ctx, const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorKind::UnknownCommand, "frob needs a subcommand: validate or compat");
  const std::string sub = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (sub == "validate") {
    Options o("frob validate <table.json> [--weight w] [--tol t]");
    add_input(o, "table");
    o.desc.add_options()("weight", po::value<std::int64_t>(), "purity weight")(
        "tol", po::value<double>()->default_value(frobenius::kDefaultPurityTolerance), "relative tolerance");
    o.parse(rest);
    const auto table = frob_table_from_json(ctx.load(o.get<std::string>("table")));
    std::optional<std::int64_t> weight;
    if (o.has("weight")) weight = o.get<std::int64_t>("weight");
    const auto report = frobenius::validate_table(table, weight, o.get<double>("tol"));
    Outcome out;
    out.pass = report.pass();
    out.results = table_report_to_json(report);
    out.results["entries_checked"] = report.entries.size();
    for (const auto& e : report.entries) {
      if (e.pass()) continue;
      out.witness = json{{"kind", "TableCheckFailed"}, {"id", e.id}, {"failures", e.failures}};
      break;
    }
    return out;
  }
  if (sub == "compat") {
    Options o("frob compat <table.json> --point id --matrix <matrix.json>");
    add_input(o, "table");
    o.desc.add_options()("point", po::value<std::string>()->required(), "entry id")(
        "matrix", po::value<std::string>()->required(), "matrix JSON");
    o.parse(rest);
    const auto table = frob_table_from_json(ctx.load(o.get<std::string>("table")));
    const auto m = matrix_from_json(ctx.load(o.get<std::string>("matrix")));
    const std::string id = o.get<std::string>("point");
    Outcome out;
    out.pass = frobenius::compat_check(table, id, m);
    out.results = json{{"point", id}, {"compatible", out.pass}};
    if (!out.pass) {
      out.witness = json{{"kind", "Incompatible"},
                         {"detail", "charpoly of the matrix differs from the reduced Frobenius polynomial"}};
    }
    return out;
  }
  throw Error(ErrorKind::UnknownCommand, "frob " + sub);
}

bool subset_match(const json& expected, const json& actual, const std::string& path, json& diffs) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      diffs.push_back(json{{"path", path}, {"expected", expected}, {"actual", actual}});
      return false;
    }
    bool ok = true;
    for (const auto& [k, v] : expected.items()) {
      const auto it = actual.find(k);
      if (it == actual.end()) {
        diffs.push_back(json{{"path", path + "/" + k}, {"expected", v}, {"actual", nullptr}});
        ok = false;
      } else {
        ok = subset_match(v, *it, path + "/" + k, diffs) && ok;
      }
    }
    return ok;
  }
  if (expected != actual) {
    diffs.push_back(json{{"path", path}, {"expected", expected}, {"actual", actual}});
    return false;
  }
  return true;
}

Outcome run_corpus(Context& ctx, const std::vector<std::string>& args) {
  Options o("corpus <manifest.json>");
  add_input(o, "manifest");
  o.parse(args);
  const std::string path = o.get<std::string>("manifest");
  json manifest;
  try {
    manifest = ctx.load(path);
  } catch (const Error& e) {
    throw Error(ErrorKind::ManifestError, e.detail());
  }
  const auto bad = [&](const std::string& what) { throw Error(ErrorKind::ManifestError, path + ": " + what); };
  if (!manifest.is_object() || !manifest.contains("checks") || !manifest["checks"].is_array()) bad("missing checks array");
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  Outcome out;
  json details = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < manifest["checks"].size(); ++i) {
    const json& c = manifest["checks"][i];
    const std::string where = "checks[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string() || !c.contains("args") ||
        !c["args"].is_array()) {
      bad(where + ": needs a name and an args array");
    }
    std::vector<std::string> sub;
    for (const auto& a : c["args"]) {
      if (!a.is_string()) bad(where + ".args: expected strings");
      std::string s = a.get<std::string>();
      // Input files are resolved relative to the manifest.
      if (s.size() > 5 && s.ends_with(".json") && s.front() != '-' && std::filesystem::path(s).is_relative()) {
        s = (base / s).string();
      }
      sub.push_back(std::move(s));
    }
    const json expect = c.value("expect", json::object());
    if (!expect.is_object()) bad(where + ".expect: expected an object");

    const RunResult run = dispatch(sub);
    json diffs = json::array();
    bool ok = true;
    const int want_exit = expect.value("exit", 0);
    if (run.exit_code != want_exit) {
      diffs.push_back(json{{"path", "/exit"}, {"expected", want_exit}, {"actual", run.exit_code}});
      ok = false;
    }
    if (expect.contains("results")) ok = subset_match(expect["results"], run.report["results"], "/results", diffs) && ok;
    if (expect.contains("witness")) ok = subset_match(expect["witness"], run.report.value("witness", json()), "/witness", diffs) && ok;
    if (ok) ++passed;
    json d{{"name", c["name"]}, {"pass", ok}, {"exit", run.exit_code}, {"inputs_digest", run.report["inputs_digest"]}};
    if (!ok) d["diffs"] = diffs;
    details.push_back(std::move(d));
  }
  const std::size_t total = manifest["checks"].size();
  out.pass = passed == total;
  out.results = json{{"checks", total}, {"passed", passed}, {"failed", total - passed}, {"details", details}};
  if (!out.pass) {
    for (const auto& d : details) {
      if (!d["pass"].get<bool>()) {
        out.witness = json{{"kind", "ExpectationMismatch"}, {"name", d["name"]}, {"diffs", d["diffs"]}};
        break;
      }
    }
  }
  return out;
}

using Handler = std::function<Outcome(Context&, const std::vector<std::string>&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"envelope", run_envelope},       {"saturate-check", run_saturate_check},
      {"gamma-plus", run_gamma_plus},   {"irreducible", run_irreducible},
      {"height", run_height},           {"coxeter", run_coxeter},
      {"alcove", run_alcove},           {"weights-check", run_weights_check},
      {"weilres", run_weilres},         {"frob", run_frob},
      {"corpus", run_corpus},
  };
  return table;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string usage() {
  return "usage: saturate <command> [args]\n"
         "commands:\n"
         "  envelope <group.json> [--ext e] [--cap N]\n"
         "  saturate-check <group.json> [--ext e] [--cap N]\n"
         "  gamma-plus <group.json> [--cap N]\n"
         "  irreducible <group.json> [--cap N]\n"
         "  height [rep.json] [--type T --rank r --rep standard|adjoint|exterior:i|highest:a,b,...] [--ell L]\n"
         "  coxeter --type T --rank r\n"
         "  alcove --type T --rank r --mu a,b,... --n N --ell L\n"
         "  weights-check <weights.json> --ell L\n"
         "  weilres <group.json> --down-to <field.json> [--cap N]\n"
         "  frob validate <table.json> [--weight w] [--tol t]\n"
         "  frob compat <table.json> --point id --matrix <matrix.json>\n"
         "  corpus <manifest.json>\n"
         "exit status: 0 pass, 1 check failed, 2 input error\n";
}

RunResult dispatch(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(args);
  RunResult run;
  json results = json::object();
  json witness;
  std::string status;
  try {
    if (args.empty()) throw Error(ErrorKind::UnknownCommand, "no command given");
    const auto it = handlers().find(args.front());
    if (it == handlers().end()) throw Error(ErrorKind::UnknownCommand, "unknown command '" + args.front() + "'");
    Outcome o = it->second(ctx, std::vector<std::string>(args.begin() + 1, args.end()));
    results = std::move(o.results);
    run.exit_code = o.pass ? kPass : kFail;
    status = o.pass ? "pass" : "fail";
    if (!o.pass) witness = o.witness.is_null() ? json{{"kind", "CheckFailed"}} : std::move(o.witness);
  } catch (const Error& e) {
    run.exit_code = kInputError;
    status = "error";
    witness = json{{"kind", std::string(to_string(e.kind()))}, {"detail", e.detail()}};
  } catch (const std::exception& e) {
    run.exit_code = kInputError;
    status = "error";
    witness = json{{"kind", "InternalError"}, {"detail", e.what()}};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  run.report = json{{"schema", 1},
                    {"tool_version", SATURATE_VERSION},
                    {"command", args},
                    {"inputs_digest", ctx.digest()},
                    {"status", status},
                    {"results", results},
                    {"timings_ms", json{{"total", ms}}}};
  if (!witness.is_null()) run.report["witness"] = witness;
  return run;
}

}  // namespace saturate::cli
